#pragma once

#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

namespace fvbarrier {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Absolute tolerance applied to every distance and angle comparison.
inline constexpr double kEpsilon = 1e-9;

/// Default number of evenly spaced samples used when verifying a segment.
inline constexpr int kDefaultSegmentSamples = 101;

struct Point2D {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2D&, const Point2D&) = default;
};

double distance(Point2D a, Point2D b);
Point2D midpoint(Point2D a, Point2D b);

/// Direction in the plane, stored in [0, 2pi) and measured counter-clockwise from +x.
class Bearing {
 public:
  Bearing() = default;
  explicit Bearing(double radians);

  /// Bearing of the vector from `from` to `to`. Undefined (returns 0) when they coincide.
  static Bearing towards(Point2D from, Point2D to);
  static Bearing from_degrees(double degrees);

  [[nodiscard]] double radians() const { return angle_; }
  [[nodiscard]] double degrees() const;

  /// Smallest unsigned angle between two bearings, in [0, pi].
  [[nodiscard]] double separation(Bearing other) const;

  friend bool operator==(const Bearing&, const Bearing&) = default;

 private:
  double angle_ = 0.0;
};

/// Wraps any finite angle into [0, 2pi).
double normalize_angle(double radians);

/// Hardware parameters shared by a camera model: sensing radius, field of view and
/// effective angle. Communication range is fixed at twice the sensing radius.
struct CameraParams {
  double r = 1.0;
  double phi = kPi / 3.0;
  double theta = kPi / 4.0;

  /// Throws InvalidArgument unless r > 0, 0 < phi <= 2pi, 0 < theta <= pi/2.
  void validate() const;
  [[nodiscard]] double comm_range() const { return 2.0 * r; }

  friend bool operator==(const CameraParams&, const CameraParams&) = default;
};

struct CameraPose {
  std::uint64_t id = 0;
  Point2D position;
  Bearing facing;
  CameraParams params;

  friend bool operator==(const CameraPose&, const CameraPose&) = default;
};

/// Non-degenerate segment; the constructor rejects a == b.
class Segment {
 public:
  Segment(Point2D a, Point2D b);

  [[nodiscard]] Point2D a() const { return a_; }
  [[nodiscard]] Point2D b() const { return b_; }
  [[nodiscard]] double length() const { return distance(a_, b_); }
  [[nodiscard]] Point2D midpoint() const { return fvbarrier::midpoint(a_, b_); }

  /// Point at parameter t in [0, 1] along a -> b.
  [[nodiscard]] Point2D at(double t) const;

 private:
  Point2D a_;
  Point2D b_;
};

/// True iff p lies strictly inside the camera's sensing sector (distance < r and
/// angular offset from the facing < phi/2). A point at the camera position is covered.
bool covers(const CameraPose& camera, Point2D p);

/// Largest circular gap between consecutive bearings once sorted around the circle.
/// A single bearing yields 2pi. Throws InvalidArgument("no bearings") on empty input.
double max_angular_gap(std::span<const Bearing> bearings);

/// Bearings from p to every camera covering p. Cameras sitting on p are skipped.
std::vector<Bearing> covering_bearings(Point2D p, std::span<const CameraPose> cameras);

/// Full-view coverage via the angular-gap criterion: some camera covers p and the
/// largest gap between their bearings (seen from p) is at most 2*theta.
bool full_view_covered_point(Point2D p, std::span<const CameraPose> cameras, double theta);

/// Samples `samples` evenly spaced points on seg, both endpoints included, and requires
/// each one to be full-view covered. Throws InvalidArgument if samples < 2.
bool full_view_covered_segment(const Segment& seg, std::span<const CameraPose> cameras,
                               double theta, int samples = kDefaultSegmentSamples);

/// Checks only the midpoint of seg. Only meaningful for sub-lines of the canonical
/// two-row line deployment; use full_view_covered_segment everywhere else.
bool midpoint_shortcut_covered(const Segment& seg, std::span<const CameraPose> cameras,
                               double theta);

}  // namespace fvbarrier
