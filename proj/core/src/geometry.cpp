#include "fvbarrier/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "fvbarrier/error.hpp"

namespace fvbarrier {

double distance(Point2D a, Point2D b) { return std::hypot(b.x - a.x, b.y - a.y); }

Point2D midpoint(Point2D a, Point2D b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }

double normalize_angle(double radians) {
  double wrapped = std::fmod(radians, kTwoPi);
  if (wrapped < 0.0) wrapped += kTwoPi;
  // fmod of a tiny negative value can round back up to exactly 2pi
  if (wrapped >= kTwoPi) wrapped = 0.0;
  return wrapped;
}

Bearing::Bearing(double radians) : angle_(normalize_angle(radians)) {}

Bearing Bearing::towards(Point2D from, Point2D to) {
  return Bearing(std::atan2(to.y - from.y, to.x - from.x));
}

Bearing Bearing::from_degrees(double degrees) { return Bearing(degrees * kPi / 180.0); }

double Bearing::degrees() const { return angle_ * 180.0 / kPi; }

double Bearing::separation(Bearing other) const {
  const double diff = std::fabs(angle_ - other.angle_);
  return diff > kPi ? kTwoPi - diff : diff;
}

void CameraParams::validate() const {
  if (!(r > 0.0) || !std::isfinite(r)) throw InvalidArgument("camera r must be positive");
  if (!(phi > 0.0) || phi > kTwoPi + kEpsilon)
    throw InvalidArgument("camera phi must lie in (0, 2pi]");
  if (!(theta > 0.0) || theta > kPi / 2.0 + kEpsilon)
    throw InvalidArgument("camera theta must lie in (0, pi/2]");
}

Segment::Segment(Point2D a, Point2D b) : a_(a), b_(b) {
  if (a == b) throw InvalidArgument("segment endpoints must differ");
}

Point2D Segment::at(double t) const {
  return {a_.x + t * (b_.x - a_.x), a_.y + t * (b_.y - a_.y)};
}

bool covers(const CameraPose& camera, Point2D p) {
  const double d = distance(camera.position, p);
  if (d <= kEpsilon) return true;
  if (!(d < camera.params.r + kEpsilon)) return false;
  const double offset = camera.facing.separation(Bearing::towards(camera.position, p));
  return offset < camera.params.phi / 2.0 + kEpsilon;
}

double max_angular_gap(std::span<const Bearing> bearings) {
  if (bearings.empty()) throw InvalidArgument("no bearings");
  std::vector<double> angles;
  angles.reserve(bearings.size());
  for (const Bearing& b : bearings) angles.push_back(b.radians());
  std::sort(angles.begin(), angles.end());

  double widest = angles.front() + kTwoPi - angles.back();
  for (std::size_t i = 1; i < angles.size(); ++i)
    widest = std::max(widest, angles[i] - angles[i - 1]);
  return widest;
}

std::vector<Bearing> covering_bearings(Point2D p, std::span<const CameraPose> cameras) {
  std::vector<Bearing> out;
  for (const CameraPose& cam : cameras) {
    if (distance(cam.position, p) <= kEpsilon) continue;
    if (covers(cam, p)) out.push_back(Bearing::towards(p, cam.position));
  }
  return out;
}

bool full_view_covered_point(Point2D p, std::span<const CameraPose> cameras, double theta) {
  const std::vector<Bearing> bearings = covering_bearings(p, cameras);
  if (bearings.empty()) return false;
  return max_angular_gap(bearings) <= 2.0 * theta + kEpsilon;
}

bool full_view_covered_segment(const Segment& seg, std::span<const CameraPose> cameras,
                               double theta, int samples) {
  if (samples < 2) throw InvalidArgument("segment verification needs at least 2 samples");
  if (cameras.empty()) return false;
  const double last = static_cast<double>(samples - 1);
  for (int i = 0; i < samples; ++i) {
    if (!full_view_covered_point(seg.at(static_cast<double>(i) / last), cameras, theta))
      return false;
  }
  return true;
}

bool midpoint_shortcut_covered(const Segment& seg, std::span<const CameraPose> cameras,
                               double theta) {
  return full_view_covered_point(seg.midpoint(), cameras, theta);
}

}  // namespace fvbarrier
