#pragma once

#include <cstdint>
#include <vector>

#include "fvbarrier/geometry.hpp"

namespace fvbarrier {

/// Two-row line deployment: cameras sit on lines at distance `h` above and below the
/// barrier, adjacent spots `delta` apart, each covering an angle `alpha` centred on
/// the perpendicular to the barrier.
struct LineDeploymentParams {
  double h = 0.0;
  double delta = 0.0;
  double alpha = 0.0;

  /// Throws InvalidArgument unless h > 0, delta > 0 and 0 < alpha < 2pi.
  void validate() const;
};

/// Minimum-density parameters for sensing radius r: h = r/sqrt(5), delta = 2h,
/// alpha = 2*atan(2). Throws InvalidArgument for r <= 0.
LineDeploymentParams optimal_params(double r);

/// Outcome of each deployment condition, reported independently.
struct LineValidation {
  bool swing = false;      ///< tan(alpha/2) <= delta/h
  bool spacing = false;    ///< delta <= 2h*tan(theta)
  bool height = false;     ///< h <= r*sin(theta)
  bool reach = false;      ///< sqrt(h^2 + delta^2) <= r

  [[nodiscard]] bool all() const { return swing && spacing && height && reach; }
};

/// theta must lie in [pi/4, pi/2]; non-positive parameters throw InvalidArgument.
LineValidation validate_params(const LineDeploymentParams& params, double r, double theta);

/// Cameras per metre per row.
double camera_density(const LineDeploymentParams& params);

/// Cameras needed to line a barrier of `length` metres at optimal parameters:
/// 2 * (ceil(length/delta) + 1), i.e. spots at both ends on both rows.
std::uint64_t cameras_for_barrier(double length, double r);

struct LineDeployment {
  Segment barrier;
  LineDeploymentParams params;
  std::vector<CameraPose> cameras;  ///< upper row first, then lower row, each left to right
};

/// Places the optimal two-row deployment along a horizontal barrier. Spots start at the
/// left endpoint and the last spot lands at or beyond the right endpoint. Upper-row
/// cameras (+h) face -y, lower-row cameras face +y, and every camera's field of view is
/// set to alpha. `theta` is stored on each camera for later verification.
/// Throws InvalidArgument for a non-horizontal barrier or r <= 0.
LineDeployment place_line_deployment(const Segment& barrier, double r,
                                     double theta = kPi / 4.0);

}  // namespace fvbarrier
