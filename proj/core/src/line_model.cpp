#include "fvbarrier/line_model.hpp"

#include <algorithm>
#include <cmath>

#include "fvbarrier/error.hpp"

namespace fvbarrier {

namespace {

std::uint64_t spots_per_row(double length, double delta) {
  // Tolerate rounding when the length is an exact multiple of delta.
  const double intervals = std::ceil(length / delta - kEpsilon);
  return static_cast<std::uint64_t>(std::max(intervals, 1.0)) + 1;
}

}  // namespace

void LineDeploymentParams::validate() const {
  if (!(h > 0.0)) throw InvalidArgument("line deployment h must be positive");
  if (!(delta > 0.0)) throw InvalidArgument("line deployment delta must be positive");
  if (!(alpha > 0.0) || !(alpha < kTwoPi))
    throw InvalidArgument("line deployment alpha must lie in (0, 2pi)");
}

LineDeploymentParams optimal_params(double r) {
  if (!(r > 0.0)) throw InvalidArgument("sensing radius must be positive");
  const double h = r / std::sqrt(5.0);
  return {h, 2.0 * h, 2.0 * std::atan(2.0)};
}

LineValidation validate_params(const LineDeploymentParams& params, double r, double theta) {
  params.validate();
  if (!(r > 0.0)) throw InvalidArgument("sensing radius must be positive");
  if (theta < kPi / 4.0 - kEpsilon || theta > kPi / 2.0 + kEpsilon)
    throw InvalidArgument("theta must lie in [pi/4, pi/2]");

  LineValidation v;
  v.swing = std::tan(params.alpha / 2.0) <= params.delta / params.h + kEpsilon;
  v.spacing = params.delta <= 2.0 * params.h * std::tan(theta) + kEpsilon;
  v.height = params.h <= r * std::sin(theta) + kEpsilon;
  v.reach = std::hypot(params.h, params.delta) <= r + kEpsilon;
  return v;
}

double camera_density(const LineDeploymentParams& params) {
  if (!(params.delta > 0.0)) throw InvalidArgument("delta must be positive");
  return 1.0 / params.delta;
}

std::uint64_t cameras_for_barrier(double length, double r) {
  if (!(length > 0.0)) throw InvalidArgument("barrier length must be positive");
  return 2 * spots_per_row(length, optimal_params(r).delta);
}

LineDeployment place_line_deployment(const Segment& barrier, double r, double theta) {
  if (std::fabs(barrier.a().y - barrier.b().y) > kEpsilon)
    throw InvalidArgument("canonical model requires horizontal barrier");

  const LineDeploymentParams params = optimal_params(r);
  const CameraParams hw{r, params.alpha, theta};
  const Point2D left = barrier.a().x <= barrier.b().x ? barrier.a() : barrier.b();
  const std::uint64_t spots = spots_per_row(barrier.length(), params.delta);

  LineDeployment out{barrier, params, {}};
  out.cameras.reserve(2 * spots);
  std::uint64_t next_id = 0;
  for (const double side : {+1.0, -1.0}) {
    // Each row looks across the barrier toward the other row.
    const Bearing facing(side > 0.0 ? 1.5 * kPi : 0.5 * kPi);
    for (std::uint64_t k = 0; k < spots; ++k) {
      const Point2D pos{left.x + static_cast<double>(k) * params.delta,
                        left.y + side * params.h};
      out.cameras.push_back({next_id++, pos, facing, hw});
    }
  }
  return out;
}

}  // namespace fvbarrier
