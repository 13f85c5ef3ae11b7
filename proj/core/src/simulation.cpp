#include "fvbarrier/simulation.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include "fvbarrier/error.hpp"
#include "fvbarrier/grid_deploy.hpp"
#include "fvbarrier/line_model.hpp"

namespace fvbarrier {

namespace {

double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<CellIndex> evaluate_cells(const std::vector<CameraPose>& cameras,
                                      const ScenarioConfig& config, Mode mode,
                                      int& m, int& n, DeploymentPlan* plan_out) {
  const double d = config.cell_length();
  m = cells_along(config.height, d);
  n = cells_along(config.width, d);
  if (mode == Mode::Mobile) {
    DeploymentPlan plan = plan_grid_deployment(config.width, config.height, cameras, d);
    std::vector<CellIndex> covered = staffed_cells(plan);
    if (plan_out) *plan_out = std::move(plan);
    return covered;
  }
  return static_covered_cells(cameras, config);
}

}  // namespace

const char* to_string(Mode mode) { return mode == Mode::Static ? "static" : "mobile"; }

Mode parse_mode(const std::string& text) {
  if (text == "static") return Mode::Static;
  if (text == "mobile") return Mode::Mobile;
  throw InvalidArgument("mode must be 'static' or 'mobile', got '" + text + "'");
}

void ScenarioConfig::validate() const {
  if (!(width > 0.0) || !(height > 0.0)) throw InvalidArgument("region must be non-empty");
  camera().validate();
  if (trials < 1) throw InvalidArgument("trials must be at least 1");
  if (samples < 2) throw InvalidArgument("samples must be at least 2");
}

double ScenarioConfig::cell_length() const { return grid_length_bound(r); }

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t count, std::uint64_t trial) {
  std::uint64_t state = seed;
  std::uint64_t mixed = splitmix64(state);
  state = mixed ^ count;
  mixed = splitmix64(state);
  state = mixed ^ trial;
  return splitmix64(state);
}

std::vector<CameraPose> random_deploy(Region region, std::uint64_t count, std::uint64_t seed,
                                      const CameraParams& params) {
  std::mt19937_64 rng(seed);
  std::vector<CameraPose> cameras;
  cameras.reserve(count);
  for (std::uint64_t id = 0; id < count; ++id) {
    const double x = unit_interval(rng) * region.width;
    const double y = unit_interval(rng) * region.height;
    const double facing = unit_interval(rng) * kTwoPi;
    cameras.push_back({id, {x, y}, Bearing(facing), params});
  }
  return cameras;
}

std::vector<CameraPose> trial_deployment(const ScenarioConfig& config, std::uint64_t count,
                                         std::uint64_t trial) {
  return random_deploy(config.region(), count, trial_seed(config.seed, count, trial),
                       config.camera());
}

MobileOutcome evaluate_mobile(const std::vector<CameraPose>& cameras,
                              const ScenarioConfig& config) {
  int m = 0;
  int n = 0;
  DeploymentPlan plan;
  const auto covered = evaluate_cells(cameras, config, Mode::Mobile, m, n, &plan);
  MobileOutcome out;
  out.barrier = shortest_barrier(prune_degree_one(build_graph(covered, m, n)));
  if (out.barrier.exists) out.cameras_on_barrier = distinct_cameras(out.barrier, plan);
  return out;
}

bool barrier_exists_mobile(const std::vector<CameraPose>& cameras,
                           const ScenarioConfig& config) {
  return evaluate_mobile(cameras, config).barrier.exists;
}

std::vector<CellIndex> static_covered_cells(const std::vector<CameraPose>& cameras,
                                            const ScenarioConfig& config) {
  const double d = config.cell_length();
  GridModel grid;
  grid.width = config.width;
  grid.height = config.height;
  grid.d = d;
  grid.m = cells_along(config.height, d);
  grid.n = cells_along(config.width, d);

  std::vector<CellIndex> covered;
  std::vector<CameraPose> nearby;
  for (int i = 1; i <= grid.m; ++i) {
    for (int j = 1; j <= grid.n; ++j) {
      const Segment seg = grid.mid_segment({i, j});
      const Point2D centre = seg.midpoint();
      const double reach = 0.5 * seg.length();
      nearby.clear();
      for (const CameraPose& cam : cameras)
        if (distance(cam.position, centre) < cam.params.r + reach + kEpsilon)
          nearby.push_back(cam);
      if (full_view_covered_segment(seg, nearby, config.theta, config.samples))
        covered.push_back({i, j});
    }
  }
  return covered;
}

bool barrier_exists_static(const std::vector<CameraPose>& cameras,
                           const ScenarioConfig& config) {
  int m = 0;
  int n = 0;
  const auto covered = evaluate_cells(cameras, config, Mode::Static, m, n, nullptr);
  return shortest_barrier(prune_degree_one(build_graph(covered, m, n))).exists;
}

bool barrier_exists(const std::vector<CameraPose>& cameras, const ScenarioConfig& config) {
  return config.mode == Mode::Static ? barrier_exists_static(cameras, config)
                                     : barrier_exists_mobile(cameras, config);
}

SweepResult coverage_probability_sweep(const ScenarioConfig& config) {
  config.validate();
  SweepResult result{config, {}};
  for (std::uint64_t count : config.counts) {
    SweepRow row;
    row.x = static_cast<double>(count);
    row.trials = static_cast<std::uint64_t>(config.trials);
    for (std::uint64_t t = 0; t < row.trials; ++t)
      if (barrier_exists(trial_deployment(config, count, t), config)) ++row.successes;
    const double n = static_cast<double>(row.trials);
    row.estimate = static_cast<double>(row.successes) / n;
    row.std_error = std::sqrt(row.estimate * (1.0 - row.estimate) / n);
    result.rows.push_back(row);
  }
  return result;
}

CameraCountResult barrier_camera_count_sweep(const ScenarioConfig& config) {
  config.validate();
  if (config.mode != Mode::Mobile)
    throw InvalidArgument("camera-count sweep requires mobile mode");
  CameraCountResult result{config, {}};
  for (std::uint64_t count : config.counts) {
    CameraCountRow row;
    row.x = static_cast<double>(count);
    row.trials = static_cast<std::uint64_t>(config.trials);
    double sum = 0.0;
    double sum_sq = 0.0;
    double weight_sum = 0.0;
    for (std::uint64_t t = 0; t < row.trials; ++t) {
      const MobileOutcome out = evaluate_mobile(trial_deployment(config, count, t), config);
      if (!out.barrier.exists) continue;
      ++row.with_barrier;
      const auto cams = static_cast<double>(out.cameras_on_barrier);
      sum += cams;
      sum_sq += cams * cams;
      weight_sum += static_cast<double>(out.barrier.weight);
    }
    if (row.with_barrier > 0) {
      const double k = static_cast<double>(row.with_barrier);
      row.mean_cameras = sum / k;
      row.mean_weight = weight_sum / k;
      if (row.with_barrier > 1) {
        const double var = std::max(0.0, (sum_sq - k * row.mean_cameras * row.mean_cameras) / (k - 1.0));
        row.std_error = std::sqrt(var / k);
      }
    }
    result.rows.push_back(row);
  }
  return result;
}

std::vector<Fig3Row> fig3_sweep(double length, const std::vector<double>& r_values) {
  std::vector<Fig3Row> rows;
  rows.reserve(r_values.size());
  for (double r : r_values) rows.push_back({r, cameras_for_barrier(length, r)});
  return rows;
}

std::vector<double> radius_range(double r_min, double r_max, double step) {
  if (!(r_min > 0.0) || !(step > 0.0) || r_max < r_min)
    throw InvalidArgument("radius range needs 0 < r-min <= r-max and step > 0");
  std::vector<double> out;
  for (int k = 0;; ++k) {
    const double r = r_min + k * step;
    if (r > r_max + 1e-9 * std::max(1.0, r_max)) break;
    out.push_back(r);
  }
  return out;
}

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  out << "x,estimate,trials,successes,stderr\n";
  for (const SweepRow& row : result.rows) {
    out << format_number(row.x) << ',' << format_number(row.estimate) << ',' << row.trials
        << ',' << row.successes << ',' << format_number(row.std_error) << '\n';
  }
}

void write_camera_count_csv(std::ostream& out, const CameraCountResult& result) {
  out << "x,mean_cameras,mean_weight,trials,with_barrier,stderr\n";
  for (const CameraCountRow& row : result.rows) {
    out << format_number(row.x) << ',' << format_number(row.mean_cameras) << ','
        << format_number(row.mean_weight) << ',' << row.trials << ',' << row.with_barrier
        << ',' << format_number(row.std_error) << '\n';
  }
}

void write_fig3_csv(std::ostream& out, const std::vector<Fig3Row>& rows) {
  out << "x,cameras\n";
  for (const Fig3Row& row : rows) out << format_number(row.r) << ',' << row.cameras << '\n';
}

}  // namespace fvbarrier
