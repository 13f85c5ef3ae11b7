#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fvbarrier/barrier_graph.hpp"
#include "fvbarrier/geometry.hpp"

namespace fvbarrier {

inline constexpr const char* kVersion = "0.1.0";

enum class Mode { Static, Mobile };

const char* to_string(Mode mode);
/// Throws InvalidArgument for anything other than "static" or "mobile".
Mode parse_mode(const std::string& text);

struct Region {
  double width = 0.0;
  double height = 0.0;
};

/// One experiment: cameras with shared hardware parameters are scattered uniformly over
/// the region, `trials` times for each entry of `counts`.
struct ScenarioConfig {
  double width = 100.0;
  double height = 50.0;
  double r = 30.0;
  double theta = kPi / 3.0;      ///< effective angle
  double phi = 2.0 * kPi / 3.0;  ///< field of view of a static camera
  std::vector<std::uint64_t> counts;
  int trials = 100;
  std::uint64_t seed = 1;
  Mode mode = Mode::Mobile;
  int samples = kDefaultSegmentSamples;

  /// Throws InvalidArgument on non-positive sizes, theta outside (0, pi/2],
  /// phi outside (0, 2pi], trials < 1 or samples < 2.
  void validate() const;
  [[nodiscard]] Region region() const { return {width, height}; }
  [[nodiscard]] CameraParams camera() const { return {r, phi, theta}; }
  /// Cell side used by both modes: grid_length_bound(r).
  [[nodiscard]] double cell_length() const;
};

/// SplitMix64 step: advances state and returns the next output.
std::uint64_t splitmix64(std::uint64_t& state);

/// Seed of the substream used for one (count, trial) draw. Both modes use the same
/// substream, so a static and a mobile evaluation of the same draw see the same cameras.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t count, std::uint64_t trial);

/// `count` cameras with ids 0..count-1, positions uniform over the region and facings
/// uniform over [0, 2pi). Draws come from std::mt19937_64 seeded with `seed`; each
/// camera consumes three 64-bit outputs (x, y, facing) mapped to [0,1) via their top
/// 53 bits.
std::vector<CameraPose> random_deploy(Region region, std::uint64_t count, std::uint64_t seed,
                                      const CameraParams& params = {});

/// The camera set of draw `trial` at deployed count `count`.
std::vector<CameraPose> trial_deployment(const ScenarioConfig& config, std::uint64_t count,
                                         std::uint64_t trial);

struct MobileOutcome {
  BarrierResult barrier;
  std::uint64_t cameras_on_barrier = 0;  ///< distinct active cameras, 0 if none
};

/// Relocates cameras with the grid plan, keeps fully staffed cells and searches for a
/// left-to-right barrier over them.
MobileOutcome evaluate_mobile(const std::vector<CameraPose>& cameras,
                              const ScenarioConfig& config);
bool barrier_exists_mobile(const std::vector<CameraPose>& cameras, const ScenarioConfig& config);

/// Same grid, but a cell counts only if its mid-segment is full-view covered by the
/// cameras exactly as deployed.
std::vector<CellIndex> static_covered_cells(const std::vector<CameraPose>& cameras,
                                            const ScenarioConfig& config);
bool barrier_exists_static(const std::vector<CameraPose>& cameras, const ScenarioConfig& config);

bool barrier_exists(const std::vector<CameraPose>& cameras, const ScenarioConfig& config);

struct SweepRow {
  double x = 0.0;
  double estimate = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double std_error = 0.0;  ///< sqrt(p(1-p)/trials)
};

struct SweepResult {
  ScenarioConfig config;
  std::vector<SweepRow> rows;
};

/// Fraction of draws admitting a barrier in config.mode, per deployed count.
SweepResult coverage_probability_sweep(const ScenarioConfig& config);

struct CameraCountRow {
  double x = 0.0;
  double mean_cameras = 0.0;  ///< over trials with a barrier only
  double mean_weight = 0.0;   ///< mean path weight over the same trials
  std::uint64_t trials = 0;
  std::uint64_t with_barrier = 0;
  double std_error = 0.0;     ///< standard error of mean_cameras
};

struct CameraCountResult {
  ScenarioConfig config;
  std::vector<CameraCountRow> rows;
};

/// Cameras on the shortest mobile barrier, per deployed count. Draws without a barrier
/// are counted in `trials` but excluded from the means.
CameraCountResult barrier_camera_count_sweep(const ScenarioConfig& config);

struct Fig3Row {
  double r = 0.0;
  std::uint64_t cameras = 0;
};

/// cameras_for_barrier(length, r) for each r.
std::vector<Fig3Row> fig3_sweep(double length, const std::vector<double>& r_values);

/// r_min, r_min+step, ... up to r_max inclusive (with rounding slack).
std::vector<double> radius_range(double r_min, double r_max, double step);

/// Formats with 9 significant digits ("%.9g").
std::string format_number(double value);

void write_sweep_csv(std::ostream& out, const SweepResult& result);
void write_camera_count_csv(std::ostream& out, const CameraCountResult& result);
void write_fig3_csv(std::ostream& out, const std::vector<Fig3Row>& rows);

}  // namespace fvbarrier
