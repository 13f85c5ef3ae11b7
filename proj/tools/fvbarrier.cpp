// Command-line front end: line planning, grid relocation, barrier extraction and
// Monte Carlo sweeps. Exit codes: 0 ok, 2 invalid input/config, 3 infeasible input.

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fvbarrier/barrier_graph.hpp"
#include "fvbarrier/error.hpp"
#include "fvbarrier/grid_deploy.hpp"
#include "fvbarrier/line_model.hpp"
#include "fvbarrier/serialization.hpp"
#include "fvbarrier/simulation.hpp"

namespace {

using namespace fvbarrier;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitInfeasible = 3;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

// Writes to `path`, or stdout when empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct PlanLineArgs {
  double length = 100.0;
  double r = 5.0;
  double theta = kPi / 4.0;
  double y = 0.0;
  std::string out;
};

void run_plan_line(const PlanLineArgs& a) {
  const LineDeployment dep = place_line_deployment(Segment({0.0, a.y}, {a.length, a.y}), a.r, a.theta);
  emit(a.out, dump(to_json(dep, validate_params(dep.params, a.r, a.theta))));
}

struct DeployArgs {
  std::string cameras;
  double width = 0.0;
  double height = 0.0;
  std::optional<double> d;
  std::string out;
};

void run_deploy_grid(const DeployArgs& a) {
  const auto cams = cameras_from_json(read_json(a.cameras));
  double d = 0.0;
  if (a.d) {
    d = *a.d;
  } else {
    if (cams.empty()) throw InvalidArgument("--d is required when the camera file is empty");
    double min_r = std::numeric_limits<double>::infinity();
    for (const auto& c : cams) min_r = std::min(min_r, c.params.r);
    d = grid_length_bound(min_r);
  }
  emit(a.out, dump(to_json(plan_grid_deployment(a.width, a.height, cams, d))));
}

struct PlanArgs {
  std::string plan;
  std::string out;
};

void run_barrier(const PlanArgs& a) {
  const DeploymentPlan plan = plan_from_json(read_json(a.plan));
  const auto covered = staffed_cells(plan);
  const CoverageGraph graph = build_graph(covered, plan.grid.m, plan.grid.n);
  const CoverageGraph pruned = prune_degree_one(graph);
  const BarrierResult result = shortest_barrier(pruned);
  json j = to_json(result);
  j["distinct_cameras"] = distinct_cameras(result, plan);
  j["graph"] = to_json(graph);
  j["pruned_graph"] = to_json(pruned);
  emit(a.out, dump(j));
}

void run_k_barrier(const PlanArgs& a) {
  const DeploymentPlan plan = plan_from_json(read_json(a.plan));
  const auto covered = staffed_cells(plan);
  json cells = json::array();
  for (const auto& c : covered) cells.push_back({c.row, c.col});
  const json j = {{"k", k_barrier_count(covered, plan.grid.m, plan.grid.n)},
                  {"m", plan.grid.m},
                  {"n", plan.grid.n},
                  {"covered", cells}};
  emit(a.out, dump(j));
}

struct SimulateArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<std::string> mode;
  std::optional<int> samples;
  std::string metric = "coverage";
  std::string out;
  std::string meta;
};

void run_simulate(const SimulateArgs& a) {
  ScenarioConfig cfg = scenario_from_json(read_json(a.config));
  if (a.seed) cfg.seed = *a.seed;
  if (a.trials) cfg.trials = *a.trials;
  if (a.mode) cfg.mode = parse_mode(*a.mode);
  if (a.samples) cfg.samples = *a.samples;
  cfg.validate();

  std::ostringstream csv;
  if (a.metric == "coverage") {
    write_sweep_csv(csv, coverage_probability_sweep(cfg));
  } else if (a.metric == "cameras") {
    write_camera_count_csv(csv, barrier_camera_count_sweep(cfg));
  } else {
    throw InvalidArgument("--metric must be 'coverage' or 'cameras'");
  }
  emit(a.out, csv.str());

  if (!a.meta.empty()) {
    const json meta = {{"version", kVersion},
                       {"metric", a.metric},
                       {"config", to_json(cfg)},
                       {"angles", "theta is the effective angle, phi the camera field of view"},
                       {"rng", "mt19937_64, per-draw seed = splitmix64 chain over (seed, count, trial)"}};
    emit(a.meta, dump(meta));
  }
}

struct Fig3Args {
  double length = 100.0;
  double r_min = 2.0;
  double r_max = 10.0;
  double step = 1.0;
  std::string out;
};

void run_fig3(const Fig3Args& a) {
  std::ostringstream csv;
  write_fig3_csv(csv, fig3_sweep(a.length, radius_range(a.r_min, a.r_max, a.step)));
  emit(a.out, csv.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Full-view camera barrier planning and simulation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  PlanLineArgs plan_line;
  auto* pl = app.add_subcommand("plan-line", "Emit the two-row line deployment for a horizontal barrier as JSON");
  pl->add_option("--length", plan_line.length, "Barrier length in metres")->check(CLI::PositiveNumber);
  pl->add_option("--r", plan_line.r, "Sensing radius in metres")->check(CLI::PositiveNumber);
  pl->add_option("--theta", plan_line.theta, "Effective angle in radians, within [pi/4, pi/2]");
  pl->add_option("--y", plan_line.y, "Barrier y coordinate");
  pl->add_option("--out", plan_line.out, "Output file (default stdout)");

  DeployArgs deploy;
  auto* dg = app.add_subcommand("deploy-grid", "Relocate cameras onto grid vertices and emit the plan JSON");
  dg->add_option("--cameras", deploy.cameras, "Camera JSON file")->required();
  dg->add_option("--width", deploy.width, "Region width in metres")->required();
  dg->add_option("--height", deploy.height, "Region height in metres")->required();
  dg->add_option("--d", deploy.d, "Cell side (default: 2r/sqrt(5) for the smallest r)");
  dg->add_option("--out", deploy.out, "Output file (default stdout)");

  PlanArgs barrier;
  auto* br = app.add_subcommand("barrier", "Extract the minimum-weight barrier from a plan JSON");
  br->add_option("--plan", barrier.plan, "Plan JSON from deploy-grid")->required();
  br->add_option("--out", barrier.out, "Output file (default stdout)");

  PlanArgs kbar;
  auto* kb = app.add_subcommand("k-barrier", "Column-minimum barrier count of a plan JSON");
  kb->add_option("--plan", kbar.plan, "Plan JSON from deploy-grid")->required();
  kb->add_option("--out", kbar.out, "Output file (default stdout)");

  SimulateArgs sim;
  auto* sm = app.add_subcommand("simulate", "Run a seeded Monte Carlo sweep from a scenario JSON");
  sm->add_option("--config", sim.config, "Scenario JSON file")->required();
  sm->add_option("--seed", sim.seed, "Override the scenario seed");
  sm->add_option("--trials", sim.trials, "Override trials per count");
  sm->add_option("--mode", sim.mode, "static or mobile");
  sm->add_option("--samples", sim.samples, "Samples per verified segment");
  sm->add_option("--metric", sim.metric, "coverage (probability) or cameras (barrier size)");
  sm->add_option("--out", sim.out, "CSV output file (default stdout)");
  sm->add_option("--meta", sim.meta, "Write run metadata JSON here");

  Fig3Args fig3;
  auto* f3 = app.add_subcommand("fig3", "Cameras needed to line a barrier, per sensing radius");
  f3->add_option("--length", fig3.length, "Barrier length in metres");
  f3->add_option("--r-min", fig3.r_min, "Smallest radius");
  f3->add_option("--r-max", fig3.r_max, "Largest radius");
  f3->add_option("--step", fig3.step, "Radius step");
  f3->add_option("--out", fig3.out, "CSV output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*pl) run_plan_line(plan_line);
    if (*dg) run_deploy_grid(deploy);
    if (*br) run_barrier(barrier);
    if (*kb) run_k_barrier(kbar);
    if (*sm) run_simulate(sim);
    if (*f3) run_fig3(fig3);
  } catch (const InfeasibleInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}
