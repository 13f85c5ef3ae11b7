#include "fvbarrier/serialization.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>

#include "fvbarrier/error.hpp"

namespace fvbarrier {

using nlohmann::json;

namespace {

json cell_pair(int row, int col) { return json::array({row, col}); }

CellIndex cell_from(const json& j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

json optional_id(const std::optional<std::uint64_t>& id) {
  return id ? json(*id) : json(nullptr);
}

std::optional<std::uint64_t> optional_id_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::uint64_t>();
}

Orientation orientation_from(const std::string& s) {
  if (s == "down") return Orientation::Down;
  if (s == "up") return Orientation::Up;
  if (s == "silent") return Orientation::Silent;
  throw InvalidArgument("unknown orientation '" + s + "'");
}

// nlohmann reports missing keys and type mismatches with its own exception types.
template <typename F>
auto parsing(const char* what, F&& body) {
  try {
    return body();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed ") + what + ": " + e.what());
  }
}

}  // namespace

double round9(double value) {
  if (!std::isfinite(value) || value == 0.0) return value;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return std::strtod(buf, nullptr);
}

json to_json(const CameraPose& camera) {
  return {{"id", camera.id},
          {"x", round9(camera.position.x)},
          {"y", round9(camera.position.y)},
          {"facing", round9(camera.facing.radians())},
          {"r", round9(camera.params.r)},
          {"phi", round9(camera.params.phi)},
          {"theta", round9(camera.params.theta)}};
}

CameraPose camera_from_json(const json& j) {
  return parsing("camera", [&] {
    CameraPose cam;
    cam.id = j.at("id").get<std::uint64_t>();
    cam.position = {j.at("x").get<double>(), j.at("y").get<double>()};
    cam.facing = Bearing(j.value("facing", 0.0));
    cam.params = {j.at("r").get<double>(), j.value("phi", cam.params.phi),
                  j.value("theta", cam.params.theta)};
    cam.params.validate();
    return cam;
  });
}

json cameras_to_json(const std::vector<CameraPose>& cameras) {
  json arr = json::array();
  for (const CameraPose& c : cameras) arr.push_back(to_json(c));
  return {{"cameras", arr}};
}

std::vector<CameraPose> cameras_from_json(const json& j) {
  const json& arr = j.is_object() && j.contains("cameras") ? j.at("cameras") : j;
  if (!arr.is_array()) throw InvalidArgument("camera file must hold an array of cameras");
  std::vector<CameraPose> out;
  std::set<std::uint64_t> ids;
  for (const json& item : arr) {
    out.push_back(camera_from_json(item));
    if (!ids.insert(out.back().id).second)
      throw InvalidArgument("duplicate camera id " + std::to_string(out.back().id));
  }
  return out;
}

json to_json(const LineDeployment& deployment, const LineValidation& validation) {
  json cams = json::array();
  for (const CameraPose& c : deployment.cameras) cams.push_back(to_json(c));
  return {
      {"barrier",
       {{"a", {{"x", round9(deployment.barrier.a().x)}, {"y", round9(deployment.barrier.a().y)}}},
        {"b", {{"x", round9(deployment.barrier.b().x)}, {"y", round9(deployment.barrier.b().y)}}}}},
      {"params",
       {{"h", round9(deployment.params.h)},
        {"delta", round9(deployment.params.delta)},
        {"alpha", round9(deployment.params.alpha)}}},
      {"validation",
       {{"swing", validation.swing},
        {"spacing", validation.spacing},
        {"height", validation.height},
        {"reach", validation.reach}}},
      {"camera_count", deployment.cameras.size()},
      {"cameras", cams}};
}

json to_json(const DeploymentPlan& plan) {
  const GridModel& g = plan.grid;
  json cells = json::array();
  for (int i = 1; i <= g.m; ++i)
    for (int j = 1; j <= g.n; ++j)
      cells.push_back({{"row", i}, {"col", j}, {"cameras", g.cell({i, j})}});

  json heads = json::array();
  for (const auto& [cell, head] : plan.heads)
    heads.push_back({{"row", cell.row}, {"col", cell.col}, {"head", head}});

  json vertices = json::array();
  for (const VertexAssignment& va : plan.assignments) {
    vertices.push_back({{"row", va.vertex.row},
                        {"col", va.vertex.col},
                        {"cameras", va.cameras},
                        {"down", optional_id(va.down)},
                        {"up", optional_id(va.up)},
                        {"silent", va.silent}});
  }

  json cameras = json::array();
  for (const CameraPlacement& c : plan.cameras) {
    cameras.push_back({{"id", c.id},
                       {"origin", {{"x", round9(c.origin.x)}, {"y", round9(c.origin.y)}}},
                       {"cell", cell_pair(c.cell.row, c.cell.col)},
                       {"vertex", cell_pair(c.target.row, c.target.col)},
                       {"travel", round9(c.travel)},
                       {"orientation", to_string(c.orientation)},
                       {"final", to_json(c.final_pose)}});
  }

  json deficits = json::array();
  for (const VertexDeficit& d : plan.vertex_deficits)
    deficits.push_back(
        {{"row", d.vertex.row}, {"col", d.vertex.col}, {"missing", to_string(d.missing)}});

  json deficient = json::array();
  for (const CellIndex& c : plan.deficient_cells) deficient.push_back(cell_pair(c.row, c.col));

  return {{"grid",
           {{"width", round9(g.width)},
            {"height", round9(g.height)},
            {"d", round9(g.d)},
            {"m", g.m},
            {"n", g.n},
            {"cells", cells}}},
          {"heads", heads},
          {"vertices", vertices},
          {"cameras", cameras},
          {"vertex_deficits", deficits},
          {"deficient_cells", deficient},
          {"exceeds_length_bound", plan.exceeds_length_bound}};
}

DeploymentPlan plan_from_json(const json& j) {
  return parsing("plan", [&] {
    DeploymentPlan plan;
    const json& g = j.at("grid");
    plan.grid.width = g.at("width").get<double>();
    plan.grid.height = g.at("height").get<double>();
    plan.grid.d = g.at("d").get<double>();
    plan.grid.m = g.at("m").get<int>();
    plan.grid.n = g.at("n").get<int>();
    if (plan.grid.m < 1 || plan.grid.n < 1 || !(plan.grid.d > 0.0))
      throw InvalidArgument("plan grid dimensions must be positive");
    plan.grid.occupancy.assign(static_cast<std::size_t>(plan.grid.m * plan.grid.n), {});
    for (const json& c : g.at("cells")) {
      const CellIndex idx{c.at("row").get<int>(), c.at("col").get<int>()};
      if (!plan.grid.contains(idx)) throw InvalidArgument("plan cell outside grid");
      plan.grid.occupancy[static_cast<std::size_t>((idx.row - 1) * plan.grid.n + idx.col - 1)] =
          c.at("cameras").get<std::vector<std::uint64_t>>();
    }

    for (const json& h : j.at("heads"))
      plan.heads[{h.at("row").get<int>(), h.at("col").get<int>()}] =
          h.at("head").get<std::uint64_t>();

    const std::size_t expected =
        static_cast<std::size_t>((plan.grid.m + 1) * (plan.grid.n + 1));
    for (const json& v : j.at("vertices")) {
      VertexAssignment va;
      va.vertex = {v.at("row").get<int>(), v.at("col").get<int>()};
      va.cameras = v.at("cameras").get<std::vector<std::uint64_t>>();
      va.down = optional_id_from(v.at("down"));
      va.up = optional_id_from(v.at("up"));
      va.silent = v.at("silent").get<std::vector<std::uint64_t>>();
      plan.assignments.push_back(std::move(va));
    }
    if (plan.assignments.size() != expected)
      throw InvalidArgument("plan vertex list does not match the (m+1)x(n+1) lattice");
    std::sort(plan.assignments.begin(), plan.assignments.end(),
              [](const VertexAssignment& a, const VertexAssignment& b) { return a.vertex < b.vertex; });

    for (const json& c : j.at("cameras")) {
      CameraPlacement p;
      p.id = c.at("id").get<std::uint64_t>();
      p.origin = {c.at("origin").at("x").get<double>(), c.at("origin").at("y").get<double>()};
      p.cell = cell_from(c.at("cell"));
      const CellIndex v = cell_from(c.at("vertex"));
      p.target = {v.row, v.col};
      p.travel = c.at("travel").get<double>();
      p.orientation = orientation_from(c.at("orientation").get<std::string>());
      p.final_pose = camera_from_json(c.at("final"));
      plan.cameras.push_back(p);
    }
    std::sort(plan.cameras.begin(), plan.cameras.end(),
              [](const CameraPlacement& a, const CameraPlacement& b) { return a.id < b.id; });
    plan.exceeds_length_bound = j.value("exceeds_length_bound", false);
    refresh_plan_summary(plan);
    return plan;
  });
}

json to_json(const CoverageGraph& graph) {
  json nodes = json::array({"s", "t"});
  for (const CellIndex& c : graph.cells()) nodes.push_back(cell_pair(c.row, c.col));
  json edges = json::array();
  for (const GraphEdge& e : graph.edges())
    edges.push_back({{"u", e.u}, {"v", e.v}, {"weight", e.weight}, {"kind", to_string(e.kind)}});
  return {{"m", graph.rows()}, {"n", graph.cols()}, {"nodes", nodes}, {"edges", edges}};
}

json to_json(const BarrierResult& result) {
  json path = json::array();
  for (const CellIndex& c : result.path) path.push_back(cell_pair(c.row, c.col));
  return {{"exists", result.exists}, {"weight", result.weight}, {"path", path}};
}

json to_json(const ScenarioConfig& config) {
  return {{"width", round9(config.width)},
          {"height", round9(config.height)},
          {"r", round9(config.r)},
          {"theta", round9(config.theta)},
          {"phi", round9(config.phi)},
          {"counts", config.counts},
          {"trials", config.trials},
          {"seed", config.seed},
          {"mode", to_string(config.mode)},
          {"samples", config.samples}};
}

ScenarioConfig scenario_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("scenario must be a JSON object");
  static const std::set<std::string> known = {"width", "height", "r",    "theta", "phi",
                                              "counts", "trials", "seed", "mode",  "samples"};
  for (const auto& [key, value] : j.items())
    if (!known.contains(key)) throw InvalidArgument("unknown scenario field '" + key + "'");

  return parsing("scenario", [&] {
    ScenarioConfig c;
    c.width = j.value("width", c.width);
    c.height = j.value("height", c.height);
    c.r = j.value("r", c.r);
    c.theta = j.value("theta", c.theta);
    c.phi = j.value("phi", c.phi);
    c.counts = j.value("counts", c.counts);
    c.trials = j.value("trials", c.trials);
    c.seed = j.value("seed", c.seed);
    if (j.contains("mode")) c.mode = parse_mode(j.at("mode").get<std::string>());
    c.samples = j.value("samples", c.samples);
    c.validate();
    return c;
  });
}

}  // namespace fvbarrier
