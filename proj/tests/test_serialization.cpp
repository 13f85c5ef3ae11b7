#include <random>

#include "doctest.h"
#include "fvbarrier/error.hpp"
#include "fvbarrier/serialization.hpp"

using namespace fvbarrier;
using nlohmann::json;

TEST_CASE("round9 keeps nine significant digits") {
  CHECK(round9(kPi) == 3.14159265);
  CHECK(round9(0.0) == 0.0);
  CHECK(json(round9(1.0 / 3.0)).dump() == "0.333333333");
}

TEST_CASE("camera files") {
  const json arr = json::parse(R"([{"id": 3, "x": 1.5, "y": 2, "r": 5},
                                    {"id": 4, "x": 0, "y": 0, "facing": 1.0, "r": 5,
                                     "phi": 1.0, "theta": 0.5}])");
  const auto cams = cameras_from_json(arr);
  REQUIRE(cams.size() == 2);
  CHECK(cams[0].id == 3);
  CHECK(cams[0].position == Point2D{1.5, 2.0});
  CHECK(cams[1].facing.radians() == 1.0);
  CHECK(cams[1].params.theta == 0.5);
  CHECK(cameras_from_json(json{{"cameras", arr}}).size() == 2);

  CHECK_THROWS_AS(cameras_from_json(json::parse(R"([{"id": 1, "x": 0}])")), InvalidArgument);
  CHECK_THROWS_AS(cameras_from_json(json::parse(R"([{"id": 1, "x": 0, "y": 0, "r": -1}])")),
                  InvalidArgument);
  CHECK_THROWS_AS(
      cameras_from_json(json::parse(R"([{"id": 1, "x": 0, "y": 0, "r": 1},
                                        {"id": 1, "x": 1, "y": 0, "r": 1}])")),
      InvalidArgument);
  CHECK_THROWS_AS(cameras_from_json(json(5)), InvalidArgument);
}

TEST_CASE("property: plan JSON round trip preserves staffing and barrier") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const Region region{60.0, 30.0};
    const std::uint64_t count = std::uniform_int_distribution<std::uint64_t>(0, 200)(rng);
    const auto cams = random_deploy(region, count, rng(), {10.0, 1.0, kPi / 3.0});
    const double d = grid_length_bound(10.0);
    const DeploymentPlan plan = plan_grid_deployment(region.width, region.height, cams, d);
    const json j = to_json(plan);
    const DeploymentPlan back = plan_from_json(json::parse(j.dump()));

    CHECK(back.grid.m == plan.grid.m);
    CHECK(back.grid.n == plan.grid.n);
    CHECK(back.grid.occupancy == plan.grid.occupancy);
    CHECK(back.heads == plan.heads);
    CHECK(back.cameras.size() == plan.cameras.size());
    CHECK(back.vertex_deficits == plan.vertex_deficits);
    CHECK(back.deficient_cells == plan.deficient_cells);
    CHECK(staffed_cells(back) == staffed_cells(plan));
    CHECK(to_json(back) == j);
  }
}

TEST_CASE("plan parsing errors") {
  CHECK_THROWS_AS(plan_from_json(json::object()), InvalidArgument);
  const DeploymentPlan plan = plan_grid_deployment(10, 10, {}, 5);
  json j = to_json(plan);
  j["vertices"].erase(0);
  CHECK_THROWS_AS(plan_from_json(j), InvalidArgument);
}

TEST_CASE("graph and barrier shapes") {
  const std::vector<CellIndex> cells{{1, 1}, {1, 2}};
  const CoverageGraph g = build_graph(cells, 1, 2);
  const json jg = to_json(g);
  CHECK(jg["nodes"] == json::parse(R"(["s", "t", [1, 1], [1, 2]])"));
  CHECK(jg["edges"].size() == 3);
  CHECK(jg["edges"][0] == json::parse(R"({"u": 0, "v": 2, "weight": 4, "kind": "source"})"));

  const json jb = to_json(shortest_barrier(g));
  CHECK(jb == json::parse(R"({"exists": true, "weight": 6, "path": [[1, 1], [1, 2]]})"));
}

TEST_CASE("scenario JSON") {
  const ScenarioConfig c = scenario_from_json(json::parse(
      R"({"width": 100, "height": 50, "r": 30, "theta": 1.0471975512, "phi": 2.0943951024,
          "counts": [0, 25], "trials": 7, "seed": 42, "mode": "static", "samples": 11})"));
  CHECK(c.width == 100.0);
  CHECK(c.counts == std::vector<std::uint64_t>{0, 25});
  CHECK(c.trials == 7);
  CHECK(c.seed == 42);
  CHECK(c.mode == Mode::Static);
  CHECK(c.samples == 11);
  CHECK(scenario_from_json(to_json(c)).counts == c.counts);

  CHECK(scenario_from_json(json::object()).mode == Mode::Mobile);
  CHECK_THROWS_AS(scenario_from_json(json{{"colour", 1}}), InvalidArgument);
  CHECK_THROWS_AS(scenario_from_json(json{{"trials", "many"}}), InvalidArgument);
  CHECK_THROWS_AS(scenario_from_json(json{{"theta", 2.0}}), InvalidArgument);
  CHECK_THROWS_AS(scenario_from_json(json::array()), InvalidArgument);
}
