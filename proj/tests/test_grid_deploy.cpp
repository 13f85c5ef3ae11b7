#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "fvbarrier/error.hpp"
#include "fvbarrier/grid_deploy.hpp"
#include "fvbarrier/line_model.hpp"
#include "oracles.hpp"

using namespace fvbarrier;

namespace {

CameraPose cam(std::uint64_t id, double x, double y, double r = 5.0) {
  return {id, {x, y}, Bearing(0.3 * static_cast<double>(id)), {r, kPi / 3.0, kPi / 4.0}};
}

std::vector<CameraPose> scatter(std::mt19937_64& rng, int count, double w, double h,
                                double r) {
  std::uniform_real_distribution<double> ux(0.0, w);
  std::uniform_real_distribution<double> uy(0.0, h);
  std::vector<CameraPose> out;
  for (int i = 0; i < count; ++i) out.push_back(cam(static_cast<std::uint64_t>(i) * 3 + 1, ux(rng), uy(rng), r));
  return out;
}

}  // namespace

TEST_CASE("grid_length_bound") {
  CHECK(grid_length_bound(5.0) == doctest::Approx(4.4721360).epsilon(1e-8));
  CHECK(grid_length_bound(std::sqrt(5.0)) == doctest::Approx(2.0).epsilon(1e-14));
  for (double r : {0.3, 1.0, 17.0})
    CHECK(grid_length_bound(r) / r == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-14));
  CHECK(grid_length_bound(3.0) == optimal_params(3.0).delta);
  CHECK_THROWS_AS(grid_length_bound(0.0), InvalidArgument);
}

TEST_CASE("partition bins with a top-left origin") {
  const std::vector<CameraPose> cams{cam(1, 1, 1), cam(2, 6, 6)};
  const GridModel g = partition(10, 10, 5, cams);
  CHECK(g.m == 2);
  CHECK(g.n == 2);
  CHECK(g.cell({1, 1}) == std::vector<std::uint64_t>{1});
  CHECK(g.cell({2, 2}) == std::vector<std::uint64_t>{2});
  CHECK(g.cell({1, 2}).empty());

  const GridModel g3 = partition(10, 10, 4, {});
  CHECK(g3.m == 3);
  CHECK(g3.n == 3);

  const std::vector<CameraPose> tie{cam(7, 5, 5)};
  CHECK(partition(10, 10, 5, tie).cell({1, 1}) == std::vector<std::uint64_t>{7});

  // Edges of the region stay inside the outermost cells.
  const std::vector<CameraPose> edges{cam(1, 0, 0), cam(2, 10, 10), cam(3, 10, 0)};
  const GridModel ge = partition(10, 10, 5, edges);
  CHECK(ge.cell({1, 1}) == std::vector<std::uint64_t>{1});
  CHECK(ge.cell({2, 2}) == std::vector<std::uint64_t>{2});
  CHECK(ge.cell({1, 2}) == std::vector<std::uint64_t>{3});
}

TEST_CASE("partition errors") {
  const std::vector<CameraPose> out{cam(4, 11, 1), cam(2, 1, 1), cam(9, -1, 3)};
  CHECK_THROWS_WITH_AS(partition(10, 10, 5, out), "cameras outside region: 4 9",
                       InfeasibleInput);
  const std::vector<CameraPose> dup{cam(1, 1, 1), cam(1, 2, 2)};
  CHECK_THROWS_AS(partition(10, 10, 5, dup), InvalidArgument);
  CHECK_THROWS_AS(partition(0, 10, 5, {}), InvalidArgument);
  CHECK_THROWS_AS(partition(10, 10, -5, {}), InvalidArgument);
}

TEST_CASE("elect_grid_heads picks the smallest id") {
  const std::vector<CameraPose> cams{cam(7, 1, 1), cam(3, 2, 2), cam(9, 3, 3), cam(5, 8, 8)};
  const GridModel g = partition(10, 10, 5, cams);
  const auto heads = elect_grid_heads(g);
  CHECK(heads.size() == 2);
  CHECK(heads.at({1, 1}) == 3);
  CHECK(heads.at({2, 2}) == 5);
  CHECK_FALSE(heads.contains({1, 2}));

  const std::vector<CameraPose> singles{cam(1, 1, 1), cam(2, 6, 1), cam(3, 1, 6), cam(4, 6, 6)};
  const auto h2 = elect_grid_heads(partition(10, 10, 5, singles));
  CHECK(h2.at({1, 1}) == 1);
  CHECK(h2.at({1, 2}) == 2);
  CHECK(h2.at({2, 1}) == 3);
  CHECK(h2.at({2, 2}) == 4);
}

TEST_CASE("assign_to_vertices deals round-robin LT, RT, LB, RB") {
  const GridModel g = partition(10, 10, 5, {});
  const std::vector<std::uint64_t> eight{8, 7, 6, 5, 4, 3, 2, 1};
  auto c8 = assign_to_vertices({1, 1}, eight, g);
  for (const auto& v : c8) CHECK(v.size() == 2);
  CHECK(c8[0] == std::vector<std::uint64_t>{1, 5});

  const std::vector<std::uint64_t> five{10, 20, 30, 40, 50};
  auto c5 = assign_to_vertices({1, 1}, five, g);
  CHECK(c5[static_cast<int>(Corner::LeftTop)] == std::vector<std::uint64_t>{10, 50});
  CHECK(c5[static_cast<int>(Corner::RightTop)].size() == 1);
  CHECK(c5[static_cast<int>(Corner::LeftBottom)].size() == 1);
  CHECK(c5[static_cast<int>(Corner::RightBottom)].size() == 1);

  auto c0 = assign_to_vertices({2, 2}, {}, g);
  for (const auto& v : c0) CHECK(v.empty());

  CHECK_THROWS_AS(assign_to_vertices({3, 1}, {}, g), InvalidArgument);
}

TEST_CASE("assign_orientations smallest-id rules") {
  const GridModel g = partition(10, 10, 5, {});  // 2x2 cells, 3x3 vertices
  VertexSets sets(g);
  sets.at({2, 2}) = {4, 8, 2};
  sets.at({1, 1}) = {9, 6};
  sets.at({2, 1}) = {11};
  sets.at({3, 3}) = {13, 12};
  const auto va = assign_orientations(g, sets);
  REQUIRE(va.size() == 9);
  auto at = [&](int i, int j) { return va[static_cast<std::size_t>((i - 1) * 3 + (j - 1))]; };

  CHECK(at(2, 2).down == 2u);
  CHECK(at(2, 2).up == 4u);
  CHECK(at(2, 2).silent == std::vector<std::uint64_t>{8});

  CHECK(at(1, 1).down == 6u);
  CHECK_FALSE(at(1, 1).up.has_value());
  CHECK(at(1, 1).silent == std::vector<std::uint64_t>{9});

  CHECK(at(2, 1).down == 11u);
  CHECK_FALSE(at(2, 1).up.has_value());

  CHECK(at(3, 3).up == 12u);
  CHECK_FALSE(at(3, 3).down.has_value());
}

TEST_CASE("single-cell plans") {
  const double d = grid_length_bound(5.0);
  const std::vector<CameraPose> four{cam(1, 0.1, 0.1), cam(2, 0.2, 0.2), cam(3, 0.3, 0.3),
                                     cam(4, 0.4, 0.4)};
  const DeploymentPlan full = plan_grid_deployment(d, d, four, d);
  REQUIRE(full.grid.m == 1);
  REQUIRE(full.grid.n == 1);
  CHECK(full.at({1, 1}).down == 1u);
  CHECK(full.at({1, 2}).down == 2u);
  CHECK(full.at({2, 1}).up == 3u);
  CHECK(full.at({2, 2}).up == 4u);
  CHECK(cell_fully_staffed({1, 1}, full));
  CHECK(full.deficient_cells.empty());
  CHECK(full.vertex_deficits.empty());
  CHECK_FALSE(full.exceeds_length_bound);
  CHECK(full.heads.at({1, 1}) == 1);
  CHECK(full.find(3)->final_pose.facing == kFacingUp);
  CHECK(full.find(3)->final_pose.position == Point2D{0.0, d});
  CHECK(full.find(1)->final_pose.params.phi == optimal_params(1.0).alpha);

  const std::vector<CameraPose> three(four.begin(), four.begin() + 3);
  const DeploymentPlan short_plan = plan_grid_deployment(d, d, three, d);
  CHECK(short_plan.at({2, 2}).cameras.empty());
  CHECK_FALSE(cell_fully_staffed({1, 1}, short_plan));
  CHECK(short_plan.vertex_deficits == std::vector<VertexDeficit>{{{2, 2}, Orientation::Up}});
  CHECK(short_plan.deficient_cells == std::vector<CellIndex>{{1, 1}});

  const DeploymentPlan empty = plan_grid_deployment(3 * d, 2 * d, {}, d);
  CHECK(empty.cameras.empty());
  CHECK(empty.deficient_cells.size() == 6);
  CHECK(staffed_cells(empty).empty());
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 3; ++j) CHECK_FALSE(cell_fully_staffed({i, j}, empty));
}

TEST_CASE("length bound violation is flagged") {
  const double d = 1.2 * grid_length_bound(5.0);
  const std::vector<CameraPose> cams{cam(1, 0.5, 0.5)};
  CHECK(plan_grid_deployment(d, d, cams, d).exceeds_length_bound);
}

TEST_CASE("cell_full_view_verified against the oracle") {
  const double r = 5.0;
  const double d = grid_length_bound(r);
  const std::vector<CameraPose> four{cam(1, 0.1, 0.1, r), cam(2, 0.2, 0.2, r),
                                     cam(3, 0.3, 0.3, r), cam(4, 0.4, 0.4, r)};
  const DeploymentPlan plan = plan_grid_deployment(d, d, four, d);
  std::vector<oracle::Cam> oc;
  for (const auto& c : plan.active_cameras())
    oc.push_back({c.position.x, c.position.y, c.facing.radians(), c.params.r, c.params.phi});

  // Frozen from the oracle: the mid-segment of a staffed cell is full-view covered only
  // at its centre.
  const Segment mid = plan.grid.mid_segment({1, 1});
  int covered = 0;
  for (int i = 0; i <= 100; ++i) {
    const Point2D q = mid.at(i / 100.0);
    covered += oracle::full_view(q.x, q.y, oc, kPi / 4.0) ? 1 : 0;
  }
  CHECK(covered == 1);
  CHECK(oracle::full_view(mid.midpoint().x, mid.midpoint().y, oc, kPi / 4.0));
  CHECK(midpoint_shortcut_covered(mid, plan.active_cameras(), kPi / 4.0));
  CHECK_FALSE(cell_full_view_verified({1, 1}, plan, kPi / 4.0, 101));

  const double big = 1.2 * d;
  const DeploymentPlan loose = plan_grid_deployment(big, big, four, big);
  CHECK(cell_fully_staffed({1, 1}, loose));
  CHECK_FALSE(cell_full_view_verified({1, 1}, loose, kPi / 4.0, 101));
  CHECK(midpoint_shortcut_covered(loose.grid.mid_segment({1, 1}), loose.active_cameras(),
                                  kPi / 4.0));

  const std::vector<CameraPose> three(four.begin(), four.begin() + 3);
  CHECK_FALSE(cell_full_view_verified({1, 1}, plan_grid_deployment(d, d, three, d), kPi / 4.0));
}

TEST_CASE("property: plan invariants on random scenarios") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> count(0, 300);
  for (int trial = 0; trial < 60; ++trial) {
    const double r = std::uniform_real_distribution<double>(3.0, 15.0)(rng);
    const double d = grid_length_bound(r);
    const double w = std::uniform_real_distribution<double>(5.0, 60.0)(rng);
    const double h = std::uniform_real_distribution<double>(5.0, 60.0)(rng);
    auto cams = scatter(rng, count(rng), w, h, r);
    const DeploymentPlan plan = plan_grid_deployment(w, h, cams, d);

    CHECK(plan.cameras.size() == cams.size());
    std::set<std::uint64_t> active;
    for (const CameraPlacement& p : plan.cameras) {
      const int dr = p.target.row - p.cell.row;
      const int dc = p.target.col - p.cell.col;
      CHECK((dr == 0 || dr == 1));
      CHECK((dc == 0 || dc == 1));
      CHECK(p.travel == doctest::Approx(distance(p.origin, plan.grid.vertex_position(p.target))));
      CHECK(p.travel <= d * std::sqrt(2.0) + 1e-9);
      if (p.orientation != Orientation::Silent) active.insert(p.id);
    }
    for (const VertexAssignment& va : plan.assignments) {
      if (va.vertex.row == 1) CHECK_FALSE(va.up.has_value());
      if (va.vertex.row == plan.grid.m + 1) CHECK_FALSE(va.down.has_value());
      CHECK(va.cameras.size() ==
            va.silent.size() + (va.down ? 1u : 0u) + (va.up ? 1u : 0u));
    }

    std::shuffle(cams.begin(), cams.end(), rng);
    const DeploymentPlan again = plan_grid_deployment(w, h, cams, d);
    REQUIRE(again.cameras.size() == plan.cameras.size());
    for (std::size_t k = 0; k < plan.cameras.size(); ++k) {
      CHECK(again.cameras[k].id == plan.cameras[k].id);
      CHECK(again.cameras[k].target == plan.cameras[k].target);
      CHECK(again.cameras[k].orientation == plan.cameras[k].orientation);
    }
    CHECK(again.deficient_cells == plan.deficient_cells);
    CHECK(again.heads == plan.heads);

    // Every staffed cell has a full-view covered centre.
    for (const CellIndex& c : staffed_cells(plan)) {
      const Segment mid = plan.grid.mid_segment(c);
      CHECK(full_view_covered_point(mid.midpoint(), plan.active_cameras(), kPi / 4.0));
    }
  }
}
