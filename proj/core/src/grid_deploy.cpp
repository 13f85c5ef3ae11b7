#include "fvbarrier/grid_deploy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "fvbarrier/error.hpp"
#include "fvbarrier/line_model.hpp"

namespace fvbarrier {

const char* to_string(Orientation o) {
  switch (o) {
    case Orientation::Down: return "down";
    case Orientation::Up: return "up";
    case Orientation::Silent: return "silent";
  }
  return "silent";
}

bool GridModel::contains(CellIndex c) const {
  return c.row >= 1 && c.row <= m && c.col >= 1 && c.col <= n;
}

const std::vector<std::uint64_t>& GridModel::cell(CellIndex c) const {
  if (!contains(c)) throw InvalidArgument("cell index out of range");
  return occupancy[static_cast<std::size_t>((c.row - 1) * n + (c.col - 1))];
}

Point2D GridModel::vertex_position(VertexIndex v) const {
  return {(v.col - 1) * d, (v.row - 1) * d};
}

Segment GridModel::mid_segment(CellIndex c) const {
  const double y = (c.row - 0.5) * d;
  return Segment({(c.col - 1) * d, y}, {c.col * d, y});
}

CellIndex GridModel::locate(Point2D p) const {
  auto index = [this](double coord, int limit) {
    const int i = static_cast<int>(std::ceil(coord / d - kEpsilon));
    return std::clamp(i, 1, limit);
  };
  return {index(p.y, m), index(p.x, n)};
}

double grid_length_bound(double r) {
  if (!(r > 0.0)) throw InvalidArgument("sensing radius must be positive");
  return 2.0 * r / std::sqrt(5.0);
}

int cells_along(double extent, double d) {
  return std::max(1, static_cast<int>(std::ceil(extent / d - kEpsilon)));
}

GridModel partition(double width, double height, double d,
                    std::span<const CameraPose> cameras) {
  if (!(width > 0.0) || !(height > 0.0) || !(d > 0.0))
    throw InvalidArgument("region width, height and cell length must be positive");

  GridModel grid;
  grid.width = width;
  grid.height = height;
  grid.d = d;
  grid.m = cells_along(height, d);
  grid.n = cells_along(width, d);
  grid.occupancy.assign(static_cast<std::size_t>(grid.m * grid.n), {});

  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> outside;
  for (const CameraPose& cam : cameras) {
    if (!seen.insert(cam.id).second)
      throw InvalidArgument("duplicate camera id " + std::to_string(cam.id));
    const Point2D p = cam.position;
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || p.x < -kEpsilon ||
        p.y < -kEpsilon || p.x > width + kEpsilon || p.y > height + kEpsilon) {
      outside.push_back(cam.id);
      continue;
    }
    const CellIndex c = grid.locate(p);
    grid.occupancy[static_cast<std::size_t>((c.row - 1) * grid.n + (c.col - 1))].push_back(
        cam.id);
  }
  if (!outside.empty()) {
    std::sort(outside.begin(), outside.end());
    std::ostringstream msg;
    msg << "cameras outside region:";
    for (std::uint64_t id : outside) msg << ' ' << id;
    throw InfeasibleInput(msg.str());
  }
  for (auto& ids : grid.occupancy) std::sort(ids.begin(), ids.end());
  return grid;
}

std::map<CellIndex, std::uint64_t> elect_grid_heads(const GridModel& grid) {
  std::map<CellIndex, std::uint64_t> heads;
  for (int i = 1; i <= grid.m; ++i) {
    for (int j = 1; j <= grid.n; ++j) {
      const auto& ids = grid.cell({i, j});
      if (!ids.empty()) heads[{i, j}] = *std::min_element(ids.begin(), ids.end());
    }
  }
  return heads;
}

VertexIndex corner_vertex(CellIndex cell, Corner corner) {
  switch (corner) {
    case Corner::LeftTop: return {cell.row, cell.col};
    case Corner::RightTop: return {cell.row, cell.col + 1};
    case Corner::LeftBottom: return {cell.row + 1, cell.col};
    case Corner::RightBottom: return {cell.row + 1, cell.col + 1};
  }
  return {cell.row, cell.col};
}

std::array<std::vector<std::uint64_t>, 4> assign_to_vertices(
    CellIndex cell, std::span<const std::uint64_t> camera_ids, const GridModel& grid) {
  if (!grid.contains(cell)) throw InvalidArgument("cell index out of range");
  std::vector<std::uint64_t> sorted(camera_ids.begin(), camera_ids.end());
  std::sort(sorted.begin(), sorted.end());

  std::array<std::vector<std::uint64_t>, 4> corners;
  for (std::size_t k = 0; k < sorted.size(); ++k) corners[k % 4].push_back(sorted[k]);
  return corners;
}

VertexSets::VertexSets(const GridModel& grid)
    : rows(grid.m + 1),
      cols(grid.n + 1),
      ids(static_cast<std::size_t>((grid.m + 1) * (grid.n + 1))) {}

std::vector<std::uint64_t>& VertexSets::at(VertexIndex v) {
  return ids[static_cast<std::size_t>((v.row - 1) * cols + (v.col - 1))];
}

const std::vector<std::uint64_t>& VertexSets::at(VertexIndex v) const {
  return ids[static_cast<std::size_t>((v.row - 1) * cols + (v.col - 1))];
}

VertexSets collect_vertex_sets(const GridModel& grid) {
  VertexSets sets(grid);
  for (int i = 1; i <= grid.m; ++i) {
    for (int j = 1; j <= grid.n; ++j) {
      const CellIndex cell{i, j};
      const auto corners = assign_to_vertices(cell, grid.cell(cell), grid);
      for (int k = 0; k < 4; ++k) {
        auto& dst = sets.at(corner_vertex(cell, static_cast<Corner>(k)));
        dst.insert(dst.end(), corners[k].begin(), corners[k].end());
      }
    }
  }
  for (auto& ids : sets.ids) std::sort(ids.begin(), ids.end());
  return sets;
}

std::vector<VertexAssignment> assign_orientations(const GridModel& grid,
                                                  const VertexSets& sets) {
  std::vector<VertexAssignment> out;
  out.reserve(sets.ids.size());
  const int last_row = grid.m + 1;
  for (int i = 1; i <= last_row; ++i) {
    for (int j = 1; j <= grid.n + 1; ++j) {
      VertexAssignment va;
      va.vertex = {i, j};
      va.cameras = sets.at(va.vertex);
      std::sort(va.cameras.begin(), va.cameras.end());

      auto next = va.cameras.begin();
      if (next != va.cameras.end()) {
        if (i == 1) {
          va.down = *next++;
        } else if (i == last_row) {
          va.up = *next++;
        } else {
          va.down = *next++;
          if (next != va.cameras.end()) va.up = *next++;
        }
      }
      va.silent.assign(next, va.cameras.end());
      out.push_back(std::move(va));
    }
  }
  return out;
}

const VertexAssignment& DeploymentPlan::at(VertexIndex v) const {
  const int cols = grid.n + 1;
  if (v.row < 1 || v.row > grid.m + 1 || v.col < 1 || v.col > cols)
    throw InvalidArgument("vertex index out of range");
  return assignments[static_cast<std::size_t>((v.row - 1) * cols + (v.col - 1))];
}

std::vector<CameraPose> DeploymentPlan::active_cameras() const {
  std::vector<CameraPose> out;
  for (const CameraPlacement& c : cameras)
    if (c.orientation != Orientation::Silent) out.push_back(c.final_pose);
  return out;
}

const CameraPlacement* DeploymentPlan::find(std::uint64_t id) const {
  auto it = std::lower_bound(cameras.begin(), cameras.end(), id,
                             [](const CameraPlacement& c, std::uint64_t v) { return c.id < v; });
  return it != cameras.end() && it->id == id ? &*it : nullptr;
}

void refresh_plan_summary(DeploymentPlan& plan) {
  plan.vertex_deficits.clear();
  plan.deficient_cells.clear();
  const int last_row = plan.grid.m + 1;
  for (const VertexAssignment& va : plan.assignments) {
    const int row = va.vertex.row;
    if (row != last_row && !va.down) plan.vertex_deficits.push_back({va.vertex, Orientation::Down});
    if (row != 1 && !va.up) plan.vertex_deficits.push_back({va.vertex, Orientation::Up});
  }
  for (int i = 1; i <= plan.grid.m; ++i)
    for (int j = 1; j <= plan.grid.n; ++j)
      if (!cell_fully_staffed({i, j}, plan)) plan.deficient_cells.push_back({i, j});
}

DeploymentPlan plan_grid_deployment(double width, double height,
                                    std::span<const CameraPose> cameras, double d) {
  DeploymentPlan plan;
  plan.grid = partition(width, height, d, cameras);
  plan.heads = elect_grid_heads(plan.grid);
  const VertexSets sets = collect_vertex_sets(plan.grid);
  plan.assignments = assign_orientations(plan.grid, sets);

  double min_r = std::numeric_limits<double>::infinity();
  std::unordered_map<std::uint64_t, const CameraPose*> by_id;
  for (const CameraPose& cam : cameras) {
    by_id.emplace(cam.id, &cam);
    min_r = std::min(min_r, cam.params.r);
  }
  plan.exceeds_length_bound = !cameras.empty() && d > grid_length_bound(min_r) + kEpsilon;

  const double alpha = optimal_params(1.0).alpha;
  plan.cameras.reserve(cameras.size());
  for (const VertexAssignment& va : plan.assignments) {
    const Point2D target = plan.grid.vertex_position(va.vertex);
    for (std::uint64_t id : va.cameras) {
      const CameraPose& origin = *by_id.at(id);
      CameraPlacement placement;
      placement.id = id;
      placement.origin = origin.position;
      placement.cell = plan.grid.locate(origin.position);
      placement.target = va.vertex;
      placement.travel = distance(origin.position, target);
      placement.final_pose = origin;
      placement.final_pose.position = target;
      if (va.down == id) {
        placement.orientation = Orientation::Down;
        placement.final_pose.facing = kFacingDown;
      } else if (va.up == id) {
        placement.orientation = Orientation::Up;
        placement.final_pose.facing = kFacingUp;
      }
      if (placement.orientation != Orientation::Silent) placement.final_pose.params.phi = alpha;
      plan.cameras.push_back(placement);
    }
  }
  std::sort(plan.cameras.begin(), plan.cameras.end(),
            [](const CameraPlacement& a, const CameraPlacement& b) { return a.id < b.id; });
  refresh_plan_summary(plan);
  return plan;
}

bool cell_fully_staffed(CellIndex cell, const DeploymentPlan& plan) {
  if (!plan.grid.contains(cell)) throw InvalidArgument("cell index out of range");
  return plan.at(corner_vertex(cell, Corner::LeftTop)).down.has_value() &&
         plan.at(corner_vertex(cell, Corner::RightTop)).down.has_value() &&
         plan.at(corner_vertex(cell, Corner::LeftBottom)).up.has_value() &&
         plan.at(corner_vertex(cell, Corner::RightBottom)).up.has_value();
}

std::vector<CellIndex> staffed_cells(const DeploymentPlan& plan) {
  std::vector<CellIndex> out;
  for (int i = 1; i <= plan.grid.m; ++i)
    for (int j = 1; j <= plan.grid.n; ++j)
      if (cell_fully_staffed({i, j}, plan)) out.push_back({i, j});
  return out;
}

bool cell_full_view_verified(CellIndex cell, const DeploymentPlan& plan, double theta,
                             int samples) {
  if (!plan.grid.contains(cell)) throw InvalidArgument("cell index out of range");
  const Segment seg = plan.grid.mid_segment(cell);
  const Point2D centre = seg.midpoint();
  const double half = 0.5 * seg.length();

  // Only cameras that can reach some point of the segment matter.
  std::vector<CameraPose> nearby;
  for (const CameraPlacement& c : plan.cameras) {
    if (c.orientation == Orientation::Silent) continue;
    if (distance(c.final_pose.position, centre) < c.final_pose.params.r + half + kEpsilon)
      nearby.push_back(c.final_pose);
  }
  return full_view_covered_segment(seg, nearby, theta, samples);
}

}  // namespace fvbarrier
