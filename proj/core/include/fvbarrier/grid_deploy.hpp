#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "fvbarrier/geometry.hpp"

namespace fvbarrier {

// Grid frame: the region spans x in [0, width] and y in [0, height] with the origin at
// the top-left corner and y growing downward. Cell (1,1) is the top-left cell; rows grow
// downward and columns rightward. Vertex (i,j) sits at ((j-1)d, (i-1)d).

struct CellIndex {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

struct VertexIndex {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const VertexIndex&, const VertexIndex&) = default;
};

enum class Orientation { Down, Up, Silent };

const char* to_string(Orientation o);

/// Bearing of "down" (toward larger rows) and "up" in the grid frame.
inline const Bearing kFacingDown{kPi / 2.0};
inline const Bearing kFacingUp{1.5 * kPi};

struct GridModel {
  double width = 0.0;
  double height = 0.0;
  double d = 0.0;
  int m = 0;  ///< rows
  int n = 0;  ///< columns
  std::vector<std::vector<std::uint64_t>> occupancy;  ///< m*n, row-major, ids ascending

  [[nodiscard]] bool contains(CellIndex c) const;
  [[nodiscard]] const std::vector<std::uint64_t>& cell(CellIndex c) const;
  [[nodiscard]] std::uint64_t count(CellIndex c) const { return cell(c).size(); }
  [[nodiscard]] Point2D vertex_position(VertexIndex v) const;
  /// Horizontal centreline of the cell, d/2 below its top edge.
  [[nodiscard]] Segment mid_segment(CellIndex c) const;
  /// Cell containing p, applying the smaller-row-then-smaller-column tie rule.
  [[nodiscard]] CellIndex locate(Point2D p) const;
};

/// Largest cell side that keeps a cell full-view coverable: 2r/sqrt(5).
double grid_length_bound(double r);

/// Number of cells along an extent, ceil(extent/d) with rounding slack.
int cells_along(double extent, double d);

/// Bins cameras into an m x n grid with cell side d. Throws InvalidArgument for
/// non-positive sizes or duplicate ids, and InfeasibleInput naming every camera that
/// lies outside the region.
GridModel partition(double width, double height, double d,
                    std::span<const CameraPose> cameras);

/// Head of each non-empty cell: the smallest id in it.
std::map<CellIndex, std::uint64_t> elect_grid_heads(const GridModel& grid);

enum class Corner { LeftTop = 0, RightTop = 1, LeftBottom = 2, RightBottom = 3 };

VertexIndex corner_vertex(CellIndex cell, Corner corner);

/// Deals a cell's cameras round-robin to LT, RT, LB, RB (ids ascending first), so
/// earlier corners take the remainder. Indexed by Corner.
std::array<std::vector<std::uint64_t>, 4> assign_to_vertices(
    CellIndex cell, std::span<const std::uint64_t> camera_ids, const GridModel& grid);

/// Cameras gathered at each lattice vertex after every cell has dealt its members.
struct VertexSets {
  int rows = 0;  ///< m + 1
  int cols = 0;  ///< n + 1
  std::vector<std::vector<std::uint64_t>> ids;

  explicit VertexSets(const GridModel& grid);
  [[nodiscard]] std::vector<std::uint64_t>& at(VertexIndex v);
  [[nodiscard]] const std::vector<std::uint64_t>& at(VertexIndex v) const;
};

VertexSets collect_vertex_sets(const GridModel& grid);

struct VertexAssignment {
  VertexIndex vertex;
  std::vector<std::uint64_t> cameras;  ///< everyone stationed here, ascending
  std::optional<std::uint64_t> down;
  std::optional<std::uint64_t> up;
  std::vector<std::uint64_t> silent;   ///< substitutes, ascending
};

/// Activates cameras per vertex with smallest-id selection: row 1 gets one camera facing
/// down, row m+1 one facing up, interior rows one down then one up. An interior vertex
/// holding a single camera points it down and lacks an up camera.
std::vector<VertexAssignment> assign_orientations(const GridModel& grid,
                                                  const VertexSets& sets);

struct CameraPlacement {
  std::uint64_t id = 0;
  Point2D origin;
  CellIndex cell;
  VertexIndex target;
  double travel = 0.0;
  Orientation orientation = Orientation::Silent;
  CameraPose final_pose;  ///< at the target vertex; active cameras carry phi = alpha
};

struct VertexDeficit {
  VertexIndex vertex;
  Orientation missing = Orientation::Down;
  friend bool operator==(const VertexDeficit&, const VertexDeficit&) = default;
};

struct DeploymentPlan {
  GridModel grid;
  std::vector<VertexAssignment> assignments;  ///< row-major over the (m+1)x(n+1) lattice
  std::vector<CameraPlacement> cameras;       ///< sorted by id
  std::map<CellIndex, std::uint64_t> heads;
  std::vector<VertexDeficit> vertex_deficits;
  std::vector<CellIndex> deficient_cells;     ///< cells that are not fully staffed
  bool exceeds_length_bound = false;          ///< d > grid_length_bound(min r)

  [[nodiscard]] const VertexAssignment& at(VertexIndex v) const;
  [[nodiscard]] std::vector<CameraPose> active_cameras() const;
  [[nodiscard]] const CameraPlacement* find(std::uint64_t id) const;
};

/// Full grid relocation pipeline: partition, elect heads, deal each cell's cameras to
/// its corners, move them there and orient one or two per vertex. Cells are handled
/// independently in row-major order. The result depends only on the camera set, not
/// on input order.
DeploymentPlan plan_grid_deployment(double width, double height,
                                    std::span<const CameraPose> cameras, double d);

/// Top corners have an active down camera and bottom corners an active up camera.
bool cell_fully_staffed(CellIndex cell, const DeploymentPlan& plan);

std::vector<CellIndex> staffed_cells(const DeploymentPlan& plan);

/// Geometric check of the cell's mid-segment against every active camera in the plan.
bool cell_full_view_verified(CellIndex cell, const DeploymentPlan& plan, double theta,
                             int samples = kDefaultSegmentSamples);

/// Recomputes vertex deficits and deficient cells from the assignments.
void refresh_plan_summary(DeploymentPlan& plan);

}  // namespace fvbarrier
