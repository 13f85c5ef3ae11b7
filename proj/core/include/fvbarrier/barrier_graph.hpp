#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fvbarrier/grid_deploy.hpp"

namespace fvbarrier {

/// Camera increments charged for entering a cell: a lone cell needs four cameras, a
/// side neighbour shares two of them and a diagonal neighbour shares one.
inline constexpr int kSourceWeight = 4;
inline constexpr int kSideWeight = 2;
inline constexpr int kDiagonalWeight = 3;
inline constexpr int kSinkWeight = 0;

enum class EdgeKind { Side, Diagonal, Source, Sink };

const char* to_string(EdgeKind kind);

struct GraphEdge {
  std::size_t u = 0;  ///< u < v
  std::size_t v = 0;
  int weight = 0;
  EdgeKind kind = EdgeKind::Side;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// Undirected graph over covered cells plus virtual nodes for the left boundary (s)
/// and right boundary (t). Node 0 is s, node 1 is t, node k+2 is cells[k].
class CoverageGraph {
 public:
  static constexpr std::size_t kSource = 0;
  static constexpr std::size_t kSink = 1;

  CoverageGraph(int m, int n, std::vector<CellIndex> cells, std::vector<GraphEdge> edges);

  [[nodiscard]] int rows() const { return m_; }
  [[nodiscard]] int cols() const { return n_; }
  [[nodiscard]] std::size_t node_count() const { return cells_.size() + 2; }
  [[nodiscard]] const std::vector<CellIndex>& cells() const { return cells_; }
  [[nodiscard]] const std::vector<GraphEdge>& edges() const { return edges_; }
  [[nodiscard]] const CellIndex& cell(std::size_t node) const { return cells_.at(node - 2); }
  [[nodiscard]] static bool is_virtual(std::size_t node) { return node < 2; }
  /// Edge indices incident to node.
  [[nodiscard]] const std::vector<std::size_t>& incident(std::size_t node) const {
    return incident_.at(node);
  }
  [[nodiscard]] std::size_t degree(std::size_t node) const { return incident(node).size(); }
  [[nodiscard]] std::size_t other_end(std::size_t edge, std::size_t node) const;

 private:
  int m_;
  int n_;
  std::vector<CellIndex> cells_;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Connects covered cells that share a side (weight 2) or only a corner (weight 3),
/// links column-1 cells to s (weight 4) and column-n cells to t (weight 0).
/// Throws InvalidArgument for cells outside 1..m x 1..n.
CoverageGraph build_graph(std::span<const CellIndex> covered, int m, int n);

/// Drops non-virtual nodes of degree <= 1 until none remain.
CoverageGraph prune_degree_one(const CoverageGraph& graph);

struct BarrierResult {
  bool exists = false;
  std::vector<CellIndex> path;  ///< s and t excluded
  std::int64_t weight = 0;
};

/// Minimum-weight s-t path. Ties go to the lexicographically smallest cell sequence.
BarrierResult shortest_barrier(const CoverageGraph& graph);

/// Distinct active cameras serving the path's cells: the down-facing camera on each
/// top corner and the up-facing camera on each bottom corner. Throws
/// InvalidArgument when a path cell is not fully staffed in the plan.
std::uint64_t distinct_cameras(const BarrierResult& result, const DeploymentPlan& plan);

/// Minimum over columns of the number of covered cells in that column.
int k_barrier_count(std::span<const CellIndex> covered, int m, int n);

}  // namespace fvbarrier
