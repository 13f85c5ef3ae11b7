#include "fvbarrier/barrier_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <tuple>

#include "fvbarrier/error.hpp"

namespace fvbarrier {

const char* to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::Side: return "side";
    case EdgeKind::Diagonal: return "diagonal";
    case EdgeKind::Source: return "source";
    case EdgeKind::Sink: return "sink";
  }
  return "side";
}

CoverageGraph::CoverageGraph(int m, int n, std::vector<CellIndex> cells,
                             std::vector<GraphEdge> edges)
    : m_(m), n_(n), cells_(std::move(cells)), edges_(std::move(edges)) {
  incident_.resize(node_count());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    incident_.at(edges_[e].u).push_back(e);
    incident_.at(edges_[e].v).push_back(e);
  }
}

std::size_t CoverageGraph::other_end(std::size_t edge, std::size_t node) const {
  const GraphEdge& e = edges_.at(edge);
  return e.u == node ? e.v : e.u;
}

CoverageGraph build_graph(std::span<const CellIndex> covered, int m, int n) {
  if (m < 1 || n < 1) throw InvalidArgument("grid must have at least one row and column");
  std::set<CellIndex> unique;
  for (const CellIndex& c : covered) {
    if (c.row < 1 || c.row > m || c.col < 1 || c.col > n)
      throw InvalidArgument("covered cell (" + std::to_string(c.row) + "," +
                            std::to_string(c.col) + ") outside grid");
    unique.insert(c);
  }
  std::vector<CellIndex> cells(unique.begin(), unique.end());

  std::map<CellIndex, std::size_t> node_of;
  for (std::size_t k = 0; k < cells.size(); ++k) node_of[cells[k]] = k + 2;

  std::vector<GraphEdge> edges;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const CellIndex c = cells[k];
    const std::size_t node = k + 2;
    if (c.col == 1) edges.push_back({CoverageGraph::kSource, node, kSourceWeight, EdgeKind::Source});
    if (c.col == n) edges.push_back({CoverageGraph::kSink, node, kSinkWeight, EdgeKind::Sink});
    // Each neighbour pair is emitted once, from its smaller endpoint.
    for (int dr = -1; dr <= 1; ++dr) {
      for (int dc = -1; dc <= 1; ++dc) {
        if (dr == 0 && dc == 0) continue;
        auto it = node_of.find({c.row + dr, c.col + dc});
        if (it == node_of.end() || it->second <= node) continue;
        const bool diagonal = dr != 0 && dc != 0;
        edges.push_back({node, it->second, diagonal ? kDiagonalWeight : kSideWeight,
                         diagonal ? EdgeKind::Diagonal : EdgeKind::Side});
      }
    }
  }
  std::sort(edges.begin(), edges.end(), [](const GraphEdge& a, const GraphEdge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  return CoverageGraph(m, n, std::move(cells), std::move(edges));
}

CoverageGraph prune_degree_one(const CoverageGraph& graph) {
  std::vector<std::size_t> degree(graph.node_count());
  for (std::size_t v = 0; v < graph.node_count(); ++v) degree[v] = graph.degree(v);

  std::vector<bool> removed(graph.node_count(), false);
  std::queue<std::size_t> pending;
  for (std::size_t v = 2; v < graph.node_count(); ++v)
    if (degree[v] <= 1) pending.push(v);

  while (!pending.empty()) {
    const std::size_t v = pending.front();
    pending.pop();
    if (removed[v]) continue;
    removed[v] = true;
    for (std::size_t e : graph.incident(v)) {
      const std::size_t w = graph.other_end(e, v);
      if (removed[w]) continue;
      if (--degree[w] <= 1 && !CoverageGraph::is_virtual(w)) pending.push(w);
    }
  }

  std::vector<CellIndex> cells;
  std::vector<std::size_t> remap(graph.node_count(), 0);
  remap[CoverageGraph::kSource] = CoverageGraph::kSource;
  remap[CoverageGraph::kSink] = CoverageGraph::kSink;
  for (std::size_t v = 2; v < graph.node_count(); ++v) {
    if (removed[v]) continue;
    remap[v] = cells.size() + 2;
    cells.push_back(graph.cell(v));
  }
  std::vector<GraphEdge> edges;
  for (const GraphEdge& e : graph.edges()) {
    if (removed[e.u] || removed[e.v]) continue;
    edges.push_back({remap[e.u], remap[e.v], e.weight, e.kind});
  }
  return CoverageGraph(graph.rows(), graph.cols(), std::move(cells), std::move(edges));
}

BarrierResult shortest_barrier(const CoverageGraph& graph) {
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  const std::size_t count = graph.node_count();

  // Dijkstra from t; the forward walk below then follows tight edges from s.
  std::vector<std::int64_t> to_sink(count, kInf);
  using Entry = std::pair<std::int64_t, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  to_sink[CoverageGraph::kSink] = 0;
  frontier.push({0, CoverageGraph::kSink});
  while (!frontier.empty()) {
    const auto [dist, v] = frontier.top();
    frontier.pop();
    if (dist != to_sink[v]) continue;
    // s is an endpoint only; never relax through it.
    if (v == CoverageGraph::kSource) continue;
    for (std::size_t e : graph.incident(v)) {
      const std::size_t w = graph.other_end(e, v);
      const std::int64_t candidate = dist + graph.edges()[e].weight;
      if (candidate < to_sink[w]) {
        to_sink[w] = candidate;
        frontier.push({candidate, w});
      }
    }
  }

  BarrierResult result;
  if (to_sink[CoverageGraph::kSource] == kInf) return result;
  result.exists = true;
  result.weight = to_sink[CoverageGraph::kSource];

  std::size_t at = CoverageGraph::kSource;
  while (at != CoverageGraph::kSink) {
    std::size_t best = count;
    for (std::size_t e : graph.incident(at)) {
      const std::size_t w = graph.other_end(e, at);
      if (w == CoverageGraph::kSource || to_sink[w] == kInf) continue;
      if (graph.edges()[e].weight + to_sink[w] != to_sink[at]) continue;
      // Ending the path here is a prefix of any continuation, hence smaller.
      if (w == CoverageGraph::kSink) {
        best = w;
        break;
      }
      if (best == count || graph.cell(w) < graph.cell(best)) best = w;
    }
    at = best;
    if (at != CoverageGraph::kSink) result.path.push_back(graph.cell(at));
  }
  return result;
}

std::uint64_t distinct_cameras(const BarrierResult& result, const DeploymentPlan& plan) {
  if (!result.exists) return 0;
  std::set<std::uint64_t> ids;
  for (const CellIndex& cell : result.path) {
    if (!cell_fully_staffed(cell, plan))
      throw InvalidArgument("barrier cell (" + std::to_string(cell.row) + "," +
                            std::to_string(cell.col) + ") is not fully staffed");
    // Only cameras facing into the cell serve it: down on top corners, up on bottom corners.
    ids.insert(*plan.at(corner_vertex(cell, Corner::LeftTop)).down);
    ids.insert(*plan.at(corner_vertex(cell, Corner::RightTop)).down);
    ids.insert(*plan.at(corner_vertex(cell, Corner::LeftBottom)).up);
    ids.insert(*plan.at(corner_vertex(cell, Corner::RightBottom)).up);
  }
  return ids.size();
}

int k_barrier_count(std::span<const CellIndex> covered, int m, int n) {
  if (m < 1 || n < 1) throw InvalidArgument("grid must have at least one row and column");
  std::set<CellIndex> unique(covered.begin(), covered.end());
  std::vector<int> per_column(static_cast<std::size_t>(n), 0);
  for (const CellIndex& c : unique) {
    if (c.row < 1 || c.row > m || c.col < 1 || c.col > n)
      throw InvalidArgument("covered cell outside grid");
    ++per_column[static_cast<std::size_t>(c.col - 1)];
  }
  return *std::min_element(per_column.begin(), per_column.end());
}

}  // namespace fvbarrier
