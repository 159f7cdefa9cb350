#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace cascadia {

using NodeId = std::uint32_t;

/// Immutable undirected simple graph in CSR form.
///
/// Node ids are dense, 0..node_count()-1. Neighbor lists are sorted and
/// free of self-loops and duplicates; every edge {u, v} appears in both
/// lists. Safe to share across threads once built.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Self-loops and duplicate edges (in either
  /// orientation) are dropped. Throws InvalidParameter for an endpoint
  /// >= node_count.
  static Graph from_edges(std::size_t node_count,
                          std::span<const std::pair<NodeId, NodeId>> edges);

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(NodeId u, NodeId v) const noexcept;

  /// Checks the undirected/simple/in-range invariants. Used by tests.
  bool is_valid() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> neighbors_;
};

/// Cycle 0-1-...-(n-1)-0. Throws InvalidParameter when n < 3.
Graph generate_ngon(std::size_t n);

/// Complete binary tree in level order: node i has children 2i+1 and 2i+2
/// when they exist. Throws InvalidParameter when n < 1.
Graph generate_balanced_binary_tree(std::size_t n);

/// Complete graph K_n. Throws InvalidParameter when n < 1.
Graph generate_dense(std::size_t n);

struct EdgeListOptions {
  /// Map the distinct ids seen, in ascending order, onto 0..k-1.
  bool remap = false;
};

/// Reads whitespace-separated "u w" pairs. Lines starting with '#' and
/// blank lines are skipped; self-loops and duplicate edges are dropped.
/// Throws ParseError (with the 1-based line number) on malformed input.
Graph load_edge_list(std::istream& in, const EdgeListOptions& options = {});

struct GraphMetrics {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double average_degree = 0.0;
  /// Eccentricity maximum over the largest connected component.
  std::size_t diameter = 0;
  bool approximate = false;
  bool connected = true;
};

/// Average degree and diameter. With exact=false and a large component,
/// BFS runs from an evenly spaced sample of max(100, sqrt(|V|)) nodes of
/// the largest component and the diameter is a lower bound (approximate
/// is set). Throws InvalidParameter for an empty graph.
GraphMetrics compute_metrics(const Graph& g, bool exact, unsigned threads = 1);

/// Hop distances from `source`; unreachable nodes get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, NodeId source);

/// Component label per node, labels numbered 0.. in order of lowest member.
std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count = nullptr);

}  // namespace cascadia
