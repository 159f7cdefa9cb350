#include "cascadia/graph.hpp"

#include <algorithm>
#include <string>

#include "cascadia/errors.hpp"

namespace cascadia {

Graph Graph::from_edges(std::size_t node_count,
                        std::span<const std::pair<NodeId, NodeId>> edges) {
  std::vector<std::size_t> degree(node_count, 0);
  for (auto [u, v] : edges) {
    if (u >= node_count || v >= node_count) {
      throw InvalidParameter("edge endpoint out of range: {" + std::to_string(u) +
                             ", " + std::to_string(v) + "} with " +
                             std::to_string(node_count) + " nodes");
    }
    if (u == v) continue;
    ++degree[u];
    ++degree[v];
  }

  Graph g;
  g.offsets_.assign(node_count + 1, 0);
  for (std::size_t v = 0; v < node_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.neighbors_.resize(g.offsets_.back());

  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    if (u == v) continue;
    g.neighbors_[cursor[u]++] = v;
    g.neighbors_[cursor[v]++] = u;
  }

  // Sort each list, drop duplicates, then compact.
  std::size_t write = 0;
  std::size_t begin = 0;
  for (std::size_t v = 0; v < node_count; ++v) {
    const std::size_t end = g.offsets_[v + 1];
    auto first = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(begin);
    auto last = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(end);
    std::sort(first, last);
    last = std::unique(first, last);
    g.offsets_[v] = write;
    for (auto it = first; it != last; ++it) g.neighbors_[write++] = *it;
    begin = end;
  }
  g.offsets_[node_count] = write;
  g.neighbors_.resize(write);
  g.neighbors_.shrink_to_fit();
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
  auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

bool Graph::is_valid() const {
  const std::size_t n = node_count();
  if (neighbors_.size() % 2 != 0) return false;
  for (NodeId v = 0; v < n; ++v) {
    auto adj = neighbors(v);
    for (std::size_t i = 0; i < adj.size(); ++i) {
      if (adj[i] >= n || adj[i] == v) return false;
      if (i > 0 && adj[i - 1] >= adj[i]) return false;
      if (!has_edge(adj[i], v)) return false;
    }
  }
  return true;
}

Graph generate_ngon(std::size_t n) {
  if (n < 3) throw InvalidParameter("n-gon needs n >= 3, got " + std::to_string(n));
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n));
  }
  return Graph::from_edges(n, edges);
}

Graph generate_balanced_binary_tree(std::size_t n) {
  if (n < 1) throw InvalidParameter("binary tree needs n >= 1");
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(n - 1);
  for (std::size_t child = 1; child < n; ++child) {
    edges.emplace_back(static_cast<NodeId>((child - 1) / 2), static_cast<NodeId>(child));
  }
  return Graph::from_edges(n, edges);
}

Graph generate_dense(std::size_t n) {
  if (n < 1) throw InvalidParameter("dense graph needs n >= 1");
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace cascadia
