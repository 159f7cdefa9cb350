#include <algorithm>
#include <cmath>
#include <limits>

#include "cascadia/errors.hpp"
#include "cascadia/graph.hpp"
#include "cascadia/parallel.hpp"

namespace cascadia {
namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

// Eccentricity of `source` within its component. `dist` and `queue` are
// caller-owned scratch buffers of size |V|.
std::size_t eccentricity(const Graph& g, NodeId source, std::vector<std::size_t>& dist,
                         std::vector<NodeId>& queue) {
  std::fill(dist.begin(), dist.end(), kUnreached);
  std::size_t head = 0;
  std::size_t tail = 0;
  queue[tail++] = source;
  dist[source] = 0;
  std::size_t farthest = 0;
  while (head < tail) {
    const NodeId u = queue[head++];
    farthest = dist[u];
    for (NodeId w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue[tail++] = w;
      }
    }
  }
  return farthest;
}

}  // namespace

std::vector<std::size_t> bfs_distances(const Graph& g, NodeId source) {
  std::vector<std::size_t> dist(g.node_count(), kUnreached);
  std::vector<NodeId> queue(g.node_count());
  eccentricity(g, source, dist, queue);
  return dist;
}

std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> label(n, kUnreached);
  std::vector<NodeId> stack;
  std::size_t next = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (label[s] != kUnreached) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (NodeId w : g.neighbors(u)) {
        if (label[w] == kUnreached) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

GraphMetrics compute_metrics(const Graph& g, bool exact, unsigned threads) {
  const std::size_t n = g.node_count();
  if (n == 0) throw InvalidParameter("metrics of an empty graph are undefined");

  GraphMetrics m;
  m.nodes = n;
  m.edges = g.edge_count();
  m.average_degree = 2.0 * static_cast<double>(m.edges) / static_cast<double>(n);

  std::size_t components = 0;
  const auto label = connected_components(g, &components);
  m.connected = components == 1;

  // Largest component; ties go to the one containing the lowest node id.
  std::vector<std::size_t> sizes(components, 0);
  for (auto l : label) ++sizes[l];
  const std::size_t largest =
      static_cast<std::size_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<NodeId> members;
  members.reserve(sizes[largest]);
  for (NodeId v = 0; v < n; ++v) {
    if (label[v] == largest) members.push_back(v);
  }

  std::vector<NodeId> sources;
  const std::size_t sample = std::max<std::size_t>(
      100, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n)))));
  if (exact || sample >= members.size()) {
    sources = members;
  } else {
    m.approximate = true;
    sources.reserve(sample);
    for (std::size_t i = 0; i < sample; ++i) {
      sources.push_back(members[i * members.size() / sample]);
    }
  }

  std::vector<std::size_t> ecc(sources.size(), 0);
  const unsigned workers = std::max(1u, threads);
  const std::size_t chunks = std::min<std::size_t>(workers, sources.size());
  parallel_for(chunks, workers, [&](std::size_t chunk) {
    std::vector<std::size_t> dist(n);
    std::vector<NodeId> queue(n);
    for (std::size_t i = chunk; i < sources.size(); i += chunks) {
      ecc[i] = eccentricity(g, sources[i], dist, queue);
    }
  });
  m.diameter = *std::max_element(ecc.begin(), ecc.end());
  return m;
}

}  // namespace cascadia
