#include "cascadia/strategies.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "cascadia/errors.hpp"

namespace cascadia {
namespace {

// Greedy max-score selection with lazy heap entries. `rescore` is called
// for each unselected neighbor of a newly selected node, with that
// neighbor's updated selected-neighbor count.
template <typename Rescore>
std::vector<NodeId> greedy_select(const Graph& g, std::size_t k, std::vector<double> score,
                                  Rescore&& rescore) {
  struct Entry {
    double score;
    NodeId node;
    std::uint32_t version;
  };
  // Highest score first, then lowest id.
  auto lower_priority = [](const Entry& a, const Entry& b) {
    if (a.score != b.score) return a.score < b.score;
    return a.node > b.node;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(lower_priority)> heap(lower_priority);

  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> version(n, 0);
  std::vector<std::uint32_t> selected_neighbors(n, 0);
  std::vector<char> selected(n, 0);
  for (NodeId v = 0; v < n; ++v) heap.push({score[v], v, 0});

  std::vector<NodeId> out;
  out.reserve(k);
  while (out.size() < k && !heap.empty()) {
    const Entry top = heap.top();
    heap.pop();
    if (selected[top.node] || top.version != version[top.node]) continue;
    selected[top.node] = 1;
    out.push_back(top.node);
    for (NodeId w : g.neighbors(top.node)) {
      if (selected[w]) continue;
      ++selected_neighbors[w];
      score[w] = rescore(w, selected_neighbors[w]);
      heap.push({score[w], w, ++version[w]});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeId> random_subset(std::size_t n, std::size_t k, Rng& rng) {
  // Partial Fisher-Yates over the id range.
  std::vector<NodeId> ids(n);
  std::iota(ids.begin(), ids.end(), NodeId{0});
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(ids[i], ids[j]);
  }
  ids.resize(k);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<double> degrees_of(const Graph& g) {
  std::vector<double> d(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) d[v] = static_cast<double>(g.degree(v));
  return d;
}

}  // namespace

StrategyKind StrategyKind::degree_discount(double p) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidParameter("degree discount p must lie in (0, 1)");
  return {StrategyType::DegreeDiscount, p};
}

std::string_view strategy_name(const StrategyKind& kind) {
  switch (kind.type) {
    case StrategyType::Random:
      return "random";
    case StrategyType::HighestDegree:
      return "highest-degree";
    case StrategyType::SingleDiscount:
      return "single-discount";
    case StrategyType::DegreeDiscount:
      return "degree-discount";
  }
  return "unknown";
}

std::optional<StrategyKind> parse_strategy(std::string_view name, double discount_p) {
  if (name == "random") return StrategyKind::random();
  if (name == "highest-degree") return StrategyKind::highest_degree();
  if (name == "single-discount") return StrategyKind::single_discount();
  if (name == "degree-discount") return StrategyKind::degree_discount(discount_p);
  return std::nullopt;
}

std::vector<NodeId> select_seeds(const StrategyKind& kind, const Graph& g, std::size_t budget,
                                 Rng& rng) {
  const std::size_t n = g.node_count();
  const std::size_t k = std::min(budget, n);

  switch (kind.type) {
    case StrategyType::Random:
      return random_subset(n, k, rng);

    case StrategyType::HighestDegree: {
      std::vector<NodeId> ids(n);
      std::iota(ids.begin(), ids.end(), NodeId{0});
      std::partial_sort(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(k), ids.end(),
                        [&](NodeId a, NodeId b) {
                          if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
                          return a < b;
                        });
      ids.resize(k);
      std::sort(ids.begin(), ids.end());
      return ids;
    }

    case StrategyType::SingleDiscount:
      return greedy_select(g, k, degrees_of(g), [&](NodeId w, std::uint32_t t) {
        return static_cast<double>(g.degree(w)) - static_cast<double>(t);
      });

    case StrategyType::DegreeDiscount: {
      if (!(kind.discount_p > 0.0 && kind.discount_p < 1.0)) {
        throw InvalidParameter("degree discount p must lie in (0, 1)");
      }
      const double p = kind.discount_p;
      return greedy_select(g, k, degrees_of(g), [&g, p](NodeId w, std::uint32_t t) {
        const double d = static_cast<double>(g.degree(w));
        const double tv = static_cast<double>(t);
        return d - 2.0 * tv - (d - tv) * tv * p;
      });
    }
  }
  return {};
}

}  // namespace cascadia
