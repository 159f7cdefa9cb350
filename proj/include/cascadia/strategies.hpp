#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cascadia/graph.hpp"
#include "cascadia/rng.hpp"

namespace cascadia {

enum class StrategyType { Random, HighestDegree, SingleDiscount, DegreeDiscount };

/// Seed-selection policy. `discount_p` is only meaningful for
/// DegreeDiscount and must lie in (0, 1).
struct StrategyKind {
  StrategyType type = StrategyType::Random;
  double discount_p = 0.01;

  static StrategyKind random() { return {StrategyType::Random, 0.01}; }
  static StrategyKind highest_degree() { return {StrategyType::HighestDegree, 0.01}; }
  static StrategyKind single_discount() { return {StrategyType::SingleDiscount, 0.01}; }
  static StrategyKind degree_discount(double p = 0.01);

  bool is_deterministic() const { return type != StrategyType::Random; }

  friend bool operator==(const StrategyKind&, const StrategyKind&) = default;
};

/// CLI name: random | highest-degree | single-discount | degree-discount.
std::string_view strategy_name(const StrategyKind& kind);

/// Parses a CLI name. Returns nullopt for an unknown name.
std::optional<StrategyKind> parse_strategy(std::string_view name, double discount_p = 0.01);

/// Selects min(budget, |V|) distinct nodes, returned sorted.
///
/// Random draws uniformly without replacement from `rng`; the other kinds
/// are deterministic, break ties by lowest node id, and ignore `rng`.
/// SingleDiscount lowers each unselected neighbor's effective degree by
/// one per selected neighbor. DegreeDiscount ranks by
/// d_v - 2 t_v - (d_v - t_v) t_v p with t_v the count of selected
/// neighbors.
std::vector<NodeId> select_seeds(const StrategyKind& kind, const Graph& g, std::size_t budget,
                                 Rng& rng);

}  // namespace cascadia
