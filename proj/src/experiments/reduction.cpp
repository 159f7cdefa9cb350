#include <string>

#include "cascadia/errors.hpp"
#include "cascadia/experiments.hpp"

namespace cascadia {

ReductionInstance build_reduction_instance(const Graph& g, std::size_t k) {
  return ReductionInstance{g, k, Player{1, k, 1.0}, neighbor_threshold_node_function()};
}

ReductionCheck verify_reduction(const ReductionInstance& inst, std::span<const NodeId> seed) {
  if (seed.size() > inst.budget) {
    throw BudgetViolation("seed of size " + std::to_string(seed.size()) + " exceeds budget " +
                          std::to_string(inst.budget));
  }
  const Player players[] = {inst.player};
  const std::vector<std::vector<NodeId>> seeds{{seed.begin(), seed.end()}};
  // Every probability is 0 or 1 under this rule, so the stream is never
  // consulted in a way that changes the outcome.
  Rng rng(0);
  const auto assignment = resolve_seed_overlaps(inst.graph.node_count(), seeds, players, rng);
  const auto outcome = run_cascade(inst.graph, assignment, players, *inst.node_function, rng);
  return {outcome.counts[0], outcome.counts[0] == inst.graph.node_count()};
}

bool exhaustive_reduction_oracle(const Graph& g, std::size_t k) {
  const std::size_t n = g.node_count();
  if (n > kReductionOracleMaxNodes) {
    throw InvalidParameter("exhaustive reduction oracle refuses graphs above " +
                           std::to_string(kReductionOracleMaxNodes) + " nodes");
  }
  const auto inst = build_reduction_instance(g, k);
  std::vector<NodeId> seed;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) > k) continue;
    seed.clear();
    for (NodeId v = 0; v < n; ++v) {
      if (mask & (1u << v)) seed.push_back(v);
    }
    if (verify_reduction(inst, seed).is_yes_witness) return true;
  }
  return false;
}

}  // namespace cascadia
