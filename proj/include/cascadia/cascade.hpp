#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "cascadia/graph.hpp"
#include "cascadia/rng.hpp"

namespace cascadia {

/// A competing company. `id` is the 1-based player index used in owner
/// labels and output files.
struct Player {
  int id = 1;
  std::size_t budget = 0;
  double product_score = 1.0;
};

/// Throws InvalidParameter unless ids are 1..n in order and every score
/// lies in [0, 1].
void validate_players(std::span<const Player> players);

/// Owner label: 0 for uninfluenced, otherwise the 1-based player index.
using Owner = std::uint16_t;
inline constexpr Owner kNobody = 0;

struct SeedAssignment {
  /// S_i: the nodes each player targeted, sorted.
  std::vector<std::vector<NodeId>> chosen;
  /// A_i^0: seeds after contested nodes were resolved, sorted and pairwise
  /// disjoint.
  std::vector<std::vector<NodeId>> initial;
};

/// Builds A_i^0 from the players' seed sets. A node targeted by one player
/// goes to that player; a node targeted by several is drawn once, with
/// probability proportional to the contenders' product scores. Contested
/// nodes are drawn in ascending id order.
///
/// Throws InvalidParameter on an out-of-range or repeated seed, BudgetViolation
/// when |S_i| exceeds the budget, and UndefinedDistribution when every
/// contender of a node has product score 0.
SeedAssignment resolve_seed_overlaps(std::size_t node_count,
                                     std::span<const std::vector<NodeId>> seeds,
                                     std::span<const Player> players, Rng& rng);

/// Cascade state at timestep j: owner labels, the A_i^0 snapshot, and the
/// per-node count of influenced neighbors for each player (e_i over the
/// cumulative sets A_i^j). Copyable; refers to, but does not own, the graph.
class CascadeState {
 public:
  CascadeState(const Graph& g, const SeedAssignment& assignment);

  const Graph& graph() const noexcept { return *graph_; }
  std::size_t timestep() const noexcept { return timestep_; }
  std::size_t player_count() const noexcept { return players_; }

  Owner owner(NodeId v) const noexcept { return owner_[v]; }
  Owner initial_owner(NodeId v) const noexcept { return initial_owner_[v]; }
  bool influenced(NodeId v) const noexcept { return owner_[v] != kNobody; }

  /// e_1..e_n for node v.
  std::span<const std::uint32_t> influenced_neighbors(NodeId v) const noexcept {
    return {neighbor_counts_.data() + std::size_t{v} * players_, players_};
  }
  std::uint32_t influenced_neighbor_total(NodeId v) const noexcept { return neighbor_total_[v]; }

  /// |A_i^j| for 1-based player i.
  std::size_t influenced_count(int player) const { return counts_.at(static_cast<std::size_t>(player - 1)); }
  std::size_t total_influenced() const noexcept { return total_; }

  /// A_i^j, sorted.
  std::vector<NodeId> influenced_set(int player) const;

  /// Marks v as owned by `player` and updates neighbor counts.
  void commit(NodeId v, Owner player);
  void advance_timestep() noexcept { ++timestep_; }

 private:
  const Graph* graph_;
  std::size_t players_;
  std::size_t timestep_ = 0;
  std::size_t total_ = 0;
  std::vector<Owner> owner_;
  std::vector<Owner> initial_owner_;
  std::vector<std::uint32_t> neighbor_counts_;
  std::vector<std::uint32_t> neighbor_total_;
  std::vector<std::size_t> counts_;
};

/// Outcome distribution for one uninfluenced node: activation[i-1] = q_i
/// and stay = q_0 = max(0, 1 - sum q_i).
struct NodeOutcomeDistribution {
  std::vector<double> activation;
  double stay = 1.0;
  /// Set when a node function was asked about an isolated node (deg 0)
  /// that nonetheless had influenced neighbors; cannot happen on a valid
  /// graph and always yields stay = 1.
  bool degenerate = false;
};

/// Per-node rule giving the activation probabilities of an uninfluenced
/// node at the current timestep.
class NodeFunction {
 public:
  virtual ~NodeFunction() = default;

  virtual std::string_view name() const = 0;

  /// Throws InvalidConfiguration when the rule cannot serve these players.
  virtual void validate(std::span<const Player> players) const { (void)players; }

  /// True when a node without influenced neighbors always stays
  /// uninfluenced. The engine then only evaluates the frontier.
  virtual bool needs_influenced_neighbor() const { return true; }

  /// Writes q_1..q_n into `activation` (size == player count). Returns
  /// true if the degenerate case was hit.
  virtual bool evaluate(const CascadeState& state, std::span<const Player> players,
                        NodeId v, std::span<double> activation) const = 0;
};

/// Default rule. For node v with e_i influenced neighbors owned by player i
/// and C' = {i : e_i > 0}:
///   q_i = (p_i / sum_{C'} p) * (e_i / sum e) * (1 - (1 - 1/deg v)^(sum e)).
/// When every player in C' has score 0 the node stays uninfluenced.
class AsymmetricWeightedCascade final : public NodeFunction {
 public:
  std::string_view name() const override { return "asymmetric-weighted-cascade"; }
  bool evaluate(const CascadeState& state, std::span<const Player> players, NodeId v,
                std::span<double> activation) const override;
};

/// Single-player deterministic rule: v activates with probability 1 iff it
/// has a neighbor in A_1^0, otherwise it stays with probability 1.
class NeighborThreshold final : public NodeFunction {
 public:
  std::string_view name() const override { return "neighbor-threshold"; }
  void validate(std::span<const Player> players) const override;
  bool evaluate(const CascadeState& state, std::span<const Player> players, NodeId v,
                std::span<double> activation) const override;
};

std::shared_ptr<const NodeFunction> asymmetric_weighted_cascade();
std::shared_ptr<const NodeFunction> neighbor_threshold_node_function();

/// Distribution for uninfluenced node v under `fn` (the default rule when
/// null). Throws ContractViolation if v is already influenced.
NodeOutcomeDistribution node_activation_distribution(const CascadeState& state, NodeId v,
                                                     std::span<const Player> players,
                                                     const NodeFunction* fn = nullptr);

/// One synchronous timestep: every eligible uninfluenced node's
/// distribution is computed against A^j, then one draw per node decides
/// its outcome, and only then are the activations committed as A^{j+1}.
/// Nodes are visited in ascending id order.
CascadeState cascade_step(const CascadeState& state, std::span<const Player> players,
                          const NodeFunction& fn, Rng& rng);

enum class Termination { AllInfluenced, FrontierEmpty, StepCap };

std::string_view to_string(Termination t);

struct CascadeOutcome {
  /// Final |A_i| per player, index i-1.
  std::vector<std::size_t> counts;
  /// Timesteps in which at least one node could still change state.
  std::size_t timesteps = 0;
  Termination terminated_by = Termination::AllInfluenced;
};

/// 100 * |V|, and at least 1.
std::size_t default_step_cap(const Graph& g);

/// Repeats cascade_step until all nodes are influenced, no uninfluenced
/// node has a positive activation probability (frontier-empty), or
/// step_cap timesteps have run. step_cap == 0 means default_step_cap(g).
CascadeOutcome run_cascade(const Graph& g, const SeedAssignment& assignment,
                           std::span<const Player> players, const NodeFunction& fn, Rng& rng,
                           std::size_t step_cap = 0);

/// In-place variant used when the caller wants the final state as well.
CascadeOutcome run_cascade(CascadeState& state, std::span<const Player> players,
                           const NodeFunction& fn, Rng& rng, std::size_t step_cap = 0);

}  // namespace cascadia
