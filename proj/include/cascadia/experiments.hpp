#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cascadia/analysis.hpp"
#include "cascadia/cascade.hpp"
#include "cascadia/graph.hpp"
#include "cascadia/strategies.hpp"

namespace cascadia {

enum class Topology { NGon, Tree, Dense };

std::string_view topology_name(Topology t);
std::optional<Topology> parse_topology(std::string_view name);
Graph generate_topology(Topology t, std::size_t n);

/// One player's result in one trial. `size` is |V|.
struct TrialRecord {
  std::size_t size = 0;
  std::size_t trial = 0;
  int player = 1;
  std::size_t influenced = 0;
  std::size_t timesteps = 0;
  Termination terminated_by = Termination::AllInfluenced;
};

// ---------------------------------------------------------------------------
// Product vs budget sweep
// ---------------------------------------------------------------------------

/// Player 1 in a sweep is the product player, player 2 the budget player.
inline constexpr int kProductPlayer = 1;
inline constexpr int kBudgetPlayer = 2;
std::string_view sweep_player_name(int player);

struct ExperimentConfig {
  std::uint64_t master_seed = 1;
  std::size_t trials_per_point = 10;
  std::vector<std::size_t> sizes;
  Topology topology = Topology::Dense;
  /// 0 selects default_step_cap for each graph.
  std::size_t step_cap = 0;
  unsigned threads = 1;

  void validate() const;
};

struct SweepMean {
  std::size_t size = 0;
  int player = 1;
  double mean_influenced = 0.0;
};

struct SweepResult {
  /// Ordered by size, then trial, then player.
  std::vector<TrialRecord> trials;
  /// Ordered by size, then player.
  std::vector<SweepMean> means;

  double mean(std::size_t size, int player) const;
  /// Fit of mean influenced count against size for one player.
  RegressionFit fit(int player) const;
};

/// Players for graph size n: product (budget n/50, score 1.0) and budget
/// (budget n/10, score 0.2), budgets rounded down.
std::vector<Player> product_vs_budget_players(std::size_t n);

/// For every size: build the topology, then per trial draw both seed sets
/// uniformly at random (independently, overlaps allowed), resolve
/// overlaps, run the default cascade, and average per player. Trial
/// streams are keyed by (master_seed, size, trial), so the result does
/// not depend on the thread count.
SweepResult run_product_vs_budget(const ExperimentConfig& cfg);

// ---------------------------------------------------------------------------
// General simulation and strategy games
// ---------------------------------------------------------------------------

struct SimulationConfig {
  std::uint64_t master_seed = 1;
  std::size_t trials = 10;
  std::size_t step_cap = 0;
  unsigned threads = 1;
};

/// Runs `trials` independent cascades with player i seeding by
/// strategies[i]. Records ordered by trial, then player.
std::vector<TrialRecord> run_simulation(const Graph& g, std::span<const Player> players,
                                        std::span<const StrategyKind> strategies,
                                        const SimulationConfig& cfg);

/// Both players choose from the same strategy list. Cell (a, b) holds the
/// mean final counts of player 1 and player 2 when they use strategies a
/// and b. Trial streams are keyed by (master_seed, cell, trial).
GameMatrix run_game_matrix(const Graph& g, std::span<const Player> players,
                           std::span<const StrategyKind> strategies, std::size_t trials,
                           std::uint64_t master_seed, unsigned threads = 1,
                           std::size_t step_cap = 0);

// ---------------------------------------------------------------------------
// Reduction instance (single player, neighbor-threshold rule)
// ---------------------------------------------------------------------------

struct ReductionInstance {
  Graph graph;
  std::size_t budget = 0;
  Player player;
  std::shared_ptr<const NodeFunction> node_function;
};

/// Same graph, one player with budget k and score 1, neighbor-threshold rule.
ReductionInstance build_reduction_instance(const Graph& g, std::size_t k);

struct ReductionCheck {
  std::size_t influenced = 0;
  bool is_yes_witness = false;
};

/// One cascade (exact, since every probability is 0 or 1). Throws
/// BudgetViolation when |seed| > k.
ReductionCheck verify_reduction(const ReductionInstance& inst, std::span<const NodeId> seed);

inline constexpr std::size_t kReductionOracleMaxNodes = 12;

/// Whether any seed of size <= k is a yes-witness, by enumerating every
/// subset. Throws InvalidParameter for graphs above kReductionOracleMaxNodes.
bool exhaustive_reduction_oracle(const Graph& g, std::size_t k);

// ---------------------------------------------------------------------------
// Output
// ---------------------------------------------------------------------------

using PlayerLabel = std::string (*)(int player);

/// Header size,trial,player,influenced,timesteps,terminated_by.
void write_trials_csv(std::ostream& out, std::span<const TrialRecord> records,
                      PlayerLabel label = nullptr);

/// Header size,player,mean_influenced.
void write_means_csv(std::ostream& out, std::span<const SweepMean> means,
                     PlayerLabel label = nullptr);

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

}  // namespace cascadia
