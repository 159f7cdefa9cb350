#include <string>

#include "cascadia/errors.hpp"
#include "cascadia/experiments.hpp"
#include "cascadia/parallel.hpp"

namespace cascadia {
namespace {

constexpr std::uint64_t kSimulateTag = 0x53494d554cULL;
constexpr std::uint64_t kGameTag = 0x47414d45ULL;

// Seeds from deterministic strategies are computed once and reused; random
// ones are drawn from the trial stream, in player order.
class SeedPlanner {
 public:
  SeedPlanner(const Graph& g, std::span<const Player> players,
              std::span<const StrategyKind> strategies)
      : graph_(g), players_(players), strategies_(strategies), fixed_(players.size()) {
    Rng unused(0);
    for (std::size_t i = 0; i < players.size(); ++i) {
      if (strategies[i].is_deterministic()) {
        fixed_[i] = select_seeds(strategies[i], g, players[i].budget, unused);
      }
    }
  }

  std::vector<std::vector<NodeId>> seeds(Rng& rng) const {
    std::vector<std::vector<NodeId>> out(players_.size());
    for (std::size_t i = 0; i < players_.size(); ++i) {
      out[i] = strategies_[i].is_deterministic()
                   ? fixed_[i]
                   : select_seeds(strategies_[i], graph_, players_[i].budget, rng);
    }
    return out;
  }

 private:
  const Graph& graph_;
  std::span<const Player> players_;
  std::span<const StrategyKind> strategies_;
  std::vector<std::vector<NodeId>> fixed_;
};

CascadeOutcome run_trial(const Graph& g, std::span<const Player> players,
                         const SeedPlanner& planner, Rng& rng, std::size_t step_cap) {
  const auto seeds = planner.seeds(rng);
  const auto assignment = resolve_seed_overlaps(g.node_count(), seeds, players, rng);
  return run_cascade(g, assignment, players, *asymmetric_weighted_cascade(), rng, step_cap);
}

}  // namespace

std::vector<TrialRecord> run_simulation(const Graph& g, std::span<const Player> players,
                                        std::span<const StrategyKind> strategies,
                                        const SimulationConfig& cfg) {
  validate_players(players);
  if (strategies.size() != players.size()) {
    throw InvalidParameter("expected one strategy per player");
  }
  if (cfg.trials < 1) throw InvalidParameter("trials must be >= 1");

  const SeedPlanner planner(g, players, strategies);
  std::vector<CascadeOutcome> outcomes(cfg.trials);
  parallel_for(cfg.trials, cfg.threads, [&](std::size_t trial) {
    Rng rng = Rng::stream(cfg.master_seed, {kSimulateTag, trial});
    outcomes[trial] = run_trial(g, players, planner, rng, cfg.step_cap);
  });

  std::vector<TrialRecord> records;
  records.reserve(cfg.trials * players.size());
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    const auto& o = outcomes[trial];
    for (std::size_t i = 0; i < players.size(); ++i) {
      records.push_back({g.node_count(), trial, players[i].id, o.counts[i], o.timesteps,
                         o.terminated_by});
    }
  }
  return records;
}

GameMatrix run_game_matrix(const Graph& g, std::span<const Player> players,
                           std::span<const StrategyKind> strategies, std::size_t trials,
                           std::uint64_t master_seed, unsigned threads, std::size_t step_cap) {
  validate_players(players);
  if (players.size() != 2) throw InvalidParameter("a game matrix needs exactly two players");
  if (strategies.empty()) throw InvalidParameter("strategy list must be nonempty");
  if (trials < 1) throw InvalidParameter("trials must be >= 1");

  const std::size_t k = strategies.size();
  std::vector<SeedPlanner> planners;
  std::vector<std::vector<StrategyKind>> profiles;
  profiles.reserve(k * k);
  planners.reserve(k * k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) profiles.push_back({strategies[a], strategies[b]});
  }
  for (const auto& profile : profiles) planners.emplace_back(g, players, profile);

  std::vector<CascadeOutcome> outcomes(k * k * trials);
  parallel_for(outcomes.size(), threads, [&](std::size_t job) {
    const std::size_t cell = job / trials;
    const std::size_t trial = job % trials;
    Rng rng = Rng::stream(master_seed, {kGameTag, cell, trial});
    outcomes[job] = run_trial(g, players, planners[cell], rng, step_cap);
  });

  GameMatrix m;
  for (const auto& s : strategies) {
    m.row_strategies.emplace_back(strategy_name(s));
    m.col_strategies.emplace_back(strategy_name(s));
  }
  m.cells.assign(k, std::vector<Payoff>(k));
  for (std::size_t cell = 0; cell < k * k; ++cell) {
    double first = 0.0, second = 0.0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
      const auto& o = outcomes[cell * trials + trial];
      first += static_cast<double>(o.counts[0]);
      second += static_cast<double>(o.counts[1]);
    }
    m.cells[cell / k][cell % k] = {first / static_cast<double>(trials),
                                   second / static_cast<double>(trials)};
  }
  return m;
}

}  // namespace cascadia
