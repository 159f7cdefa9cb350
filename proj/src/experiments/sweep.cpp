#include <algorithm>
#include <string>

#include "cascadia/errors.hpp"
#include "cascadia/experiments.hpp"
#include "cascadia/parallel.hpp"

namespace cascadia {
namespace {

// Stream tags keep the sweep, simulate and game-matrix streams disjoint
// even under the same master seed.
constexpr std::uint64_t kSweepTag = 0x5357454550ULL;

}  // namespace

std::string_view topology_name(Topology t) {
  switch (t) {
    case Topology::NGon:
      return "ngon";
    case Topology::Tree:
      return "tree";
    case Topology::Dense:
      return "dense";
  }
  return "unknown";
}

std::optional<Topology> parse_topology(std::string_view name) {
  if (name == "ngon") return Topology::NGon;
  if (name == "tree") return Topology::Tree;
  if (name == "dense") return Topology::Dense;
  return std::nullopt;
}

Graph generate_topology(Topology t, std::size_t n) {
  switch (t) {
    case Topology::NGon:
      return generate_ngon(n);
    case Topology::Tree:
      return generate_balanced_binary_tree(n);
    case Topology::Dense:
      return generate_dense(n);
  }
  throw InvalidParameter("unknown topology");
}

std::string_view sweep_player_name(int player) {
  switch (player) {
    case kProductPlayer:
      return "product";
    case kBudgetPlayer:
      return "budget";
    default:
      return "unknown";
  }
}

void ExperimentConfig::validate() const {
  if (trials_per_point < 1) throw InvalidParameter("trials_per_point must be >= 1");
  if (sizes.empty()) throw InvalidParameter("sizes must be nonempty");
  for (auto s : sizes) {
    if (s == 0) throw InvalidParameter("sizes must be positive");
  }
}

std::vector<Player> product_vs_budget_players(std::size_t n) {
  return {Player{kProductPlayer, n / 50, 1.0}, Player{kBudgetPlayer, n / 10, 0.2}};
}

SweepResult run_product_vs_budget(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto& fn = *asymmetric_weighted_cascade();
  const auto random = StrategyKind::random();

  SweepResult result;
  for (std::size_t size : cfg.sizes) {
    const Graph g = generate_topology(cfg.topology, size);
    const auto players = product_vs_budget_players(size);

    std::vector<CascadeOutcome> outcomes(cfg.trials_per_point);
    parallel_for(cfg.trials_per_point, cfg.threads, [&](std::size_t trial) {
      Rng rng = Rng::stream(cfg.master_seed, {kSweepTag, size, trial});
      std::vector<std::vector<NodeId>> seeds;
      for (const Player& p : players) seeds.push_back(select_seeds(random, g, p.budget, rng));
      const auto assignment = resolve_seed_overlaps(g.node_count(), seeds, players, rng);
      outcomes[trial] = run_cascade(g, assignment, players, fn, rng, cfg.step_cap);
    });

    std::vector<double> totals(players.size(), 0.0);
    for (std::size_t trial = 0; trial < outcomes.size(); ++trial) {
      const auto& o = outcomes[trial];
      for (std::size_t i = 0; i < players.size(); ++i) {
        result.trials.push_back({size, trial, players[i].id, o.counts[i], o.timesteps,
                                 o.terminated_by});
        totals[i] += static_cast<double>(o.counts[i]);
      }
    }
    for (std::size_t i = 0; i < players.size(); ++i) {
      result.means.push_back(
          {size, players[i].id, totals[i] / static_cast<double>(cfg.trials_per_point)});
    }
  }
  return result;
}

double SweepResult::mean(std::size_t size, int player) const {
  for (const auto& m : means) {
    if (m.size == size && m.player == player) return m.mean_influenced;
  }
  throw InvalidParameter("no sweep mean for size " + std::to_string(size) + ", player " +
                         std::to_string(player));
}

RegressionFit SweepResult::fit(int player) const {
  std::vector<std::pair<double, double>> points;
  for (const auto& m : means) {
    if (m.player == player) {
      points.emplace_back(static_cast<double>(m.size), m.mean_influenced);
    }
  }
  return fit_linear(points);
}

}  // namespace cascadia
