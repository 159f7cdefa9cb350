#include "cascadia/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cascadia/errors.hpp"

namespace cascadia {

void validate_players(std::span<const Player> players) {
  if (players.size() >= std::numeric_limits<Owner>::max()) {
    throw InvalidParameter("too many players");
  }
  for (std::size_t i = 0; i < players.size(); ++i) {
    const Player& p = players[i];
    if (p.id != static_cast<int>(i + 1)) {
      throw InvalidParameter("player ids must be 1..n in order; found id " + std::to_string(p.id) +
                             " at position " + std::to_string(i + 1));
    }
    if (!(p.product_score >= 0.0 && p.product_score <= 1.0)) {
      throw InvalidParameter("product score of player " + std::to_string(p.id) +
                             " must lie in [0, 1]");
    }
  }
}

SeedAssignment resolve_seed_overlaps(std::size_t node_count,
                                     std::span<const std::vector<NodeId>> seeds,
                                     std::span<const Player> players, Rng& rng) {
  validate_players(players);
  if (seeds.size() != players.size()) {
    throw InvalidParameter("expected one seed set per player");
  }

  SeedAssignment out;
  out.chosen.resize(players.size());
  out.initial.resize(players.size());

  std::vector<std::pair<NodeId, std::size_t>> claims;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    auto& chosen = out.chosen[i];
    chosen.assign(seeds[i].begin(), seeds[i].end());
    std::sort(chosen.begin(), chosen.end());
    if (std::adjacent_find(chosen.begin(), chosen.end()) != chosen.end()) {
      throw InvalidParameter("seed set of player " + std::to_string(i + 1) +
                             " contains a repeated node");
    }
    if (!chosen.empty() && chosen.back() >= node_count) {
      throw InvalidParameter("seed node " + std::to_string(chosen.back()) + " out of range");
    }
    if (chosen.size() > players[i].budget) {
      throw BudgetViolation("player " + std::to_string(i + 1) + " chose " +
                            std::to_string(chosen.size()) + " seeds with budget " +
                            std::to_string(players[i].budget));
    }
    for (NodeId v : chosen) claims.emplace_back(v, i);
  }
  std::sort(claims.begin(), claims.end());

  for (std::size_t begin = 0; begin < claims.size();) {
    std::size_t end = begin + 1;
    while (end < claims.size() && claims[end].first == claims[begin].first) ++end;
    const NodeId node = claims[begin].first;

    std::size_t winner = claims[begin].second;
    if (end - begin > 1) {
      double total = 0.0;
      for (std::size_t c = begin; c < end; ++c) total += players[claims[c].second].product_score;
      if (total <= 0.0) {
        throw UndefinedDistribution("seed node " + std::to_string(node) +
                                    " is contested only by players with product score 0");
      }
      const double u = rng.uniform() * total;
      double acc = 0.0;
      // Fall back to the last positive-score contender if rounding leaves u
      // past the accumulated total.
      for (std::size_t c = begin; c < end; ++c) {
        const double score = players[claims[c].second].product_score;
        if (score <= 0.0) continue;
        winner = claims[c].second;
        acc += score;
        if (u < acc) break;
      }
    }
    out.initial[winner].push_back(node);
    begin = end;
  }
  return out;
}

CascadeState::CascadeState(const Graph& g, const SeedAssignment& assignment)
    : graph_(&g),
      players_(assignment.initial.size()),
      owner_(g.node_count(), kNobody),
      neighbor_counts_(g.node_count() * assignment.initial.size(), 0),
      neighbor_total_(g.node_count(), 0),
      counts_(assignment.initial.size(), 0) {
  if (players_ >= std::numeric_limits<Owner>::max()) throw InvalidParameter("too many players");
  for (std::size_t i = 0; i < players_; ++i) {
    for (NodeId v : assignment.initial[i]) {
      if (v >= g.node_count()) {
        throw InvalidParameter("seed node " + std::to_string(v) + " out of range");
      }
      if (owner_[v] != kNobody) {
        throw InvalidParameter("initial sets overlap at node " + std::to_string(v));
      }
      commit(v, static_cast<Owner>(i + 1));
    }
  }
  initial_owner_ = owner_;
}

std::vector<NodeId> CascadeState::influenced_set(int player) const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < owner_.size(); ++v) {
    if (owner_[v] == player) out.push_back(v);
  }
  return out;
}

void CascadeState::commit(NodeId v, Owner player) {
  owner_[v] = player;
  ++counts_[player - 1];
  ++total_;
  const std::size_t slot = player - 1;
  for (NodeId w : graph_->neighbors(v)) {
    ++neighbor_counts_[std::size_t{w} * players_ + slot];
    ++neighbor_total_[w];
  }
}

bool AsymmetricWeightedCascade::evaluate(const CascadeState& state,
                                         std::span<const Player> players, NodeId v,
                                         std::span<double> activation) const {
  std::fill(activation.begin(), activation.end(), 0.0);
  const std::uint32_t total_neighbors = state.influenced_neighbor_total(v);
  if (total_neighbors == 0) return false;
  const std::size_t deg = state.graph().degree(v);
  if (deg == 0) return true;

  auto e = state.influenced_neighbors(v);
  double score_total = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > 0) score_total += players[i].product_score;
  }
  if (score_total <= 0.0) return false;

  const double reach =
      1.0 - std::pow(1.0 - 1.0 / static_cast<double>(deg), static_cast<double>(total_neighbors));
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    activation[i] = (players[i].product_score / score_total) *
                    (static_cast<double>(e[i]) / static_cast<double>(total_neighbors)) * reach;
  }
  return false;
}

void NeighborThreshold::validate(std::span<const Player> players) const {
  if (players.size() != 1) {
    throw InvalidConfiguration("neighbor-threshold node function requires exactly one player, got " +
                               std::to_string(players.size()));
  }
}

bool NeighborThreshold::evaluate(const CascadeState& state, std::span<const Player>, NodeId v,
                                 std::span<double> activation) const {
  std::fill(activation.begin(), activation.end(), 0.0);
  for (NodeId w : state.graph().neighbors(v)) {
    if (state.initial_owner(w) == 1) {
      activation[0] = 1.0;
      break;
    }
  }
  return false;
}

std::shared_ptr<const NodeFunction> asymmetric_weighted_cascade() {
  static const auto fn = std::make_shared<const AsymmetricWeightedCascade>();
  return fn;
}

std::shared_ptr<const NodeFunction> neighbor_threshold_node_function() {
  static const auto fn = std::make_shared<const NeighborThreshold>();
  return fn;
}

NodeOutcomeDistribution node_activation_distribution(const CascadeState& state, NodeId v,
                                                     std::span<const Player> players,
                                                     const NodeFunction* fn) {
  if (v >= state.graph().node_count()) throw InvalidParameter("node out of range");
  if (state.influenced(v)) {
    throw ContractViolation("node " + std::to_string(v) + " is already influenced");
  }
  if (players.size() != state.player_count()) {
    throw InvalidParameter("player list does not match the cascade state");
  }
  if (!fn) fn = asymmetric_weighted_cascade().get();
  fn->validate(players);

  NodeOutcomeDistribution d;
  d.activation.assign(players.size(), 0.0);
  d.degenerate = fn->evaluate(state, players, v, d.activation);
  double sum = 0.0;
  for (double q : d.activation) sum += q;
  d.stay = std::max(0.0, 1.0 - sum);
  return d;
}

namespace {

// One synchronous round without advancing the timestep. Returns whether
// any node had a positive activation probability.
bool sample_and_commit(CascadeState& state, std::span<const Player> players,
                       const NodeFunction& fn, Rng& rng) {
  const Graph& g = state.graph();
  const std::size_t n = g.node_count();
  const bool frontier_only = fn.needs_influenced_neighbor();
  std::vector<double> q(players.size());
  std::vector<std::pair<NodeId, Owner>> pending;
  bool possible = false;

  for (NodeId v = 0; v < n; ++v) {
    if (state.influenced(v)) continue;
    if (frontier_only && state.influenced_neighbor_total(v) == 0) continue;
    fn.evaluate(state, players, v, q);
    double sum = 0.0;
    for (double x : q) sum += x;
    if (sum <= 0.0) continue;
    possible = true;

    const double u = rng.uniform();
    double acc = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] <= 0.0) continue;
      acc += q[i];
      if (u < acc) {
        pending.emplace_back(v, static_cast<Owner>(i + 1));
        break;
      }
    }
  }
  for (auto [v, owner] : pending) state.commit(v, owner);
  return possible;
}

}  // namespace

CascadeState cascade_step(const CascadeState& state, std::span<const Player> players,
                          const NodeFunction& fn, Rng& rng) {
  if (players.size() != state.player_count()) {
    throw InvalidParameter("player list does not match the cascade state");
  }
  fn.validate(players);
  CascadeState next = state;
  sample_and_commit(next, players, fn, rng);
  next.advance_timestep();
  return next;
}

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::AllInfluenced:
      return "all-influenced";
    case Termination::FrontierEmpty:
      return "frontier-empty";
    case Termination::StepCap:
      return "step-cap";
  }
  return "unknown";
}

std::size_t default_step_cap(const Graph& g) { return std::max<std::size_t>(1, 100 * g.node_count()); }

CascadeOutcome run_cascade(CascadeState& state, std::span<const Player> players,
                           const NodeFunction& fn, Rng& rng, std::size_t step_cap) {
  validate_players(players);
  if (players.size() != state.player_count()) {
    throw InvalidParameter("player list does not match the cascade state");
  }
  fn.validate(players);
  if (step_cap == 0) step_cap = default_step_cap(state.graph());

  CascadeOutcome out;
  const std::size_t n = state.graph().node_count();
  for (;;) {
    if (state.total_influenced() == n) {
      out.terminated_by = Termination::AllInfluenced;
      break;
    }
    if (out.timesteps == step_cap) {
      out.terminated_by = Termination::StepCap;
      break;
    }
    if (!sample_and_commit(state, players, fn, rng)) {
      out.terminated_by = Termination::FrontierEmpty;
      break;
    }
    state.advance_timestep();
    ++out.timesteps;
  }
  out.counts.resize(players.size());
  for (std::size_t i = 0; i < players.size(); ++i) {
    out.counts[i] = state.influenced_count(static_cast<int>(i + 1));
  }
  return out;
}

CascadeOutcome run_cascade(const Graph& g, const SeedAssignment& assignment,
                           std::span<const Player> players, const NodeFunction& fn, Rng& rng,
                           std::size_t step_cap) {
  CascadeState state(g, assignment);
  return run_cascade(state, players, fn, rng, step_cap);
}

}  // namespace cascadia
