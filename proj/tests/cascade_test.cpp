#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "cascadia/cascade.hpp"
#include "cascadia/errors.hpp"
#include "support/oracles.hpp"

namespace cascadia {
namespace {

using testing::assignment_from_owners;
using testing::formula_oracle;
using testing::path_graph;
using testing::star_graph;

std::vector<Player> two_players(double p1, double p2, std::size_t budget = 100) {
  return {Player{1, budget, p1}, Player{2, budget, p2}};
}

// ---------------------------------------------------------------------------
// Seed overlap resolution
// ---------------------------------------------------------------------------

double contested_share(double p1, double p2, std::uint64_t seed, int draws = 100000) {
  const auto players = two_players(p1, p2);
  const std::vector<std::vector<NodeId>> seeds{{0}, {0}};
  Rng rng(seed);
  int first = 0;
  for (int i = 0; i < draws; ++i) {
    const auto a = resolve_seed_overlaps(1, seeds, players, rng);
    first += a.initial[0].size() == 1;
  }
  return static_cast<double>(first) / draws;
}

TEST(SeedOverlap, ContestedNodeFollowsScoreRatio) {
  EXPECT_NEAR(contested_share(1.0, 0.2, 11), 5.0 / 6.0, 0.01);
}

TEST(SeedOverlap, EqualScoresSplitEvenly) {
  EXPECT_NEAR(contested_share(0.5, 0.5, 12), 0.5, 0.01);
}

TEST(SeedOverlap, UncontestedSeedsAreKept) {
  const auto players = two_players(0.0, 1.0);
  const std::vector<std::vector<NodeId>> seeds{{3, 1}, {2}};
  Rng rng(1);
  const auto a = resolve_seed_overlaps(5, seeds, players, rng);
  EXPECT_EQ(a.initial[0], (std::vector<NodeId>{1, 3}));
  EXPECT_EQ(a.initial[1], (std::vector<NodeId>{2}));
  EXPECT_EQ(a.chosen[0], (std::vector<NodeId>{1, 3}));
}

TEST(SeedOverlap, ZeroScoreLosesContestAgainstPositive) {
  const auto players = two_players(0.0, 0.3);
  const std::vector<std::vector<NodeId>> seeds{{0, 1}, {0, 1}};
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto a = resolve_seed_overlaps(2, seeds, players, rng);
    EXPECT_TRUE(a.initial[0].empty());
    EXPECT_EQ(a.initial[1].size(), 2u);
  }
}

TEST(SeedOverlap, AllZeroContendersIsUndefined) {
  const auto players = two_players(0.0, 0.0);
  const std::vector<std::vector<NodeId>> seeds{{0}, {0}};
  Rng rng(1);
  EXPECT_THROW(resolve_seed_overlaps(1, seeds, players, rng), UndefinedDistribution);
}

TEST(SeedOverlap, RejectsBadSeedSets) {
  const auto players = two_players(1.0, 1.0, 2);
  Rng rng(1);
  const std::vector<std::vector<NodeId>> over_budget{{0, 1, 2}, {}};
  EXPECT_THROW(resolve_seed_overlaps(5, over_budget, players, rng), BudgetViolation);
  const std::vector<std::vector<NodeId>> repeated{{1, 1}, {}};
  EXPECT_THROW(resolve_seed_overlaps(5, repeated, players, rng), InvalidParameter);
  const std::vector<std::vector<NodeId>> out_of_range{{7}, {}};
  EXPECT_THROW(resolve_seed_overlaps(5, out_of_range, players, rng), InvalidParameter);
  const std::vector<std::vector<NodeId>> one_set{{1}};
  EXPECT_THROW(resolve_seed_overlaps(5, one_set, players, rng), InvalidParameter);
}

TEST(SeedOverlap, AssignmentInvariants) {
  Rng rng(77);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + rng.below(20);
    const std::size_t k = 1 + rng.below(4);
    std::vector<Player> players;
    std::vector<std::vector<NodeId>> seeds(k);
    for (std::size_t i = 0; i < k; ++i) {
      players.push_back({static_cast<int>(i + 1), n, 0.05 + 0.95 * rng.uniform()});
      for (NodeId v = 0; v < n; ++v)
        if (rng.uniform() < 0.4) seeds[i].push_back(v);
    }
    const auto a = resolve_seed_overlaps(n, seeds, players, rng);
    std::vector<int> hits(n, 0);
    std::size_t union_size = 0;
    std::vector<char> in_union(n, 0);
    for (const auto& s : seeds)
      for (NodeId v : s) in_union[v] = 1;
    for (char c : in_union) union_size += c;
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (NodeId v : a.initial[i]) {
        ++hits[v];
        ++assigned;
        EXPECT_TRUE(std::binary_search(a.chosen[i].begin(), a.chosen[i].end(), v));
      }
    }
    EXPECT_EQ(assigned, union_size);
    for (NodeId v = 0; v < n; ++v) EXPECT_EQ(hits[v], in_union[v] ? 1 : 0);
  }
}

TEST(SeedOverlap, ScaleInvariance) {
  // Power-of-two scaling is exact in floating point, so the draws match bitwise.
  const std::vector<std::vector<NodeId>> seeds{{0, 1, 2, 3}, {1, 2, 3, 4}};
  for (double lambda : {0.5, 0.25}) {
    Rng a(99), b(99);
    for (int i = 0; i < 500; ++i) {
      const auto base = resolve_seed_overlaps(5, seeds, two_players(0.8, 0.6), a);
      const auto scaled =
          resolve_seed_overlaps(5, seeds, two_players(0.8 * lambda, 0.6 * lambda), b);
      EXPECT_EQ(base.initial, scaled.initial);
    }
  }
  // Arbitrary scaling: same distribution.
  EXPECT_NEAR(contested_share(0.9, 0.3, 5), contested_share(0.3, 0.1, 6), 0.01);
}

// ---------------------------------------------------------------------------
// Activation distribution
// ---------------------------------------------------------------------------

TEST(Distribution, DegreeFourTwoPlayers) {
  // Node 0 with four neighbors: 1 owned by player 1, 2 by player 2.
  const Graph g = star_graph(4);
  const auto a = assignment_from_owners({0, 1, 2, 0, 0}, 2);
  const CascadeState state(g, a);
  const auto d = node_activation_distribution(state, 0, two_players(0.5, 0.5));
  EXPECT_DOUBLE_EQ(d.activation[0], 0.109375);
  EXPECT_DOUBLE_EQ(d.activation[1], 0.109375);
  EXPECT_DOUBLE_EQ(d.stay, 1.0 - 2 * 0.109375);
}

TEST(Distribution, DegreeOneNodeActivatesSurely) {
  const Graph g = path_graph(2);
  const std::vector<Player> players{{1, 1, 1.0}};
  const CascadeState state(g, assignment_from_owners({1, 0}, 1));
  const auto d = node_activation_distribution(state, 1, players);
  EXPECT_DOUBLE_EQ(d.activation[0], 1.0);
  EXPECT_DOUBLE_EQ(d.stay, 0.0);
}

TEST(Distribution, DenseFirstStepValue) {
  // K_1001, player 1 holds 20 seeds and player 2 holds 100, disjoint.
  const Graph g = generate_dense(1001);
  std::vector<Owner> owner(1001, 0);
  for (NodeId v = 0; v < 20; ++v) owner[v] = 1;
  for (NodeId v = 20; v < 120; ++v) owner[v] = 2;
  const CascadeState state(g, assignment_from_owners(owner, 2));
  const auto players = two_players(1.0, 0.2, 100);
  const auto d = node_activation_distribution(state, 500, players);
  // (5/6)(1/6)(1 - 0.999^120), evaluated at 30 digits.
  EXPECT_NEAR(d.activation[0], 0.0157128906130466928727392180793, 1e-15);
  EXPECT_NEAR(d.activation[1], d.activation[0], 1e-15);
}

TEST(Distribution, NoInfluencedNeighborStays) {
  const Graph g = path_graph(3);
  const std::vector<Player> players{{1, 1, 1.0}};
  const CascadeState state(g, assignment_from_owners({1, 0, 0}, 1));
  const auto d = node_activation_distribution(state, 2, players);
  EXPECT_DOUBLE_EQ(d.activation[0], 0.0);
  EXPECT_DOUBLE_EQ(d.stay, 1.0);
}

TEST(Distribution, InfluencedNodeIsContractViolation) {
  const Graph g = path_graph(3);
  const std::vector<Player> players{{1, 1, 1.0}};
  const CascadeState state(g, assignment_from_owners({1, 0, 0}, 1));
  EXPECT_THROW(node_activation_distribution(state, 0, players), ContractViolation);
}

TEST(Distribution, AllZeroScoresStay) {
  const Graph g = path_graph(3);
  const auto players = two_players(0.0, 0.0);
  const CascadeState state(g, assignment_from_owners({1, 0, 2}, 2));
  const auto d = node_activation_distribution(state, 1, players);
  EXPECT_DOUBLE_EQ(d.stay, 1.0);
}

TEST(Distribution, SinglePlayerMatchesWeightedCascadeShape) {
  for (std::size_t deg = 1; deg <= 12; ++deg) {
    const Graph g = star_graph(deg);
    std::vector<Owner> owner(deg + 1, 1);
    owner[0] = 0;
    const std::vector<Player> players{{1, deg, 1.0}};
    const CascadeState state(g, assignment_from_owners(owner, 1));
    const auto d = node_activation_distribution(state, 0, players);
    const double d_real = static_cast<double>(deg);
    EXPECT_DOUBLE_EQ(d.activation[0], 1.0 - std::pow(1.0 - 1.0 / d_real, d_real));
  }
}

TEST(Distribution, SymmetricPlayersGetEqualProbability) {
  Rng rng(8);
  for (int round = 0; round < 200; ++round) {
    const std::size_t half = 1 + rng.below(5);
    const Graph g = star_graph(2 * half + rng.below(4));
    std::vector<Owner> owner(g.node_count(), 0);
    for (std::size_t i = 0; i < half; ++i) {
      owner[1 + i] = 1;
      owner[1 + half + i] = 2;
    }
    const double p = rng.uniform();
    const CascadeState state(g, assignment_from_owners(owner, 2));
    const auto d = node_activation_distribution(state, 0, two_players(p, p));
    EXPECT_EQ(d.activation[0], d.activation[1]);
  }
}

TEST(Distribution, NormalizedAndMatchesFormulaOracle) {
  Rng rng(404);
  for (int round = 0; round < 2000; ++round) {
    const std::size_t n = 2 + rng.below(14);
    const std::size_t k = 1 + rng.below(4);
    const Graph g = testing::random_graph(n, 0.2 + 0.6 * rng.uniform(), rng);
    std::vector<Player> players;
    for (std::size_t i = 0; i < k; ++i) {
      players.push_back({static_cast<int>(i + 1), n, rng.below(6) == 0 ? 0.0 : rng.uniform()});
    }
    std::vector<Owner> owner(n, 0);
    for (auto& o : owner) {
      if (rng.uniform() < 0.5) o = static_cast<Owner>(1 + rng.below(k));
    }
    const CascadeState state(g, assignment_from_owners(owner, k));
    for (NodeId v = 0; v < n; ++v) {
      if (owner[v] != 0) continue;
      const auto d = node_activation_distribution(state, v, players);
      const auto expected = formula_oracle(g, owner, v, players);
      double sum = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        EXPECT_GE(d.activation[i], 0.0);
        EXPECT_NEAR(d.activation[i], expected[i], 1e-15);
        sum += d.activation[i];
      }
      EXPECT_LE(sum, 1.0 + 1e-12);
      EXPECT_GE(d.stay, 0.0);
    }
  }
}

// ---------------------------------------------------------------------------
// Timesteps and full runs
// ---------------------------------------------------------------------------

TEST(Step, TriangleNeighborsActivateWithHalfProbability) {
  const Graph g = generate_dense(3);
  const std::vector<Player> players{{1, 1, 1.0}};
  const CascadeState start(g, assignment_from_owners({1, 0, 0}, 1));
  const auto& fn = *asymmetric_weighted_cascade();
  Rng rng(31);
  int hits[3] = {0, 0, 0};
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    const auto next = cascade_step(start, players, fn, rng);
    EXPECT_EQ(next.timestep(), 1u);
    for (NodeId v = 1; v < 3; ++v) hits[v] += next.influenced(v);
  }
  EXPECT_NEAR(hits[1] / double(draws), 0.5, 0.01);
  EXPECT_NEAR(hits[2] / double(draws), 0.5, 0.01);
}

TEST(Step, EmptyFrontierOnlyAdvancesTime) {
  std::vector<std::pair<NodeId, NodeId>> edges{{0, 1}, {2, 3}};
  const Graph g = Graph::from_edges(4, edges);
  const std::vector<Player> players{{1, 2, 1.0}};
  const CascadeState start(g, assignment_from_owners({1, 1, 0, 0}, 1));
  Rng rng(1);
  const auto next = cascade_step(start, players, *asymmetric_weighted_cascade(), rng);
  EXPECT_EQ(next.timestep(), 1u);
  EXPECT_EQ(next.total_influenced(), 2u);
  EXPECT_FALSE(next.influenced(2));
}

TEST(Step, StayingNodeRemainsEligible) {
  // Path 0-1-2 seeded at 0: node 1 activates with probability 0.5 per step.
  const Graph g = path_graph(3);
  const std::vector<Player> players{{1, 1, 1.0}};
  const auto& fn = *asymmetric_weighted_cascade();
  Rng rng(17);
  int stayed_then_activated = 0;
  for (int i = 0; i < 2000; ++i) {
    CascadeState s(g, assignment_from_owners({1, 0, 0}, 1));
    s = cascade_step(s, players, fn, rng);
    if (s.influenced(1)) continue;
    // Node 2 still has no influenced neighbor, so nothing changed there.
    EXPECT_FALSE(s.influenced(2));
    for (int j = 0; j < 60 && !s.influenced(1); ++j) s = cascade_step(s, players, fn, rng);
    stayed_then_activated += s.influenced(1);
  }
  EXPECT_GT(stayed_then_activated, 0);
}

TEST(Step, UpdatesAreSynchronous) {
  // Node 2 can only join after node 1 has joined in an earlier step.
  const Graph g = path_graph(3);
  const std::vector<Player> players{{1, 1, 1.0}};
  Rng rng(23);
  for (int i = 0; i < 5000; ++i) {
    const CascadeState s(g, assignment_from_owners({1, 0, 0}, 1));
    const auto next = cascade_step(s, players, *asymmetric_weighted_cascade(), rng);
    EXPECT_FALSE(next.influenced(2));
  }
}

TEST(Run, TriangleSinglePlayerInfluencesAll) {
  const Graph g = generate_dense(3);
  const std::vector<Player> players{{1, 1, 1.0}};
  Rng rng(4);
  const auto out =
      run_cascade(g, assignment_from_owners({1, 0, 0}, 1), players, *asymmetric_weighted_cascade(), rng);
  EXPECT_EQ(out.counts, (std::vector<std::size_t>{3}));
  EXPECT_EQ(out.terminated_by, Termination::AllInfluenced);
  EXPECT_GE(out.timesteps, 1u);
}

TEST(Run, SeedsCoveringGraphTakeNoSteps) {
  const Graph g = generate_ngon(6);
  const auto players = two_players(1.0, 0.2, 6);
  Rng rng(4);
  const auto out = run_cascade(g, assignment_from_owners({1, 2, 2, 1, 2, 2}, 2), players,
                               *asymmetric_weighted_cascade(), rng);
  EXPECT_EQ(out.counts, (std::vector<std::size_t>{2, 4}));
  EXPECT_EQ(out.timesteps, 0u);
  EXPECT_EQ(out.terminated_by, Termination::AllInfluenced);
}

TEST(Run, UnreachableComponentEndsWithEmptyFrontier) {
  std::vector<std::pair<NodeId, NodeId>> edges{{0, 1}, {1, 2}, {3, 4}, {4, 5}};
  const Graph g = Graph::from_edges(6, edges);
  const auto players = two_players(1.0, 0.5, 3);
  Rng rng(9);
  const auto out = run_cascade(g, assignment_from_owners({1, 0, 2, 0, 0, 0}, 2), players,
                               *asymmetric_weighted_cascade(), rng);
  EXPECT_EQ(out.counts[0] + out.counts[1], 3u);
  EXPECT_EQ(out.terminated_by, Termination::FrontierEmpty);
}

TEST(Run, StepCapIsReported) {
  const Graph g = path_graph(200);
  std::vector<Owner> owner(200, 0);
  owner[0] = 1;
  const std::vector<Player> players{{1, 1, 1.0}};
  Rng rng(2);
  const auto out =
      run_cascade(g, assignment_from_owners(owner, 1), players, *asymmetric_weighted_cascade(), rng, 5);
  EXPECT_EQ(out.terminated_by, Termination::StepCap);
  EXPECT_EQ(out.timesteps, 5u);
  EXPECT_LE(out.counts[0], 6u);
}

TEST(Run, ConnectedGraphsAreFullyInfluenced) {
  Rng rng(12);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 2 + rng.below(40);
    const Graph g = testing::random_connected_graph(n, 0.05, rng);
    std::vector<Owner> owner(n, 0);
    owner[rng.below(n)] = 1;
    owner[rng.below(n)] = 2;
    const auto players = two_players(0.1 + 0.9 * rng.uniform(), 0.1 + 0.9 * rng.uniform(), n);
    const auto out = run_cascade(g, assignment_from_owners(owner, 2), players,
                                 *asymmetric_weighted_cascade(), rng);
    EXPECT_EQ(out.terminated_by, Termination::AllInfluenced);
    EXPECT_EQ(out.counts[0] + out.counts[1], n);
  }
}

TEST(Run, OwnershipIsPermanentAndSetsGrow) {
  Rng rng(21);
  const auto& fn = *asymmetric_weighted_cascade();
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = 5 + rng.below(40);
    const Graph g = testing::random_connected_graph(n, 0.08, rng);
    std::vector<Owner> owner(n, 0);
    for (int s = 0; s < 3; ++s) owner[rng.below(n)] = static_cast<Owner>(1 + rng.below(3));
    std::vector<Player> players{{1, n, 0.7}, {2, n, 0.4}, {3, n, 1.0}};
    CascadeState s(g, assignment_from_owners(owner, 3));
    for (int step = 0; step < 200 && s.total_influenced() < n; ++step) {
      const auto next = cascade_step(s, players, fn, rng);
      for (NodeId v = 0; v < n; ++v) {
        if (s.influenced(v)) EXPECT_EQ(next.owner(v), s.owner(v));
      }
      for (int p = 1; p <= 3; ++p) EXPECT_GE(next.influenced_count(p), s.influenced_count(p));
      s = next;
    }
  }
}

TEST(Run, SameSeedSameOutcome) {
  const Graph g = generate_ngon(300);
  std::vector<Owner> owner(300, 0);
  for (NodeId v = 0; v < 300; v += 37) owner[v] = 1 + (v % 2);
  const auto a = assignment_from_owners(owner, 2);
  const auto players = two_players(1.0, 0.2, 300);
  Rng r1(5), r2(5);
  const auto o1 = run_cascade(g, a, players, *asymmetric_weighted_cascade(), r1);
  const auto o2 = run_cascade(g, a, players, *asymmetric_weighted_cascade(), r2);
  EXPECT_EQ(o1.counts, o2.counts);
  EXPECT_EQ(o1.timesteps, o2.timesteps);
}

// ---------------------------------------------------------------------------
// Neighbor-threshold rule
// ---------------------------------------------------------------------------

TEST(NeighborThreshold, LeafOfSeededCenterActivates) {
  const Graph g = star_graph(5);
  const std::vector<Player> players{{1, 1, 1.0}};
  const CascadeState state(g, assignment_from_owners({1, 0, 0, 0, 0, 0}, 1));
  const auto fn = neighbor_threshold_node_function();
  const auto d = node_activation_distribution(state, 3, players, fn.get());
  EXPECT_DOUBLE_EQ(d.activation[0], 1.0);
  EXPECT_DOUBLE_EQ(d.stay, 0.0);
}

TEST(NeighborThreshold, OnlyInitialSeedsCount) {
  const Graph g = path_graph(3);
  const std::vector<Player> players{{1, 1, 1.0}};
  const auto fn = neighbor_threshold_node_function();
  CascadeState s(g, assignment_from_owners({1, 0, 0}, 1));
  Rng rng(1);
  for (int step = 0; step < 5; ++step) {
    if (!s.influenced(2)) {
      EXPECT_DOUBLE_EQ(node_activation_distribution(s, 2, players, fn.get()).stay, 1.0);
    }
    s = cascade_step(s, players, *fn, rng);
  }
  EXPECT_TRUE(s.influenced(1));
  EXPECT_FALSE(s.influenced(2));

  CascadeState fresh(g, assignment_from_owners({1, 0, 0}, 1));
  const auto out = run_cascade(fresh, players, *fn, rng);
  EXPECT_EQ(out.counts[0], 2u);
  EXPECT_EQ(out.terminated_by, Termination::FrontierEmpty);
}

TEST(NeighborThreshold, RequiresExactlyOnePlayer) {
  const Graph g = path_graph(3);
  const auto players = two_players(1.0, 1.0);
  const CascadeState state(g, assignment_from_owners({1, 0, 2}, 2));
  const auto fn = neighbor_threshold_node_function();
  EXPECT_THROW(node_activation_distribution(state, 1, players, fn.get()), InvalidConfiguration);
  Rng rng(1);
  EXPECT_THROW(cascade_step(state, players, *fn, rng), InvalidConfiguration);
}

}  // namespace
}  // namespace cascadia
