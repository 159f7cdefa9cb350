#include <gtest/gtest.h>

#include <sstream>

#include "cascadia/errors.hpp"
#include "cascadia/experiments.hpp"
#include "support/oracles.hpp"

namespace cascadia {
namespace {

using testing::has_dominating_set;

ExperimentConfig small_sweep(Topology t) {
  ExperimentConfig cfg;
  cfg.master_seed = 11;
  cfg.trials_per_point = 4;
  cfg.sizes = {100, 200, 300};
  cfg.topology = t;
  return cfg;
}

TEST(Sweep, PlayersRoundBudgetsDown) {
  const auto players = product_vs_budget_players(1049);
  ASSERT_EQ(players.size(), 2u);
  EXPECT_EQ(players[0].budget, 20u);
  EXPECT_EQ(players[1].budget, 104u);
  EXPECT_DOUBLE_EQ(players[0].product_score, 1.0);
  EXPECT_DOUBLE_EQ(players[1].product_score, 0.2);
  EXPECT_EQ(sweep_player_name(kProductPlayer), "product");
  EXPECT_EQ(sweep_player_name(kBudgetPlayer), "budget");
}

TEST(Sweep, RecordOrderAndShape) {
  const auto result = run_product_vs_budget(small_sweep(Topology::NGon));
  ASSERT_EQ(result.trials.size(), 3u * 4u * 2u);
  ASSERT_EQ(result.means.size(), 3u * 2u);
  std::size_t i = 0;
  for (std::size_t size : {100u, 200u, 300u})
    for (std::size_t trial = 0; trial < 4; ++trial)
      for (int player : {1, 2}) {
        EXPECT_EQ(result.trials[i].size, size);
        EXPECT_EQ(result.trials[i].trial, trial);
        EXPECT_EQ(result.trials[i].player, player);
        ++i;
      }
}

TEST(Sweep, ConnectedTopologiesEndFullyInfluenced) {
  for (Topology t : {Topology::NGon, Topology::Tree, Topology::Dense}) {
    const auto result = run_product_vs_budget(small_sweep(t));
    for (std::size_t i = 0; i < result.trials.size(); i += 2) {
      const auto& a = result.trials[i];
      const auto& b = result.trials[i + 1];
      EXPECT_EQ(a.influenced + b.influenced, a.size) << topology_name(t);
      EXPECT_EQ(a.terminated_by, Termination::AllInfluenced);
      EXPECT_EQ(a.timesteps, b.timesteps);
    }
  }
}

TEST(Sweep, ThreadCountDoesNotChangeResults) {
  auto cfg = small_sweep(Topology::Tree);
  const auto one = run_product_vs_budget(cfg);
  cfg.threads = 4;
  const auto four = run_product_vs_budget(cfg);
  ASSERT_EQ(one.trials.size(), four.trials.size());
  for (std::size_t i = 0; i < one.trials.size(); ++i) {
    EXPECT_EQ(one.trials[i].influenced, four.trials[i].influenced);
    EXPECT_EQ(one.trials[i].timesteps, four.trials[i].timesteps);
  }
}

TEST(Sweep, SeedChangesResults) {
  auto cfg = small_sweep(Topology::NGon);
  const auto a = run_product_vs_budget(cfg);
  cfg.master_seed = 12;
  const auto b = run_product_vs_budget(cfg);
  bool differs = false;
  for (std::size_t i = 0; i < a.trials.size(); ++i)
    differs |= a.trials[i].influenced != b.trials[i].influenced;
  EXPECT_TRUE(differs);
}

TEST(Sweep, InvalidConfigRejected) {
  ExperimentConfig cfg;
  EXPECT_THROW(run_product_vs_budget(cfg), InvalidParameter);
  cfg.sizes = {0};
  EXPECT_THROW(run_product_vs_budget(cfg), InvalidParameter);
  cfg.sizes = {100};
  cfg.trials_per_point = 0;
  EXPECT_THROW(run_product_vs_budget(cfg), InvalidParameter);
}

TEST(Simulation, RecordsPerTrialAndPlayer) {
  const Graph g = generate_ngon(200);
  const std::vector<Player> players{{1, 5, 1.0}, {2, 10, 0.5}};
  const std::vector<StrategyKind> strategies{StrategyKind::highest_degree(), StrategyKind::random()};
  SimulationConfig cfg;
  cfg.trials = 6;
  const auto records = run_simulation(g, players, strategies, cfg);
  ASSERT_EQ(records.size(), 12u);
  for (std::size_t i = 0; i < records.size(); i += 2) {
    EXPECT_EQ(records[i].trial, i / 2);
    EXPECT_EQ(records[i].influenced + records[i + 1].influenced, 200u);
  }
  cfg.threads = 3;
  const auto again = run_simulation(g, players, strategies, cfg);
  for (std::size_t i = 0; i < records.size(); ++i) EXPECT_EQ(records[i].influenced, again[i].influenced);
}

const std::vector<StrategyKind> kGameStrategies{StrategyKind::single_discount(),
                                                StrategyKind::degree_discount(0.01),
                                                StrategyKind::highest_degree()};

TEST(GameMatrixRun, ShapeAndNames) {
  Rng rng(3);
  const Graph g = testing::random_connected_graph(150, 0.03, rng);
  const std::vector<Player> players{{1, 5, 1.0}, {2, 5, 1.0}};
  const auto m = run_game_matrix(g, players, kGameStrategies, 3, 9);
  EXPECT_NO_THROW(m.validate());
  ASSERT_EQ(m.rows(), 3u);
  ASSERT_EQ(m.cols(), 3u);
  EXPECT_EQ(m.row_strategies[1], "degree-discount");
  for (const auto& row : m.cells)
    for (const auto& cell : row) EXPECT_DOUBLE_EQ(cell.row + cell.col, 150.0);
}

TEST(GameMatrixRun, SymmetricPlayersGiveNearSymmetricMatrix) {
  Rng rng(8);
  const Graph g = testing::random_connected_graph(300, 0.02, rng);
  const std::vector<Player> players{{1, 10, 1.0}, {2, 10, 1.0}};
  const auto m = run_game_matrix(g, players, kGameStrategies, 60, 4);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      EXPECT_NEAR(m.cells[a][b].row, m.cells[b][a].col, 0.1 * 300) << a << "," << b;
}

TEST(GameMatrixRun, StrongProductBeatsLargeBudget) {
  // Player 1 seeds 500 nodes at score 0.1; player 2 seeds 50 at score 1.
  // On a complete graph both pull equally at the first step, after which the
  // even split of new nodes erodes player 1's seed advantage.
  const Graph g = generate_dense(2000);
  const std::vector<Player> players{{1, 500, 0.1}, {2, 50, 1.0}};
  const auto m = run_game_matrix(g, players, kGameStrategies, 3, 1);
  for (const auto& row : m.cells)
    for (const auto& cell : row) EXPECT_GT(cell.col, cell.row);
}

TEST(GameMatrixRun, ThreadCountDoesNotChangeMatrix) {
  Rng rng(4);
  const Graph g = testing::random_connected_graph(120, 0.04, rng);
  const std::vector<Player> players{{1, 4, 1.0}, {2, 8, 0.4}};
  const auto a = run_game_matrix(g, players, kGameStrategies, 5, 2, 1);
  const auto b = run_game_matrix(g, players, kGameStrategies, 5, 2, 4);
  EXPECT_EQ(game_matrix_to_json(a), game_matrix_to_json(b));
}

TEST(Reduction, CycleOfSix) {
  const Graph c6 = generate_ngon(6);
  const auto inst = build_reduction_instance(c6, 2);
  EXPECT_EQ(inst.budget, 2u);
  EXPECT_EQ(inst.node_function->name(), neighbor_threshold_node_function()->name());
  const std::vector<NodeId> opposite{0, 3};
  EXPECT_TRUE(verify_reduction(inst, opposite).is_yes_witness);
  EXPECT_EQ(verify_reduction(inst, opposite).influenced, 6u);
  const std::vector<NodeId> adjacent{0, 1};
  EXPECT_FALSE(verify_reduction(inst, adjacent).is_yes_witness);
  EXPECT_EQ(verify_reduction(inst, adjacent).influenced, 4u);
  EXPECT_FALSE(exhaustive_reduction_oracle(c6, 1));
  EXPECT_TRUE(exhaustive_reduction_oracle(c6, 2));
}

TEST(Reduction, OversizedSeedRejected) {
  const auto inst = build_reduction_instance(generate_ngon(6), 1);
  const std::vector<NodeId> seed{0, 3};
  EXPECT_THROW(verify_reduction(inst, seed), BudgetViolation);
}

TEST(Reduction, WitnessIffDominating) {
  Rng rng(77);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 1 + rng.below(10);
    const Graph g = testing::random_graph(n, 0.3, rng);
    const std::size_t k = rng.below(n + 1);
    auto inst = build_reduction_instance(g, k);
    std::vector<NodeId> seed;
    for (NodeId v = 0; v < n && seed.size() < k; ++v)
      if (rng.uniform() < 0.5) seed.push_back(v);
    bool dominating = true;
    for (NodeId v = 0; v < n; ++v) {
      bool covered = std::find(seed.begin(), seed.end(), v) != seed.end();
      for (NodeId w : g.neighbors(v))
        covered |= std::find(seed.begin(), seed.end(), w) != seed.end();
      dominating &= covered;
    }
    EXPECT_EQ(verify_reduction(inst, seed).is_yes_witness, dominating);
  }
}

TEST(Reduction, ExhaustiveOracleMatchesDominatingSet) {
  Rng rng(99);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + rng.below(8);
    const Graph g = testing::random_graph(n, 0.1 + 0.5 * rng.uniform(), rng);
    for (std::size_t k = 0; k <= 3; ++k) {
      EXPECT_EQ(exhaustive_reduction_oracle(g, k), has_dominating_set(g, k))
          << "round " << round << " k " << k;
    }
  }
  EXPECT_THROW(exhaustive_reduction_oracle(generate_ngon(kReductionOracleMaxNodes + 1), 2),
               InvalidParameter);
}

TEST(Output, CsvHeadersAndRows) {
  std::vector<TrialRecord> records{{100, 0, 1, 60, 7, Termination::AllInfluenced},
                                   {100, 0, 2, 40, 7, Termination::AllInfluenced}};
  std::ostringstream trials;
  write_trials_csv(trials, records);
  EXPECT_EQ(trials.str(),
            "size,trial,player,influenced,timesteps,terminated_by\n"
            "100,0,1,60,7,all-influenced\n"
            "100,0,2,40,7,all-influenced\n");

  std::vector<SweepMean> means{{100, 1, 60.5}, {100, 2, 39.5}};
  std::ostringstream out;
  write_means_csv(out, means, [](int p) { return std::string(sweep_player_name(p)); });
  EXPECT_EQ(out.str(), "size,player,mean_influenced\n100,product,60.5\n100,budget,39.5\n");
}

TEST(Output, FormatDoubleRoundTrips) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(3.0), "3");
  const double x = 0.015727678240611087;
  EXPECT_EQ(std::stod(format_double(x)), x);
}

}  // namespace
}  // namespace cascadia
