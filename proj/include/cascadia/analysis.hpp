#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cascadia {

// ---------------------------------------------------------------------------
// Dense (complete) network, first cascade step.
// ---------------------------------------------------------------------------

/// Two players on K_n with b_1 = c n and b_2 = m c n, disjoint seeds.
struct DenseNetworkConfig {
  double n = 1000;
  double c = 0.02;
  double m = 5;
  double p1 = 1.0;
  double p2 = 0.2;

  double budget1() const { return c * n; }
  double budget2() const { return m * c * n; }
};

/// Probability that a fixed non-seed node joins `player` (1 or 2) in the
/// first step on K_n, given explicit budgets:
///   (p_i / (p_1 + p_2)) (b_i / (b_1 + b_2)) (1 - (1 - 1/(n-1))^(b_1 + b_2)).
/// Throws InvalidConfiguration when b_1 + b_2 > n, InvalidParameter for
/// n < 2, a player outside {1, 2}, or negative inputs.
double dense_first_step_probability(double n, double b1, double b2, double p1, double p2,
                                    int player);

/// Same, with budgets taken from the config.
double dense_first_step_probability(const DenseNetworkConfig& cfg, int player);

/// Size-independent interval for the first-step probability.
struct ProbabilityBounds {
  double lower = 0.0;
  double upper = 0.0;
  DenseNetworkConfig config;
  int player = 1;

  /// Exact first-step probability at graph size n for this config.
  double closed_form(double n) const;
};

/// lower = s * share * (1 - e^{-(m+1)c}), upper = s * share * (1 - 4^{-(m+1)c})
/// where s = p_i / (p_1 + p_2) and share = 1/(m+1) for player 1, m/(m+1)
/// for player 2. Throws InvalidConfiguration when (m+1) c > 1.
ProbabilityBounds dense_probability_bounds(const DenseNetworkConfig& cfg, int player);

/// (b1 + x) / (b1 + b2 + 2x) > b1 / (b1 + b2). Requires b2 > b1 > 0, x > 0.
bool momentum_inequality_check(double b1, double b2, double x);

/// The player-2 counterpart: (b2 + x) / (b1 + b2 + 2x) < b2 / (b1 + b2).
bool momentum_inequality_check_player2(double b1, double b2, double x);

// ---------------------------------------------------------------------------
// Regression
// ---------------------------------------------------------------------------

struct RegressionFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares over (size, mean count) points. Needs at least
/// three points with pairwise distinct sizes. A flat response gets
/// r_squared = 1.
RegressionFit fit_linear(std::span<const std::pair<double, double>> points);

// ---------------------------------------------------------------------------
// Two-player payoff matrices
// ---------------------------------------------------------------------------

struct Payoff {
  double row = 0.0;
  double col = 0.0;
  friend bool operator==(const Payoff&, const Payoff&) = default;
};

struct GameMatrix {
  std::vector<std::string> row_strategies;
  std::vector<std::string> col_strategies;
  /// cells[r][c]: mean outcomes when the row player uses strategy r and
  /// the column player strategy c.
  std::vector<std::vector<Payoff>> cells;

  std::size_t rows() const { return row_strategies.size(); }
  std::size_t cols() const { return col_strategies.size(); }

  /// Throws InvalidParameter if the cell grid does not match the
  /// strategy lists or a payoff is non-finite. Simulated matrices are
  /// non-negative, but the detectors accept any real payoffs.
  void validate() const;
};

/// {"row_strategies":[...], "col_strategies":[...], "cells":[[[p1,p2], ...], ...]}
std::string game_matrix_to_json(const GameMatrix& m, int indent = 2);

/// Throws ParseError (line 0) on malformed JSON or schema mismatch.
GameMatrix game_matrix_from_json(std::string_view text);

struct Profile {
  std::size_t row = 0;
  std::size_t col = 0;
  friend auto operator<=>(const Profile&, const Profile&) = default;
};

/// Profile where the row strategy is a weak best response to every column
/// and the column strategy a weak best response to every row. The
/// lowest-index such profile when ties make several qualify.
std::optional<Profile> find_dominant_strategy_equilibrium(const GameMatrix& m);

/// All pure Nash equilibria (mutual weak best responses), in row-major order.
std::vector<Profile> find_pure_nash(const GameMatrix& m);

}  // namespace cascadia
