#include <cmath>
#include <string>

#include "cascadia/analysis.hpp"
#include "cascadia/errors.hpp"

namespace cascadia {
namespace {

void check_player(int player) {
  if (player != 1 && player != 2) {
    throw InvalidParameter("player must be 1 or 2, got " + std::to_string(player));
  }
}

double score_share(double p1, double p2, int player) {
  const double total = p1 + p2;
  if (total <= 0.0) return 0.0;
  return (player == 1 ? p1 : p2) / total;
}

void check_scores(double p1, double p2) {
  if (!(p1 >= 0.0 && p1 <= 1.0 && p2 >= 0.0 && p2 <= 1.0)) {
    throw InvalidParameter("product scores must lie in [0, 1]");
  }
}

}  // namespace

double dense_first_step_probability(double n, double b1, double b2, double p1, double p2,
                                    int player) {
  check_player(player);
  check_scores(p1, p2);
  if (!(n >= 2.0)) throw InvalidParameter("dense network needs n >= 2");
  if (!(b1 >= 0.0 && b2 >= 0.0)) throw InvalidParameter("budgets must be non-negative");
  if (b1 + b2 > n) {
    throw InvalidConfiguration("seed budgets b1 + b2 = " + std::to_string(b1 + b2) +
                               " exceed n = " + std::to_string(n));
  }
  const double seeds = b1 + b2;
  if (seeds == 0.0) return 0.0;
  const double seed_share = (player == 1 ? b1 : b2) / seeds;
  const double reach = 1.0 - std::pow(1.0 - 1.0 / (n - 1.0), seeds);
  return score_share(p1, p2, player) * seed_share * reach;
}

double dense_first_step_probability(const DenseNetworkConfig& cfg, int player) {
  return dense_first_step_probability(cfg.n, cfg.budget1(), cfg.budget2(), cfg.p1, cfg.p2,
                                      player);
}

double ProbabilityBounds::closed_form(double n) const {
  DenseNetworkConfig at = config;
  at.n = n;
  return dense_first_step_probability(at, player);
}

ProbabilityBounds dense_probability_bounds(const DenseNetworkConfig& cfg, int player) {
  check_player(player);
  check_scores(cfg.p1, cfg.p2);
  if (!(cfg.c > 0.0 && cfg.c < 1.0)) throw InvalidParameter("c must lie in (0, 1)");
  if (!(cfg.m > 1.0)) throw InvalidParameter("m must exceed 1");
  const double exponent = (cfg.m + 1.0) * cfg.c;
  if (exponent > 1.0) {
    throw InvalidConfiguration("(m + 1) c = " + std::to_string(exponent) +
                               " exceeds 1: the seeds do not fit in the graph");
  }

  const double share = player == 1 ? 1.0 / (cfg.m + 1.0) : cfg.m / (cfg.m + 1.0);
  const double factor = score_share(cfg.p1, cfg.p2, player) * share;

  ProbabilityBounds b;
  b.config = cfg;
  b.player = player;
  b.lower = factor * (1.0 - std::exp(-exponent));
  b.upper = factor * (1.0 - std::pow(4.0, -exponent));
  return b;
}

bool momentum_inequality_check(double b1, double b2, double x) {
  if (!(b1 > 0.0 && b2 > b1 && x > 0.0)) {
    throw InvalidParameter("momentum inequality needs b2 > b1 > 0 and x > 0");
  }
  const long double lb1 = b1, lb2 = b2, lx = x;
  return (lb1 + lx) / (lb1 + lb2 + 2 * lx) > lb1 / (lb1 + lb2);
}

bool momentum_inequality_check_player2(double b1, double b2, double x) {
  if (!(b1 > 0.0 && b2 > b1 && x > 0.0)) {
    throw InvalidParameter("momentum inequality needs b2 > b1 > 0 and x > 0");
  }
  const long double lb1 = b1, lb2 = b2, lx = x;
  return (lb2 + lx) / (lb1 + lb2 + 2 * lx) < lb2 / (lb1 + lb2);
}

}  // namespace cascadia
