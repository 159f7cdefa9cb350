#include <algorithm>
#include <vector>

#include "cascadia/analysis.hpp"
#include "cascadia/errors.hpp"

namespace cascadia {

RegressionFit fit_linear(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3) throw InvalidParameter("linear fit needs at least 3 points");
  std::vector<double> xs;
  xs.reserve(points.size());
  for (auto [x, y] : points) xs.push_back(x);
  std::sort(xs.begin(), xs.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) {
    throw InvalidParameter("linear fit needs distinct sizes");
  }

  const double count = static_cast<double>(points.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (auto [x, y] : points) {
    mean_x += x;
    mean_y += y;
  }
  mean_x /= count;
  mean_y /= count;

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (auto [x, y] : points) {
    sxx += (x - mean_x) * (x - mean_x);
    sxy += (x - mean_x) * (y - mean_y);
    syy += (y - mean_y) * (y - mean_y);
  }

  RegressionFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  if (syy == 0.0) {
    fit.r_squared = 1.0;
    return fit;
  }
  double ss_res = 0.0;
  for (auto [x, y] : points) {
    const double r = y - (fit.intercept + fit.slope * x);
    ss_res += r * r;
  }
  fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  return fit;
}

}  // namespace cascadia
