#include "bvineq/lambda_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bvineq {

GridMinimum lambda_grid_minimum(double C, double D, double r, double u, const GridSearchOptions& options) {
  if (options.grid_points < 3 || !(options.lambda_min > 0) || !(options.lambda_max > options.lambda_min)) {
    throw std::invalid_argument("lambda_grid_minimum: bad grid");
  }
  auto g = [&](double x) { return C * std::exp(-u * x) + D * std::exp(r * x); };

  const double x_lo = std::log(options.lambda_min);
  const double x_hi = std::log(options.lambda_max);
  const double step = (x_hi - x_lo) / (options.grid_points - 1);

  int best = 0;
  double best_value = g(x_lo);
  for (int i = 1; i < options.grid_points; ++i) {
    const double v = g(x_lo + step * i);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }

  double lo = x_lo + step * std::max(best - 1, 0);
  double hi = x_lo + step * std::min(best + 1, options.grid_points - 1);
  while (hi - lo > options.log_tolerance) {
    const double m1 = lo + (hi - lo) / 3;
    const double m2 = hi - (hi - lo) / 3;
    if (g(m1) <= g(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  const double x = 0.5 * (lo + hi);
  const double v = g(x);
  if (v <= best_value) return {std::exp(x), v};
  return {std::exp(x_lo + step * best), best_value};
}

}  // namespace bvineq
