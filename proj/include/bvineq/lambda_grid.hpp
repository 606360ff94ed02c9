#pragma once

namespace bvineq {

/// Brute-force minimum of C / lambda^u + D lambda^r: a logarithmic grid of
/// `grid_points` values on [lambda_min, lambda_max], then trisection in
/// log(lambda) around the best grid point until the bracket is narrower than
/// `log_tolerance`. Shares no code with the closed-form minimiser.
struct GridMinimum {
  double lambda;
  double value;
};

struct GridSearchOptions {
  double lambda_min = 1e-8;
  double lambda_max = 1e8;
  int grid_points = 1'000'000;
  double log_tolerance = 1e-10;
};

GridMinimum lambda_grid_minimum(double C, double D, double r, double u, const GridSearchOptions& options = {});

}  // namespace bvineq
