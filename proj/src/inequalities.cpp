#include "bvineq/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace bvineq {

namespace {

void require_p(double p, const char* who) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw std::invalid_argument(fmt::format("{}: p = {} must be finite and >= 1", who, p));
  }
}

BoundReport tagged(BoundReport r, const PiecewiseFunction& f) {
  r.function_digest = function_digest(f);
  return r;
}

double mean_term(const PiecewiseFunction& f, double p) {
  return std::abs(integral(f)) / std::pow(f.interval().width(), 1.0 - 1.0 / p);
}

}  // namespace

double midpoint_kernel(const Interval& iv, double x) {
  return 0.5 + std::abs(x - iv.midpoint()) / iv.width();
}

double kernel_growth_factor(double p) {
  require_p(p, "kernel_growth_factor");
  if (p <= 512) return std::pow((std::exp2(p + 1) - 1) / (p + 1), 1.0 / p);
  // Logs keep 2^(p+1) from overflowing for large p.
  const double log_num = (p + 1) * std::log(2.0) + std::log1p(-std::exp2(-(p + 1)));
  return std::exp((log_num - std::log(p + 1)) / p);
}

double midpoint_kernel_pnorm(const Interval& iv, double p) {
  require_p(p, "midpoint_kernel_pnorm");
  return 0.5 * std::pow(iv.width(), 1.0 / p) * kernel_growth_factor(p);
}

BoundReport baseline_mean_sup(const PiecewiseFunction& f) {
  return tagged(BoundReport::make("baseline_mean_sup", std::abs(integral(f)) / f.interval().width(),
                                  sup_norm(f)),
                f);
}

BoundReport baseline_mean_lp(const PiecewiseFunction& f, double p) {
  require_p(p, "baseline_mean_lp");
  auto r = tagged(BoundReport::make("baseline_mean_lp", mean_term(f, p), lp_norm(f, p)), f);
  r.params["p"] = p;
  return r;
}

BoundReport ostrowski_pointwise(const PiecewiseFunction& f, double x) {
  const Interval& iv = f.interval();
  if (!iv.contains(x)) {
    throw std::out_of_range(fmt::format("ostrowski_pointwise: x = {} outside [{}, {}]", x, iv.a, iv.b));
  }
  const double mean = integral(f) / iv.width();
  auto r = tagged(BoundReport::make("ostrowski_pointwise", std::abs(f(x) - mean),
                                    midpoint_kernel(iv, x) * total_variation(f)),
                  f);
  r.params["x"] = x;
  return r;
}

std::vector<BoundReport> ostrowski_sweep(const PiecewiseFunction& f, int grid_points) {
  if (grid_points < 2) throw std::invalid_argument("ostrowski_sweep: need at least 2 grid points");
  const Interval& iv = f.interval();
  std::vector<double> xs(f.breakpoints());
  for (int i = 0; i < grid_points; ++i) {
    xs.push_back(i + 1 == grid_points ? iv.b : iv.a + iv.width() * i / (grid_points - 1));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  // Shared terms computed once; the per-x report matches ostrowski_pointwise.
  const double mean = integral(f) / iv.width();
  const double tv = total_variation(f);
  const std::string digest = function_digest(f);
  std::vector<BoundReport> out;
  out.reserve(xs.size());
  for (double x : xs) {
    auto r = BoundReport::make("ostrowski_pointwise", std::abs(f(x) - mean), midpoint_kernel(iv, x) * tv);
    r.params["x"] = x;
    r.function_digest = digest;
    out.push_back(std::move(r));
  }
  return out;
}

BoundReport reverse_sup(const PiecewiseFunction& f) {
  const double rhs = std::abs(integral(f)) / f.interval().width() + total_variation(f);
  return tagged(BoundReport::make("reverse_sup", sup_norm(f), rhs), f);
}

BoundReport reverse_lp(const PiecewiseFunction& f, double p) {
  require_p(p, "reverse_lp");
  const double rhs = mean_term(f, p) + midpoint_kernel_pnorm(f.interval(), p) * total_variation(f);
  auto r = tagged(BoundReport::make("reverse_lp", lp_norm(f, p), rhs), f);
  r.params["p"] = p;
  return r;
}

}  // namespace bvineq
