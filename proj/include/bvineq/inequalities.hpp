#pragma once

#include <vector>

#include "bvineq/bound_report.hpp"
#include "bvineq/piecewise_function.hpp"

namespace bvineq {

/// Mean absolute integral against the sup norm: |int f|/(b-a) <= sup|f|.
BoundReport baseline_mean_sup(const PiecewiseFunction& f);

/// Hoelder form: |int f| / (b-a)^(1-1/p) <= ||f||_p.
BoundReport baseline_mean_lp(const PiecewiseFunction& f, double p);

/// |f(x) - mean| <= [1/2 + |x - mid|/(b-a)] * TV(f) at a single x in [a, b].
BoundReport ostrowski_pointwise(const PiecewiseFunction& f, double x);

/// Ostrowski check at every breakpoint plus `grid_points` uniform points.
std::vector<BoundReport> ostrowski_sweep(const PiecewiseFunction& f, int grid_points = 257);

/// sup|f| <= |int f|/(b-a) + TV(f).
BoundReport reverse_sup(const PiecewiseFunction& f);

/// ||f||_p <= |int f|/(b-a)^(1-1/p) + midpoint_kernel_pnorm * TV(f).
BoundReport reverse_lp(const PiecewiseFunction& f, double p);

/// p-norm of the kernel x -> 1/2 + |x - mid|/(b-a) over the interval, closed form
/// (b-a)^(1/p) (2^(p+1) - 1)^(1/p) / (2 (p+1)^(1/p)).
double midpoint_kernel_pnorm(const Interval& iv, double p);

/// Kernel value 1/2 + |x - mid|/(b-a).
double midpoint_kernel(const Interval& iv, double x);

/// The factor (2^(p+1) - 1)^(1/p) / (p+1)^(1/p) that multiplies (b-a)^(1/p) in
/// twice the kernel norm. Tends to 2 as p grows.
double kernel_growth_factor(double p);

}  // namespace bvineq
