#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace bvineq::quadrature {

struct Estimate {
  double value = 0;
  double error = 0;
};

namespace detail {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7).
inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
Estimate gauss_kronrod_15(const F& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [lo, hi]. Subintervals are
/// bisected until every accepted panel has an error estimate within its share
/// of `abs_tol` (proportional to its width), or `max_panels` is reached.
template <class F>
Estimate integrate(const F& f, double lo, double hi, double abs_tol = 1e-12,
                   std::size_t max_panels = 4000) {
  if (!(hi >= lo)) throw std::invalid_argument("integrate: hi < lo");
  if (hi == lo) return {};
  const double width = hi - lo;

  struct Panel {
    double lo, hi;
  };
  std::vector<Panel> stack{{lo, hi}};
  std::size_t panels = 1;
  Estimate total;
  while (!stack.empty()) {
    const Panel panel = stack.back();
    stack.pop_back();
    const Estimate e = detail::gauss_kronrod_15(f, panel.lo, panel.hi);
    const double share = abs_tol * (panel.hi - panel.lo) / width;
    const double mid = 0.5 * (panel.lo + panel.hi);
    const bool can_split = panels + 1 < max_panels && mid > panel.lo && mid < panel.hi;
    if (e.error <= share || !can_split) {
      total.value += e.value;
      total.error += e.error;
      continue;
    }
    stack.push_back({mid, panel.hi});
    stack.push_back({panel.lo, mid});
    ++panels;
  }
  return total;
}

}  // namespace bvineq::quadrature
