#include "bvineq/landau.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace bvineq {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0) || !std::isfinite(v)) throw std::invalid_argument(fmt::format("{} = {} must be positive", what, v));
}

void require_unit_exponent(double v, const char* what) {
  if (!(v > 0 && v <= 1)) throw std::invalid_argument(fmt::format("{} = {} must lie in (0, 1]", what, v));
}

void require_alpha(double alpha) {
  if (!(alpha > 1) || !std::isfinite(alpha)) {
    throw std::invalid_argument(fmt::format("alpha = {} must be finite and > 1", alpha));
  }
}

void require_objective(double C, double D, double r, double u) {
  require_positive(C, "C");
  require_positive(D, "D");
  require_unit_exponent(r, "r");
  require_unit_exponent(u, "u");
}

}  // namespace

VariationGrowth::VariationGrowth(double growth, double exponent) : V(growth), r(exponent) {
  require_positive(V, "V");
  require_unit_exponent(r, "r");
}

double landau_objective(double C, double D, double r, double u, double lambda) {
  require_objective(C, D, r, u);
  require_positive(lambda, "lambda");
  return C / std::pow(lambda, u) + D * std::pow(lambda, r);
}

MinimizationResult minimize_landau_objective(double C, double D, double r, double u) {
  require_objective(C, D, r, u);
  const double s = r + u;
  const double lambda0 = std::pow(u * C / (r * D), 1.0 / s);
  const double value =
      s / (std::pow(u, u / s) * std::pow(r, r / s)) * std::pow(C, r / s) * std::pow(D, u / s);
  return {lambda0, value};
}

MinimizationResult minimize_reciprocal_objective(double C, double D, double r) {
  return minimize_landau_objective(C, D, r, 1.0);
}

MinimizationResult minimize_linear_objective(double C, double D, double u) {
  return minimize_landau_objective(C, D, 1.0, u);
}

double landau_sup_bound(double g_sup, const VariationGrowth& growth) {
  require_positive(g_sup, "||g||_inf");
  return minimize_landau_objective(2 * g_sup, growth.V, growth.r, 1.0).value;
}

double landau_l1_bound(double g1, const VariationGrowth& growth) {
  require_positive(g1, "||g'||_1");
  return minimize_landau_objective(g1, growth.V, growth.r, 1.0).value;
}

double landau_lalpha_bound(double galpha, double alpha, const VariationGrowth& growth) {
  require_positive(galpha, "||g'||_alpha");
  require_alpha(alpha);
  return minimize_landau_objective(galpha, growth.V, growth.r, 1.0 / alpha).value;
}

VariationGrowth growth_from_second_derivative(SecondDerivativeNorm kind, double g2norm, double p) {
  require_positive(g2norm, "||g''||");
  if (kind == SecondDerivativeNorm::sup) return VariationGrowth(g2norm, 1.0);
  if (!(p > 1) || !std::isfinite(p)) throw std::invalid_argument(fmt::format("p = {} must be finite and > 1", p));
  return VariationGrowth(g2norm, (p - 1) / p);
}

ConstantFamily parse_constant_family(std::string_view name) {
  if (name == "sup_g2sup") return ConstantFamily::sup_g2sup;
  if (name == "sup_g2p") return ConstantFamily::sup_g2p;
  if (name == "l1_g2sup") return ConstantFamily::l1_g2sup;
  if (name == "l1_g2p") return ConstantFamily::l1_g2p;
  if (name == "lalpha_g2sup") return ConstantFamily::lalpha_g2sup;
  if (name == "lalpha_g2p") return ConstantFamily::lalpha_g2p;
  throw std::invalid_argument(fmt::format("unknown constant family '{}'", name));
}

std::string_view to_string(ConstantFamily family) {
  switch (family) {
    case ConstantFamily::sup_g2sup: return "sup_g2sup";
    case ConstantFamily::sup_g2p: return "sup_g2p";
    case ConstantFamily::l1_g2sup: return "l1_g2sup";
    case ConstantFamily::l1_g2p: return "l1_g2p";
    case ConstantFamily::lalpha_g2sup: return "lalpha_g2sup";
    case ConstantFamily::lalpha_g2p: return "lalpha_g2p";
  }
  return "?";
}

ObjectiveParams family_objective(ConstantFamily family, double p, double alpha) {
  auto g2p_exponent = [p] { return growth_from_second_derivative(SecondDerivativeNorm::lp, 1.0, p).r; };
  switch (family) {
    case ConstantFamily::sup_g2sup: return {2, 1, 1, 1};
    case ConstantFamily::sup_g2p: return {2, 1, g2p_exponent(), 1};
    case ConstantFamily::l1_g2sup: return {1, 1, 1, 1};
    case ConstantFamily::l1_g2p: return {1, 1, g2p_exponent(), 1};
    case ConstantFamily::lalpha_g2sup:
      require_alpha(alpha);
      return {1, 1, 1, 1 / alpha};
    case ConstantFamily::lalpha_g2p:
      require_alpha(alpha);
      return {1, 1, g2p_exponent(), 1 / alpha};
  }
  throw std::logic_error("unhandled constant family");
}

double corollary_constant(ConstantFamily family, double p, double alpha) {
  const ObjectiveParams o = family_objective(family, p, alpha);
  return minimize_landau_objective(o.C, o.D, o.r, o.u).value;
}

}  // namespace bvineq
