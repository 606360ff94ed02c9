#pragma once

#include <string>
#include <string_view>

namespace bvineq {

/// Minimiser of g(lambda) = C / lambda^u + D lambda^r over lambda > 0.
struct MinimizationResult {
  double lambda0;
  double value;
};

/// Hoelder-type growth of the derivative's variation:
/// |Var_[a,b](g')| <= V |b - a|^r for all a, b in the domain.
struct VariationGrowth {
  double V;
  double r;

  /// Throws std::invalid_argument unless V > 0 and 0 < r <= 1.
  VariationGrowth(double growth, double exponent);
};

/// C / lambda^u + D lambda^r. All arguments must be positive, r and u at most 1.
double landau_objective(double C, double D, double r, double u, double lambda);

/// Closed-form minimum:
///   lambda0 = (u C / (r D))^(1/(r+u)),
///   value   = (r+u) / (u^(u/(r+u)) r^(r/(r+u))) * C^(r/(r+u)) * D^(u/(r+u)).
MinimizationResult minimize_landau_objective(double C, double D, double r, double u);

/// u = 1 specialisation: C/lambda + D lambda^r.
MinimizationResult minimize_reciprocal_objective(double C, double D, double r);
/// r = 1 specialisation: C/lambda^u + D lambda.
MinimizationResult minimize_linear_objective(double C, double D, double u);

/// ||g'||_inf bound from ||g||_inf and a growth certificate:
/// the objective minimum with C = 2 ||g||_inf, D = V, u = 1.
double landau_sup_bound(double g_sup, const VariationGrowth& growth);

/// ||g'||_inf bound from ||g'||_1: the minimum with C = ||g'||_1, D = V, u = 1.
double landau_l1_bound(double g1, const VariationGrowth& growth);

/// ||g'||_inf bound from ||g'||_alpha, alpha > 1: the minimum with
/// C = ||g'||_alpha, D = V, u = 1/alpha.
double landau_lalpha_bound(double galpha, double alpha, const VariationGrowth& growth);

enum class SecondDerivativeNorm { sup, lp };

/// Growth certificate implied by a norm of g''. With the sup norm the variation
/// of g' on [a,b] is at most ||g''||_inf |b-a|; with an L^p norm (p > 1) Hoelder
/// gives ||g''||_p |b-a|^((p-1)/p).
VariationGrowth growth_from_second_derivative(SecondDerivativeNorm kind, double g2norm, double p = 0);

/// Named constant families for the derivative bounds with every norm set to 1.
/// g2 "sup" families use r = 1, g2 "p" families use r = (p-1)/p.
///   sup_g2sup            sup-norm bound, growth from ||g''||_inf
///   sup_g2p(p)           sup-norm bound, growth from ||g''||_p
///   l1_g2sup             L1 bound, growth from ||g''||_inf
///   l1_g2p(p)            L1 bound, growth from ||g''||_p
///   lalpha_g2sup(alpha)  L^alpha bound, growth from ||g''||_inf
///   lalpha_g2p(alpha,p)  L^alpha bound, growth from ||g''||_p
enum class ConstantFamily { sup_g2sup, sup_g2p, l1_g2sup, l1_g2p, lalpha_g2sup, lalpha_g2p };

ConstantFamily parse_constant_family(std::string_view name);
std::string_view to_string(ConstantFamily family);

/// Objective parameters (C, D, r, u) whose minimum is the family constant.
struct ObjectiveParams {
  double C, D, r, u;
};
ObjectiveParams family_objective(ConstantFamily family, double p = 0, double alpha = 0);

/// Constant of the family, derived from the closed-form minimum.
double corollary_constant(ConstantFamily family, double p = 0, double alpha = 0);

/// Reference values for the classical sup-norm Landau problem (not derived here):
/// best constant 2 on the half-line and sqrt(2) on the real line.
inline constexpr double kClassicalLandauHalfLine = 2.0;
inline constexpr double kClassicalLandauRealLine = 1.4142135623730950488;

}  // namespace bvineq
