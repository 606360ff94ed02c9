#include <cmath>
#include <random>

#include <boost/math/tools/minima.hpp>
#include <gtest/gtest.h>

#include "bvineq/lambda_grid.hpp"
#include "bvineq/landau.hpp"

using namespace bvineq;

namespace {

struct Draw {
  double C, D, r, u;
};

Draw random_draw(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> log10_scale(-1, 1), exponent(0.2, 1);
  return {std::pow(10.0, log10_scale(rng)), std::pow(10.0, log10_scale(rng)), exponent(rng), exponent(rng)};
}

// Independent minimiser: Brent's method in log(lambda) on a bracket that
// comfortably contains the minimiser for parameters in [0.1, 10].
double brent_minimum(double C, double D, double r, double u) {
  auto g = [&](double x) { return C * std::exp(-u * x) + D * std::exp(r * x); };
  return boost::math::tools::brent_find_minima(g, -60.0, 60.0, 60).second;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

}  // namespace

TEST(LandauObjective, Examples) {
  EXPECT_DOUBLE_EQ(landau_objective(1, 1, 1, 1, 1), 2);
  EXPECT_DOUBLE_EQ(landau_objective(4, 1, 1, 1, 2), 4);
  const auto m = minimize_landau_objective(0.3, 7, 0.4, 0.9);
  EXPECT_NEAR(landau_objective(0.3, 7, 0.4, 0.9, m.lambda0), m.value, 1e-12 * m.value);
}

TEST(LandauObjective, DomainErrors) {
  EXPECT_THROW(landau_objective(0, 1, 1, 1, 1), std::invalid_argument);
  EXPECT_THROW(landau_objective(1, -1, 1, 1, 1), std::invalid_argument);
  EXPECT_THROW(landau_objective(1, 1, 1.5, 1, 1), std::invalid_argument);
  EXPECT_THROW(landau_objective(1, 1, 1, 0, 1), std::invalid_argument);
  EXPECT_THROW(landau_objective(1, 1, 1, 1, 0), std::invalid_argument);
  EXPECT_THROW(minimize_landau_objective(1, 1, 0, 1), std::invalid_argument);
  EXPECT_THROW(minimize_reciprocal_objective(1, 1, 2), std::invalid_argument);
  EXPECT_THROW(minimize_linear_objective(1, 0, 0.5), std::invalid_argument);
}

TEST(MinimizeLandauObjective, Examples) {
  auto m = minimize_landau_objective(1, 1, 1, 1);
  EXPECT_DOUBLE_EQ(m.lambda0, 1);
  EXPECT_DOUBLE_EQ(m.value, 2);
  m = minimize_landau_objective(4, 1, 1, 1);
  EXPECT_DOUBLE_EQ(m.lambda0, 2);
  EXPECT_DOUBLE_EQ(m.value, 4);
}

TEST(MinimizeLandauObjective, MatchesGridOracle) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const auto [C, D, r, u] = random_draw(rng);
    const auto m = minimize_landau_objective(C, D, r, u);
    const auto grid = lambda_grid_minimum(C, D, r, u);
    EXPECT_LT(rel(m.value, grid.value), 1e-6) << C << " " << D << " " << r << " " << u;
    EXPECT_LT(rel(m.value, brent_minimum(C, D, r, u)), 1e-12);
    EXPECT_NEAR(landau_objective(C, D, r, u, m.lambda0), m.value, 1e-12 * m.value);
  }
}

TEST(MinimizeLandauObjective, GlobalMinimumProperty) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> log_lambda(-8 * std::log(10.0), 8 * std::log(10.0));
  for (int i = 0; i < 20; ++i) {
    const auto [C, D, r, u] = random_draw(rng);
    const auto m = minimize_landau_objective(C, D, r, u);
    for (int k = 0; k < 1000; ++k) {
      const double lambda = std::exp(log_lambda(rng));
      ASSERT_LE(m.value, landau_objective(C, D, r, u, lambda) * (1 + 1e-12));
    }
  }
}

TEST(MinimizeLandauObjective, DerivativeChangesSignAtMinimiser) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const auto [C, D, r, u] = random_draw(rng);
    const auto m = minimize_landau_objective(C, D, r, u);
    auto slope = [&](double lambda) { return -u * C / std::pow(lambda, u + 1) + r * D * std::pow(lambda, r - 1); };
    for (double factor : {0.5, 0.9, 0.999}) EXPECT_LT(slope(m.lambda0 * factor), 0);
    for (double factor : {1.001, 1.1, 2.0}) EXPECT_GT(slope(m.lambda0 * factor), 0);
  }
}

TEST(MinimizeLandauObjective, Homogeneity) {
  const auto base = minimize_landau_objective(1.3, 0.7, 0.6, 0.8);
  const double s = 0.6 + 0.8;
  EXPECT_NEAR(minimize_landau_objective(2.6, 0.7, 0.6, 0.8).value, base.value * std::pow(2.0, 0.6 / s), 1e-13);
  EXPECT_NEAR(minimize_landau_objective(1.3, 2.1, 0.6, 0.8).value, base.value * std::pow(3.0, 0.8 / s), 1e-13);
}

TEST(Specialisations, ReciprocalObjective) {
  EXPECT_DOUBLE_EQ(minimize_reciprocal_objective(1, 1, 1).value, 2);
  const auto m = minimize_reciprocal_objective(8, 1, 1);
  EXPECT_NEAR(m.lambda0, std::sqrt(8.0), 1e-15);
  EXPECT_NEAR(m.value, 2 * std::sqrt(8.0), 1e-14);
  EXPECT_LT(rel(minimize_reciprocal_objective(1, 2, 0.5).value, lambda_grid_minimum(1, 2, 0.5, 1).value), 1e-6);
  EXPECT_EQ(minimize_reciprocal_objective(1, 2, 0.5).value, minimize_landau_objective(1, 2, 0.5, 1).value);
}

TEST(Specialisations, LinearObjective) {
  EXPECT_DOUBLE_EQ(minimize_linear_objective(1, 1, 1).value, 2);
  EXPECT_EQ(minimize_linear_objective(3, 2, 0.25).value, minimize_landau_objective(3, 2, 1, 0.25).value);
}

TEST(LandauSupBound, Examples) {
  EXPECT_NEAR(landau_sup_bound(1, VariationGrowth(1, 1)), 2 * std::sqrt(2.0), 1e-15);
  EXPECT_EQ(landau_sup_bound(1, VariationGrowth(1, 0.5)), minimize_landau_objective(2, 1, 0.5, 1).value);
  for (double r : {0.25, 0.5, 1.0}) {
    EXPECT_NEAR(landau_sup_bound(1.7, VariationGrowth(2, r)),
                landau_sup_bound(1.7, VariationGrowth(1, r)) * std::pow(2.0, 1 / (r + 1)), 1e-13);
  }
}

TEST(LandauSupBound, MatchesDisplayedClosedForm) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const auto [g, V, r, unused] = random_draw(rng);
    const double closed = std::pow(2.0, r / (r + 1)) * (r + 1) / std::pow(r, r / (r + 1)) * std::pow(g, r / (r + 1)) *
                          std::pow(V, 1 / (r + 1));
    const double bound = landau_sup_bound(g, VariationGrowth(V, r));
    EXPECT_LT(rel(bound, closed), 1e-12);
    EXPECT_EQ(bound, minimize_landau_objective(2 * g, V, r, 1).value);
    EXPECT_LT(rel(bound, lambda_grid_minimum(2 * g, V, r, 1).value), 1e-9);
  }
}

TEST(LandauL1Bound, Examples) {
  EXPECT_DOUBLE_EQ(landau_l1_bound(1, VariationGrowth(1, 1)), 2);
  EXPECT_DOUBLE_EQ(landau_l1_bound(4, VariationGrowth(1, 1)), 4);
  std::mt19937_64 rng(10);
  for (int i = 0; i < 100; ++i) {
    const auto [g1, V, r, unused] = random_draw(rng);
    const double bound = landau_l1_bound(g1, VariationGrowth(V, r));
    const double closed = (r + 1) / std::pow(r, r / (r + 1)) * std::pow(g1, r / (r + 1)) * std::pow(V, 1 / (r + 1));
    EXPECT_LT(rel(bound, closed), 1e-12);
    EXPECT_LT(rel(bound, lambda_grid_minimum(g1, V, r, 1).value), 1e-9);
  }
}

TEST(LandauLalphaBound, Examples) {
  EXPECT_NEAR(landau_lalpha_bound(1, 2, VariationGrowth(1, 1)), 3 / std::pow(2.0, 2.0 / 3), 1e-15);
  EXPECT_LT(rel(landau_lalpha_bound(1, 2, VariationGrowth(1, 1)), lambda_grid_minimum(1, 1, 1, 0.5).value), 1e-9);
  EXPECT_LT(landau_lalpha_bound(1, 10, VariationGrowth(1, 1)), landau_lalpha_bound(1, 2, VariationGrowth(1, 1)));
  for (double alpha : {1.5, 3.0}) {
    for (double r : {0.3, 1.0}) {
      const double e = alpha * r / (alpha * r + 1);
      EXPECT_NEAR(landau_lalpha_bound(5, alpha, VariationGrowth(1.2, r)),
                  landau_lalpha_bound(1, alpha, VariationGrowth(1.2, r)) * std::pow(5.0, e), 1e-12);
    }
  }
  EXPECT_THROW(landau_lalpha_bound(1, 1, VariationGrowth(1, 1)), std::invalid_argument);
}

TEST(LandauLalphaBound, MatchesDisplayedClosedForm) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> alpha_dist(1.1, 20);
  for (int i = 0; i < 100; ++i) {
    const auto [g, V, r, unused] = random_draw(rng);
    const double a = alpha_dist(rng);
    const double e = a * r / (a * r + 1);
    const double closed = (a * r + 1) / (std::pow(a, e) * std::pow(r, e)) * std::pow(g, e) * std::pow(V, 1 / (a * r + 1));
    const double bound = landau_lalpha_bound(g, a, VariationGrowth(V, r));
    EXPECT_LT(rel(bound, closed), 1e-12);
    EXPECT_LT(rel(bound, lambda_grid_minimum(g, V, r, 1 / a).value), 1e-9);
  }
}

TEST(VariationGrowth, Validation) {
  EXPECT_THROW(VariationGrowth(0, 1), std::invalid_argument);
  EXPECT_THROW(VariationGrowth(1, 0), std::invalid_argument);
  EXPECT_THROW(VariationGrowth(1, 1.01), std::invalid_argument);
  EXPECT_NO_THROW(VariationGrowth(1e-3, 1));
}

TEST(GrowthFromSecondDerivative, Examples) {
  const auto sup = growth_from_second_derivative(SecondDerivativeNorm::sup, 3);
  EXPECT_EQ(sup.V, 3);
  EXPECT_EQ(sup.r, 1);
  const auto p2 = growth_from_second_derivative(SecondDerivativeNorm::lp, 1, 2);
  EXPECT_EQ(p2.V, 1);
  EXPECT_EQ(p2.r, 0.5);
  EXPECT_NEAR(growth_from_second_derivative(SecondDerivativeNorm::lp, 1, 1e9).r, 1, 1e-8);
  EXPECT_THROW(growth_from_second_derivative(SecondDerivativeNorm::lp, 1, 1), std::invalid_argument);
  EXPECT_THROW(growth_from_second_derivative(SecondDerivativeNorm::sup, 0), std::invalid_argument);
}

TEST(ConstantFamilies, KnownValues) {
  EXPECT_NEAR(corollary_constant(ConstantFamily::sup_g2sup), 2 * std::sqrt(2.0), 1e-15);
  EXPECT_DOUBLE_EQ(corollary_constant(ConstantFamily::l1_g2sup), 2);
  EXPECT_EQ(corollary_constant(ConstantFamily::sup_g2p, 2), minimize_landau_objective(2, 1, 0.5, 1).value);
}

TEST(ConstantFamilies, MatchGridOracle) {
  const std::vector<std::tuple<ConstantFamily, double, double>> cases = {
      {ConstantFamily::sup_g2sup, 0, 0},   {ConstantFamily::l1_g2sup, 0, 0},
      {ConstantFamily::sup_g2p, 1.5, 0},   {ConstantFamily::sup_g2p, 2, 0},
      {ConstantFamily::sup_g2p, 10, 0},    {ConstantFamily::l1_g2p, 1.5, 0},
      {ConstantFamily::l1_g2p, 4, 0},      {ConstantFamily::lalpha_g2sup, 0, 1.5},
      {ConstantFamily::lalpha_g2sup, 0, 6}, {ConstantFamily::lalpha_g2p, 2, 2},
      {ConstantFamily::lalpha_g2p, 3, 1.2}, {ConstantFamily::lalpha_g2p, 20, 9},
  };
  for (const auto& [family, p, alpha] : cases) {
    const auto o = family_objective(family, p, alpha);
    const double constant = corollary_constant(family, p, alpha);
    EXPECT_LT(rel(constant, lambda_grid_minimum(o.C, o.D, o.r, o.u).value), 1e-9) << to_string(family) << " " << p;
  }
}

TEST(ConstantFamilies, ConsistentWithBounds) {
  const VariationGrowth unit(1, 1);
  EXPECT_EQ(corollary_constant(ConstantFamily::sup_g2sup), landau_sup_bound(1, unit));
  EXPECT_EQ(corollary_constant(ConstantFamily::l1_g2sup), landau_l1_bound(1, unit));
  EXPECT_EQ(corollary_constant(ConstantFamily::lalpha_g2sup, 0, 3), landau_lalpha_bound(1, 3, unit));
  for (double p : {1.5, 2.0, 7.0}) {
    const VariationGrowth g(1, (p - 1) / p);
    EXPECT_DOUBLE_EQ(corollary_constant(ConstantFamily::sup_g2p, p), landau_sup_bound(1, g));
    EXPECT_DOUBLE_EQ(corollary_constant(ConstantFamily::l1_g2p, p), landau_l1_bound(1, g));
    EXPECT_DOUBLE_EQ(corollary_constant(ConstantFamily::lalpha_g2p, p, 2.5), landau_lalpha_bound(1, 2.5, g));
  }
}

TEST(ConstantFamilies, SupG2pExponentOnSecondDerivative) {
  // With r = (p-1)/p the bound scales like ||g''||_p^(1/(r+1)) = ||g''||_p^(p/(2p-1)).
  for (double p : {1.5, 2.0, 5.0}) {
    const double r = (p - 1) / p;
    const double ratio = landau_sup_bound(1, VariationGrowth(3, r)) / landau_sup_bound(1, VariationGrowth(1, r));
    EXPECT_NEAR(ratio, std::pow(3.0, p / (2 * p - 1)), 1e-13);
  }
}

TEST(ConstantFamilies, NamesRoundTripAndErrors) {
  for (auto f : {ConstantFamily::sup_g2sup, ConstantFamily::sup_g2p, ConstantFamily::l1_g2sup, ConstantFamily::l1_g2p,
                 ConstantFamily::lalpha_g2sup, ConstantFamily::lalpha_g2p}) {
    EXPECT_EQ(parse_constant_family(to_string(f)), f);
  }
  EXPECT_THROW(parse_constant_family("c34"), std::invalid_argument);
  EXPECT_THROW(corollary_constant(ConstantFamily::sup_g2p, 1), std::invalid_argument);
  EXPECT_THROW(corollary_constant(ConstantFamily::lalpha_g2sup, 0, 0.5), std::invalid_argument);
}

TEST(LambdaGrid, FindsKnownMinimum) {
  const auto g = lambda_grid_minimum(4, 1, 1, 1);
  // The objective is flat to rounding near its minimiser, so the argmin is only resolved to ~sqrt(eps).
  EXPECT_NEAR(g.lambda, 2, 1e-6);
  EXPECT_NEAR(g.value, 4, 1e-12);
}
