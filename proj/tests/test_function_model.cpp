#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "bvineq/corpus.hpp"
#include "bvineq/piecewise_function.hpp"
#include "oracles.hpp"

using namespace bvineq;

namespace {

PiecewiseFunction identity01() { return PiecewiseFunction::single(Interval(0, 1), Polynomial::linear(0, 1)); }

PiecewiseFunction spike(double a = 0, double b = 1) {
  return PiecewiseFunction(Interval(a, b), {a, b}, {Polynomial::constant(0)}, {{b, 1.0}});
}

PiecewiseFunction step_on(double b) {
  return PiecewiseFunction(Interval(0, b), {0, b - 1, b}, {Polynomial::constant(0), Polynomial::constant(1)},
                           {{b - 1, 0.0}, {b, 1.0}});
}

}  // namespace

TEST(Interval, RejectsEmptyOrReversed) {
  EXPECT_THROW(Interval(1, 1), std::invalid_argument);
  EXPECT_THROW(Interval(2, 1), std::invalid_argument);
  EXPECT_THROW(Interval(0, INFINITY), std::invalid_argument);
  EXPECT_DOUBLE_EQ(Interval(-1, 3).width(), 4);
}

TEST(PiecewiseFunction, ConstructionInvariants) {
  const Interval iv(0, 2);
  EXPECT_THROW(PiecewiseFunction(iv, {0, 1, 2}, {Polynomial::constant(1)}), std::invalid_argument);
  EXPECT_THROW(PiecewiseFunction(iv, {0, 1, 1, 2}, std::vector<Polynomial>(3)), std::invalid_argument);
  EXPECT_THROW(PiecewiseFunction(iv, {0, 2.5}, {Polynomial()}), std::invalid_argument);
  EXPECT_THROW(PiecewiseFunction(iv, {0, 2}, {Polynomial()}, {{0.5, 1.0}}), std::invalid_argument);
  EXPECT_NO_THROW(PiecewiseFunction(iv, {0, 1, 2}, std::vector<Polynomial>(2), {{1.0, 3.0}}));
}

TEST(TotalVariation, ConstantIsZero) { EXPECT_EQ(total_variation(PiecewiseFunction::constant(Interval(0, 1), 5)), 0); }

TEST(TotalVariation, MonotoneIsEndpointDifference) { EXPECT_DOUBLE_EQ(total_variation(identity01()), 1.0); }

TEST(TotalVariation, SpikeIsOne) { EXPECT_DOUBLE_EQ(total_variation(spike()), 1.0); }

TEST(TotalVariation, CubicMatchesPartitionOracle) {
  const auto f = PiecewiseFunction::single(Interval(-2, 2), Polynomial({0, -1, 0, 1}));
  const double tv = total_variation(f);
  EXPECT_NEAR(tv, 12 + 8 / (3 * std::sqrt(3.0)), 1e-12);
  // Partition oracle: 10^5 uniform points plus the breakpoints.
  double best = oracle::partition_variation(f, 100'000);
  EXPECT_NEAR(tv, best, 1e-6);
  EXPECT_LE(best, tv + 1e-12);
}

TEST(TotalVariation, JumpsAndAtoms) {
  // 0 on (0,1), 2 on (1,2); atom 5 at t=1 and -1 at t=0.
  const PiecewiseFunction f(Interval(0, 2), {0, 1, 2}, {Polynomial::constant(0), Polynomial::constant(2)},
                            {{0.0, -1.0}, {1.0, 5.0}});
  // |0-(-1)| + |5-0| + |2-5|
  EXPECT_DOUBLE_EQ(total_variation(f), 1 + 5 + 3);
  const PiecewiseFunction g(Interval(0, 2), {0, 1, 2}, {Polynomial::constant(0), Polynomial::constant(2)});
  EXPECT_DOUBLE_EQ(total_variation(g), 2);
}

TEST(LpNorm, KnownValues) {
  EXPECT_NEAR(lp_norm(PiecewiseFunction::constant(Interval(0, 2), 1), 3), std::cbrt(2.0), 1e-15);
  EXPECT_NEAR(lp_norm(identity01(), 2), 1 / std::sqrt(3.0), 1e-13);
  for (double p : {1.0, 1.5, 2.0, 7.5, 40.0}) EXPECT_NEAR(lp_norm(step_on(5), p), 1.0, 1e-13) << p;
  EXPECT_EQ(lp_norm(PiecewiseFunction::constant(Interval(0, 1), 0), 2), 0);
}

TEST(LpNorm, AtomsAreIgnored) {
  const auto f = PiecewiseFunction(Interval(0, 1), {0, 1}, {Polynomial::constant(0)}, {{1.0, 100.0}});
  EXPECT_EQ(lp_norm(f, 2), 0);
}

TEST(LpNorm, RejectsSubunitExponent) {
  EXPECT_THROW(lp_norm(identity01(), 0.5), std::invalid_argument);
  EXPECT_THROW(lp_norm(identity01(), INFINITY), std::invalid_argument);
}

TEST(LpNorm, SignChangingCubicMatchesQuadratureOracle) {
  const auto f = PiecewiseFunction::single(Interval(-2, 2), Polynomial({0, -1, 0, 1}));
  for (double p : {1.0, 1.5, 2.0, 3.0, 10.0}) {
    EXPECT_NEAR(lp_norm(f, p), oracle::lp_norm_by_quadrature(f, p), 1e-10 * lp_norm(f, p)) << p;
  }
  // int_{-2}^{2} |t^3 - t| dt = 2 (1/4 + 4 - 2 + 1/4) = 5
  EXPECT_NEAR(lp_norm(f, 1), 5.0, 1e-13);
}

TEST(SupNorm, KnownValues) {
  EXPECT_DOUBLE_EQ(sup_norm(spike()), 1);
  EXPECT_DOUBLE_EQ(sup_norm(PiecewiseFunction::single(Interval(-2, 2), Polynomial({-1, 0, 1, 0}))), 3);
  const PiecewiseFunction atom_dominates(Interval(0, 1), {0, 1}, {Polynomial::constant(0)}, {{0.0, -4.0}});
  EXPECT_DOUBLE_EQ(sup_norm(atom_dominates), 4);
}

TEST(Integral, KnownValues) {
  EXPECT_EQ(integral(spike()), 0);
  EXPECT_DOUBLE_EQ(integral(step_on(7)), 1);
  EXPECT_DOUBLE_EQ(integral(identity01()), 0.5);
}

TEST(Evaluate, AtomsAndOneSidedConvention) {
  EXPECT_EQ(evaluate(spike(), 1.0), 1.0);
  EXPECT_EQ(evaluate(spike(), 0.5), 0.0);
  EXPECT_DOUBLE_EQ(evaluate(PiecewiseFunction::single(Interval(0, 1), Polynomial({0, 0, 0, 1})), 0.5), 0.125);
  EXPECT_THROW(evaluate(spike(), 1.5), std::out_of_range);

  const PiecewiseFunction jump(Interval(0, 2), {0, 1, 2}, {Polynomial::constant(3), Polynomial::constant(7)});
  EXPECT_EQ(jump(1.0), 7.0);  // right limit at an interior breakpoint
  EXPECT_EQ(jump(2.0), 7.0);  // left limit at b
  EXPECT_EQ(jump(0.0), 3.0);
}

TEST(FunctionSpec, ParsesDocumentedFormat) {
  const auto f = parse_function_spec(
      R"({"interval":[0,2],"breakpoints":[0,1,2],"pieces":[[0,1],[1,0,0,0]],"atoms":{"1":4.5,"2":-1}})");
  EXPECT_EQ(f.piece_count(), 2u);
  EXPECT_EQ(f(1.0), 4.5);
  EXPECT_EQ(f(2.0), -1.0);
  EXPECT_DOUBLE_EQ(f(0.5), 0.5);
}

TEST(FunctionSpec, RejectsMalformedInput) {
  EXPECT_THROW(parse_function_spec("not json"), std::invalid_argument);
  EXPECT_THROW(parse_function_spec(R"({"interval":[0,1],"pieces":[[0]]})"), std::invalid_argument);
  EXPECT_THROW(parse_function_spec(R"({"interval":[0,1],"breakpoints":[0,1],"pieces":[[0]],"atoms":{"0.5":1}})"),
               std::invalid_argument);
  EXPECT_THROW(parse_function_spec(R"({"interval":[0,1],"breakpoints":[0,1],"pieces":[[0]],"atoms":{"x":1}})"),
               std::invalid_argument);
}

TEST(FunctionSpec, RoundTripIsLosslessForShortDecimals) {
  const std::string text =
      R"({"interval":[-1.25,3.1415926535897],"breakpoints":[-1.25,0.1,3.1415926535897],)"
      R"("pieces":[[0.3,-1.7,2.123456789012345,1e-7],[5,0,0,0]],"atoms":{"0.1":-0.7,"3.1415926535897":2.5}})";
  const auto f = parse_function_spec(text);
  const auto g = parse_function_spec(to_function_spec(f));
  EXPECT_EQ(f, g);
  EXPECT_EQ(to_function_spec(f), to_function_spec(g));
}

TEST(FunctionSpec, RoundTripPropertyOverCorpus) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    const auto f = corpus_function(11, i);
    EXPECT_EQ(parse_function_spec(to_function_spec(f)), f) << i;
  }
}

TEST(Digest, StableAndSensitive) {
  EXPECT_EQ(function_digest(spike()), function_digest(spike()));
  EXPECT_NE(function_digest(spike()), function_digest(spike(0, 2)));
  EXPECT_EQ(function_digest(spike()).size(), 16u);
}

// Properties over the seeded corpus.

class CorpusProperties : public ::testing::Test {
 protected:
  static constexpr int kFunctions = 400;
};

TEST_F(CorpusProperties, LpBoundedBySupTimesWidthPower) {
  for (int i = 0; i < kFunctions; ++i) {
    const auto f = corpus_function(3, static_cast<std::uint64_t>(i));
    const double sup = sup_norm(f);
    for (double p : {1.0, 1.5, 2.0, 3.0, 10.0}) {
      EXPECT_LE(lp_norm(f, p), std::pow(f.interval().width(), 1 / p) * sup * (1 + 1e-12)) << i << " p=" << p;
    }
  }
}

TEST_F(CorpusProperties, VariationShiftInvariantAndScaleEquivariant) {
  for (int i = 0; i < kFunctions; ++i) {
    const auto f = corpus_function(4, static_cast<std::uint64_t>(i));
    // Pieces are stored in the global monomial basis, so rescaled coefficients
    // re-round; 1e-10 relative covers that.
    const double tv = total_variation(f);
    const double tol = 1e-10 * std::max(1.0, tv);
    EXPECT_NEAR(total_variation(f.shifted(3.25)), tv, tol);
    for (double c : {-2.5, 0.5, 3.0}) {
      EXPECT_NEAR(total_variation(f.scaled(c)), std::abs(c) * tv, std::abs(c) * tol);
      EXPECT_NEAR(sup_norm(f.scaled(c)), std::abs(c) * sup_norm(f), 1e-10 * std::abs(c) * sup_norm(f));
      EXPECT_NEAR(lp_norm(f.scaled(c), 2.0), std::abs(c) * lp_norm(f, 2.0), 1e-10 * std::abs(c) * lp_norm(f, 2.0));
    }
  }
}

TEST_F(CorpusProperties, VariationAdditiveAcrossBreakpoints) {
  for (int i = 0; i < kFunctions; ++i) {
    const auto f = corpus_function(5, static_cast<std::uint64_t>(i));
    for (std::size_t k = 1; k + 1 < f.breakpoints().size(); ++k) {
      const auto [left, right] = f.split_at(k);
      EXPECT_NEAR(total_variation(left) + total_variation(right), total_variation(f), 1e-12) << i << " k=" << k;
    }
  }
}

TEST_F(CorpusProperties, L1OfSingleSignEqualsAbsIntegral) {
  for (int i = 0; i < kFunctions; ++i) {
    auto f = corpus_function(6, static_cast<std::uint64_t>(i));
    // Lift above zero so every piece has one sign.
    f = f.shifted(sup_norm(f) + 0.5);
    EXPECT_NEAR(lp_norm(f, 1), std::abs(integral(f)), 1e-10 * std::max(1.0, lp_norm(f, 1))) << i;
  }
}

TEST_F(CorpusProperties, VariationMatchesPartitionOracle) {
  for (int i = 0; i < 60; ++i) {
    const auto f = corpus_function(8, static_cast<std::uint64_t>(i));
    EXPECT_NEAR(total_variation(f), oracle::partition_variation(f, 100'000), 1e-6) << i;
  }
}

TEST_F(CorpusProperties, LpMatchesQuadratureOracle) {
  for (int i = 0; i < 60; ++i) {
    const auto f = corpus_function(9, static_cast<std::uint64_t>(i));
    for (double p : {1.0, 1.5, 3.0}) {
      const double ours = lp_norm(f, p);
      EXPECT_NEAR(ours, oracle::lp_norm_by_quadrature(f, p), 1e-9 * std::max(1.0, ours)) << i << " p=" << p;
    }
  }
}

TEST(Norms, ComputeNormsCollectsEverything) {
  const std::vector<double> ps{1.0, 2.0};
  const auto n = compute_norms(identity01(), ps);
  EXPECT_DOUBLE_EQ(n.sup, 1);
  EXPECT_DOUBLE_EQ(n.integral, 0.5);
  EXPECT_DOUBLE_EQ(n.total_variation, 1);
  EXPECT_NEAR(n.lp(2.0), 1 / std::sqrt(3.0), 1e-13);
  EXPECT_THROW(n.lp(3.0), std::out_of_range);
}
