#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bvineq/corpus.hpp"
#include "bvineq/piecewise_function.hpp"

namespace bvineq {

/// 0 on [a, b), `height` at b.
PiecewiseFunction spike_extremal(const Interval& iv, double height = 1.0);

/// On [0, b] with b > 1: 0 on [0, b-1], 1 on (b-1, b].
PiecewiseFunction step_extremal(double b);

/// Smallest D for which the step extremal on [0, b] satisfies
/// ||f||_p <= |int f| / b^(1-1/p) + D b^(1/p) q(p) TV(f), i.e.
/// (b^(1-1/p) - 1) / (b q(p)) with q = kernel_growth_factor.
double step_constant_lower_bound(double b, double p);

enum class SharpInequality { reverse_sup, reverse_lp };

/// reverse_sup: (sup|f| - |int f|/(b-a)) / TV, sharp value 1.
/// reverse_lp:  (||f||_p - |int f|/(b-a)^(1-1/p)) / ((b-a)^(1/p) q(p) TV), sharp value 1/2.
/// Returns nullopt when TV(f) == 0.
std::optional<double> implied_constant(const PiecewiseFunction& f, SharpInequality inequality, double p = 0);

double sharp_target(SharpInequality inequality);

struct SharpnessWitness {
  std::string digest;
  std::string source;  // "spike", "step", or "random"
  std::optional<double> b;
  std::optional<std::uint64_t> seed;
};

struct SharpnessEstimate {
  SharpInequality inequality;
  std::optional<double> p;
  double constant_lower_bound = 0;
  double target = 0;
  SharpnessWitness witness;
  std::size_t functions_evaluated = 0;
};

nlohmann::json to_json(const SharpnessEstimate& e);
std::string inequality_name(SharpInequality inequality);

/// Step family widths used by the search.
inline const std::vector<double> kStepFamily{10.0, 1e2, 1e3, 1e4};

/// Max implied constant over `seeds` random functions (streams keyed by
/// (master_seed, index)) plus the spike extremal on a few intervals and the step
/// family. Throws std::invalid_argument for seeds < 1.
SharpnessEstimate empirical_constant_search(SharpInequality inequality, double p, int seeds,
                                            const GeneratorProfile& profile, std::uint64_t master_seed = 0);

}  // namespace bvineq
