#include "bvineq/sharpness.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include "bvineq/inequalities.hpp"

namespace bvineq {

PiecewiseFunction spike_extremal(const Interval& iv, double height) {
  return PiecewiseFunction(iv, {iv.a, iv.b}, {Polynomial::constant(0)}, {{iv.b, height}});
}

PiecewiseFunction step_extremal(double b) {
  if (!(b > 1) || !std::isfinite(b)) throw std::invalid_argument(fmt::format("step_extremal: b = {} must be > 1", b));
  return PiecewiseFunction(Interval(0, b), {0, b - 1, b}, {Polynomial::constant(0), Polynomial::constant(1)},
                           {{b - 1, 0.0}, {b, 1.0}});
}

double step_constant_lower_bound(double b, double p) {
  if (!(b > 1) || !std::isfinite(b)) throw std::invalid_argument(fmt::format("b = {} must be > 1", b));
  const double q = kernel_growth_factor(p);
  return (std::pow(b, 1 - 1 / p) - 1) / (b * q);
}

double sharp_target(SharpInequality inequality) {
  return inequality == SharpInequality::reverse_sup ? 1.0 : 0.5;
}

std::string inequality_name(SharpInequality inequality) {
  return inequality == SharpInequality::reverse_sup ? "reverse_sup" : "reverse_lp";
}

std::optional<double> implied_constant(const PiecewiseFunction& f, SharpInequality inequality, double p) {
  const double tv = total_variation(f);
  if (tv == 0) return std::nullopt;
  const double width = f.interval().width();
  if (inequality == SharpInequality::reverse_sup) {
    return (sup_norm(f) - std::abs(integral(f)) / width) / tv;
  }
  const double mean = std::abs(integral(f)) / std::pow(width, 1 - 1 / p);
  return (lp_norm(f, p) - mean) / (std::pow(width, 1 / p) * kernel_growth_factor(p) * tv);
}

nlohmann::json to_json(const SharpnessEstimate& e) {
  nlohmann::json witness{{"digest", e.witness.digest}, {"source", e.witness.source}};
  witness["b"] = e.witness.b ? nlohmann::json(*e.witness.b) : nlohmann::json(nullptr);
  witness["seed"] = e.witness.seed ? nlohmann::json(*e.witness.seed) : nlohmann::json(nullptr);
  nlohmann::json j{{"inequality", inequality_name(e.inequality)},
                   {"constant_lower_bound", e.constant_lower_bound},
                   {"target", e.target},
                   {"functions_evaluated", e.functions_evaluated},
                   {"witness", std::move(witness)}};
  j["p"] = e.p ? nlohmann::json(*e.p) : nlohmann::json(nullptr);
  return j;
}

SharpnessEstimate empirical_constant_search(SharpInequality inequality, double p, int seeds,
                                            const GeneratorProfile& profile, std::uint64_t master_seed) {
  if (seeds < 1) throw std::invalid_argument("empirical_constant_search: seeds must be >= 1");
  if (inequality == SharpInequality::reverse_lp && (!(p >= 1) || !std::isfinite(p))) {
    throw std::invalid_argument(fmt::format("empirical_constant_search: p = {} must be finite and >= 1", p));
  }

  SharpnessEstimate best;
  best.inequality = inequality;
  if (inequality == SharpInequality::reverse_lp) best.p = p;
  best.target = sharp_target(inequality);
  best.constant_lower_bound = -std::numeric_limits<double>::infinity();

  auto consider = [&](const PiecewiseFunction& f, SharpnessWitness witness) {
    auto c = implied_constant(f, inequality, p);
    if (!c) return;
    ++best.functions_evaluated;
    if (*c > best.constant_lower_bound) {
      best.constant_lower_bound = *c;
      witness.digest = function_digest(f);
      best.witness = std::move(witness);
    }
  };

  for (const Interval iv : {Interval(0, 1), Interval(-1, 1), Interval(2, 7)}) {
    consider(spike_extremal(iv), {"", "spike", std::nullopt, std::nullopt});
  }
  for (double b : kStepFamily) consider(step_extremal(b), {"", "step", b, std::nullopt});
  for (int i = 0; i < seeds; ++i) {
    const std::uint64_t seed = corpus_seed(master_seed, static_cast<std::uint64_t>(i));
    consider(random_bv(seed, profile), {"", "random", std::nullopt, seed});
  }
  if (best.functions_evaluated == 0) throw std::runtime_error("empirical_constant_search: empty search space");
  return best;
}

}  // namespace bvineq
