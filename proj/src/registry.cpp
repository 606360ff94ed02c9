#include "bvineq/registry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <fmt/format.h>

namespace bvineq {

namespace {

using nlohmann::json;
using std::numbers::pi;

std::string p_key(double p) { return std::isinf(p) ? "inf" : json(p).dump(); }

double parse_p_key(const std::string& key) {
  if (key == "inf") return kInfNorm;
  try {
    std::size_t used = 0;
    const double p = std::stod(key, &used);
    if (used == key.size() && p >= 1) return p;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument(fmt::format("norm exponent '{}' must be 'inf' or a number >= 1", key));
}

std::vector<double> multiples_of(double period, double offset, double a, double b) {
  std::vector<double> out;
  for (double k = std::ceil((a - offset) / period); offset + k * period < b; k += 1) {
    const double t = offset + k * period;
    if (t > a) out.push_back(t);
  }
  return out;
}

std::vector<double> fixed_points(std::initializer_list<double> pts, double a, double b) {
  std::vector<double> out;
  for (double t : pts) {
    if (t > a && t < b) out.push_back(t);
  }
  return out;
}

// |g'|_p for g' = -exp(-t) on the half-line and the like: (1/p)^(1/p).
double exp_lp(double p) { return std::pow(1.0 / p, 1.0 / p); }

AnalyticTestFunction make_sin() {
  AnalyticTestFunction tf{"sin", IntervalKind::real_line, {}, VariationGrowth(1, 1), std::nullopt};
  tf.norms.set(0, kInfNorm, 1);
  tf.norms.set(1, kInfNorm, 1);
  tf.norms.set(2, kInfNorm, 1);
  tf.model = DerivativeModel{[](double t) { return std::cos(t); },
                             [](double a, double b) { return multiples_of(pi, 0, a, b); }};
  return tf;
}

AnalyticTestFunction make_exp_decay(std::string name, VariationGrowth growth) {
  AnalyticTestFunction tf{std::move(name), IntervalKind::half_line, {}, growth, std::nullopt};
  tf.norms.set(0, kInfNorm, 1);
  tf.norms.set(1, kInfNorm, 1);
  tf.norms.set(2, kInfNorm, 1);
  for (double p : {1.0, 1.5, 2.0, 3.0, 5.0}) tf.norms.set(1, p, exp_lp(p));
  for (double p : {1.5, 2.0, 3.0, 5.0}) tf.norms.set(2, p, exp_lp(p));
  tf.model = DerivativeModel{[](double t) { return -std::exp(-t); },
                             [](double, double) { return std::vector<double>{}; }};
  return tf;
}

AnalyticTestFunction make_gaussian() {
  AnalyticTestFunction tf{"gaussian", IntervalKind::real_line, {}, VariationGrowth(2, 1), std::nullopt};
  tf.norms.set(0, kInfNorm, 1);
  tf.norms.set(1, kInfNorm, std::sqrt(2.0) * std::exp(-0.5));
  // int |2t e^{-t^2}|^a dt = 2^a Gamma((a+1)/2) a^{-(a+1)/2}
  for (double a : {1.0, 1.5, 2.0, 3.0, 5.0}) {
    tf.norms.set(1, a, std::pow(std::pow(2.0, a) * std::tgamma((a + 1) / 2) * std::pow(a, -(a + 1) / 2), 1 / a));
  }
  tf.norms.set(2, kInfNorm, 2);
  tf.norms.set(2, 2.0, std::sqrt(3 * std::sqrt(pi / 2)));
  tf.model = DerivativeModel{[](double t) { return -2 * t * std::exp(-t * t); },
                             [](double a, double b) {
                               const double s = std::sqrt(0.5);
                               return fixed_points({-s, s}, a, b);
                             }};
  return tf;
}

AnalyticTestFunction make_arctan() {
  const double g2_sup = 3 * std::sqrt(3.0) / 8;
  AnalyticTestFunction tf{"arctan", IntervalKind::real_line, {}, VariationGrowth(g2_sup, 1), std::nullopt};
  tf.norms.set(0, kInfNorm, pi / 2);
  tf.norms.set(1, kInfNorm, 1);
  // int (1+t^2)^{-a} dt = sqrt(pi) Gamma(a - 1/2) / Gamma(a)
  for (double a : {1.0, 1.5, 2.0, 3.0, 5.0}) {
    tf.norms.set(1, a, std::pow(std::sqrt(pi) * std::tgamma(a - 0.5) / std::tgamma(a), 1 / a));
  }
  tf.norms.set(2, kInfNorm, g2_sup);
  // int |2t|^p (1+t^2)^{-2p} dt = 2^p B((p+1)/2, (3p-1)/2)
  for (double p : {1.5, 2.0, 3.0, 5.0}) {
    const double beta = std::tgamma((p + 1) / 2) * std::tgamma((3 * p - 1) / 2) / std::tgamma(2 * p);
    tf.norms.set(2, p, std::pow(std::pow(2.0, p) * beta, 1 / p));
  }
  tf.model = DerivativeModel{[](double t) { return 1 / (1 + t * t); },
                             [](double a, double b) { return fixed_points({0.0}, a, b); }};
  return tf;
}

AnalyticTestFunction make_t_exp() {
  AnalyticTestFunction tf{"t_exp_decay", IntervalKind::half_line, {}, VariationGrowth(2, 1), std::nullopt};
  tf.norms.set(0, kInfNorm, std::exp(-1.0));
  tf.norms.set(1, kInfNorm, 1);
  tf.norms.set(1, 1.0, 2 * std::exp(-1.0));
  tf.norms.set(1, 2.0, 0.5);
  tf.norms.set(2, kInfNorm, 2);
  tf.norms.set(2, 2.0, std::sqrt(1.25));
  tf.model = DerivativeModel{[](double t) { return (1 - t) * std::exp(-t); },
                             [](double a, double b) { return fixed_points({2.0}, a, b); }};
  return tf;
}

double norm_value(const json& j) {
  if (!j.is_number()) throw std::invalid_argument("norm value must be a number or \"unavailable\"");
  return j.get<double>();
}

}  // namespace

std::string_view to_string(IntervalKind kind) {
  return kind == IntervalKind::real_line ? "real-line" : "half-line";
}

IntervalKind parse_interval_kind(std::string_view name) {
  if (name == "real-line") return IntervalKind::real_line;
  if (name == "half-line") return IntervalKind::half_line;
  throw std::invalid_argument(fmt::format("unknown interval kind '{}'", name));
}

void NormTable::set(int order, double p, double value) {
  if (order < 0 || order > 2) throw std::invalid_argument("norm order must be 0, 1 or 2");
  if (!(p >= 1)) throw std::invalid_argument("norm exponent must be >= 1");
  entries_[{order, p}] = value;
}

std::optional<double> NormTable::get(int order, double p) const {
  if (auto it = entries_.find({order, p}); it != entries_.end()) return it->second;
  return std::nullopt;
}

std::vector<double> NormTable::finite_ps(int order) const {
  std::vector<double> out;
  for (const auto& [key, value] : entries_) {
    if (key.first == order && std::isfinite(key.second)) out.push_back(key.second);
  }
  return out;
}

void AnalyticTestFunction::validate() const {
  for (const auto& [key, value] : norms.entries()) {
    if (!(value > 0) || !std::isfinite(value)) {
      throw std::invalid_argument(fmt::format("{}: norm (order {}, p {}) = {} must be positive and finite", name,
                                              key.first, p_key(key.second), value));
    }
  }
}

double derivative_variation(const DerivativeModel& model, double a, double b) {
  if (a > b) std::swap(a, b);
  std::vector<double> knots{a};
  for (double t : model.turning_points(a, b)) knots.push_back(t);
  knots.push_back(b);
  double v = 0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    v += std::abs(model.derivative(knots[i + 1]) - model.derivative(knots[i]));
  }
  return v;
}

bool verify_growth_certificate(const AnalyticTestFunction& tf, int samples, std::uint64_t seed) {
  if (!tf.growth) throw std::invalid_argument(fmt::format("{}: no growth certificate", tf.name));
  return verify_growth_certificate(tf, *tf.growth, samples, seed);
}

double growth_certificate_worst_ratio(const AnalyticTestFunction& tf, const VariationGrowth& growth, int samples,
                                      std::uint64_t seed) {
  if (!tf.model) throw std::invalid_argument(fmt::format("{}: no derivative model to sample", tf.name));
  if (samples < 1) throw std::invalid_argument("growth certificate check: samples must be >= 1");
  const double lo = tf.interval_kind == IntervalKind::real_line ? -50.0 : 0.0;
  const double hi = tf.interval_kind == IntervalKind::real_line ? 50.0 : 100.0;

  std::mt19937_64 engine(seed);
  auto draw = [&] { return lo + (hi - lo) * static_cast<double>(engine() >> 11) * 0x1.0p-53; };
  double worst = 0;
  for (int i = 0; i < samples; ++i) {
    const double a = draw();
    const double b = draw();
    if (a == b) continue;
    const double variation = derivative_variation(*tf.model, a, b);
    worst = std::max(worst, variation / (growth.V * std::pow(std::abs(b - a), growth.r)));
  }
  return worst;
}

bool verify_growth_certificate(const AnalyticTestFunction& tf, const VariationGrowth& growth, int samples,
                               std::uint64_t seed) {
  return growth_certificate_worst_ratio(tf, growth, samples, seed) <= 1 + 1e-9;
}

std::string LandauBoundKind::label() const {
  switch (kind) {
    case sup: return "landau_sup";
    case l1: return "landau_l1";
    case lalpha: return "landau_lalpha";
  }
  return "?";
}

BoundReport landau_check(const AnalyticTestFunction& tf, const LandauBoundKind& kind,
                         std::optional<VariationGrowth> growth) {
  if (!growth) growth = tf.growth;
  if (!growth) throw std::invalid_argument(fmt::format("{}: no growth certificate", tf.name));
  auto need = [&](int order, double p) {
    auto v = tf.norms.get(order, p);
    if (!v) throw std::invalid_argument(fmt::format("{}: norm (order {}, p {}) unavailable", tf.name, order, p_key(p)));
    return *v;
  };

  const double lhs = need(1, kInfNorm);
  double rhs = 0;
  switch (kind.kind) {
    case LandauBoundKind::sup: rhs = landau_sup_bound(need(0, kInfNorm), *growth); break;
    case LandauBoundKind::l1: rhs = landau_l1_bound(need(1, 1.0), *growth); break;
    case LandauBoundKind::lalpha: rhs = landau_lalpha_bound(need(1, kind.alpha), kind.alpha, *growth); break;
  }
  auto report = BoundReport::make(kind.label(), lhs, rhs);
  report.function_digest = tf.name;
  report.params["V"] = growth->V;
  report.params["r"] = growth->r;
  if (kind.kind == LandauBoundKind::lalpha) report.params["p"] = kind.alpha;
  return report;
}

std::vector<GrowthSource> growth_sources(const AnalyticTestFunction& tf) {
  std::vector<GrowthSource> sources;
  auto add = [&](const VariationGrowth& g, double g2_p) {
    // A stored certificate is often exactly the one a g'' norm implies; keep one copy.
    for (const auto& s : sources) {
      if (s.growth.V == g.V && s.growth.r == g.r) return;
    }
    sources.push_back({g, g2_p});
  };
  if (tf.growth) add(*tf.growth, 0.0);
  if (auto s = tf.norms.get(2, kInfNorm)) add(growth_from_second_derivative(SecondDerivativeNorm::sup, *s), kInfNorm);
  for (double p : tf.norms.finite_ps(2)) {
    if (p > 1) add(growth_from_second_derivative(SecondDerivativeNorm::lp, *tf.norms.get(2, p), p), p);
  }
  return sources;
}

std::vector<BoundReport> landau_sweep(const AnalyticTestFunction& tf) {
  std::vector<LandauBoundKind> kinds;
  if (tf.norms.get(0, kInfNorm)) kinds.push_back({LandauBoundKind::sup});
  if (tf.norms.get(1, 1.0)) kinds.push_back({LandauBoundKind::l1});
  for (double a : tf.norms.finite_ps(1)) {
    if (a > 1) kinds.push_back({LandauBoundKind::lalpha, a});
  }

  std::vector<BoundReport> out;
  if (!tf.norms.get(1, kInfNorm)) return out;
  for (const auto& source : growth_sources(tf)) {
    for (const auto& kind : kinds) {
      auto r = landau_check(tf, kind, source.growth);
      if (std::isinf(source.g2_p)) {
        r.params["g2_sup"] = 1;
      } else if (source.g2_p > 0) {
        r.params["g2_p"] = source.g2_p;
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<AnalyticTestFunction> default_registry() {
  std::vector<AnalyticTestFunction> reg;
  reg.push_back(make_sin());
  reg.push_back(make_exp_decay("exp_decay", VariationGrowth(1, 1)));
  reg.push_back(make_gaussian());
  reg.push_back(make_arctan());
  reg.push_back(make_t_exp());
  reg.push_back(make_exp_decay("exp_decay_l2_growth", VariationGrowth(exp_lp(2.0), 0.5)));
  for (const auto& tf : reg) tf.validate();
  return reg;
}

std::vector<AnalyticTestFunction> parse_registry(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(fmt::format("registry: {}", e.what()));
  }
  if (!doc.is_object() || !doc.contains("functions") || !doc["functions"].is_array()) {
    throw std::invalid_argument("registry must be {\"functions\": [...]}");
  }
  const auto builtins = default_registry();
  std::vector<AnalyticTestFunction> out;
  for (const json& entry : doc["functions"]) {
    AnalyticTestFunction tf;
    tf.name = entry.at("name").get<std::string>();
    tf.interval_kind = parse_interval_kind(entry.at("interval").get<std::string>());
    if (entry.contains("norms")) {
      for (const auto& [order_key, table] : entry["norms"].items()) {
        const int order = std::stoi(order_key);
        for (const auto& [pk, value] : table.items()) {
          if (value.is_string() && value.get<std::string>() == "unavailable") continue;
          tf.norms.set(order, parse_p_key(pk), norm_value(value));
        }
      }
    }
    if (entry.contains("growth") && !entry["growth"].is_null()) {
      tf.growth = VariationGrowth(entry["growth"].at("V").get<double>(), entry["growth"].at("r").get<double>());
    }
    auto builtin = std::find_if(builtins.begin(), builtins.end(), [&](const auto& b) { return b.name == tf.name; });
    if (builtin != builtins.end()) tf.model = builtin->model;
    tf.validate();
    out.push_back(std::move(tf));
  }
  return out;
}

json registry_to_json(const std::vector<AnalyticTestFunction>& registry) {
  json functions = json::array();
  for (const auto& tf : registry) {
    json entry;
    entry["name"] = tf.name;
    entry["interval"] = std::string(to_string(tf.interval_kind));
    json norms = json::object();
    for (const auto& [key, value] : tf.norms.entries()) norms[std::to_string(key.first)][p_key(key.second)] = value;
    entry["norms"] = std::move(norms);
    entry["growth"] = tf.growth ? json{{"V", tf.growth->V}, {"r", tf.growth->r}} : json(nullptr);
    functions.push_back(std::move(entry));
  }
  return json{{"functions", std::move(functions)}};
}

}  // namespace bvineq
