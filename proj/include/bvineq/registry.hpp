#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bvineq/bound_report.hpp"
#include "bvineq/landau.hpp"

namespace bvineq {

enum class IntervalKind { real_line, half_line };

std::string_view to_string(IntervalKind kind);
IntervalKind parse_interval_kind(std::string_view name);

inline constexpr double kInfNorm = std::numeric_limits<double>::infinity();

/// Closed-form norms keyed by (derivative order, p); p == kInfNorm is the sup norm.
/// Missing entries are "unavailable".
class NormTable {
 public:
  void set(int order, double p, double value);
  std::optional<double> get(int order, double p) const;
  /// Finite p values stored for the given order, ascending.
  std::vector<double> finite_ps(int order) const;
  const std::map<std::pair<int, double>, double>& entries() const { return entries_; }

 private:
  std::map<std::pair<int, double>, double> entries_;
};

/// Pointwise access to g' for certificate checks: the derivative itself and
/// the points in (a, b) where g' turns (zeros of g''), so that g' is monotone
/// between consecutive returned points.
struct DerivativeModel {
  std::function<double(double)> derivative;
  std::function<std::vector<double>(double, double)> turning_points;
};

/// A function on the real line or half-line with closed-form norms of g, g', g''.
struct AnalyticTestFunction {
  std::string name;
  IntervalKind interval_kind = IntervalKind::real_line;
  NormTable norms;
  std::optional<VariationGrowth> growth;
  std::optional<DerivativeModel> model;

  /// Throws std::invalid_argument if a stored norm is not positive and finite.
  void validate() const;
};

/// Variation of g' over [a, b] from the derivative model.
double derivative_variation(const DerivativeModel& model, double a, double b);

/// True iff |Var_[a,b](g')| <= V |b-a|^r (1 + 1e-9) on `samples` random pairs
/// drawn from [-50, 50] (real line) or [0, 100] (half-line).
/// Throws std::invalid_argument when tf has no growth certificate or no model.
bool verify_growth_certificate(const AnalyticTestFunction& tf, int samples, std::uint64_t seed = 0);

/// Largest Var_[a,b](g') / (V |b-a|^r) over the sampled pairs; the certificate
/// holds on the sample iff this is at most 1 + 1e-9.
double growth_certificate_worst_ratio(const AnalyticTestFunction& tf, const VariationGrowth& growth, int samples,
                                      std::uint64_t seed = 0);
bool verify_growth_certificate(const AnalyticTestFunction& tf, const VariationGrowth& growth, int samples,
                               std::uint64_t seed = 0);

struct LandauBoundKind {
  enum Kind { sup, l1, lalpha } kind;
  double alpha = 0;

  std::string label() const;
};

/// lhs = ||g'||_inf from the registry, rhs = the bound built from the norms the
/// kind consumes and the growth certificate (tf.growth unless given).
/// Throws std::invalid_argument when a required norm or the certificate is missing.
BoundReport landau_check(const AnalyticTestFunction& tf, const LandauBoundKind& kind,
                         std::optional<VariationGrowth> growth = std::nullopt);

/// A growth certificate and where it came from: g2_p == 0 for the stored
/// certificate, otherwise the exponent of the g'' norm it was derived from.
struct GrowthSource {
  VariationGrowth growth;
  double g2_p;
};
/// Distinct certificates only: a derived one equal to the stored one is dropped.
std::vector<GrowthSource> growth_sources(const AnalyticTestFunction& tf);

/// One landau_check per applicable (bound kind, growth source). Growth sources
/// are the stored certificate plus those implied by each stored g'' norm.
std::vector<BoundReport> landau_sweep(const AnalyticTestFunction& tf);

/// sin (R), exp(-t) (R+), exp(-t^2) (R), arctan (R), t exp(-t) (R+),
/// and exp(-t) with the L2-derived certificate r = 1/2.
std::vector<AnalyticTestFunction> default_registry();

/// Registry JSON: {"functions":[{"name":..,"interval":"real-line"|"half-line",
///   "norms":{"0":{"inf":v},"1":{"1":v,"inf":v},"2":{...}}, "growth":{"V":v,"r":r}}]}
/// Norm values may also be the string "unavailable". Loaded entries carry no
/// derivative model unless their name matches a built-in entry.
std::vector<AnalyticTestFunction> parse_registry(std::string_view json_text);
nlohmann::json registry_to_json(const std::vector<AnalyticTestFunction>& registry);

}  // namespace bvineq
