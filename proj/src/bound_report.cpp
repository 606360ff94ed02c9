#include "bvineq/bound_report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace bvineq {

double bound_ratio(double lhs, double rhs) {
  if (rhs == 0) return lhs == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  return lhs / rhs;
}

BoundReport BoundReport::make(std::string name, double lhs, double rhs) {
  BoundReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.gap = rhs - lhs;
  r.ratio = bound_ratio(lhs, rhs);
  return r;
}

bool BoundReport::holds(double tolerance) const {
  return gap >= -tolerance * std::max(1.0, std::abs(rhs));
}

std::string format_real(double v) { return fmt::format("{:.17g}", v); }

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["gap"] = r.gap;
  j["ratio"] = std::isfinite(r.ratio) ? nlohmann::json(r.ratio) : nlohmann::json("inf");
  j["params"] = r.params;
  j["function_digest"] = r.function_digest;
  j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
  return j;
}

std::string to_csv_row(const BoundReport& r) {
  std::string p;
  if (auto it = r.params.find("p"); it != r.params.end()) p = format_real(it->second);
  return fmt::format("{},{},{},{},{},{},{},{}", r.name, p, format_real(r.lhs), format_real(r.rhs),
                     format_real(r.gap), format_real(r.ratio), r.function_digest,
                     r.seed ? std::to_string(*r.seed) : std::string());
}

}  // namespace bvineq
