#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <json.hpp>

namespace bvineq {

/// One evaluated inequality instance: lhs <= rhs is the claim being checked.
struct BoundReport {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  double gap = 0;    // rhs - lhs
  double ratio = 0;  // lhs / rhs, 0 when both vanish
  std::map<std::string, double> params;
  std::string function_digest;
  std::optional<std::uint64_t> seed;

  /// Fills gap and ratio from lhs and rhs.
  static BoundReport make(std::string name, double lhs, double rhs);

  /// True when gap >= -tolerance * max(1, |rhs|).
  bool holds(double tolerance) const;
};

/// Ratio convention: lhs/rhs, 0 for 0/0, +inf for positive lhs over zero rhs.
double bound_ratio(double lhs, double rhs);

nlohmann::json to_json(const BoundReport& r);

/// Column order: name,p,lhs,rhs,gap,ratio,function_digest,seed
inline constexpr std::string_view kBoundReportCsvHeader = "name,p,lhs,rhs,gap,ratio,function_digest,seed";
std::string to_csv_row(const BoundReport& r);

/// Shortest-round-trip-safe text for a double (%.17g).
std::string format_real(double v);

}  // namespace bvineq
