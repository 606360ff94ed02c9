#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bvineq/polynomial.hpp"

namespace bvineq {

/// Closed interval [a, b] with a < b.
struct Interval {
  double a;
  double b;

  Interval(double left, double right);
  double width() const { return b - a; }
  double midpoint() const { return 0.5 * (a + b); }
  bool contains(double x) const { return x >= a && x <= b; }
  bool operator==(const Interval&) const = default;
};

/// A function of bounded variation on a closed interval, stored exactly as
/// polynomial pieces on the open cells between breakpoints plus explicit point
/// values ("atoms") at selected breakpoints.
///
/// At a breakpoint without an atom the function takes its right limit, except at
/// the right endpoint where it takes the left limit.
class PiecewiseFunction {
 public:
  /// Throws std::invalid_argument unless breakpoints strictly increase from
  /// interval.a to interval.b, pieces.size() == breakpoints.size() - 1, and every
  /// atom key is one of the breakpoints.
  PiecewiseFunction(Interval interval, std::vector<double> breakpoints,
                    std::vector<Polynomial> pieces, std::map<double, double> atoms = {});

  static PiecewiseFunction single(Interval interval, Polynomial p);
  static PiecewiseFunction constant(Interval interval, double c) {
    return single(interval, Polynomial::constant(c));
  }

  const Interval& interval() const { return interval_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }
  const std::map<double, double>& atoms() const { return atoms_; }
  std::size_t piece_count() const { return pieces_.size(); }

  /// Limit from the left at breakpoint k (k >= 1).
  double left_limit(std::size_t k) const { return pieces_[k - 1](breakpoints_[k]); }
  /// Limit from the right at breakpoint k (k < breakpoints().size() - 1).
  double right_limit(std::size_t k) const { return pieces_[k](breakpoints_[k]); }
  /// The function value at breakpoint k under the atom/one-sided convention.
  double value_at_breakpoint(std::size_t k) const;

  double operator()(double x) const;

  /// c * f, atoms included.
  PiecewiseFunction scaled(double c) const;
  /// f + c, atoms included.
  PiecewiseFunction shifted(double c) const;
  /// The restrictions to [a, t_k] and [t_k, b] for an interior breakpoint k.
  /// Both halves carry an atom at t_k equal to the value of f there.
  std::pair<PiecewiseFunction, PiecewiseFunction> split_at(std::size_t k) const;

  bool operator==(const PiecewiseFunction&) const = default;

 private:
  Interval interval_;
  std::vector<double> breakpoints_;
  std::vector<Polynomial> pieces_;
  std::map<double, double> atoms_;
};

/// Value at x in [a, b]; throws std::out_of_range outside.
double evaluate(const PiecewiseFunction& f, double x);

/// Total variation: exact per-piece variation plus jump contributions.
double total_variation(const PiecewiseFunction& f);

/// (integral |f|^p)^(1/p) for finite p >= 1; atoms are ignored.
double lp_norm(const PiecewiseFunction& f, double p);

/// Pointwise supremum of |f|, atoms included.
double sup_norm(const PiecewiseFunction& f);

/// Exact integral over [a, b]; atoms are ignored.
double integral(const PiecewiseFunction& f);

struct Norms {
  double sup = 0;
  double integral = 0;
  double total_variation = 0;
  std::map<double, double> lp_by_p;

  /// Throws std::out_of_range if p was not requested in compute_norms.
  double lp(double p) const;
};

Norms compute_norms(const PiecewiseFunction& f, std::span<const double> ps);

/// Parses the JSON function-spec format:
/// {"interval":[a,b], "breakpoints":[...], "pieces":[[c0,c1,c2,c3],...], "atoms":{"t":v}}
/// Throws std::invalid_argument on malformed input.
PiecewiseFunction parse_function_spec(std::string_view json_text);
std::string to_function_spec(const PiecewiseFunction& f);

/// Stable 64-bit digest of the canonical function-spec serialization, as 16 hex digits.
std::string function_digest(const PiecewiseFunction& f);

}  // namespace bvineq
