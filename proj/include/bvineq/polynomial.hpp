#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace bvineq {

/// Real polynomial of degree at most 3 in the monomial basis:
/// p(t) = c[0] + c[1] t + c[2] t^2 + c[3] t^3.
class Polynomial {
 public:
  static constexpr std::size_t kMaxDegree = 3;
  using Coefficients = std::array<double, kMaxDegree + 1>;

  Polynomial() = default;
  explicit Polynomial(Coefficients c);
  /// Accepts 1 to 4 coefficients, missing high-order ones are zero.
  explicit Polynomial(std::span<const double> c);

  static Polynomial constant(double c) { return Polynomial(Coefficients{c, 0, 0, 0}); }
  static Polynomial linear(double c0, double c1) { return Polynomial(Coefficients{c0, c1, 0, 0}); }

  const Coefficients& coefficients() const { return coeffs_; }
  double operator[](std::size_t k) const { return coeffs_[k]; }

  /// Index of the highest nonzero coefficient, 0 for the zero polynomial.
  std::size_t degree() const;

  double operator()(double t) const {
    return ((coeffs_[3] * t + coeffs_[2]) * t + coeffs_[1]) * t + coeffs_[0];
  }

  Polynomial derivative() const;

  /// Exact integral over [lo, hi] from the antiderivative.
  double integrate(double lo, double hi) const;

  /// q(t) = p(scale * t + shift).
  Polynomial compose_affine(double scale, double shift) const;

  Polynomial operator*(double s) const;
  Polynomial operator+(double s) const;
  Polynomial operator-() const { return *this * -1.0; }

  /// Real roots strictly inside (lo, hi) where the sign changes, sorted.
  std::vector<double> sign_changes(double lo, double hi) const;

  /// Points strictly inside (lo, hi) where the derivative vanishes, sorted and
  /// deduplicated to 1e-12.
  std::vector<double> critical_points(double lo, double hi) const;

  /// max |p| over the closed interval [lo, hi].
  double max_abs(double lo, double hi) const;

  bool operator==(const Polynomial&) const = default;

 private:
  Coefficients coeffs_{0, 0, 0, 0};
};

/// Real roots of c0 + c1 t + c2 t^2, sorted, duplicates collapsed.
std::vector<double> quadratic_roots(double c0, double c1, double c2);

}  // namespace bvineq
