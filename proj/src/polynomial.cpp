#include "bvineq/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bvineq {

namespace {

constexpr double kRootDedup = 1e-12;

void require_finite(const Polynomial::Coefficients& c) {
  for (double v : c) {
    if (!std::isfinite(v)) throw std::invalid_argument("polynomial coefficient is not finite");
  }
}

double bisect_root(const Polynomial& p, double lo, double hi) {
  double flo = p(lo);
  for (int it = 0; it < 200 && hi - lo > 0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = p(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

Polynomial::Polynomial(Coefficients c) : coeffs_(c) { require_finite(coeffs_); }

Polynomial::Polynomial(std::span<const double> c) {
  if (c.empty() || c.size() > kMaxDegree + 1) {
    throw std::invalid_argument("polynomial needs 1 to 4 coefficients");
  }
  std::copy(c.begin(), c.end(), coeffs_.begin());
  require_finite(coeffs_);
}

std::size_t Polynomial::degree() const {
  for (std::size_t k = kMaxDegree; k > 0; --k) {
    if (coeffs_[k] != 0.0) return k;
  }
  return 0;
}

Polynomial Polynomial::derivative() const {
  return Polynomial(Coefficients{coeffs_[1], 2 * coeffs_[2], 3 * coeffs_[3], 0});
}

double Polynomial::integrate(double lo, double hi) const {
  auto anti = [this](double t) {
    return (((coeffs_[3] / 4 * t + coeffs_[2] / 3) * t + coeffs_[1] / 2) * t + coeffs_[0]) * t;
  };
  return anti(hi) - anti(lo);
}

Polynomial Polynomial::compose_affine(double scale, double shift) const {
  // (scale t + shift)^k expanded by the binomial theorem.
  const double s = scale, h = shift;
  Coefficients out{0, 0, 0, 0};
  out[0] = coeffs_[0] + coeffs_[1] * h + coeffs_[2] * h * h + coeffs_[3] * h * h * h;
  out[1] = coeffs_[1] * s + 2 * coeffs_[2] * s * h + 3 * coeffs_[3] * s * h * h;
  out[2] = coeffs_[2] * s * s + 3 * coeffs_[3] * s * s * h;
  out[3] = coeffs_[3] * s * s * s;
  return Polynomial(out);
}

Polynomial Polynomial::operator*(double s) const {
  Coefficients out = coeffs_;
  for (double& v : out) v *= s;
  return Polynomial(out);
}

Polynomial Polynomial::operator+(double s) const {
  Coefficients out = coeffs_;
  out[0] += s;
  return Polynomial(out);
}

std::vector<double> quadratic_roots(double c0, double c1, double c2) {
  std::vector<double> roots;
  if (c2 == 0.0) {
    if (c1 != 0.0) roots.push_back(-c0 / c1);
    return roots;
  }
  const double disc = c1 * c1 - 4 * c2 * c0;
  if (disc < 0) return roots;
  if (disc == 0) {
    roots.push_back(-c1 / (2 * c2));
    return roots;
  }
  // Cancellation-free form.
  const double q = -0.5 * (c1 + std::copysign(std::sqrt(disc), c1));
  roots.push_back(q / c2);
  if (q != 0.0) roots.push_back(c0 / q);
  std::sort(roots.begin(), roots.end());
  if (roots.size() == 2 && std::abs(roots[1] - roots[0]) <= kRootDedup * std::max(1.0, std::abs(roots[0]))) {
    roots.pop_back();
  }
  return roots;
}

std::vector<double> Polynomial::critical_points(double lo, double hi) const {
  std::vector<double> out;
  for (double r : quadratic_roots(coeffs_[1], 2 * coeffs_[2], 3 * coeffs_[3])) {
    if (r > lo && r < hi) out.push_back(r);
  }
  return out;
}

std::vector<double> Polynomial::sign_changes(double lo, double hi) const {
  // Between consecutive critical points p is monotone, so each segment holds at
  // most one sign change and bisection brackets it.
  std::vector<double> knots{lo};
  for (double c : critical_points(lo, hi)) knots.push_back(c);
  knots.push_back(hi);

  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double fl = (*this)(knots[i]);
    const double fr = (*this)(knots[i + 1]);
    if (fl == 0.0 || fr == 0.0 || (fl < 0) == (fr < 0)) continue;
    roots.push_back(bisect_root(*this, knots[i], knots[i + 1]));
  }
  // A root sitting exactly on an interior knot separates opposite signs too.
  for (std::size_t i = 1; i + 1 < knots.size(); ++i) {
    if ((*this)(knots[i]) != 0.0) continue;
    const double fl = (*this)(0.5 * (knots[i - 1] + knots[i]));
    const double fr = (*this)(0.5 * (knots[i] + knots[i + 1]));
    if (fl != 0.0 && fr != 0.0 && (fl < 0) != (fr < 0)) roots.push_back(knots[i]);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double x, double y) { return std::abs(x - y) <= kRootDedup; }),
              roots.end());
  return roots;
}

double Polynomial::max_abs(double lo, double hi) const {
  double m = std::max(std::abs((*this)(lo)), std::abs((*this)(hi)));
  for (double c : critical_points(lo, hi)) m = std::max(m, std::abs((*this)(c)));
  return m;
}

}  // namespace bvineq
