#include "bvineq/piecewise_function.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

#include "bvineq/quadrature.hpp"

namespace bvineq {

Interval::Interval(double left, double right) : a(left), b(right) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw std::invalid_argument(fmt::format("invalid interval [{}, {}]", a, b));
  }
}

PiecewiseFunction::PiecewiseFunction(Interval interval, std::vector<double> breakpoints,
                                     std::vector<Polynomial> pieces, std::map<double, double> atoms)
    : interval_(interval),
      breakpoints_(std::move(breakpoints)),
      pieces_(std::move(pieces)),
      atoms_(std::move(atoms)) {
  if (breakpoints_.size() < 2) throw std::invalid_argument("need at least two breakpoints");
  if (breakpoints_.front() != interval_.a || breakpoints_.back() != interval_.b) {
    throw std::invalid_argument("breakpoints must start at a and end at b");
  }
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] < breakpoints_[i + 1])) {
      throw std::invalid_argument("breakpoints must be strictly increasing");
    }
  }
  if (pieces_.size() + 1 != breakpoints_.size()) {
    throw std::invalid_argument("piece count must equal breakpoint count minus one");
  }
  for (const auto& [t, v] : atoms_) {
    if (!std::binary_search(breakpoints_.begin(), breakpoints_.end(), t)) {
      throw std::invalid_argument(fmt::format("atom at {} is not a breakpoint", t));
    }
    if (!std::isfinite(v)) throw std::invalid_argument("atom value is not finite");
  }
}

PiecewiseFunction PiecewiseFunction::single(Interval interval, Polynomial p) {
  return PiecewiseFunction(interval, {interval.a, interval.b}, {p});
}

double PiecewiseFunction::value_at_breakpoint(std::size_t k) const {
  if (auto it = atoms_.find(breakpoints_[k]); it != atoms_.end()) return it->second;
  if (k + 1 == breakpoints_.size()) return left_limit(k);
  return right_limit(k);
}

double PiecewiseFunction::operator()(double x) const {
  if (!interval_.contains(x)) {
    throw std::out_of_range(fmt::format("x = {} outside [{}, {}]", x, interval_.a, interval_.b));
  }
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
  const auto k = static_cast<std::size_t>(it - breakpoints_.begin());
  if (it != breakpoints_.end() && *it == x) return value_at_breakpoint(k);
  return pieces_[k - 1](x);
}

PiecewiseFunction PiecewiseFunction::scaled(double c) const {
  std::vector<Polynomial> pieces;
  pieces.reserve(pieces_.size());
  for (const auto& p : pieces_) pieces.push_back(p * c);
  std::map<double, double> atoms;
  for (const auto& [t, v] : atoms_) atoms.emplace(t, c * v);
  return PiecewiseFunction(interval_, breakpoints_, std::move(pieces), std::move(atoms));
}

PiecewiseFunction PiecewiseFunction::shifted(double c) const {
  std::vector<Polynomial> pieces;
  pieces.reserve(pieces_.size());
  for (const auto& p : pieces_) pieces.push_back(p + c);
  std::map<double, double> atoms;
  for (const auto& [t, v] : atoms_) atoms.emplace(t, v + c);
  return PiecewiseFunction(interval_, breakpoints_, std::move(pieces), std::move(atoms));
}

std::pair<PiecewiseFunction, PiecewiseFunction> PiecewiseFunction::split_at(std::size_t k) const {
  if (k == 0 || k + 1 >= breakpoints_.size()) {
    throw std::invalid_argument("split_at needs an interior breakpoint");
  }
  const double m = breakpoints_[k];
  const double fm = value_at_breakpoint(k);

  std::vector<double> left_bp(breakpoints_.begin(), breakpoints_.begin() + k + 1);
  std::vector<double> right_bp(breakpoints_.begin() + k, breakpoints_.end());
  std::vector<Polynomial> left_pc(pieces_.begin(), pieces_.begin() + k);
  std::vector<Polynomial> right_pc(pieces_.begin() + k, pieces_.end());
  std::map<double, double> left_atoms, right_atoms;
  for (const auto& [t, v] : atoms_) {
    if (t < m) left_atoms.emplace(t, v);
    if (t > m) right_atoms.emplace(t, v);
  }
  left_atoms[m] = fm;
  right_atoms[m] = fm;
  return {PiecewiseFunction(Interval(interval_.a, m), std::move(left_bp), std::move(left_pc),
                            std::move(left_atoms)),
          PiecewiseFunction(Interval(m, interval_.b), std::move(right_bp), std::move(right_pc),
                            std::move(right_atoms))};
}

double evaluate(const PiecewiseFunction& f, double x) { return f(x); }

double total_variation(const PiecewiseFunction& f) {
  const auto& bp = f.breakpoints();
  const auto& pieces = f.pieces();
  double tv = 0;

  for (std::size_t i = 0; i < pieces.size(); ++i) {
    // p is monotone between consecutive critical points.
    const Polynomial& p = pieces[i];
    double prev_t = bp[i];
    double prev_v = p(prev_t);
    for (double c : p.critical_points(bp[i], bp[i + 1])) {
      const double v = p(c);
      tv += std::abs(v - prev_v);
      prev_v = v;
      prev_t = c;
    }
    tv += std::abs(p(bp[i + 1]) - prev_v);
  }

  const auto& atoms = f.atoms();
  const std::size_t last = bp.size() - 1;
  for (std::size_t k = 0; k <= last; ++k) {
    auto atom = atoms.find(bp[k]);
    const bool has_atom = atom != atoms.end();
    if (k == 0) {
      if (has_atom) tv += std::abs(f.right_limit(0) - atom->second);
    } else if (k == last) {
      if (has_atom) tv += std::abs(atom->second - f.left_limit(last));
    } else {
      const double left = f.left_limit(k);
      const double right = f.right_limit(k);
      tv += has_atom ? std::abs(atom->second - left) + std::abs(right - atom->second)
                     : std::abs(right - left);
    }
  }
  return tv;
}

double sup_norm(const PiecewiseFunction& f) {
  double m = 0;
  const auto& bp = f.breakpoints();
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    m = std::max(m, f.pieces()[i].max_abs(bp[i], bp[i + 1]));
  }
  for (const auto& [t, v] : f.atoms()) m = std::max(m, std::abs(v));
  return m;
}

double integral(const PiecewiseFunction& f) {
  const auto& bp = f.breakpoints();
  double sum = 0;
  for (std::size_t i = 0; i < f.piece_count(); ++i) sum += f.pieces()[i].integrate(bp[i], bp[i + 1]);
  return sum;
}

double lp_norm(const PiecewiseFunction& f, double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw std::invalid_argument(fmt::format("lp_norm: p = {} must be finite and >= 1", p));
  }
  const auto& bp = f.breakpoints();
  const auto& pieces = f.pieces();

  // Normalising by the largest piece value keeps |f|^p finite for large p.
  double scale = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    scale = std::max(scale, pieces[i].max_abs(bp[i], bp[i + 1]));
  }
  if (scale == 0) return 0;

  double sum = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Polynomial q = pieces[i] * (1.0 / scale);
    std::vector<double> knots{bp[i]};
    for (double r : q.sign_changes(bp[i], bp[i + 1])) knots.push_back(r);
    knots.push_back(bp[i + 1]);

    for (std::size_t j = 0; j + 1 < knots.size(); ++j) {
      const double lo = knots[j], hi = knots[j + 1];
      if (q.degree() == 0) {
        sum += std::pow(std::abs(q[0]), p) * (hi - lo);
      } else if (p == 1.0) {
        sum += std::abs(q.integrate(lo, hi));
      } else {
        sum += quadrature::integrate([&](double t) { return std::pow(std::abs(q(t)), p); }, lo, hi,
                                     1e-12)
                   .value;
      }
    }
  }
  return scale * std::pow(sum, 1.0 / p);
}

double Norms::lp(double p) const {
  auto it = lp_by_p.find(p);
  if (it == lp_by_p.end()) throw std::out_of_range(fmt::format("lp norm for p = {} not computed", p));
  return it->second;
}

Norms compute_norms(const PiecewiseFunction& f, std::span<const double> ps) {
  Norms n;
  n.sup = sup_norm(f);
  n.integral = integral(f);
  n.total_variation = total_variation(f);
  for (double p : ps) n.lp_by_p[p] = lp_norm(f, p);
  return n;
}

namespace {

using nlohmann::json;

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) throw std::invalid_argument(fmt::format("{} must be a number", what));
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw std::invalid_argument(fmt::format("{} must be finite", what));
  return v;
}

std::string number_key(double t) { return json(t).dump(); }

}  // namespace

PiecewiseFunction parse_function_spec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(fmt::format("function spec: {}", e.what()));
  }
  if (!doc.is_object()) throw std::invalid_argument("function spec must be a JSON object");
  for (const char* key : {"interval", "breakpoints", "pieces"}) {
    if (!doc.contains(key)) throw std::invalid_argument(fmt::format("function spec: missing '{}'", key));
  }
  const json& iv = doc["interval"];
  if (!iv.is_array() || iv.size() != 2) throw std::invalid_argument("interval must be [a, b]");
  Interval interval(finite_number(iv[0], "interval.a"), finite_number(iv[1], "interval.b"));

  std::vector<double> breakpoints;
  if (!doc["breakpoints"].is_array()) throw std::invalid_argument("breakpoints must be an array");
  for (const json& t : doc["breakpoints"]) breakpoints.push_back(finite_number(t, "breakpoint"));

  std::vector<Polynomial> pieces;
  if (!doc["pieces"].is_array()) throw std::invalid_argument("pieces must be an array");
  for (const json& piece : doc["pieces"]) {
    if (!piece.is_array()) throw std::invalid_argument("each piece must be a coefficient array");
    std::vector<double> coeffs;
    for (const json& c : piece) coeffs.push_back(finite_number(c, "coefficient"));
    pieces.emplace_back(coeffs);
  }

  std::map<double, double> atoms;
  if (doc.contains("atoms")) {
    if (!doc["atoms"].is_object()) throw std::invalid_argument("atoms must be an object");
    for (const auto& [key, value] : doc["atoms"].items()) {
      double t = 0;
      try {
        std::size_t used = 0;
        t = std::stod(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw std::invalid_argument(fmt::format("atom key '{}' is not a number", key));
      }
      atoms.emplace(t, finite_number(value, "atom value"));
    }
  }
  return PiecewiseFunction(interval, std::move(breakpoints), std::move(pieces), std::move(atoms));
}

std::string to_function_spec(const PiecewiseFunction& f) {
  json doc;
  doc["interval"] = {f.interval().a, f.interval().b};
  doc["breakpoints"] = f.breakpoints();
  json pieces = json::array();
  for (const auto& p : f.pieces()) {
    pieces.push_back(std::vector<double>(p.coefficients().begin(), p.coefficients().end()));
  }
  doc["pieces"] = std::move(pieces);
  json atoms = json::object();
  for (const auto& [t, v] : f.atoms()) atoms[number_key(t)] = v;
  doc["atoms"] = std::move(atoms);
  return doc.dump();
}

std::string function_digest(const PiecewiseFunction& f) {
  // FNV-1a, 64 bit.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_function_spec(f)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", h);
}

}  // namespace bvineq
