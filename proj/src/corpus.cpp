#include "bvineq/corpus.hpp"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include <fmt/format.h>

namespace bvineq {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// std::uniform_*_distribution output is implementation-defined; these mappings
// keep corpora identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int integer(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }
  bool chance(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

// Polynomial in the local coordinate s = (t - lo) / (hi - lo), re-expressed in t.
Polynomial from_local(const Polynomial& local, double lo, double hi) {
  const double h = hi - lo;
  return local.compose_affine(1.0 / h, -lo / h);
}

Polynomial random_piece(Rng& rng, ProfileKind kind, double vmin, double vmax, double lo, double hi) {
  switch (kind) {
    case ProfileKind::step:
      return Polynomial::constant(rng.uniform(vmin, vmax));
    case ProfileKind::sawtooth: {
      const double start = rng.uniform(vmin, vmax);
      const double end = rng.uniform(vmin, vmax);
      return from_local(Polynomial::linear(start, end - start), lo, hi);
    }
    case ProfileKind::poly: {
      // Bernstein control values in range keep the cubic inside [vmin, vmax].
      std::array<double, 4> b{};
      for (double& v : b) v = rng.uniform(vmin, vmax);
      const Polynomial local(Polynomial::Coefficients{
          b[0], 3 * (b[1] - b[0]), 3 * (b[2] - 2 * b[1] + b[0]), b[3] - 3 * b[2] + 3 * b[1] - b[0]});
      return from_local(local, lo, hi);
    }
    case ProfileKind::mixed: {
      static constexpr std::array kinds{ProfileKind::step, ProfileKind::sawtooth, ProfileKind::poly};
      return random_piece(rng, kinds[rng.integer(0, 2)], vmin, vmax, lo, hi);
    }
  }
  throw std::logic_error("unhandled profile kind");
}

}  // namespace

ProfileKind parse_profile_kind(std::string_view name) {
  if (name == "step") return ProfileKind::step;
  if (name == "sawtooth") return ProfileKind::sawtooth;
  if (name == "poly") return ProfileKind::poly;
  if (name == "mixed") return ProfileKind::mixed;
  throw std::invalid_argument(fmt::format("unknown generator profile '{}'", name));
}

std::string_view to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::step: return "step";
    case ProfileKind::sawtooth: return "sawtooth";
    case ProfileKind::poly: return "poly";
    case ProfileKind::mixed: return "mixed";
  }
  return "?";
}

GeneratorProfile GeneratorProfile::named(std::string_view kind, int pieces) {
  GeneratorProfile profile;
  profile.kind = parse_profile_kind(kind);
  profile.min_pieces = pieces;
  profile.max_pieces = pieces;
  return profile;
}

PiecewiseFunction random_bv(std::uint64_t seed, const GeneratorProfile& profile) {
  if (profile.min_pieces < 1 || profile.max_pieces < profile.min_pieces) {
    throw std::invalid_argument("generator profile: need 1 <= min_pieces <= max_pieces");
  }
  if (!(profile.value_min <= profile.value_max)) {
    throw std::invalid_argument("generator profile: value_min > value_max");
  }
  Rng rng(seed);
  const int n = rng.integer(profile.min_pieces, profile.max_pieces);

  const double a = rng.uniform(-1.0, 1.0);
  const double width = std::exp(rng.uniform(std::log(0.5), std::log(4.0)));
  const Interval interval(a, a + width);

  // Cell widths drawn from [0.5, 1] then normalised, so no cell is tiny.
  std::vector<double> gaps(static_cast<std::size_t>(n));
  double total = 0;
  for (double& g : gaps) total += (g = rng.uniform(0.5, 1.0));
  std::vector<double> breakpoints{interval.a};
  double acc = 0;
  for (int i = 0; i + 1 < n; ++i) {
    acc += gaps[static_cast<std::size_t>(i)];
    breakpoints.push_back(interval.a + width * acc / total);
  }
  breakpoints.push_back(interval.b);

  std::vector<Polynomial> pieces;
  for (int i = 0; i < n; ++i) {
    const double lo = breakpoints[static_cast<std::size_t>(i)];
    const double hi = breakpoints[static_cast<std::size_t>(i) + 1];
    Polynomial piece = random_piece(rng, profile.kind, profile.value_min, profile.value_max, lo, hi);
    // Mixed corpora also exercise continuous joins.
    if (profile.kind == ProfileKind::mixed && i > 0 && rng.chance(0.3)) {
      piece = piece + (pieces.back()(lo) - piece(lo));
    }
    pieces.push_back(piece);
  }

  std::map<double, double> atoms;
  for (double t : breakpoints) {
    if (rng.chance(profile.atom_probability)) atoms.emplace(t, rng.uniform(profile.value_min, profile.value_max));
  }
  return PiecewiseFunction(interval, std::move(breakpoints), std::move(pieces), std::move(atoms));
}

std::uint64_t corpus_seed(std::uint64_t master_seed, std::uint64_t index) {
  return splitmix64(master_seed ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

PiecewiseFunction corpus_function(std::uint64_t master_seed, std::uint64_t index) {
  static constexpr std::array kinds{ProfileKind::step, ProfileKind::sawtooth, ProfileKind::poly,
                                    ProfileKind::mixed};
  GeneratorProfile profile;
  profile.kind = kinds[index % kinds.size()];
  return random_bv(corpus_seed(master_seed, index), profile);
}

}  // namespace bvineq
