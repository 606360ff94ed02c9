#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "bvineq/piecewise_function.hpp"

namespace bvineq {

enum class ProfileKind { step, sawtooth, poly, mixed };

ProfileKind parse_profile_kind(std::string_view name);
std::string_view to_string(ProfileKind kind);

/// Shape family and size ranges for random bounded-variation functions.
struct GeneratorProfile {
  ProfileKind kind = ProfileKind::mixed;
  int min_pieces = 1;
  int max_pieces = 6;
  double value_min = -2.0;
  double value_max = 2.0;
  double atom_probability = 0.25;

  static GeneratorProfile named(std::string_view kind, int pieces);
};

/// Deterministic in (seed, profile); throws std::invalid_argument for an
/// inconsistent profile.
PiecewiseFunction random_bv(std::uint64_t seed, const GeneratorProfile& profile);

/// Seed of the index-th member of a corpus rooted at master_seed. Streams for
/// different indices are independent, so corpora can be evaluated in any order.
std::uint64_t corpus_seed(std::uint64_t master_seed, std::uint64_t index);

/// Corpus member `index`: cycles through the four profile kinds with 1-6 pieces.
PiecewiseFunction corpus_function(std::uint64_t master_seed, std::uint64_t index);

}  // namespace bvineq
