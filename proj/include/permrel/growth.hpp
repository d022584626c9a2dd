#pragma once

// Degree-wise dimension counts for K[S_n(H)] and its monomial quotients.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "permrel/ideals.hpp"
#include "permrel/rewrite.hpp"

namespace permrel {

struct GrowthSeries {
  std::vector<std::uint64_t> counts;  // counts[l] for l = 0..L

  [[nodiscard]] json to_json() const;
};

// Throws std::length_error outside the supported envelope: l <= 12 for
// n <= 4, l <= 9 for n = 5, n^l <= 5^9 beyond that.
void check_class_count_envelope(std::size_t n, std::size_t len);

// Number of congruence classes of words of length len. Pattern-free words are
// singletons; the rest are flood-filled over a bitset indexed by word.
std::uint64_t class_count(Presentation const& p, std::size_t len);
GrowthSeries  class_series(Presentation const& p, std::size_t max_len);

// Words of length len with no pattern as a factor and no factor i^m for the
// generator-power atoms of spec. z-power atoms are implied by the pattern
// condition. Throws std::invalid_argument for Sz or zS atoms.
std::uint64_t normal_word_count(Presentation const& p,
                                IdealSpec const&    spec,
                                std::size_t         len);
GrowthSeries  normal_series(Presentation const& p,
                            IdealSpec const&    spec,
                            std::size_t         max_len);

// Products of k blocks drawn from (1,2) and (1,3), 2k <= len, have pairwise
// distinct canonical forms and none lies in spec. Needs n >= 3 and a spec of
// z-power atoms and generator powers with exponent >= 3.
bool free_pair_disjoint(Monoid const& s, IdealSpec const& spec, std::size_t len);

}  // namespace permrel
