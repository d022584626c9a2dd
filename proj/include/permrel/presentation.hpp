#pragma once

// The presentation of S_n(H) = < a_1..a_n | a_1...a_n = a_s(1)...a_s(n), s in H >.
//
// A Presentation is stored as its pattern set: the words x_s(1)...x_s(n) for
// s in H. Both sides of every defining relation are patterns, so the rewrite
// engine only ever needs this set. The distinguished word z_word is the
// literal word of z; for an opposite presentation it is reversed.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "permrel/permgroup.hpp"
#include "permrel/word.hpp"

namespace permrel {

class Presentation {
 public:
  static Presentation from_group(PermutationGroup const& g);
  // Any set of permutations; the identity is adjoined. If the resulting set
  // is a subgroup, group() is populated.
  static Presentation from_permutations(std::size_t                  n,
                                        std::span<Permutation const> perms);

  // Patterns and z_word reversed; opposite().opposite() has the same
  // patterns as *this.
  [[nodiscard]] Presentation opposite() const;

  [[nodiscard]] std::size_t degree() const noexcept { return n_; }
  // Sorted, pairwise distinct, each a permutation word of length n.
  [[nodiscard]] std::vector<Word> const& patterns() const noexcept {
    return patterns_;
  }
  [[nodiscard]] Word const& z_word() const noexcept { return z_; }
  [[nodiscard]] std::optional<PermutationGroup> const& group() const noexcept {
    return group_;
  }
  // The permutations the presentation was built from (identity included).
  [[nodiscard]] std::vector<Permutation> const& permutations() const noexcept {
    return perms_;
  }
  [[nodiscard]] bool is_opposite() const noexcept { return opposite_; }

  [[nodiscard]] bool is_pattern(std::span<Letter const> factor) const noexcept;
  // Does w contain some pattern as a literal factor?
  [[nodiscard]] bool contains_pattern(std::span<Letter const> w) const noexcept;
  // 0-based offsets p with w[p, p+n) a pattern.
  [[nodiscard]] std::vector<std::size_t>
  pattern_offsets(std::span<Letter const> w) const;

  // Distinct patterns end (resp. begin) with distinct letters. For a group
  // presentation these are H_n = {id} (resp. H_1 = {id}).
  [[nodiscard]] bool last_letter_injective() const;
  [[nodiscard]] bool first_letter_injective() const;

  // {n, generators, group, patterns, opposite}; group tells whether the
  // generators are closed into a group or taken as the literal relation set.
  [[nodiscard]] json to_json() const;
  static Presentation from_json(json const& j);

 private:
  Presentation() = default;
  void index_patterns();

  std::size_t                     n_ = 0;
  std::vector<Word>               patterns_;
  std::vector<std::uint64_t>      codes_;
  Word                            z_;
  std::optional<PermutationGroup> group_;
  std::vector<Permutation>        perms_;
  bool                            opposite_ = false;
};

struct BoundaryPairs {
  std::vector<Word> a;        // last two letters of each pattern
  std::vector<Word> a_tilde;  // first two letters of each pattern

  [[nodiscard]] bool in_a(Letter i, Letter j) const;
  [[nodiscard]] bool in_a_tilde(Letter i, Letter j) const;
};

// Throws std::invalid_argument when n < 2.
BoundaryPairs boundary_pairs(Presentation const& p);

}  // namespace permrel
