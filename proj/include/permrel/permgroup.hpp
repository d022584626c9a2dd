#pragma once

// Permutations of {1, ..., n} and the small permutation groups H that index
// the relations of S_n(H).
//
// Composition convention: compose(p, q) applies q first, so
// compose(p, q)(i) == p(q(i)). Every interface is 1-based.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permrel {

class Permutation {
 public:
  // Throws std::invalid_argument unless images is a bijection of 1..n.
  static Permutation from_images(std::vector<unsigned> images);
  static Permutation identity(std::size_t n);

  [[nodiscard]] std::size_t degree() const noexcept { return images_.size(); }
  // i is 1-based; throws std::out_of_range.
  [[nodiscard]] unsigned operator()(unsigned i) const;
  [[nodiscard]] std::span<unsigned const> images() const noexcept {
    return images_;
  }
  [[nodiscard]] bool        is_identity() const noexcept;
  [[nodiscard]] Permutation inverse() const;
  // "(1,2)(3,4)"; the identity prints as "()".
  [[nodiscard]] std::string to_cycles() const;

  friend auto operator<=>(Permutation const&, Permutation const&) = default;
  friend bool operator==(Permutation const&, Permutation const&) = default;

 private:
  explicit Permutation(std::vector<unsigned> images)
      : images_(std::move(images)) {}
  std::vector<unsigned> images_;
};

// Product of disjoint cycles, e.g. "(1,2)(3,4)". Whitespace is ignored; ""
// and "()" are the identity. Throws ParseError.
Permutation parse_cycles(std::string_view text, std::size_t n);

// p after q. Throws std::invalid_argument on degree mismatch.
Permutation compose(Permutation const& p, Permutation const& q);

// i -> i+1 (mod n), the cycle (1,2,...,n).
Permutation full_cycle(std::size_t n);

class PermutationGroup {
 public:
  [[nodiscard]] std::size_t degree() const noexcept { return degree_; }
  [[nodiscard]] std::size_t order() const noexcept { return elements_.size(); }
  // Sorted by image sequence; the identity is always first.
  [[nodiscard]] std::span<Permutation const> elements() const noexcept {
    return elements_;
  }
  [[nodiscard]] std::span<Permutation const> generators() const noexcept {
    return generators_;
  }
  [[nodiscard]] bool contains(Permutation const& p) const;
  [[nodiscard]] bool is_trivial() const noexcept {
    return elements_.size() == 1;
  }
  // Generators joined with ';', e.g. "(1,2);(3,4)". "()" when there are none.
  [[nodiscard]] std::string generators_string() const;

  friend bool operator==(PermutationGroup const& a, PermutationGroup const& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  friend PermutationGroup generate(std::span<Permutation const>, std::size_t);
  friend PermutationGroup stabilizer(PermutationGroup const&, unsigned);

  std::size_t              degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
};

inline constexpr std::size_t kMaxGroupOrder = 40320;

// Smallest subgroup of Sym_n containing the generators, by breadth-first
// product closure. Throws std::invalid_argument on degree mismatch and
// std::length_error past kMaxGroupOrder elements.
PermutationGroup generate(std::span<Permutation const> generators,
                          std::size_t                  n);

PermutationGroup trivial_group(std::size_t n);
PermutationGroup symmetric_group(std::size_t n);
// <(1,2,...,n)>
PermutationGroup cyclic_group(std::size_t n);
// <(1,2)(3,4), (1,3)(2,4)> in Sym_4
PermutationGroup klein_four();

// H_i = { s in G : s(i) = i }. Throws std::out_of_range.
PermutationGroup stabilizer(PermutationGroup const& g, unsigned i);
// { s(i) : s in G }, sorted. Throws std::out_of_range.
std::vector<unsigned> orbit(PermutationGroup const& g, unsigned i);

bool is_transitive(PermutationGroup const& g);
bool is_abelian(PermutationGroup const& g);
bool is_semiregular(PermutationGroup const& g);
bool contains_full_cycle(PermutationGroup const& g);

// "(1,2);(1,2,3)" -> generator list. Empty text gives no generators.
std::vector<Permutation> parse_generators(std::string_view text, std::size_t n);

}  // namespace permrel
