#pragma once

// Membership oracles for the ideals S z^m S, S a_i^m S, Sz and zS of S_n(H)
// and their finite unions, together with bounded primality checks and the
// finite non-primality certificate zSz ⊆ Q.
//
// Class-based membership: pi(w) lies in S f S (resp. Sf, fS) exactly when
// some word of the congruence class of w contains f as a factor (resp.
// suffix, prefix). All such queries may throw UndecidedAtCap.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "permrel/rewrite.hpp"
#include "permrel/word.hpp"

namespace permrel {

struct ZPower {  // S z^m S
  std::size_t m;
  friend auto operator<=>(ZPower const&, ZPower const&) = default;
};
struct GeneratorPower {  // S a_i^m S
  Letter      i;
  std::size_t m;
  friend auto operator<=>(GeneratorPower const&, GeneratorPower const&)
      = default;
};
struct RightZ {  // Sz
  friend auto operator<=>(RightZ const&, RightZ const&) = default;
};
struct LeftZ {  // zS
  friend auto operator<=>(LeftZ const&, LeftZ const&) = default;
};

using IdealAtom = std::variant<ZPower, GeneratorPower, RightZ, LeftZ>;

// A finite union of ideal atoms, kept sorted and duplicate-free.
class IdealSpec {
 public:
  IdealSpec() = default;
  IdealSpec(std::initializer_list<IdealAtom> atoms);
  explicit IdealSpec(std::vector<IdealAtom> atoms);

  // "z^2 + a_1^3 + Sz + zS". "z" alone means z^1 and "a_i" means a_i^1.
  // Throws ParseError; letters must lie in 1..n and exponents be >= 1.
  static IdealSpec parse(std::string_view text, std::size_t n);

  [[nodiscard]] std::vector<IdealAtom> const& atoms() const noexcept {
    return atoms_;
  }
  [[nodiscard]] bool empty() const noexcept { return atoms_.empty(); }
  [[nodiscard]] bool has_z_power() const;
  [[nodiscard]] bool has_generator_power() const;
  [[nodiscard]] bool has_one_sided() const;

  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] json        to_json() const;

  friend bool operator==(IdealSpec const&, IdealSpec const&) = default;

 private:
  void                   normalize();
  std::vector<IdealAtom> atoms_;
};

// Union of S a_i^m S over i = 1..n.
IdealSpec all_generator_powers(std::size_t n, std::size_t m);

bool in_two_sided_z_power(Monoid const& s, Word const& w, std::size_t m);
bool in_two_sided_generator_power(Monoid const& s,
                                  Word const&   w,
                                  Letter        i,
                                  std::size_t   m);
bool in_right_z(Monoid const& s, Word const& w);
bool in_left_z(Monoid const& s, Word const& w);
bool in_atom(Monoid const& s, Word const& w, IdealAtom const& atom);
bool in_spec(Monoid const& s, Word const& w, IdealSpec const& spec);

// pi(w) in S a_i^k (resp. a_i^k S): some class member ends (begins) with i^k.
bool in_right_power(Monoid const& s, Word const& w, Letter i, std::size_t k);
bool in_left_power(Monoid const& s, Word const& w, Letter i, std::size_t k);

// Closure-free test: w itself contains a pattern as a literal factor. This
// describes the full preimage of SzS in the free monoid.
bool monomial_preimage_in_SzS(Presentation const& p, Word const& w);

struct PrimeVerdict {
  enum class Outcome {
    no_counterexample_up_to,
    not_prime_certified,
    counterexample,
    // verify_not_prime_zSz could not establish its certificate
    inconclusive
  };

  Outcome     outcome = Outcome::no_counterexample_up_to;
  std::size_t max_uv_len  = 0;
  std::size_t max_mid_len = 0;
  std::size_t pairs_checked = 0;
  // counterexample: u, v with u S v inside the ideal up to the bound
  std::optional<Word> u;
  std::optional<Word> v;
  // not_prime_certified / inconclusive: the finite facts checked
  json        certificate = json::array();
  std::string reason;

  [[nodiscard]] json to_json() const;
};

std::string to_string(PrimeVerdict::Outcome outcome);

// Least middle word s (by length, then lexicographically) with |s| <=
// max_mid_len and u s v outside spec, if any.
std::optional<Word> find_separator(Monoid const&    s,
                                   IdealSpec const& spec,
                                   Word const&      u,
                                   Word const&      v,
                                   std::size_t      max_mid_len);

// For every pair of canonical words u, v outside spec with |u|, |v| <=
// max_uv_len (u outer, v inner, both by length then lexicographically),
// searches a separator. Returns the first pair without one.
PrimeVerdict check_prime_bounded(Monoid const&    s,
                                 IdealSpec const& spec,
                                 std::size_t      max_uv_len,
                                 std::size_t      max_mid_len);

// Certified non-prime iff z is outside spec while z a_i (every i) and z z are
// inside: then zSz ⊆ spec.
PrimeVerdict verify_not_prime_zSz(Monoid const& s, IdealSpec const& spec);

// Middle word s with u s v outside spec, built by the case analysis of the
// primality proofs:
//   - H non-transitive: padding by squares of letters outside the orbits of
//     n and 1 (a separating letter is inserted when they coincide);
//   - H abelian, transitive, without (1,...,n): letters j, j' whose boundary
//     pairs with the last letter of u and first letter of v avoid A and Ã;
//   - a single S a_i^2 S with H transitive abelian: the four-way split on
//     whether j or j' equals i.
// Supported specs are unions of S z^m S and S a_i^m S (m >= 3), or a single
// S a_i^2 S. Throws HypothesisError when the hypotheses are unmet and
// std::logic_error if the constructed word fails verification.
Word prime_witness(Monoid const&    s,
                   IdealSpec const& spec,
                   Word const&      u,
                   Word const&      v);

// Exhaustively checks, for |w| <= max_len, that no w lies in both Sz and
// S a_1^2, nor in both zS and a_1^2 S. Requires H abelian, n >= 3,
// H_1 = H_n = {id} and (1,...,n) not in H.
bool fractions_obstruction(Monoid const& s, std::size_t max_len);

// Avoiding letters for i: least j != i with x_i x_j not in A and least
// j' != i with x_j' x_i not in Ã.
struct BoundaryAvoidance {
  std::optional<Letter> j;
  std::optional<Letter> j_prime;

  [[nodiscard]] bool complete() const noexcept { return j && j_prime; }
};
BoundaryAvoidance boundary_avoidance(BoundaryPairs const& pairs,
                                     std::size_t          n,
                                     Letter               i);

}  // namespace permrel
