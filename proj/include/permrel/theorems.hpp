#pragma once

// Executable checks of the structural results on S_n(H): the cancellativity
// criterion, the boundary-pair constraints on Sz and zS, overlapping patterns,
// radical-support displacement and the SzS preimage identity. Each sweep
// compares a prediction against the raw word-problem operations.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permrel/ideals.hpp"
#include "permrel/permgroup.hpp"
#include "permrel/rewrite.hpp"

namespace permrel {

enum class Side { left, right };
std::string to_string(Side side);

// u != v in S with u a_i = v a_i (right) or a_i u = a_i v (left).
struct CancelWitness {
  Word   u;
  Word   v;
  Letter letter = 0;
  Side   side   = Side::right;

  [[nodiscard]] json to_json() const;
};

// Re-checks a witness against the word problem.
bool verify_witness(Monoid const& s, CancelWitness const& w);

// H_1 = H_n = {id}. Necessary for cancellativity for every H.
bool cancellative_necessary_condition(PermutationGroup const& g);

// The criterion for abelian H. Throws HypothesisError otherwise.
bool predict_cancellative(PermutationGroup const& g);

// Least witness by (|u|, u, v, letter) with |u| <= max_len, found by grouping
// the members of every class of length L + 1 by their last (first) letter and
// comparing the classes of what remains. Stops at the first length with a
// witness.
std::optional<CancelWitness>
search_cancel_counterexample(Monoid const& s, std::size_t max_len, Side side);

struct CancellativityReport {
  std::optional<bool>          predicted;  // empty when H is not abelian
  bool                         necessary_condition = false;
  std::optional<CancelWitness> right_witness;
  std::optional<CancelWitness> left_witness;
  std::size_t                  searched_len = 0;

  [[nodiscard]] json to_json() const;
};

// Searches both sides up to max_len. The prediction is left empty unless the
// presentation comes from an abelian group.
CancellativityReport cancellativity_report(Monoid const& s,
                                           std::size_t   max_len);

struct SweepOptions {
  // Run even when hypotheses fail; mismatches are then counted as
  // hypothesis-violating instances instead of violations.
  bool          force = false;
  std::uint64_t seed  = 1;
  unsigned      jobs  = 1;
};

struct SweepReport {
  std::string              check;
  json                     bounds = json::object();
  std::uint64_t            cases_checked = 0;
  json                     violations    = json::array();
  std::uint64_t            hypothesis_violating = 0;
  bool                     hypotheses_hold      = true;
  std::vector<std::string> notes;

  [[nodiscard]] bool passed() const { return violations.empty(); }
  [[nodiscard]] json to_json() const;
};

// For every word x with 2 <= |x| <= max_len + 2: x in Sz implies its last two
// letters form a pair of A; dually x in zS implies its first two letters form
// a pair of Ã (checked on the opposite presentation). Needs H abelian,
// (1,...,n) not in H, H_n = {id} and H_1 = {id}.
SweepReport verify_boundary_pairs(Monoid const& s,
                          std::size_t   max_len,
                          SweepOptions  options = {});

// For every letter i, letters j, j' != i with x_i x_j not in A and
// x_j' x_i not in Ã. Needs n >= 3 and H_2 = H_{n-1} = {id}.
SweepReport verify_avoiding_letters(PermutationGroup const& g, SweepOptions options = {});

// Random instances of two words w1 = p s1 t and w2 = p t1 t sharing prefix p
// and tail t, where pattern s1 overlaps a later pattern s2 and t1 overlaps a
// later pattern t2, both later patterns ending inside t. Checks w1 = w2
// letterwise. Part (ii) runs on the opposite presentation. Needs H abelian
// with H_n = {id} (part i) and H_1 = {id} (part ii). sample_budget instances
// per part.
SweepReport verify_overlap_sampled(Monoid const& s,
                                  std::size_t   sample_budget,
                                  SweepOptions  options = {});

// For n <= |w| <= max_len with w in Sz or zS, and every first letter i and
// last letter j over the class of w: a_i w a_j lies in neither Sz nor zS.
// Needs H abelian, transitive, (1,...,n) not in H and n >= 3.
SweepReport verify_radical_support(Monoid const& s,
                                   std::size_t   max_len,
                                   SweepOptions  options = {});

// Class-based SzS membership against the literal pattern-factor test for all
// words of length <= max_len.
SweepReport verify_SzS_preimage(Monoid const& s,
                                std::size_t   max_len,
                                SweepOptions  options = {});

struct SuiteConfig {
  std::size_t   cancel_len    = 0;  // 0: n + 3
  std::size_t   boundary_len    = 0;  // 0: default for n
  std::size_t   radical_len   = 0;  // 0: n + 2
  std::size_t   preimage_len  = 0;  // 0: n + 3
  std::size_t   fractions_len = 0;  // 0: n + 3
  std::size_t   sample_budget = 10'000;
  std::uint64_t seed          = 1;
  unsigned      jobs          = 1;
  // Names from suite_checks(); empty selects all.
  std::vector<std::string> checks;

  // Fills every zero bound from n.
  [[nodiscard]] SuiteConfig resolved(std::size_t n) const;
  [[nodiscard]] json        to_json() const;
};

struct SuiteReport {
  json entries = json::array();  // {check, status, reason?, report?}
  bool failed    = false;
  bool undecided = false;

  [[nodiscard]] json to_json() const;
};

// cancellativity, boundary_pairs, avoiding_letters, overlap_sampler,
// radical_support, SzS_preimage,
// fractions_obstruction, squares_not_prime.
std::vector<std::string> const& suite_checks();

// Runs every selected check whose hypotheses hold for G, records skipped ones with a
// reason, and cross-checks the cancellativity prediction against the search.
SuiteReport run_suite(PermutationGroup const& g, SuiteConfig const& config = {});

}  // namespace permrel
