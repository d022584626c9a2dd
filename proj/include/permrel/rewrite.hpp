#pragma once

// The word problem for S_n(H).
//
// Every relation replaces one pattern by another of the same length, so the
// congruence class of a word w is a finite set of words of length |w|; it is
// computed by breadth-first closure under one-step rewrites. Canonical forms
// are lexicographically least class members.

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "permrel/presentation.hpp"
#include "permrel/word.hpp"

namespace permrel {

struct RewriteStep {
  std::size_t position;  // 0-based offset of the rewritten factor
  Word        from_pattern;
  Word        to_pattern;
};

struct Neighbor {
  Word        word;
  RewriteStep step;
};

// Every word obtained from w by replacing one pattern occurrence by a
// different pattern. Sorted by (word, position).
std::vector<Neighbor> one_step_neighbors(Presentation const& p, Word const& w);

struct CongruenceClass {
  std::vector<Word> members;  // sorted
  bool              truncated = false;

  [[nodiscard]] Word const& canonical() const { return members.front(); }
  [[nodiscard]] bool        contains(Word const& w) const;
  [[nodiscard]] std::size_t size() const noexcept { return members.size(); }
};

// Default bound on class size, overridable with PERMREL_CLASS_CAP.
std::size_t default_class_cap();

// Breadth-first closure of {w}. With a cap, stops as soon as a (cap+1)-th
// member is discovered and sets truncated.
CongruenceClass congruence_class(Presentation const&        p,
                                 Word const&                w,
                                 std::optional<std::size_t> cap = std::nullopt);

// Throw UndecidedAtCap when the class does not close within cap.
Word canonical_form(Presentation const& p,
                    Word const&         w,
                    std::size_t         cap = default_class_cap());
bool equal_in_S(Presentation const& p,
                Word const&         u,
                Word const&         v,
                std::size_t         cap = default_class_cap());

// A factor of a word in the 1-based notation of the overlap calculus:
// positions start, start+1, ..., start+extent.
struct Span {
  std::size_t start;
  std::size_t extent;
};

// Throws std::out_of_range if a span leaves w.
bool overlap(Word const& w, Span a, Span b);
// Throws std::invalid_argument on non-overlapping spans.
std::size_t overlap_length(Word const& w, Span a, Span b);

class ClassStore;

struct MonoidOptions {
  std::size_t class_cap  = default_class_cap();
  std::size_t memo_words = default_memo_words();

  // PERMREL_MEMO_WORDS overrides the memo capacity.
  static std::size_t default_memo_words();
};

// S_n(H) as a word-problem solver. Classes of words containing a pattern are
// memoized in a size-bounded LRU store keyed by every member; pattern-free
// words are singletons and bypass the store. Safe for concurrent use.
class Monoid {
 public:
  explicit Monoid(Presentation p, MonoidOptions options = {});
  ~Monoid();
  Monoid(Monoid&&) noexcept;
  Monoid& operator=(Monoid&&) noexcept;
  Monoid(Monoid const&)            = delete;
  Monoid& operator=(Monoid const&) = delete;

  [[nodiscard]] Presentation const& presentation() const noexcept {
    return presentation_;
  }
  [[nodiscard]] std::size_t degree() const noexcept {
    return presentation_.degree();
  }
  [[nodiscard]] MonoidOptions const& options() const noexcept {
    return options_;
  }

  // Throws UndecidedAtCap.
  [[nodiscard]] std::shared_ptr<CongruenceClass const>
                     class_of(Word const& w) const;
  [[nodiscard]] Word canonical_form(Word const& w) const;
  [[nodiscard]] bool equal(Word const& u, Word const& v) const;

  // Number of member words currently memoized.
  [[nodiscard]] std::size_t memo_size() const;

 private:
  Presentation                presentation_;
  MonoidOptions               options_;
  std::unique_ptr<ClassStore> store_;
};

}  // namespace permrel
