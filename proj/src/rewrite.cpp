#include "permrel/rewrite.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "permrel/class_store.hpp"
#include "permrel/errors.hpp"

namespace permrel {

namespace {

std::size_t env_size(char const* name, std::size_t fallback) {
  if (char const* value = std::getenv(name)) {
    char*              end    = nullptr;
    unsigned long long parsed = std::strtoull(value, &end, 10);
    if (end != value && *end == '\0' && parsed > 0) {
      return static_cast<std::size_t>(parsed);
    }
  }
  return fallback;
}

// Calls f(neighbor) for every one-step rewrite of w.
template <typename F>
void for_each_rewrite(Presentation const& p, Word const& w, F&& f) {
  std::size_t const n = p.degree();
  if (w.size() < n || p.patterns().size() < 2) {
    return;
  }
  Word next;
  for (std::size_t pos = 0; pos + n <= w.size(); ++pos) {
    std::span<Letter const> factor(w.data() + pos, n);
    if (!p.is_pattern(factor)) {
      continue;
    }
    for (auto const& target : p.patterns()) {
      if (std::equal(target.begin(), target.end(), factor.begin())) {
        continue;
      }
      next = w;
      std::copy(target.begin(), target.end(), next.begin() + pos);
      f(next, pos, target);
    }
  }
}

// Closure of {w}; sets truncated when a member beyond cap is discovered.
CongruenceClass closure(Presentation const&        p,
                        Word const&                w,
                        std::optional<std::size_t> cap) {
  CongruenceClass                    result;
  std::unordered_set<Word, WordHash> seen{w};
  std::deque<Word>                   queue{w};
  bool                               stop = false;
  while (!queue.empty() && !stop) {
    Word current = std::move(queue.front());
    queue.pop_front();
    for_each_rewrite(p, current, [&](Word const& next, std::size_t, Word const&) {
      if (stop || seen.count(next) != 0) {
        return;
      }
      if (cap && seen.size() >= *cap) {
        stop = true;
        return;
      }
      seen.insert(next);
      queue.push_back(next);
    });
  }
  result.truncated = stop;
  result.members.assign(seen.begin(), seen.end());
  std::sort(result.members.begin(), result.members.end());
  return result;
}

[[noreturn]] void throw_undecided(Word const& w, std::size_t cap) {
  throw UndecidedAtCap("undecided at cap: congruence class of " + to_string(w)
                           + " exceeds " + std::to_string(cap) + " members",
                       cap);
}

}  // namespace

std::size_t default_class_cap() {
  return env_size("PERMREL_CLASS_CAP", 1'000'000);
}

std::size_t MonoidOptions::default_memo_words() {
  return env_size("PERMREL_MEMO_WORDS", 4'000'000);
}

std::vector<Neighbor> one_step_neighbors(Presentation const& p, Word const& w) {
  std::vector<Neighbor> out;
  std::size_t const     n = p.degree();
  for_each_rewrite(p, w, [&](Word const& next, std::size_t pos, Word const& to) {
    Word from(w.begin() + pos, w.begin() + pos + n);
    out.push_back(Neighbor{next, RewriteStep{pos, std::move(from), to}});
  });
  std::sort(out.begin(), out.end(), [](Neighbor const& a, Neighbor const& b) {
    return a.word != b.word ? a.word < b.word
                            : a.step.position < b.step.position;
  });
  return out;
}

bool CongruenceClass::contains(Word const& w) const {
  return std::binary_search(members.begin(), members.end(), w);
}

CongruenceClass congruence_class(Presentation const&        p,
                                 Word const&                w,
                                 std::optional<std::size_t> cap) {
  return closure(p, w, cap);
}

Word canonical_form(Presentation const& p, Word const& w, std::size_t cap) {
  auto cls = closure(p, w, cap);
  if (cls.truncated) {
    throw_undecided(w, cap);
  }
  return cls.canonical();
}

bool equal_in_S(Presentation const& p,
                Word const&         u,
                Word const&         v,
                std::size_t         cap) {
  if (u.size() != v.size()) {
    return false;
  }
  if (u == v) {
    return true;
  }
  auto cls = closure(p, u, cap);
  if (cls.contains(v)) {
    return true;
  }
  if (cls.truncated) {
    throw_undecided(u, cap);
  }
  return false;
}

namespace {

void check_span(Word const& w, Span s) {
  if (s.start < 1 || s.start + s.extent > w.size()) {
    throw std::out_of_range("span (" + std::to_string(s.start) + ","
                            + std::to_string(s.extent)
                            + ") does not lie in a word of length "
                            + std::to_string(w.size()));
  }
}

}  // namespace

bool overlap(Word const& w, Span a, Span b) {
  check_span(w, a);
  check_span(w, b);
  return (a.start <= b.start && b.start <= a.start + a.extent)
         || (b.start <= a.start && a.start <= b.start + b.extent);
}

std::size_t overlap_length(Word const& w, Span a, Span b) {
  if (!overlap(w, a, b)) {
    throw std::invalid_argument("spans do not overlap");
  }
  if (b.start < a.start) {
    std::swap(a, b);
  }
  if (b.start + b.extent <= a.start + a.extent) {
    return b.extent + 1;
  }
  return a.start + a.extent - b.start + 1;
}

////////////////////////////////////////////////////////////////////////////////
// Monoid
////////////////////////////////////////////////////////////////////////////////

Monoid::Monoid(Presentation p, MonoidOptions options)
    : presentation_(std::move(p)),
      options_(options),
      store_(std::make_unique<ClassStore>(options.memo_words)) {
  if (options_.class_cap == 0) {
    throw std::invalid_argument("class cap must be positive");
  }
}

Monoid::~Monoid()                            = default;
Monoid::Monoid(Monoid&&) noexcept            = default;
Monoid& Monoid::operator=(Monoid&&) noexcept = default;

std::shared_ptr<CongruenceClass const> Monoid::class_of(Word const& w) const {
  if (!presentation_.contains_pattern(w) || presentation_.patterns().size() < 2) {
    auto single = std::make_shared<CongruenceClass>();
    single->members.push_back(w);
    return single;
  }
  if (auto found = store_->find(w)) {
    return found;
  }
  auto cls = closure(presentation_, w, options_.class_cap);
  if (cls.truncated) {
    throw_undecided(w, options_.class_cap);
  }
  return store_->insert(std::make_shared<CongruenceClass const>(std::move(cls)));
}

Word Monoid::canonical_form(Word const& w) const {
  return class_of(w)->canonical();
}

bool Monoid::equal(Word const& u, Word const& v) const {
  if (u.size() != v.size()) {
    return false;
  }
  if (u == v) {
    return true;
  }
  return class_of(u)->contains(v);
}

std::size_t Monoid::memo_size() const {
  return store_->size_words();
}

}  // namespace permrel
