#include "permrel/growth.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "permrel/errors.hpp"

namespace permrel {

json GrowthSeries::to_json() const {
  return json(counts);
}

void check_class_count_envelope(std::size_t n, std::size_t len) {
  bool ok = false;
  if (n <= 4) {
    ok = len <= 12;
  } else if (n == 5) {
    ok = len <= 9;
  } else {
    // n^len <= 5^9 without overflow
    std::uint64_t       total = 1;
    std::uint64_t const limit = 1'953'125;
    ok                        = true;
    for (std::size_t i = 0; i < len && ok; ++i) {
      total *= n;
      ok = total <= limit;
    }
  }
  if (!ok) {
    throw std::length_error("class_count supports length <= 12 for n <= 4, "
                            "<= 9 for n = 5 and n^length <= 5^9 otherwise; got n = "
                            + std::to_string(n) + ", length "
                            + std::to_string(len));
  }
}

std::uint64_t class_count(Presentation const& p, std::size_t len) {
  std::size_t const n = p.degree();
  check_class_count_envelope(n, len);
  std::uint64_t const total = word_count(n, len);
  if (len < n || p.patterns().size() < 2) {
    return total;
  }
  std::vector<bool>         visited(total, false);
  std::uint64_t             merged_words = 0;
  std::uint64_t             classes      = 0;
  std::deque<std::uint64_t> queue;
  Word                      w(len);
  Word                      next(len);
  for (std::uint64_t start = 0; start < total; ++start) {
    if (visited[start]) {
      continue;
    }
    word_from_index(start, n, w);
    if (!p.contains_pattern(w)) {
      continue;
    }
    ++classes;
    visited[start] = true;
    queue.push_back(start);
    while (!queue.empty()) {
      std::uint64_t const idx = queue.front();
      queue.pop_front();
      ++merged_words;
      word_from_index(idx, n, w);
      for (std::size_t pos : p.pattern_offsets(w)) {
        for (auto const& target : p.patterns()) {
          next = w;
          std::copy(target.begin(), target.end(),
                    next.begin() + static_cast<long>(pos));
          std::uint64_t const j = word_index(next, n);
          if (!visited[j]) {
            visited[j] = true;
            queue.push_back(j);
          }
        }
      }
    }
  }
  return total - merged_words + classes;
}

GrowthSeries class_series(Presentation const& p, std::size_t max_len) {
  GrowthSeries series;
  for (std::size_t l = 0; l <= max_len; ++l) {
    series.counts.push_back(class_count(p, l));
  }
  return series;
}

namespace {

std::vector<Word> forbidden_factors(Presentation const& p,
                                    IdealSpec const&    spec) {
  std::vector<Word> out = p.patterns();
  for (auto const& atom : spec.atoms()) {
    if (std::holds_alternative<RightZ>(atom)
        || std::holds_alternative<LeftZ>(atom)) {
      throw std::invalid_argument(
          "normal words are defined for two-sided ideals only");
    }
    if (auto const* g = std::get_if<GeneratorPower>(&atom)) {
      if (g->i > p.degree()) {
        throw std::invalid_argument("generator index out of range");
      }
      out.push_back(power(g->i, g->m));
    }
  }
  return out;
}

}  // namespace

std::uint64_t normal_word_count(Presentation const& p,
                                IdealSpec const&    spec,
                                std::size_t         len) {
  std::size_t const n = p.degree();
  (void)word_count(n, len);  // rejects lengths whose total overflows
  auto const  forbidden = forbidden_factors(p, spec);
  std::size_t longest   = 1;
  for (auto const& f : forbidden) {
    longest = std::max(longest, f.size());
  }
  std::size_t const keep = longest - 1;

  std::map<Word, std::uint64_t> states{{Word{}, 1}};
  Word                          grown;
  for (std::size_t step = 0; step < len; ++step) {
    std::map<Word, std::uint64_t> next;
    for (auto const& [suffix, count] : states) {
      for (std::size_t c = 1; c <= n; ++c) {
        grown = suffix;
        grown.push_back(static_cast<Letter>(c));
        bool const bad
            = std::any_of(forbidden.begin(), forbidden.end(),
                          [&](Word const& f) { return has_suffix(grown, f); });
        if (bad) {
          continue;
        }
        if (grown.size() > keep) {
          grown.erase(grown.begin(),
                      grown.begin() + static_cast<long>(grown.size() - keep));
        }
        next[grown] += count;
      }
    }
    states = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto const& [suffix, count] : states) {
    total += count;
  }
  return total;
}

GrowthSeries normal_series(Presentation const& p,
                           IdealSpec const&    spec,
                           std::size_t         max_len) {
  GrowthSeries series;
  for (std::size_t l = 0; l <= max_len; ++l) {
    series.counts.push_back(normal_word_count(p, spec, l));
  }
  return series;
}

bool free_pair_disjoint(Monoid const& s, IdealSpec const& spec, std::size_t len) {
  if (s.degree() < 3) {
    throw HypothesisError("free_pair_disjoint needs n >= 3");
  }
  for (auto const& atom : spec.atoms()) {
    if (std::holds_alternative<RightZ>(atom)
        || std::holds_alternative<LeftZ>(atom)) {
      throw HypothesisError("free_pair_disjoint needs a two-sided ideal");
    }
    if (auto const* g = std::get_if<GeneratorPower>(&atom); g && g->m < 3) {
      throw HypothesisError("generator powers must have exponent >= 3");
    }
  }
  Word const blocks[2] = {{1, 2}, {1, 3}};
  for (std::size_t k = 1; 2 * k <= len; ++k) {
    std::set<Word> canonical;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      Word w;
      for (std::size_t b = 0; b < k; ++b) {
        auto const& block = blocks[(mask >> (k - 1 - b)) & 1U];
        w.insert(w.end(), block.begin(), block.end());
      }
      if (!spec.empty() && in_spec(s, w, spec)) {
        return false;
      }
      if (!canonical.insert(s.canonical_form(w)).second) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace permrel
