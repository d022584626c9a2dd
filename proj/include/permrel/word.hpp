#pragma once

// Words of the free monoid FM_n. Letters are 1-based, as in the presentation
// a_1, ..., a_n; the empty vector is the identity.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace permrel {

using Letter = std::uint8_t;
using Word   = std::vector<Letter>;
using json   = nlohmann::ordered_json;

inline constexpr std::size_t kMaxDegree = 12;

struct WordHash {
  std::size_t operator()(Word const& w) const noexcept {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<char const*>(w.data()), w.size()));
  }
};

Word concat(std::initializer_list<std::span<Letter const>> parts);
inline Word concat(Word const& a, Word const& b) {
  return concat({a, b});
}
inline Word concat(Word const& a, Word const& b, Word const& c) {
  return concat({a, b, c});
}

Word reverse(Word w);

// letter^m
Word power(Letter letter, std::size_t m);
// w repeated m times
Word repeat(Word const& w, std::size_t m);

bool has_factor(std::span<Letter const> w, std::span<Letter const> factor);
bool has_prefix(std::span<Letter const> w, std::span<Letter const> prefix);
bool has_suffix(std::span<Letter const> w, std::span<Letter const> suffix);

// "1,2,3"; the empty word prints as "ε".
std::string to_string(Word const& w);

// Accepts "1,2,3", "1 2 3", "a1 a2 a3" and "a_1,a_2". The empty string, "e",
// "eps" and "ε" denote the empty word. Letters must lie in 1..n.
Word parse_word(std::string_view text, std::size_t n);

json word_to_json(Word const& w);
Word word_from_json(json const& j, std::size_t n);

// n^len, throwing std::overflow_error if it does not fit in 63 bits.
std::uint64_t word_count(std::size_t n, std::size_t len);

// Calls f(w) for every word of length len over 1..n in lexicographic order.
// The same buffer is reused between calls.
template <typename F>
void for_each_word(std::size_t n, std::size_t len, F&& f) {
  Word w(len, 1);
  while (true) {
    f(static_cast<Word const&>(w));
    std::size_t i = len;
    while (i > 0 && w[i - 1] == n) {
      w[i - 1] = 1;
      --i;
    }
    if (i == 0) {
      return;
    }
    ++w[i - 1];
  }
}

// Every word of length 0..max_len, shortest first then lexicographic.
template <typename F>
void for_each_word_up_to(std::size_t n, std::size_t max_len, F&& f) {
  for (std::size_t len = 0; len <= max_len; ++len) {
    for_each_word(n, len, f);
  }
}

// Base-n index of w (most significant letter first); lexicographic order on
// words of one length is numeric order on indices.
std::uint64_t word_index(std::span<Letter const> w, std::size_t n);
void          word_from_index(std::uint64_t index, std::size_t n, Word& out);

}  // namespace permrel
