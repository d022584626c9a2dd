#include "permrel/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <stdexcept>

#include "permrel/errors.hpp"

namespace permrel {

Word concat(std::initializer_list<std::span<Letter const>> parts) {
  std::size_t total = 0;
  for (auto const& p : parts) {
    total += p.size();
  }
  Word out;
  out.reserve(total);
  for (auto const& p : parts) {
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

Word reverse(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

Word power(Letter letter, std::size_t m) {
  return Word(m, letter);
}

Word repeat(Word const& w, std::size_t m) {
  Word out;
  out.reserve(w.size() * m);
  for (std::size_t i = 0; i < m; ++i) {
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

bool has_factor(std::span<Letter const> w, std::span<Letter const> factor) {
  if (factor.size() > w.size()) {
    return false;
  }
  return std::search(w.begin(), w.end(), factor.begin(), factor.end())
         != w.end();
}

bool has_prefix(std::span<Letter const> w, std::span<Letter const> prefix) {
  return prefix.size() <= w.size()
         && std::equal(prefix.begin(), prefix.end(), w.begin());
}

bool has_suffix(std::span<Letter const> w, std::span<Letter const> suffix) {
  return suffix.size() <= w.size()
         && std::equal(suffix.begin(), suffix.end(), w.end() - suffix.size());
}

std::string to_string(Word const& w) {
  if (w.empty()) {
    return "ε";
  }
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(static_cast<unsigned>(w[i]));
  }
  return out;
}

namespace {

bool is_separator(char c) {
  return c == ',' || std::isspace(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

Word parse_word(std::string_view text, std::size_t n) {
  auto const trimmed = [&] {
    auto b = text.find_first_not_of(" \t\n\r");
    if (b == std::string_view::npos) {
      return std::string_view{};
    }
    auto e = text.find_last_not_of(" \t\n\r");
    return text.substr(b, e - b + 1);
  }();
  if (trimmed.empty() || trimmed == "e" || trimmed == "eps"
      || trimmed == "ε") {
    return {};
  }
  Word        out;
  std::size_t pos = 0;
  while (pos < trimmed.size()) {
    std::size_t commas = 0;
    while (pos < trimmed.size() && is_separator(trimmed[pos])) {
      commas += trimmed[pos] == ',' ? 1 : 0;
      ++pos;
    }
    if (commas > 1 || (commas == 1 && (out.empty() || pos >= trimmed.size()))) {
      throw ParseError("empty letter in word '" + std::string(text) + "'");
    }
    if (pos >= trimmed.size()) {
      break;
    }
    std::size_t end = pos;
    while (end < trimmed.size() && !is_separator(trimmed[end])) {
      ++end;
    }
    std::string_view token = trimmed.substr(pos, end - pos);
    if (!token.empty() && (token.front() == 'a' || token.front() == 'x')) {
      token.remove_prefix(1);
      if (!token.empty() && token.front() == '_') {
        token.remove_prefix(1);
      }
    }
    unsigned value = 0;
    auto [ptr, ec]
        = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{}
        || ptr != token.data() + token.size()) {
      throw ParseError("malformed letter '"
                       + std::string(trimmed.substr(pos, end - pos))
                       + "' in word '" + std::string(text) + "'");
    }
    if (value < 1 || value > n) {
      throw ParseError("letter " + std::to_string(value)
                       + " out of range 1.." + std::to_string(n));
    }
    out.push_back(static_cast<Letter>(value));
    pos = end;
  }
  return out;
}

json word_to_json(Word const& w) {
  json j = json::array();
  for (Letter x : w) {
    j.push_back(static_cast<unsigned>(x));
  }
  return j;
}

Word word_from_json(json const& j, std::size_t n) {
  if (!j.is_array()) {
    throw ParseError("word must be a JSON array");
  }
  Word out;
  for (auto const& x : j) {
    auto v = x.get<unsigned>();
    if (v < 1 || v > n) {
      throw ParseError("letter " + std::to_string(v) + " out of range");
    }
    out.push_back(static_cast<Letter>(v));
  }
  return out;
}

std::uint64_t word_count(std::size_t n, std::size_t len) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (total > (std::numeric_limits<std::uint64_t>::max() >> 1) / n) {
      throw std::overflow_error("n^len does not fit in 63 bits");
    }
    total *= n;
  }
  return total;
}

std::uint64_t word_index(std::span<Letter const> w, std::size_t n) {
  std::uint64_t index = 0;
  for (Letter x : w) {
    index = index * n + (x - 1);
  }
  return index;
}

void word_from_index(std::uint64_t index, std::size_t n, Word& out) {
  for (std::size_t i = out.size(); i > 0; --i) {
    out[i - 1] = static_cast<Letter>(index % n + 1);
    index /= n;
  }
}

}  // namespace permrel
