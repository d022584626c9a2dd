#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permrel {

/// Raised when a congruence-class closure exceeds the configured size bound.
/// Callers must treat this as "undecided", never as a negative answer.
class UndecidedAtCap : public std::runtime_error {
 public:
  UndecidedAtCap(std::string const& what, std::size_t cap)
      : std::runtime_error(what), cap_(cap) {}

  [[nodiscard]] std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Raised by an oracle whose mathematical hypotheses do not hold for the
/// given presentation or group.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input (cycles, words, ideal specs).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace permrel
