#pragma once

#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "permrel/permgroup.hpp"
#include "permrel/presentation.hpp"
#include "permrel/word.hpp"

namespace testing {

inline permrel::PermutationGroup group(std::size_t n, std::string const& gens) {
  return permrel::generate(permrel::parse_generators(gens, n), n);
}

inline permrel::Presentation pres(std::size_t n, std::string const& gens) {
  return permrel::Presentation::from_group(group(n, gens));
}

inline permrel::Word W(std::initializer_list<int> letters) {
  permrel::Word w;
  for (int x : letters) {
    w.push_back(static_cast<permrel::Letter>(x));
  }
  return w;
}

inline oracle::Letters to_oracle(permrel::Word const& w) {
  return {w.begin(), w.end()};
}

inline permrel::Word from_oracle(oracle::Letters const& w) {
  return {w.begin(), w.end()};
}

inline oracle::Images images(permrel::Permutation const& p) {
  return {p.images().begin(), p.images().end()};
}

// The group generated by gens, closed by the oracle rather than the library.
inline std::set<oracle::Images> oracle_group(std::size_t n, std::string const& gens) {
  std::vector<oracle::Images> imgs;
  for (auto const& p : permrel::parse_generators(gens, n)) {
    imgs.push_back(images(p));
  }
  return oracle::closure(imgs, static_cast<int>(n));
}

inline std::set<oracle::Images> images_of(permrel::PermutationGroup const& g) {
  std::set<oracle::Images> out;
  for (auto const& p : g.elements()) {
    out.insert(images(p));
  }
  return out;
}

}  // namespace testing
