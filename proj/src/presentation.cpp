#include "permrel/presentation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "permrel/errors.hpp"

namespace permrel {

namespace {

// 4 bits per letter; n <= kMaxDegree < 16.
std::uint64_t pattern_code(std::span<Letter const> w) noexcept {
  std::uint64_t code = 0;
  for (Letter x : w) {
    code = (code << 4) | x;
  }
  return code;
}

Word pattern_of(Permutation const& s) {
  Word w;
  w.reserve(s.degree());
  for (unsigned x : s.images()) {
    w.push_back(static_cast<Letter>(x));
  }
  return w;
}

bool distinct_letters(std::span<Letter const> w) noexcept {
  std::uint32_t mask = 0;
  for (Letter x : w) {
    std::uint32_t bit = 1U << x;
    if ((mask & bit) != 0) {
      return false;
    }
    mask |= bit;
  }
  return true;
}

}  // namespace

void Presentation::index_patterns() {
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()),
                  patterns_.end());
  codes_.clear();
  for (auto const& p : patterns_) {
    codes_.push_back(pattern_code(p));
  }
  std::sort(codes_.begin(), codes_.end());
}

Presentation Presentation::from_group(PermutationGroup const& g) {
  Presentation p;
  p.n_ = g.degree();
  for (auto const& s : g.elements()) {
    p.patterns_.push_back(pattern_of(s));
    p.perms_.push_back(s);
  }
  p.z_ = pattern_of(Permutation::identity(p.n_));
  p.group_ = g;
  p.index_patterns();
  return p;
}

Presentation Presentation::from_permutations(std::size_t n,
                                             std::span<Permutation const> perms) {
  std::set<Permutation> set{Permutation::identity(n)};
  for (auto const& s : perms) {
    if (s.degree() != n) {
      throw std::invalid_argument("permutation " + s.to_cycles()
                                  + " has wrong degree");
    }
    set.insert(s);
  }
  std::vector<Permutation> elems(set.begin(), set.end());
  bool closed = true;
  for (auto const& a : elems) {
    for (auto const& b : elems) {
      if (set.count(compose(a, b)) == 0) {
        closed = false;
        break;
      }
    }
    if (!closed) {
      break;
    }
  }
  if (closed) {
    std::vector<Permutation> gens;
    for (auto const& s : perms) {
      if (!s.is_identity()) {
        gens.push_back(s);
      }
    }
    return from_group(generate(gens, n));
  }
  Presentation p;
  p.n_ = n;
  for (auto const& s : elems) {
    p.patterns_.push_back(pattern_of(s));
  }
  p.perms_ = std::move(elems);
  p.z_     = pattern_of(Permutation::identity(n));
  p.index_patterns();
  return p;
}

Presentation Presentation::opposite() const {
  Presentation p = *this;
  for (auto& w : p.patterns_) {
    std::reverse(w.begin(), w.end());
  }
  std::reverse(p.z_.begin(), p.z_.end());
  p.opposite_ = !opposite_;
  p.index_patterns();
  return p;
}

bool Presentation::is_pattern(std::span<Letter const> factor) const noexcept {
  if (factor.size() != n_ || !distinct_letters(factor)) {
    return false;
  }
  return std::binary_search(codes_.begin(), codes_.end(),
                            pattern_code(factor));
}

bool Presentation::contains_pattern(std::span<Letter const> w) const noexcept {
  if (w.size() < n_ || patterns_.empty()) {
    return false;
  }
  for (std::size_t p = 0; p + n_ <= w.size(); ++p) {
    if (is_pattern(w.subspan(p, n_))) {
      return true;
    }
  }
  return false;
}

std::vector<std::size_t>
Presentation::pattern_offsets(std::span<Letter const> w) const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p + n_ <= w.size(); ++p) {
    if (is_pattern(w.subspan(p, n_))) {
      out.push_back(p);
    }
  }
  return out;
}

bool Presentation::last_letter_injective() const {
  std::set<Letter> seen;
  for (auto const& w : patterns_) {
    if (!seen.insert(w.back()).second) {
      return false;
    }
  }
  return true;
}

bool Presentation::first_letter_injective() const {
  std::set<Letter> seen;
  for (auto const& w : patterns_) {
    if (!seen.insert(w.front()).second) {
      return false;
    }
  }
  return true;
}

json Presentation::to_json() const {
  json j;
  j["n"] = n_;
  json gens = json::array();
  if (group_) {
    for (auto const& g : group_->generators()) {
      gens.push_back(g.to_cycles());
    }
  } else {
    for (auto const& s : perms_) {
      if (!s.is_identity()) {
        gens.push_back(s.to_cycles());
      }
    }
  }
  j["generators"] = std::move(gens);
  // generators of a group, or the literal relation set
  j["group"]      = group_.has_value();
  json pats       = json::array();
  for (auto const& w : patterns_) {
    pats.push_back(word_to_json(w));
  }
  j["patterns"] = std::move(pats);
  j["opposite"] = opposite_;
  return j;
}

Presentation Presentation::from_json(json const& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("generators")) {
    throw ParseError("presentation JSON needs 'n' and 'generators'");
  }
  auto const n = j.at("n").get<std::size_t>();
  std::vector<Permutation> perms;
  for (auto const& g : j.at("generators")) {
    perms.push_back(parse_cycles(g.get<std::string>(), n));
  }
  Presentation p = j.value("group", false) ? from_group(generate(perms, n))
                                           : from_permutations(n, perms);
  if (j.value("opposite", false)) {
    p = p.opposite();
  }
  if (j.contains("patterns")) {
    std::vector<Word> pats;
    for (auto const& w : j.at("patterns")) {
      pats.push_back(word_from_json(w, n));
    }
    std::sort(pats.begin(), pats.end());
    if (pats != p.patterns()) {
      throw ParseError("presentation JSON patterns do not match generators");
    }
  }
  return p;
}

bool BoundaryPairs::in_a(Letter i, Letter j) const {
  return std::binary_search(a.begin(), a.end(), Word{i, j});
}

bool BoundaryPairs::in_a_tilde(Letter i, Letter j) const {
  return std::binary_search(a_tilde.begin(), a_tilde.end(), Word{i, j});
}

BoundaryPairs boundary_pairs(Presentation const& p) {
  std::size_t const n = p.degree();
  if (n < 2) {
    throw std::invalid_argument("boundary pairs need n >= 2");
  }
  BoundaryPairs out;
  for (auto const& w : p.patterns()) {
    out.a.push_back(Word{w[n - 2], w[n - 1]});
    out.a_tilde.push_back(Word{w[0], w[1]});
  }
  for (auto* v : {&out.a, &out.a_tilde}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  return out;
}

}  // namespace permrel
