#include "permrel/permgroup.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "permrel/errors.hpp"
#include "permrel/word.hpp"

namespace permrel {

////////////////////////////////////////////////////////////////////////////////
// Permutation
////////////////////////////////////////////////////////////////////////////////

Permutation Permutation::from_images(std::vector<unsigned> images) {
  std::size_t const n = images.size();
  if (n == 0 || n > kMaxDegree) {
    throw std::invalid_argument("permutation degree must be in 1.."
                                + std::to_string(kMaxDegree));
  }
  std::vector<bool> seen(n + 1, false);
  for (unsigned x : images) {
    if (x < 1 || x > n || seen[x]) {
      throw std::invalid_argument("images are not a bijection of 1.."
                                  + std::to_string(n));
    }
    seen[x] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<unsigned> images(n);
  std::iota(images.begin(), images.end(), 1U);
  return from_images(std::move(images));
}

unsigned Permutation::operator()(unsigned i) const {
  if (i < 1 || i > images_.size()) {
    throw std::out_of_range("point " + std::to_string(i) + " not in 1.."
                            + std::to_string(images_.size()));
  }
  return images_[i - 1];
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i + 1) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i] - 1] = static_cast<unsigned>(i + 1);
  }
  return Permutation(std::move(inv));
}

std::string Permutation::to_cycles() const {
  std::string       out;
  std::vector<bool> done(images_.size() + 1, false);
  for (unsigned start = 1; start <= images_.size(); ++start) {
    if (done[start] || images_[start - 1] == start) {
      continue;
    }
    out += '(';
    unsigned x = start;
    do {
      if (x != start) {
        out += ',';
      }
      out += std::to_string(x);
      done[x] = true;
      x       = images_[x - 1];
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation parse_cycles(std::string_view text, std::size_t n) {
  if (n == 0 || n > kMaxDegree) {
    throw ParseError("degree must be in 1.." + std::to_string(kMaxDegree));
  }
  std::string compact;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) == 0) {
      compact += c;
    }
  }
  std::vector<unsigned> images(n);
  std::iota(images.begin(), images.end(), 1U);
  std::vector<bool> used(n + 1, false);

  std::size_t pos = 0;
  while (pos < compact.size()) {
    if (compact[pos] != '(') {
      throw ParseError("expected '(' at offset " + std::to_string(pos)
                       + " in '" + std::string(text) + "'");
    }
    auto close = compact.find(')', pos);
    if (close == std::string::npos) {
      throw ParseError("unterminated cycle in '" + std::string(text) + "'");
    }
    std::string_view body(compact.data() + pos + 1, close - pos - 1);
    std::vector<unsigned> cycle;
    std::size_t           p = 0;
    while (p < body.size()) {
      auto comma = body.find(',', p);
      if (comma == std::string_view::npos) {
        comma = body.size();
      }
      auto     token = body.substr(p, comma - p);
      unsigned value = 0;
      auto [ptr, ec]
          = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc{}
          || ptr != token.data() + token.size()) {
        throw ParseError("malformed cycle entry '" + std::string(token)
                         + "' in '" + std::string(text) + "'");
      }
      if (value < 1 || value > n) {
        throw ParseError("point " + std::to_string(value) + " out of range 1.."
                         + std::to_string(n));
      }
      if (used[value]) {
        throw ParseError("point " + std::to_string(value)
                         + " repeated in '" + std::string(text) + "'");
      }
      used[value] = true;
      cycle.push_back(value);
      p = comma + 1;
      if (comma + 1 == body.size()) {
        throw ParseError("trailing ',' in '" + std::string(text) + "'");
      }
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    }
    pos = close + 1;
  }
  return Permutation::from_images(std::move(images));
}

Permutation compose(Permutation const& p, Permutation const& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("cannot compose permutations of degree "
                                + std::to_string(p.degree()) + " and "
                                + std::to_string(q.degree()));
  }
  std::vector<unsigned> images(p.degree());
  for (unsigned i = 1; i <= p.degree(); ++i) {
    images[i - 1] = p(q(i));
  }
  return Permutation::from_images(std::move(images));
}

Permutation full_cycle(std::size_t n) {
  std::vector<unsigned> images(n);
  for (std::size_t i = 0; i < n; ++i) {
    images[i] = static_cast<unsigned>((i + 1) % n + 1);
  }
  return Permutation::from_images(std::move(images));
}

////////////////////////////////////////////////////////////////////////////////
// PermutationGroup
////////////////////////////////////////////////////////////////////////////////

bool PermutationGroup::contains(Permutation const& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::string PermutationGroup::generators_string() const {
  if (generators_.empty()) {
    return "()";
  }
  std::string out;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i > 0) {
      out += ';';
    }
    out += generators_[i].to_cycles();
  }
  return out;
}

PermutationGroup generate(std::span<Permutation const> generators,
                          std::size_t                  n) {
  for (auto const& g : generators) {
    if (g.degree() != n) {
      throw std::invalid_argument("generator " + g.to_cycles()
                                  + " has degree " + std::to_string(g.degree())
                                  + ", expected " + std::to_string(n));
    }
  }
  PermutationGroup      result;
  result.degree_ = n;
  std::set<Permutation> seen{Permutation::identity(n)};
  std::deque<Permutation> queue{Permutation::identity(n)};
  while (!queue.empty()) {
    Permutation current = std::move(queue.front());
    queue.pop_front();
    for (auto const& g : generators) {
      Permutation next = compose(current, g);
      if (seen.insert(next).second) {
        if (seen.size() > kMaxGroupOrder) {
          throw std::length_error("group order exceeds "
                                  + std::to_string(kMaxGroupOrder));
        }
        queue.push_back(std::move(next));
      }
    }
  }
  result.elements_.assign(seen.begin(), seen.end());
  result.generators_.assign(generators.begin(), generators.end());
  return result;
}

PermutationGroup trivial_group(std::size_t n) {
  return generate({}, n);
}

PermutationGroup symmetric_group(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(parse_cycles("(1,2)", n));
  }
  if (n >= 3) {
    gens.push_back(full_cycle(n));
  }
  return generate(gens, n);
}

PermutationGroup cyclic_group(std::size_t n) {
  std::vector<Permutation> gens{full_cycle(n)};
  return generate(gens, n);
}

PermutationGroup klein_four() {
  std::vector<Permutation> gens{parse_cycles("(1,2)(3,4)", 4),
                                parse_cycles("(1,3)(2,4)", 4)};
  return generate(gens, 4);
}

namespace {

void check_point(PermutationGroup const& g, unsigned i) {
  if (i < 1 || i > g.degree()) {
    throw std::out_of_range("point " + std::to_string(i) + " not in 1.."
                            + std::to_string(g.degree()));
  }
}

}  // namespace

PermutationGroup stabilizer(PermutationGroup const& g, unsigned i) {
  check_point(g, i);
  PermutationGroup result;
  result.degree_ = g.degree();
  for (auto const& s : g.elements()) {
    if (s(i) == i) {
      result.elements_.push_back(s);
      if (!s.is_identity()) {
        result.generators_.push_back(s);
      }
    }
  }
  return result;
}

std::vector<unsigned> orbit(PermutationGroup const& g, unsigned i) {
  check_point(g, i);
  std::vector<unsigned> out;
  for (auto const& s : g.elements()) {
    out.push_back(s(i));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_transitive(PermutationGroup const& g) {
  return orbit(g, 1).size() == g.degree();
}

bool is_abelian(PermutationGroup const& g) {
  auto const elems = g.elements();
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = a + 1; b < elems.size(); ++b) {
      if (compose(elems[a], elems[b]) != compose(elems[b], elems[a])) {
        return false;
      }
    }
  }
  return true;
}

bool is_semiregular(PermutationGroup const& g) {
  for (auto const& s : g.elements()) {
    if (s.is_identity()) {
      continue;
    }
    for (unsigned i = 1; i <= g.degree(); ++i) {
      if (s(i) == i) {
        return false;
      }
    }
  }
  return true;
}

bool contains_full_cycle(PermutationGroup const& g) {
  return g.contains(full_cycle(g.degree()));
}

std::vector<Permutation> parse_generators(std::string_view text,
                                          std::size_t      n) {
  std::vector<Permutation> out;
  std::size_t              pos = 0;
  while (pos <= text.size()) {
    auto semi = text.find(';', pos);
    if (semi == std::string_view::npos) {
      semi = text.size();
    }
    auto piece = text.substr(pos, semi - pos);
    if (piece.find_first_not_of(" \t") != std::string_view::npos) {
      out.push_back(parse_cycles(piece, n));
    }
    pos = semi + 1;
  }
  return out;
}

}  // namespace permrel
