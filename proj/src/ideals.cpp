#include "permrel/ideals.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <set>
#include <stdexcept>

#include "permrel/errors.hpp"

namespace permrel {

////////////////////////////////////////////////////////////////////////////////
// IdealSpec
////////////////////////////////////////////////////////////////////////////////

IdealSpec::IdealSpec(std::initializer_list<IdealAtom> atoms) : atoms_(atoms) {
  normalize();
}

IdealSpec::IdealSpec(std::vector<IdealAtom> atoms) : atoms_(std::move(atoms)) {
  normalize();
}

void IdealSpec::normalize() {
  for (auto const& atom : atoms_) {
    if (auto const* z = std::get_if<ZPower>(&atom); z && z->m == 0) {
      throw std::invalid_argument("z power exponent must be >= 1");
    }
    if (auto const* g = std::get_if<GeneratorPower>(&atom);
        g && (g->m == 0 || g->i == 0)) {
      throw std::invalid_argument("generator power needs i >= 1 and m >= 1");
    }
  }
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

namespace {

std::size_t parse_number(std::string_view token, std::string_view context) {
  std::size_t value = 0;
  auto [ptr, ec]
      = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("malformed number '" + std::string(token) + "' in '"
                     + std::string(context) + "'");
  }
  return value;
}

}  // namespace

IdealSpec IdealSpec::parse(std::string_view text, std::size_t n) {
  std::string compact;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) == 0) {
      compact += c;
    }
  }
  if (compact.empty()) {
    throw ParseError("empty ideal spec");
  }
  std::vector<IdealAtom> atoms;
  std::size_t            pos = 0;
  while (pos <= compact.size()) {
    auto plus = compact.find('+', pos);
    if (plus == std::string::npos) {
      plus = compact.size();
    }
    std::string_view term(compact.data() + pos, plus - pos);
    if (term.empty()) {
      throw ParseError("empty term in ideal spec '" + std::string(text) + "'");
    }
    if (term == "Sz") {
      atoms.emplace_back(RightZ{});
    } else if (term == "zS") {
      atoms.emplace_back(LeftZ{});
    } else {
      std::string_view base = term;
      std::size_t      m    = 1;
      if (auto caret = term.find('^'); caret != std::string_view::npos) {
        base = term.substr(0, caret);
        m    = parse_number(term.substr(caret + 1), text);
        if (m == 0) {
          throw ParseError("exponent must be >= 1 in '" + std::string(text)
                           + "'");
        }
      }
      if (base == "z") {
        atoms.emplace_back(ZPower{m});
      } else if (!base.empty() && base.front() == 'a') {
        base.remove_prefix(1);
        if (!base.empty() && base.front() == '_') {
          base.remove_prefix(1);
        }
        std::size_t i = parse_number(base, text);
        if (i < 1 || i > n) {
          throw ParseError("generator index " + std::to_string(i)
                           + " out of range 1.." + std::to_string(n));
        }
        atoms.emplace_back(GeneratorPower{static_cast<Letter>(i), m});
      } else {
        throw ParseError("unknown ideal term '" + std::string(term) + "'");
      }
    }
    pos = plus + 1;
  }
  return IdealSpec(std::move(atoms));
}

bool IdealSpec::has_z_power() const {
  return std::any_of(atoms_.begin(), atoms_.end(), [](auto const& a) {
    return std::holds_alternative<ZPower>(a);
  });
}

bool IdealSpec::has_generator_power() const {
  return std::any_of(atoms_.begin(), atoms_.end(), [](auto const& a) {
    return std::holds_alternative<GeneratorPower>(a);
  });
}

bool IdealSpec::has_one_sided() const {
  return std::any_of(atoms_.begin(), atoms_.end(), [](auto const& a) {
    return std::holds_alternative<RightZ>(a) || std::holds_alternative<LeftZ>(a);
  });
}

std::string IdealSpec::to_string() const {
  std::string out;
  for (auto const& atom : atoms_) {
    if (!out.empty()) {
      out += " + ";
    }
    std::visit(
        [&](auto const& a) {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, ZPower>) {
            out += "z^" + std::to_string(a.m);
          } else if constexpr (std::is_same_v<T, GeneratorPower>) {
            out += "a_" + std::to_string(a.i) + "^" + std::to_string(a.m);
          } else if constexpr (std::is_same_v<T, RightZ>) {
            out += "Sz";
          } else {
            out += "zS";
          }
        },
        atom);
  }
  return out;
}

json IdealSpec::to_json() const {
  json j = json::array();
  for (auto const& atom : atoms_) {
    std::visit(
        [&](auto const& a) {
          using T = std::decay_t<decltype(a)>;
          json e;
          if constexpr (std::is_same_v<T, ZPower>) {
            e["kind"] = "two_sided_z_power";
            e["m"]    = a.m;
          } else if constexpr (std::is_same_v<T, GeneratorPower>) {
            e["kind"] = "two_sided_generator_power";
            e["i"]    = static_cast<unsigned>(a.i);
            e["m"]    = a.m;
          } else if constexpr (std::is_same_v<T, RightZ>) {
            e["kind"] = "right_z";
          } else {
            e["kind"] = "left_z";
          }
          j.push_back(std::move(e));
        },
        atom);
  }
  return j;
}

IdealSpec all_generator_powers(std::size_t n, std::size_t m) {
  std::vector<IdealAtom> atoms;
  for (std::size_t i = 1; i <= n; ++i) {
    atoms.emplace_back(GeneratorPower{static_cast<Letter>(i), m});
  }
  return IdealSpec(std::move(atoms));
}

////////////////////////////////////////////////////////////////////////////////
// Membership
////////////////////////////////////////////////////////////////////////////////

namespace {

template <typename Pred>
bool any_member(Monoid const& s, Word const& w, Pred&& pred) {
  auto cls = s.class_of(w);
  return std::any_of(cls->members.begin(), cls->members.end(), pred);
}

}  // namespace

bool in_two_sided_z_power(Monoid const& s, Word const& w, std::size_t m) {
  if (m == 0) {
    throw std::invalid_argument("z power exponent must be >= 1");
  }
  Word const f = repeat(s.presentation().z_word(), m);
  if (w.size() < f.size()) {
    return false;
  }
  return any_member(s, w, [&](Word const& x) { return has_factor(x, f); });
}

bool in_two_sided_generator_power(Monoid const& s,
                                  Word const&   w,
                                  Letter        i,
                                  std::size_t   m) {
  if (m == 0 || i < 1 || i > s.degree()) {
    throw std::invalid_argument("generator power needs i in 1..n and m >= 1");
  }
  Word const f = power(i, m);
  if (w.size() < m) {
    return false;
  }
  return any_member(s, w, [&](Word const& x) { return has_factor(x, f); });
}

bool in_right_z(Monoid const& s, Word const& w) {
  auto const& z = s.presentation().z_word();
  if (w.size() < z.size()) {
    return false;
  }
  return any_member(s, w, [&](Word const& x) { return has_suffix(x, z); });
}

bool in_left_z(Monoid const& s, Word const& w) {
  auto const& z = s.presentation().z_word();
  if (w.size() < z.size()) {
    return false;
  }
  return any_member(s, w, [&](Word const& x) { return has_prefix(x, z); });
}

bool in_atom(Monoid const& s, Word const& w, IdealAtom const& atom) {
  return std::visit(
      [&](auto const& a) -> bool {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, ZPower>) {
          return in_two_sided_z_power(s, w, a.m);
        } else if constexpr (std::is_same_v<T, GeneratorPower>) {
          return in_two_sided_generator_power(s, w, a.i, a.m);
        } else if constexpr (std::is_same_v<T, RightZ>) {
          return in_right_z(s, w);
        } else {
          return in_left_z(s, w);
        }
      },
      atom);
}

bool in_spec(Monoid const& s, Word const& w, IdealSpec const& spec) {
  for (auto const& atom : spec.atoms()) {
    if (in_atom(s, w, atom)) {
      return true;
    }
  }
  return false;
}

bool in_right_power(Monoid const& s, Word const& w, Letter i, std::size_t k) {
  Word const f = power(i, k);
  if (w.size() < k) {
    return false;
  }
  return any_member(s, w, [&](Word const& x) { return has_suffix(x, f); });
}

bool in_left_power(Monoid const& s, Word const& w, Letter i, std::size_t k) {
  Word const f = power(i, k);
  if (w.size() < k) {
    return false;
  }
  return any_member(s, w, [&](Word const& x) { return has_prefix(x, f); });
}

bool monomial_preimage_in_SzS(Presentation const& p, Word const& w) {
  return p.contains_pattern(w);
}

////////////////////////////////////////////////////////////////////////////////
// Primality
////////////////////////////////////////////////////////////////////////////////

std::string to_string(PrimeVerdict::Outcome outcome) {
  switch (outcome) {
    case PrimeVerdict::Outcome::no_counterexample_up_to:
      return "no_counterexample_up_to";
    case PrimeVerdict::Outcome::not_prime_certified:
      return "not_prime_certified";
    case PrimeVerdict::Outcome::counterexample:
      return "counterexample";
    case PrimeVerdict::Outcome::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

json PrimeVerdict::to_json() const {
  json j;
  j["outcome"] = permrel::to_string(outcome);
  if (outcome == Outcome::no_counterexample_up_to
      || outcome == Outcome::counterexample) {
    j["max_uv_len"]    = max_uv_len;
    j["max_mid_len"]   = max_mid_len;
    j["pairs_checked"] = pairs_checked;
  }
  if (u) {
    j["u"] = word_to_json(*u);
  }
  if (v) {
    j["v"] = word_to_json(*v);
  }
  if (!certificate.empty()) {
    j["certificate"] = certificate;
  }
  if (!reason.empty()) {
    j["reason"] = reason;
  }
  return j;
}

std::optional<Word> find_separator(Monoid const&    s,
                                   IdealSpec const& spec,
                                   Word const&      u,
                                   Word const&      v,
                                   std::size_t      max_mid_len) {
  std::optional<Word> found;
  Word                buffer;
  for (std::size_t len = 0; len <= max_mid_len && !found; ++len) {
    for_each_word(s.degree(), len, [&](Word const& mid) {
      if (found) {
        return;
      }
      buffer.clear();
      buffer.insert(buffer.end(), u.begin(), u.end());
      buffer.insert(buffer.end(), mid.begin(), mid.end());
      buffer.insert(buffer.end(), v.begin(), v.end());
      if (!in_spec(s, buffer, spec)) {
        found = mid;
      }
    });
  }
  return found;
}

PrimeVerdict check_prime_bounded(Monoid const&    s,
                                 IdealSpec const& spec,
                                 std::size_t      max_uv_len,
                                 std::size_t      max_mid_len) {
  if (max_uv_len < 1 || max_mid_len < 1) {
    throw std::invalid_argument("prime check bounds must be >= 1");
  }
  if (spec.empty()) {
    throw std::invalid_argument("prime check needs a nonempty ideal");
  }
  std::vector<Word> outside;
  for_each_word_up_to(s.degree(), max_uv_len, [&](Word const& w) {
    if (s.canonical_form(w) == w && !in_spec(s, w, spec)) {
      outside.push_back(w);
    }
  });
  PrimeVerdict verdict;
  verdict.max_uv_len  = max_uv_len;
  verdict.max_mid_len = max_mid_len;
  for (auto const& u : outside) {
    for (auto const& v : outside) {
      ++verdict.pairs_checked;
      if (!find_separator(s, spec, u, v, max_mid_len)) {
        verdict.outcome = PrimeVerdict::Outcome::counterexample;
        verdict.u       = u;
        verdict.v       = v;
        return verdict;
      }
    }
  }
  return verdict;
}

PrimeVerdict verify_not_prime_zSz(Monoid const& s, IdealSpec const& spec) {
  PrimeVerdict verdict;
  verdict.outcome  = PrimeVerdict::Outcome::not_prime_certified;
  Word const& z    = s.presentation().z_word();
  auto        fact = [&](Word const& w, bool expected) {
    bool inside = in_spec(s, w, spec);
    verdict.certificate.push_back(
        json{{"word", word_to_json(w)}, {"in_ideal", inside}});
    if (inside != expected
        && verdict.outcome == PrimeVerdict::Outcome::not_prime_certified) {
      verdict.outcome = PrimeVerdict::Outcome::inconclusive;
      verdict.reason  = to_string(w) + (inside ? " lies in" : " lies outside")
                       + " the ideal";
    }
    return inside == expected;
  };
  if (!fact(z, false)) {
    return verdict;
  }
  for (std::size_t i = 1; i <= s.degree(); ++i) {
    if (!fact(concat(z, Word{static_cast<Letter>(i)}), true)) {
      return verdict;
    }
  }
  fact(concat(z, z), true);
  return verdict;
}

BoundaryAvoidance boundary_avoidance(BoundaryPairs const& pairs,
                                     std::size_t          n,
                                     Letter               i) {
  BoundaryAvoidance out;
  for (std::size_t c = 1; c <= n; ++c) {
    auto const j = static_cast<Letter>(c);
    if (j == i) {
      continue;
    }
    if (!out.j && !pairs.in_a(i, j)) {
      out.j = j;
    }
    if (!out.j_prime && !pairs.in_a_tilde(j, i)) {
      out.j_prime = j;
    }
  }
  return out;
}

namespace {

std::vector<Letter> last_letters(Monoid const& s, Word const& w) {
  std::set<Letter> out;
  auto const       cls = s.class_of(w);
  for (auto const& x : cls->members) {
    out.insert(x.back());
  }
  return {out.begin(), out.end()};
}

std::vector<Letter> first_letters(Monoid const& s, Word const& w) {
  std::set<Letter> out;
  auto const       cls = s.class_of(w);
  for (auto const& x : cls->members) {
    out.insert(x.front());
  }
  return {out.begin(), out.end()};
}

// Squares of letters outside the orbits of n and 1 pad u and v; for a
// union containing generator powers the padding is topped up only as far
// as needed and a separating letter goes between equal paddings.
Word nontransitive_candidate(Monoid const&           s,
                             IdealSpec const&        spec,
                             PermutationGroup const& g,
                             Word const&             u,
                             Word const&             v) {
  auto const  n       = static_cast<unsigned>(s.degree());
  auto const  orbit_n = orbit(g, n);
  auto const  orbit_1 = orbit(g, 1);
  auto const  outside = [](std::vector<unsigned> const& orb, unsigned lo,
                          unsigned hi) -> Letter {
    for (unsigned x = lo; x <= hi; ++x) {
      if (!std::binary_search(orb.begin(), orb.end(), x)) {
        return static_cast<Letter>(x);
      }
    }
    throw std::logic_error("non-transitive group with a full orbit");
  };
  Letter const l       = outside(orbit_n, 1, n - 1);
  Letter const l_prime = outside(orbit_1, 2, n);
  if (!spec.has_generator_power()) {
    return concat(power(l, 2), power(l_prime, 2));
  }
  std::size_t const left = in_right_power(s, u, l, 2)   ? 0
                           : in_right_power(s, u, l, 1) ? 1
                                                        : 2;
  std::size_t const right = in_left_power(s, v, l_prime, 2)   ? 0
                            : in_left_power(s, v, l_prime, 1) ? 1
                                                              : 2;
  Word mid = power(l, left);
  if (l == l_prime) {
    mid.push_back(l == 1 ? 2 : 1);
  }
  auto tail = power(l_prime, right);
  mid.insert(mid.end(), tail.begin(), tail.end());
  return mid;
}

}  // namespace

Word prime_witness(Monoid const&    s,
                   IdealSpec const& spec,
                   Word const&      u,
                   Word const&      v) {
  auto const& p = s.presentation();
  if (spec.empty() || spec.has_one_sided()) {
    throw HypothesisError(
        "prime_witness supports unions of S z^m S and S a_i^m S only");
  }
  if (in_spec(s, u, spec) || in_spec(s, v, spec)) {
    throw std::invalid_argument("u and v must lie outside the ideal");
  }
  if (!p.group() || p.is_opposite()) {
    throw HypothesisError("prime_witness needs a presentation built from a group");
  }
  if (p.degree() < 3) {
    throw HypothesisError("prime_witness needs n >= 3");
  }
  auto const& g = *p.group();

  bool        single_square = false;
  bool        powers_ok     = true;
  Letter      square_letter = 0;
  for (auto const& atom : spec.atoms()) {
    if (auto const* gp = std::get_if<GeneratorPower>(&atom)) {
      if (gp->m < 3) {
        powers_ok = false;
        if (gp->m == 2 && spec.atoms().size() == 1) {
          single_square = true;
          square_letter = gp->i;
        }
      }
    }
  }

  auto verified = [&](Word const& mid) {
    return !in_spec(s, concat(u, mid, v), spec);
  };
  if (u.empty() || v.empty()) {
    return {};
  }

  bool const transitive = is_transitive(g);
  bool const abelian_no_cycle = is_abelian(g) && !contains_full_cycle(g);

  std::vector<Word> candidates;
  if (single_square) {
    if (!transitive || !abelian_no_cycle) {
      throw HypothesisError("a single S a_i^2 S needs H transitive, abelian "
                            "and without (1,...,n)");
    }
  } else if (!powers_ok) {
    throw HypothesisError("generator powers must have exponent >= 3");
  }

  if (!transitive && !single_square) {
    candidates.push_back(nontransitive_candidate(s, spec, g, u, v));
  } else if (abelian_no_cycle) {
    auto const pairs = boundary_pairs(p);
    for (Letter k : last_letters(s, u)) {
      for (Letter l : first_letters(s, v)) {
        auto const av_k = boundary_avoidance(pairs, p.degree(), k);
        auto const av_l = boundary_avoidance(pairs, p.degree(), l);
        if (!av_k.j || !av_l.j_prime) {
          throw HypothesisError("no boundary-avoiding letters exist");
        }
        Letter const j  = *av_k.j;
        Letter const jp = *av_l.j_prime;
        if (single_square) {
          Letter const i = square_letter;
          if (j != i && jp != i) {
            candidates.push_back(concat(power(j, 2), power(jp, 2)));
          } else if (j != i) {
            candidates.push_back(concat(power(j, 2), power(l, 2)));
          } else if (jp != i) {
            candidates.push_back(concat(power(k, 2), power(jp, 2)));
          } else {
            candidates.push_back(concat(power(k, 2), power(l, 2)));
          }
        } else if (j != jp) {
          candidates.push_back(concat(power(j, 2), power(jp, 2)));
        } else {
          candidates.push_back(Word{j, jp});
        }
        if (!spec.has_generator_power()) {
          // doubling the boundary letters themselves
          candidates.push_back(concat(power(k, 2), power(l, 2)));
        }
      }
    }
  } else {
    throw HypothesisError("prime_witness needs H non-transitive, or abelian "
                          "without (1,...,n)");
  }

  for (auto const& mid : candidates) {
    if (verified(mid)) {
      return mid;
    }
  }
  // When u or v has several boundary letters the constructed words can meet
  // a generator power; fall back to the shortest separating word.
  for (std::size_t len = 1; len <= p.degree() + 1; ++len) {
    std::optional<Word> found;
    for_each_word(p.degree(), len, [&](Word const& mid) {
      if (!found && verified(mid)) {
        found = mid;
      }
    });
    if (found) {
      return *found;
    }
  }
  throw std::logic_error("prime_witness: constructed middle word "
                         + to_string(candidates.front())
                         + " does not separate " + to_string(u) + " and "
                         + to_string(v));
}

bool fractions_obstruction(Monoid const& s, std::size_t max_len) {
  auto const& p = s.presentation();
  if (!p.group() || p.is_opposite()) {
    throw HypothesisError("fractions_obstruction needs a group presentation");
  }
  auto const&       g = *p.group();
  std::size_t const n = p.degree();
  if (n < 3 || !is_abelian(g) || contains_full_cycle(g)
      || !stabilizer(g, 1).is_trivial()
      || !stabilizer(g, static_cast<unsigned>(n)).is_trivial()) {
    throw HypothesisError("fractions_obstruction needs n >= 3, H abelian, "
                          "H_1 = H_n = {id} and (1,...,n) not in H");
  }
  bool clear = true;
  for_each_word_up_to(n, max_len, [&](Word const& w) {
    if (!clear || w.size() < n) {
      return;
    }
    if ((in_right_z(s, w) && in_right_power(s, w, 1, 2))
        || (in_left_z(s, w) && in_left_power(s, w, 1, 2))) {
      clear = false;
    }
  });
  return clear;
}

}  // namespace permrel
