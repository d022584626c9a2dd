#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permrel/catalog.hpp"
#include "permrel/errors.hpp"
#include "permrel/ideals.hpp"
#include "support.hpp"

using namespace permrel;
using testing::pres;
using testing::W;
using Outcome = PrimeVerdict::Outcome;

namespace {

Monoid monoid(std::size_t n, std::string const& gens) {
  return Monoid(pres(n, gens));
}

Monoid trivial_monoid(std::size_t n) {
  return Monoid(Presentation::from_group(trivial_group(n)));
}

}  // namespace

TEST_CASE("ideal spec syntax") {
  auto const s = IdealSpec::parse("z^2 + a_1^3 + Sz + zS", 3);
  CHECK(s.atoms().size() == 4);
  CHECK(s.has_z_power());
  CHECK(s.has_generator_power());
  CHECK(s.has_one_sided());
  CHECK(IdealSpec::parse(s.to_string(), 3) == s);
  CHECK(IdealSpec::parse("z", 3) == IdealSpec{ZPower{1}});
  CHECK(IdealSpec::parse("a_2", 3) == IdealSpec{GeneratorPower{2, 1}});
  CHECK(IdealSpec::parse("a_1^3 + z^1 + a_1^3", 3) == IdealSpec{ZPower{1}, GeneratorPower{1, 3}});
  CHECK_THROWS_AS(IdealSpec::parse("a_4^2", 3), ParseError);
  CHECK_THROWS_AS(IdealSpec::parse("z^0", 3), ParseError);
  CHECK_THROWS_AS(IdealSpec::parse("z +", 3), ParseError);
  CHECK_THROWS_AS(IdealSpec::parse("y^2", 3), ParseError);
  CHECK(all_generator_powers(3, 2).atoms().size() == 3);
}

TEST_CASE("two-sided z powers") {
  auto const c3  = monoid(3, "(1,2,3)");
  auto const t13 = monoid(3, "(1,3)");
  CHECK(in_two_sided_z_power(t13, W({1, 2, 3}), 1));
  CHECK(in_two_sided_z_power(c3, W({2, 3, 1}), 1));
  CHECK_FALSE(in_two_sided_z_power(t13, W({1, 1, 2}), 1));
  CHECK(in_two_sided_z_power(c3, W({3, 1, 2, 3, 1, 2}), 2));
  CHECK(in_two_sided_z_power(c3, W({3, 1, 2, 2, 3, 1}), 2));
  // the second pattern slides left onto the first: 1,2,3,2,3,1,2 -> 1,2,3,1,2,3,2
  CHECK(in_two_sided_z_power(c3, W({1, 2, 3, 2, 1, 2, 3}), 2));
  CHECK_FALSE(in_two_sided_z_power(c3, W({1, 2, 3, 3, 2, 1}), 2));
  // monotone in m
  for_each_word(3, 7, [&](Word const& w) {
    if (in_two_sided_z_power(c3, w, 2)) {
      CHECK(in_two_sided_z_power(c3, w, 1));
    }
  });
}

TEST_CASE("z power membership against the union-find partition") {
  for (auto const& gens : {"(1,2,3)", "(1,3)", "(1,2);(1,2,3)"}) {
    Monoid const s(pres(3, gens));
    std::set<oracle::Letters> pats;
    for (auto const& w : s.presentation().patterns()) {
      pats.insert(testing::to_oracle(w));
    }
    for (std::size_t len = 3; len <= 7; ++len) {
      auto const label = oracle::partition(3, pats, len);
      std::set<std::uint64_t> hit1, hit2;
      for (std::uint64_t idx = 0; idx < label.size(); ++idx) {
        auto const w = oracle::decode(idx, 3, len);
        if (oracle::has_factor(w, {1, 2, 3})) {
          hit1.insert(label[idx]);
        }
        if (oracle::has_factor(w, {1, 2, 3, 1, 2, 3})) {
          hit2.insert(label[idx]);
        }
      }
      for (std::uint64_t idx = 0; idx < label.size(); ++idx) {
        Word const w = testing::from_oracle(oracle::decode(idx, 3, len));
        REQUIRE(in_two_sided_z_power(s, w, 1) == (hit1.count(label[idx]) == 1));
        REQUIRE(in_two_sided_z_power(s, w, 2) == (hit2.count(label[idx]) == 1));
      }
    }
  }
}

TEST_CASE("two-sided generator powers") {
  auto const c3 = monoid(3, "(1,2,3)");
  CHECK(in_two_sided_generator_power(c3, W({2, 2, 2}), 2, 3));
  CHECK(in_two_sided_generator_power(c3, W({1, 2, 3, 1}), 1, 2));
  CHECK_FALSE(in_two_sided_generator_power(trivial_monoid(3), W({1, 2, 1}), 1, 2));
}

TEST_CASE("one-sided z ideals") {
  auto const c3  = monoid(3, "(1,2,3)");
  auto const t13 = monoid(3, "(1,3)");
  CHECK(in_right_z(t13, W({1, 2, 3})));
  CHECK(in_left_z(t13, W({1, 2, 3})));
  // 1,3,2,1 rewrites to 1,1,2,3 through the factor 3,2,1
  CHECK(in_right_z(t13, W({1, 3, 2, 1})));
  CHECK(congruence_class(t13.presentation(), W({1, 3, 2, 1})).contains(W({1, 1, 2, 3})));
  CHECK_FALSE(in_right_z(t13, W({1, 3, 1, 2})));
  CHECK(in_right_z(c3, W({1, 1, 2, 3})));
  CHECK(in_left_z(c3, W({3, 1, 2, 1})));
  CHECK(in_right_power(c3, W({1, 2, 3, 1}), 1, 2));
  CHECK_FALSE(in_left_power(trivial_monoid(3), W({2, 1, 1}), 1, 2));
}

TEST_CASE("union membership") {
  auto const c3      = monoid(3, "(1,2,3)");
  auto const squares = all_generator_powers(3, 2);
  Word const z       = c3.presentation().z_word();
  CHECK(in_spec(c3, z, IdealSpec{ZPower{1}}));
  CHECK_FALSE(in_spec(c3, z, squares));
  CHECK(in_spec(c3, concat(z, z), squares));
  CHECK_FALSE(in_spec(c3, Word{}, squares));
}

TEST_CASE("literal SzS preimage") {
  auto const t13 = pres(3, "(1,3)");
  CHECK(monomial_preimage_in_SzS(t13, t13.z_word()));
  CHECK(monomial_preimage_in_SzS(t13, W({3, 2, 1, 1})));
  CHECK_FALSE(monomial_preimage_in_SzS(t13, W({3, 2})));
  for (auto const& gens : {"(1,3)", "(1,2,3)", "(1,2)", ""}) {
    Monoid const s(pres(3, gens));
    for_each_word_up_to(3, 6, [&](Word const& w) {
      CHECK(in_two_sided_z_power(s, w, 1) == monomial_preimage_in_SzS(s.presentation(), w));
    });
  }
}

TEST_CASE("ideal absorption") {
  auto const   k    = Monoid(Presentation::from_group(klein_four()));
  auto const   spec = IdealSpec{ZPower{1}, GeneratorPower{1, 3}};
  std::vector<Word> inside;
  for_each_word_up_to(4, 5, [&](Word const& w) {
    if (in_spec(k, w, spec)) {
      inside.push_back(w);
    }
  });
  REQUIRE(!inside.empty());
  for (std::size_t i = 0; i < inside.size(); i += 7) {
    for (auto const& pre : {W({}), W({2}), W({4, 3})}) {
      for (auto const& post : {W({}), W({1}), W({3, 2})}) {
        CHECK(in_spec(k, concat(pre, inside[i], post), spec));
      }
    }
  }
}

TEST_CASE("bounded primality") {
  SUBCASE("free monoid, a letter ideal") {
    auto const s = trivial_monoid(3);
    CHECK(find_separator(s, IdealSpec{GeneratorPower{1, 1}}, W({2}), W({2}), 2) == Word{});
    auto const v = check_prime_bounded(s, IdealSpec{GeneratorPower{1, 1}}, 2, 2);
    CHECK(v.outcome == Outcome::no_counterexample_up_to);
  }
  SUBCASE("SzS for a transposition") {
    auto const v = check_prime_bounded(monoid(3, "(1,3)"), IdealSpec{ZPower{1}}, 3, 4);
    CHECK(v.outcome == Outcome::no_counterexample_up_to);
    CHECK(v.pairs_checked > 0);
  }
  SUBCASE("squares for the 3-cycle") {
    auto const s = monoid(3, "(1,2,3)");
    auto const q = all_generator_powers(3, 2);
    auto const v = check_prime_bounded(s, q, 3, 4);
    REQUIRE(v.outcome == Outcome::counterexample);
    REQUIRE(v.u.has_value());
    REQUIRE(v.v.has_value());
    CHECK_FALSE(in_spec(s, *v.u, q));
    CHECK_FALSE(in_spec(s, *v.v, q));
    CHECK_FALSE(find_separator(s, q, *v.u, *v.v, 4).has_value());
    Word const z = s.presentation().z_word();
    CHECK_FALSE(find_separator(s, q, z, z, 4).has_value());
  }
}

TEST_CASE("zSz non-primality certificate") {
  for (auto const& e : enumerate_abelian_subgroups(4)) {
    if (!e.transitive) {
      continue;
    }
    Monoid const s(Presentation::from_group(e.group));
    auto const   v = verify_not_prime_zSz(s, all_generator_powers(4, 2));
    CHECK(v.outcome == Outcome::not_prime_certified);
    CHECK(v.certificate.size() == 6);
  }
  auto const t13 = monoid(3, "(1,3)");
  auto const nt  = verify_not_prime_zSz(t13, all_generator_powers(3, 2));
  CHECK(nt.outcome == Outcome::inconclusive);
  CHECK_FALSE(in_spec(t13, W({1, 2, 3, 2}), all_generator_powers(3, 2)));
  auto const withz = verify_not_prime_zSz(t13, IdealSpec{ZPower{1}, GeneratorPower{1, 2}});
  CHECK(withz.outcome == Outcome::inconclusive);
}

TEST_CASE("prime witnesses") {
  SUBCASE("non-transitive group") {
    auto const s    = monoid(3, "(1,3)");
    auto const spec = IdealSpec{ZPower{1}};
    Word const m    = prime_witness(s, spec, W({1}), W({1}));
    CHECK_FALSE(in_spec(s, concat(W({1}), m, W({1})), spec));
    CHECK(prime_witness(s, spec, Word{}, W({2})).empty());
  }
  SUBCASE("Klein group") {
    Monoid const k(Presentation::from_group(klein_four()));
    for (auto const& spec : {IdealSpec{ZPower{1}}, IdealSpec{ZPower{2}},
                             IdealSpec{GeneratorPower{1, 3}},
                             IdealSpec{ZPower{1}, GeneratorPower{1, 3}}}) {
      for (auto const& [u, v] : std::vector<std::pair<Word, Word>>{
               {W({1}), W({1})}, {W({4, 4}), W({2, 3})}, {W({1, 2, 3}), W({2, 1, 4, 3})}}) {
        if (in_spec(k, u, spec) || in_spec(k, v, spec)) {
          continue;
        }
        Word const m = prime_witness(k, spec, u, v);
        CHECK_FALSE(in_spec(k, concat(u, m, v), spec));
      }
    }
  }
  SUBCASE("union of cubes with words ending in several letters") {
    Monoid const k(Presentation::from_group(klein_four()));
    auto const   spec = IdealSpec{GeneratorPower{1, 3}, GeneratorPower{2, 3},
                                  GeneratorPower{3, 3}, GeneratorPower{4, 3}};
    Word const   z    = W({1, 2, 3, 4});
    Word const   m    = prime_witness(k, spec, z, z);
    CHECK_FALSE(in_spec(k, concat(z, m, z), spec));
    for_each_word_up_to(4, 4, [&](Word const& u) {
      if (u.empty() || in_spec(k, u, spec) || u.size() < 3) {
        return;
      }
      for (Word const& v : {W({1, 1}), W({2, 1, 4, 3}), W({4, 3, 2})}) {
        REQUIRE_FALSE(in_spec(k, concat(u, prime_witness(k, spec, u, v), v), spec));
      }
    });
  }
  SUBCASE("single square over a transitive abelian group") {
    Monoid const k(Presentation::from_group(klein_four()));
    auto const   spec = IdealSpec{GeneratorPower{2, 2}};
    Word const   m    = prime_witness(k, spec, W({1, 3}), W({4}));
    CHECK_FALSE(in_spec(k, concat(W({1, 3}), m, W({4})), spec));
  }
  SUBCASE("hypotheses") {
    auto const s = monoid(3, "(1,2,3)");
    CHECK_THROWS_AS(prime_witness(s, IdealSpec{RightZ{}}, W({1}), W({1})), HypothesisError);
    CHECK_THROWS_AS(prime_witness(s, IdealSpec{ZPower{1}}, W({1}), W({1})), HypothesisError);
    CHECK_THROWS_AS(prime_witness(monoid(3, "(1,3)"), IdealSpec{ZPower{1}}, W({1, 2, 3}), W({1})),
                    std::invalid_argument);
  }
}

TEST_CASE("group of fractions obstruction") {
  CHECK(fractions_obstruction(monoid(3, "(1,3)"), 6));
  CHECK(fractions_obstruction(trivial_monoid(3), 6));
  CHECK(fractions_obstruction(monoid(3, "(1,3)"), 2));
  CHECK_THROWS_AS(fractions_obstruction(monoid(3, "(1,2,3)"), 4), HypothesisError);
}

TEST_CASE("avoiding letters") {
  auto const bp = boundary_pairs(pres(3, "(1,3)"));
  auto const r  = boundary_avoidance(bp, 3, 1);
  REQUIRE(r.complete());
  CHECK_FALSE(bp.in_a(1, 3));
  CHECK_FALSE(bp.in_a(1, *r.j));
  CHECK_FALSE(bp.in_a_tilde(*r.j_prime, 1));
  auto const kp = boundary_pairs(Presentation::from_group(klein_four()));
  for (Letter i = 1; i <= 4; ++i) {
    auto const c = boundary_avoidance(kp, 4, i);
    REQUIRE(c.complete());
    CHECK(*c.j != i);
    CHECK(*c.j_prime != i);
    CHECK_FALSE(kp.in_a(i, *c.j));
    CHECK_FALSE(kp.in_a_tilde(*c.j_prime, i));
  }
}
