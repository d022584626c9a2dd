#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permrel/catalog.hpp"
#include "permrel/errors.hpp"
#include "permrel/permgroup.hpp"
#include "permrel/word.hpp"
#include "support.hpp"

using namespace permrel;
using testing::group;
using testing::W;

namespace {

std::vector<unsigned> imgs(Permutation const& p) {
  return {p.images().begin(), p.images().end()};
}

}  // namespace

TEST_CASE("words parse, print and index") {
  CHECK(parse_word("1,2,3", 3) == W({1, 2, 3}));
  CHECK(parse_word("a1 a2 a3", 3) == W({1, 2, 3}));
  CHECK(parse_word("x_2, x_1", 3) == W({2, 1}));
  CHECK(parse_word("", 3).empty());
  CHECK(parse_word("eps", 3).empty());
  CHECK_THROWS_AS(parse_word("1,4", 3), ParseError);
  CHECK_THROWS_AS(parse_word("1,,2", 3), ParseError);
  CHECK(to_string(W({1, 2, 3})) == "1,2,3");
  CHECK(to_string(Word{}) == "ε");
  CHECK(reverse(W({1, 2, 3})) == W({3, 2, 1}));
  CHECK(reverse(Word{}).empty());
  CHECK(reverse(reverse(W({1, 3, 3, 2}))) == W({1, 3, 3, 2}));
  CHECK(word_count(3, 4) == 81);
  CHECK_THROWS_AS(word_count(12, 40), std::overflow_error);
  Word w(3);
  for (std::uint64_t i = 0; i < 27; ++i) {
    word_from_index(i, 3, w);
    CHECK(word_index(w, 3) == i);
  }
  std::vector<Word> seen;
  for_each_word(2, 2, [&](Word const& x) { seen.push_back(x); });
  CHECK(seen == std::vector<Word>{W({1, 1}), W({1, 2}), W({2, 1}), W({2, 2})});
  CHECK(word_from_json(word_to_json(W({2, 1})), 2) == W({2, 1}));
}

TEST_CASE("cycle notation") {
  CHECK(imgs(parse_cycles("", 3)) == std::vector<unsigned>{1, 2, 3});
  CHECK(imgs(parse_cycles("()", 3)) == std::vector<unsigned>{1, 2, 3});
  CHECK(imgs(parse_cycles("(1,2,3)", 3)) == std::vector<unsigned>{2, 3, 1});
  CHECK(imgs(parse_cycles("(1,2)(3,4)", 4)) == std::vector<unsigned>{2, 1, 4, 3});
  CHECK(imgs(parse_cycles(" ( 1 , 2 ) ", 3)) == std::vector<unsigned>{2, 1, 3});
  CHECK_THROWS_AS(parse_cycles("(1,2", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,4)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,2)(2,3)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,2,)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("1,2", 3), ParseError);
  CHECK(parse_cycles("(1,3,2)", 3).to_cycles() == "(1,3,2)");
  CHECK(Permutation::identity(4).to_cycles() == "()");
}

TEST_CASE("composition applies the right factor first") {
  auto const c = parse_cycles("(1,2,3)", 3);
  CHECK(compose(Permutation::identity(3), c) == c);
  CHECK(imgs(compose(c, c)) == std::vector<unsigned>{3, 1, 2});
  auto const pq = compose(parse_cycles("(1,2)", 3), parse_cycles("(1,3)", 3));
  CHECK(pq == parse_cycles("(1,3,2)", 3));
  CHECK_THROWS_AS(compose(c, Permutation::identity(4)), std::invalid_argument);
  CHECK(compose(c, c.inverse()).is_identity());
  CHECK(full_cycle(4) == parse_cycles("(1,2,3,4)", 4));
}

TEST_CASE("generated groups") {
  CHECK(generate({}, 3).order() == 1);
  CHECK(group(3, "(1,2,3)").order() == 3);
  CHECK(group(3, "(1,2);(1,2,3)").order() == 6);
  CHECK(symmetric_group(4).order() == 24);
  CHECK(klein_four().order() == 4);
  auto const g = group(4, "(1,2)(3,4);(1,3)(2,4)");
  CHECK(g == klein_four());
  CHECK(g.elements().front().is_identity());
  std::vector<Permutation> elems(g.elements().begin(), g.elements().end());
  CHECK(generate(elems, 4) == g);
  CHECK(testing::images_of(g) == testing::oracle_group(4, "(1,2)(3,4);(1,3)(2,4)"));
  CHECK(testing::images_of(group(4, "(1,2,3,4);(1,2)"))
        == testing::oracle_group(4, "(1,2,3,4);(1,2)"));
  CHECK_THROWS_AS(generate(elems, 5), std::invalid_argument);
}

TEST_CASE("stabilizers and orbits") {
  auto const c3 = group(3, "(1,2,3)");
  auto const t  = group(3, "(1,2)");
  CHECK(stabilizer(c3, 1).is_trivial());
  CHECK(stabilizer(t, 3).order() == 2);
  CHECK(stabilizer(trivial_group(3), 2).is_trivial());
  CHECK(orbit(trivial_group(3), 2) == std::vector<unsigned>{2});
  CHECK(orbit(t, 1) == std::vector<unsigned>{1, 2});
  CHECK(orbit(c3, 1) == std::vector<unsigned>{1, 2, 3});
  CHECK_THROWS_AS(orbit(c3, 4), std::out_of_range);
  CHECK_THROWS_AS(stabilizer(c3, 0), std::out_of_range);
  for (auto const& g : {c3, t, symmetric_group(4), klein_four(), group(5, "(1,2)(3,4,5)")}) {
    for (unsigned i = 1; i <= g.degree(); ++i) {
      CHECK(orbit(g, i).size() * stabilizer(g, i).order() == g.order());
    }
  }
}

TEST_CASE("group predicates") {
  auto const c3 = group(3, "(1,2,3)");
  auto const t  = group(3, "(1,2)");
  CHECK(is_transitive(c3));
  CHECK_FALSE(is_transitive(t));
  CHECK_FALSE(is_transitive(trivial_group(3)));
  CHECK(is_abelian(c3));
  CHECK_FALSE(is_abelian(symmetric_group(3)));
  CHECK(is_abelian(klein_four()));
  CHECK(is_semiregular(c3));
  CHECK_FALSE(is_semiregular(t));
  CHECK(is_semiregular(trivial_group(3)));
  CHECK(contains_full_cycle(c3));
  CHECK_FALSE(contains_full_cycle(klein_four()));
  CHECK_FALSE(contains_full_cycle(trivial_group(3)));
}

TEST_CASE("transitive abelian groups are semiregular of order n") {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (auto const& e : enumerate_abelian_subgroups(n)) {
      if (e.transitive) {
        CHECK(e.semiregular);
        CHECK(e.order() == n);
      }
    }
  }
}
