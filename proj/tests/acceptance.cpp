// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "permrel/catalog.hpp"
#include "permrel/growth.hpp"
#include "permrel/ideals.hpp"
#include "permrel/theorems.hpp"
#include "support.hpp"

using namespace permrel;

namespace {

struct Outcome {
  bool              pass = true;
  std::ostringstream detail;

  void fail(std::string const& why) {
    pass = false;
    detail << "FAILED: " << why << "; ";
  }
  void require(bool ok, std::string const& why) {
    if (!ok) {
      fail(why);
    }
  }
};

std::string describe_group(PermutationGroup const& g) {
  return "<" + g.generators_string() + "> in Sym_" + std::to_string(g.degree());
}

PermutationGroup transposition13() {
  return generate(parse_generators("(1,3)", 3), 3);
}

bool criterion(int number, std::string const& title, std::function<void(Outcome&)> const& body) {
  Outcome    o;
  auto const start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (std::exception const& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  auto const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "criterion " << number << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title
            << "  [" << o.detail.str() << std::fixed << std::setprecision(1) << secs << " s]"
            << std::endl;
  return o.pass;
}

// Criterion 1
void cancellativity(Outcome& o) {
  std::size_t agreed = 0, non_cancellative = 0;
  for (std::size_t n = 3; n <= 5; ++n) {
    for (auto const& e : enumerate_abelian_subgroups(n)) {
      Monoid const s(Presentation::from_group(e.group));
      bool const   predicted = predict_cancellative(e.group);
      auto const   report    = cancellativity_report(s, n + 3);
      std::string const name = describe_group(e.group);
      for (auto const* w : {&report.right_witness, &report.left_witness}) {
        if (*w && !verify_witness(s, **w)) {
          o.fail(name + ": witness does not re-verify");
        }
      }
      if (predicted) {
        o.require(!report.right_witness && !report.left_witness,
                  name + ": predicted cancellative but a witness was found");
      } else {
        ++non_cancellative;
        bool const at_n_minus_1
            = (report.right_witness && report.right_witness->u.size() == n - 1)
              || (report.left_witness && report.left_witness->u.size() == n - 1);
        o.require(at_n_minus_1, name + ": no witness of length n-1");
      }
      ++agreed;
    }
  }
  o.detail << agreed << " groups, " << non_cancellative << " non-cancellative; ";
}

void boundary_case(Outcome& o, PermutationGroup const& g, std::size_t max_len) {
  Monoid const s(Presentation::from_group(g));
  auto const   r = verify_boundary_pairs(s, max_len);
  o.require(r.hypotheses_hold, describe_group(g) + ": hypotheses do not hold");
  o.require(r.passed(), describe_group(g) + ": " + std::to_string(r.violations.size())
                            + " violations");
  o.detail << describe_group(g) << " up to " << max_len + 2 << ": " << r.cases_checked
           << " cases, " << r.violations.size() << " violations; ";
}

// Criterion 2
void boundary_sweep(Outcome& o) {
  boundary_case(o, transposition13(), 7);
  boundary_case(o, generate(parse_generators("(1,2)(3,4)", 4), 4), 6);
}

// Criterion 3
void preimage(Outcome& o) {
  std::size_t groups = 0;
  std::uint64_t cases = 0;
  for (std::size_t n = 3; n <= 4; ++n) {
    for (auto const& e : enumerate_abelian_subgroups(n)) {
      Monoid const s(Presentation::from_group(e.group));
      auto const   r = verify_SzS_preimage(s, n + 3);
      o.require(r.passed(), describe_group(e.group) + ": disagreement");
      cases += r.cases_checked;
      ++groups;
    }
  }
  o.detail << groups << " groups, " << cases << " words; ";
}

Word random_word_outside(std::mt19937_64& rng, Monoid const& s, IdealSpec const& spec) {
  std::size_t const                  n = s.degree();
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<int> letter(1, static_cast<int>(n));
  while (true) {
    Word w(static_cast<std::size_t>(len(rng)));
    for (auto& x : w) {
      x = static_cast<Letter>(letter(rng));
    }
    if (!in_spec(s, w, spec)) {
      return w;
    }
  }
}

// Criterion 4
void primality(Outcome& o) {
  std::vector<IdealSpec> const specs{IdealSpec{ZPower{1}}, IdealSpec{ZPower{2}},
                                     IdealSpec{GeneratorPower{1, 3}},
                                     IdealSpec{ZPower{1}, GeneratorPower{1, 3}}};
  std::mt19937_64 rng(2024);
  std::size_t     witnesses = 0;
  for (auto const& g : {klein_four(), transposition13()}) {
    Monoid const s(Presentation::from_group(g));
    for (auto const& spec : specs) {
      std::string const name = describe_group(g) + " " + spec.to_string();
      auto const        v    = check_prime_bounded(s, spec, 4, 5);
      o.require(v.outcome == PrimeVerdict::Outcome::no_counterexample_up_to,
                name + ": " + to_string(v.outcome));
      for (int k = 0; k < 100; ++k) {
        Word const u   = random_word_outside(rng, s, spec);
        Word const w   = random_word_outside(rng, s, spec);
        Word const mid = prime_witness(s, spec, u, w);
        o.require(!in_spec(s, concat(u, mid, w), spec),
                  name + ": separator fails for " + to_string(u) + " / " + to_string(w));
        ++witnesses;
      }
    }
  }
  o.detail << "bounded checks at |u|,|v| <= 4, |s| <= 5 and " << witnesses
           << " constructed separators; ";

  std::size_t certified = 0, single_square = 0;
  for (std::size_t n = 3; n <= 5; ++n) {
    for (auto const& e : enumerate_abelian_subgroups(n)) {
      if (!e.transitive) {
        continue;
      }
      Monoid const s(Presentation::from_group(e.group));
      auto const   v = verify_not_prime_zSz(s, all_generator_powers(n, 2));
      o.require(v.outcome == PrimeVerdict::Outcome::not_prime_certified,
                describe_group(e.group) + ": union of squares not certified");
      ++certified;
      if (e.contains_full_cycle) {
        continue;
      }
      for (Letter i = 1; i <= n; ++i) {
        auto const r = check_prime_bounded(s, IdealSpec{GeneratorPower{i, 2}}, 4, 5);
        o.require(r.outcome == PrimeVerdict::Outcome::no_counterexample_up_to,
                  describe_group(e.group) + ": S a_" + std::to_string(i) + "^2 S: "
                      + to_string(r.outcome));
        ++single_square;
      }
    }
  }
  o.detail << certified << " transitive groups certified, " << single_square
           << " single-square ideals checked at 4 / 5; ";
}

void sampler_case(Outcome& o, PermutationGroup const& g) {
  Monoid const s(Presentation::from_group(g));
  auto const   r = verify_overlap_sampled(s, 10'000);
  o.require(r.hypotheses_hold, describe_group(g) + ": hypotheses do not hold");
  o.require(r.cases_checked == 20'000, describe_group(g) + ": short of instances");
  o.require(r.passed(), describe_group(g) + ": violations");
  o.detail << describe_group(g) << ": " << r.cases_checked << " instances, "
           << r.violations.size() << " violations; ";
}

// Criterion 5
void sampler(Outcome& o) {
  sampler_case(o, transposition13());
  sampler_case(o, klein_four());
}

// Criterion 6
void radical(Outcome& o) {
  Monoid const k(Presentation::from_group(klein_four()));
  auto const   r = verify_radical_support(k, 6);
  o.require(r.hypotheses_hold && r.passed(), "violations");
  o.require(r.cases_checked > 0, "no cases");
  o.detail << r.cases_checked << " cases, " << r.violations.size() << " violations; ";
}

// Criterion 7
void fractions(Outcome& o) {
  o.require(fractions_obstruction(Monoid(Presentation::from_group(transposition13())), 6),
            "<(1,3)> in Sym_3");
  o.require(fractions_obstruction(Monoid(Presentation::from_group(klein_four())), 7), "Klein");
}

std::set<oracle::Letters> oracle_patterns(Presentation const& p) {
  std::set<oracle::Letters> out;
  for (auto const& w : p.patterns()) {
    out.insert(testing::to_oracle(w));
  }
  return out;
}

// Criterion 8
void growth(Outcome& o) {
  auto const sym3 = Presentation::from_group(symmetric_group(3));
  auto const c3   = Presentation::from_group(cyclic_group(3));
  auto const a    = class_count(sym3, 3);
  auto const b    = class_count(c3, 3);
  o.require(a == 22 && oracle::class_count(3, oracle_patterns(sym3), 3) == 22, "Sym_3 at 3");
  o.require(b == 25 && oracle::class_count(3, oracle_patterns(c3), 3) == 25, "<(1,2,3)> at 3");
  std::size_t compared = 0;
  for (std::size_t n = 3; n <= 5; ++n) {
    std::vector<Presentation> ps;
    for (auto const& e : enumerate_abelian_subgroups(n)) {
      ps.push_back(Presentation::from_group(e.group));
    }
    ps.push_back(Presentation::from_group(symmetric_group(n)));
    for (auto const& p : ps) {
      auto const pats = oracle_patterns(p);
      for (std::size_t len = 0; len <= n + 1; ++len) {
        auto const mine = class_count(p, len);
        o.require(mine == oracle::class_count(static_cast<int>(n), pats, len),
                  "oracle mismatch at n=" + std::to_string(n) + " len=" + std::to_string(len));
        if (len < n) {
          o.require(mine == oracle::ipow(n, len), "n^len at n=" + std::to_string(n));
        }
        ++compared;
      }
    }
  }
  o.detail << "Sym_3: " << a << ", <(1,2,3)>: " << b << ", " << compared
           << " counts matched the union-find oracle; ";
}

}  // namespace

int main() {
  bool ok = true;
  ok &= criterion(1, "cancellativity prediction agrees with witness search", cancellativity);
  ok &= criterion(2, "boundary pair sweep, both sides", boundary_sweep);
  ok &= criterion(3, "SzS class test agrees with the literal test", preimage);
  ok &= criterion(4, "primality checks and non-primality certificates", primality);
  ok &= criterion(5, "overlap sampler", sampler);
  ok &= criterion(6, "radical support displacement", radical);
  ok &= criterion(7, "group of fractions obstruction", fractions);
  ok &= criterion(8, "class counts against the union-find oracle", growth);
  return ok ? 0 : 1;
}
