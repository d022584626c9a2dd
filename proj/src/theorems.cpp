#include "permrel/theorems.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

#include "parallel.hpp"
#include "permrel/errors.hpp"

namespace permrel {

std::string to_string(Side side) {
  return side == Side::right ? "right" : "left";
}

json CancelWitness::to_json() const {
  return json{{"side", to_string(side)},
              {"u", word_to_json(u)},
              {"v", word_to_json(v)},
              {"letter", static_cast<unsigned>(letter)}};
}

bool verify_witness(Monoid const& s, CancelWitness const& w) {
  Word const a{w.letter};
  Word const lhs = w.side == Side::right ? concat(w.u, a) : concat(a, w.u);
  Word const rhs = w.side == Side::right ? concat(w.v, a) : concat(a, w.v);
  return s.equal(lhs, rhs) && !s.equal(w.u, w.v);
}

bool cancellative_necessary_condition(PermutationGroup const& g) {
  auto const n = static_cast<unsigned>(g.degree());
  return stabilizer(g, 1).is_trivial() && stabilizer(g, n).is_trivial();
}

bool predict_cancellative(PermutationGroup const& g) {
  if (!is_abelian(g)) {
    throw HypothesisError("the cancellativity criterion needs an abelian group; "
                          "only the necessary condition H_1 = H_n = {id} "
                          "applies to " + g.generators_string());
  }
  return cancellative_necessary_condition(g);
}

namespace {

// Calls f on every word of length len containing a pattern, possibly more
// than once.
template <typename F>
void for_each_pattern_word(Presentation const& p, std::size_t len, F&& f) {
  std::size_t const n = p.degree();
  if (len < n) {
    return;
  }
  Word w(len);
  for (std::size_t pos = 0; pos + n <= len; ++pos) {
    for (auto const& pattern : p.patterns()) {
      for_each_word(n, len - n, [&](Word const& filler) {
        std::copy(filler.begin(), filler.begin() + static_cast<long>(pos),
                  w.begin());
        std::copy(pattern.begin(), pattern.end(),
                  w.begin() + static_cast<long>(pos));
        std::copy(filler.begin() + static_cast<long>(pos), filler.end(),
                  w.begin() + static_cast<long>(pos + n));
        f(w);
      });
    }
  }
}

}  // namespace

std::optional<CancelWitness>
search_cancel_counterexample(Monoid const& s, std::size_t max_len, Side side) {
  auto const& p = s.presentation();
  if (p.patterns().size() < 2) {
    return std::nullopt;
  }
  std::size_t const n = p.degree();
  for (std::size_t len = std::max<std::size_t>(n, 2) - 1; len <= max_len;
       ++len) {
    std::unordered_set<Word, WordHash> seen;
    std::optional<CancelWitness>       best;
    for_each_pattern_word(p, len + 1, [&](Word const& w) {
      if (seen.count(w) != 0) {
        return;
      }
      auto cls = s.class_of(w);
      seen.insert(cls->members.begin(), cls->members.end());
      std::map<Letter, std::vector<Word>> rests;
      for (auto const& m : cls->members) {
        if (side == Side::right) {
          rests[m.back()].emplace_back(m.begin(), m.end() - 1);
        } else {
          rests[m.front()].emplace_back(m.begin() + 1, m.end());
        }
      }
      for (auto& [letter, words] : rests) {
        if (words.size() < 2) {
          continue;
        }
        std::sort(words.begin(), words.end());
        Word const& u       = words.front();
        Word const  u_canon = s.canonical_form(u);
        for (auto it = words.begin() + 1; it != words.end(); ++it) {
          if (s.canonical_form(*it) == u_canon) {
            continue;
          }
          CancelWitness candidate{u, *it, letter, side};
          if (!best
              || std::tie(candidate.u, candidate.v, candidate.letter)
                     < std::tie(best->u, best->v, best->letter)) {
            best = std::move(candidate);
          }
          break;
        }
      }
    });
    if (best) {
      return best;
    }
  }
  return std::nullopt;
}

json CancellativityReport::to_json() const {
  json j;
  j["predicted"] = predicted ? json(*predicted) : json(nullptr);
  j["necessary_condition"] = necessary_condition;
  j["right_witness"] = right_witness ? right_witness->to_json() : json(nullptr);
  j["left_witness"]  = left_witness ? left_witness->to_json() : json(nullptr);
  j["searched_len"]  = searched_len;
  return j;
}

CancellativityReport cancellativity_report(Monoid const& s,
                                           std::size_t   max_len) {
  auto const&          p = s.presentation();
  CancellativityReport report;
  report.necessary_condition
      = p.first_letter_injective() && p.last_letter_injective();
  if (p.group() && !p.is_opposite() && is_abelian(*p.group())) {
    report.predicted = predict_cancellative(*p.group());
  }
  report.right_witness = search_cancel_counterexample(s, max_len, Side::right);
  report.left_witness  = search_cancel_counterexample(s, max_len, Side::left);
  report.searched_len  = max_len;
  return report;
}

json SweepReport::to_json() const {
  json j;
  j["check"]                = check;
  j["bounds"]               = bounds;
  j["hypotheses_hold"]      = hypotheses_hold;
  j["cases_checked"]        = cases_checked;
  j["violations"]           = violations;
  j["hypothesis_violating"] = hypothesis_violating;
  j["passed"]               = passed();
  if (!notes.empty()) {
    j["notes"] = notes;
  }
  return j;
}

namespace {

struct Tally {
  std::uint64_t                     cases = 0;
  std::uint64_t                     hypothesis_violating = 0;
  std::vector<std::pair<Word, json>> bad;  // keyed for deterministic order

  void merge(Tally&& other) {
    cases += other.cases;
    hypothesis_violating += other.hypothesis_violating;
    for (auto& b : other.bad) {
      bad.push_back(std::move(b));
    }
  }
};

// Runs check(word, tally) over every word with min_len <= |word| <= max_len,
// spread over jobs threads.
template <typename Check>
Tally sweep_words(std::size_t n,
                  std::size_t min_len,
                  std::size_t max_len,
                  unsigned    jobs,
                  Check&&     check) {
  Tally total;
  for (std::size_t len = min_len; len <= max_len; ++len) {
    std::uint64_t const count = word_count(n, len);
    auto locals = detail::parallel_ranges<Tally>(
        count, jobs, [&](std::uint64_t begin, std::uint64_t end, Tally& t) {
          Word w(len);
          for (std::uint64_t idx = begin; idx < end; ++idx) {
            word_from_index(idx, n, w);
            check(w, t);
          }
        });
    for (auto& l : locals) {
      total.merge(std::move(l));
    }
  }
  return total;
}

void finish(SweepReport& report, Tally&& tally) {
  std::stable_sort(tally.bad.begin(), tally.bad.end(),
                   [](auto const& a, auto const& b) {
                     return a.first.size() != b.first.size()
                                ? a.first.size() < b.first.size()
                                : a.first < b.first;
                   });
  report.cases_checked += tally.cases;
  report.hypothesis_violating += tally.hypothesis_violating;
  for (auto& b : tally.bad) {
    report.violations.push_back(std::move(b.second));
  }
}

PermutationGroup const& require_group(Presentation const& p, char const* what) {
  if (!p.group() || p.is_opposite()) {
    throw HypothesisError(std::string(what)
                          + " needs a presentation built from a group");
  }
  return *p.group();
}

void check_or_force(bool                holds,
                    std::string const&  reason,
                    SweepOptions const& options,
                    SweepReport&        report) {
  if (holds) {
    return;
  }
  if (!options.force) {
    throw HypothesisError(report.check + ": " + reason);
  }
  report.hypotheses_hold = false;
  report.notes.push_back("hypothesis not met: " + reason);
}

}  // namespace

SweepReport verify_boundary_pairs(Monoid const& s,
                          std::size_t   max_len,
                          SweepOptions  options) {
  auto const&       p = s.presentation();
  auto const&       g = require_group(p, "verify_boundary_pairs");
  std::size_t const n = p.degree();
  SweepReport       report;
  report.check  = "boundary_pairs";
  report.bounds = json{{"max_len", max_len}};
  bool const base = is_abelian(g) && !contains_full_cycle(g);
  check_or_force(base, "H must be abelian without (1,...,n)", options, report);
  bool const right_ok = base && p.last_letter_injective();
  bool const left_ok  = base && p.first_letter_injective();
  check_or_force(p.last_letter_injective(), "H_n must be trivial", options,
                 report);
  check_or_force(p.first_letter_injective(), "H_1 must be trivial", options,
                 report);
  if (n < 2) {
    report.notes.emplace_back("n < 2: no boundary pairs");
    return report;
  }

  auto const pairs = boundary_pairs(p);
  Tally      right = sweep_words(
      n, 2, max_len + 2, options.jobs, [&](Word const& x, Tally& t) {
        ++t.cases;
        if (in_right_z(s, x) && !pairs.in_a(x[x.size() - 2], x.back())) {
          if (right_ok) {
            t.bad.emplace_back(
                x, json{{"part", "i"},
                        {"word", word_to_json(x)},
                        {"pair", word_to_json(Word(x.end() - 2, x.end()))},
                        {"reason", "in Sz but last pair not in A"}});
          } else {
            ++t.hypothesis_violating;
          }
        }
      });
  finish(report, std::move(right));

  Monoid const opp(p.opposite(), s.options());
  auto const   opp_pairs = boundary_pairs(opp.presentation());
  Tally        left      = sweep_words(
      n, 2, max_len + 2, options.jobs, [&](Word const& x, Tally& t) {
        ++t.cases;
        if (in_right_z(opp, x) && !opp_pairs.in_a(x[x.size() - 2], x.back())) {
          if (left_ok) {
            Word const original = reverse(x);
            t.bad.emplace_back(
                original,
                json{{"part", "ii"},
                     {"word", word_to_json(original)},
                     {"pair",
                      word_to_json(Word(original.begin(), original.begin() + 2))},
                     {"reason", "in zS but first pair not in Ã"}});
          } else {
            ++t.hypothesis_violating;
          }
        }
      });
  finish(report, std::move(left));
  return report;
}

SweepReport verify_avoiding_letters(PermutationGroup const& g, SweepOptions options) {
  std::size_t const n = g.degree();
  SweepReport       report;
  report.check  = "avoiding_letters";
  report.bounds = json{{"n", n}};
  check_or_force(n >= 3, "n must be at least 3", options, report);
  bool const hyp = n >= 3 && stabilizer(g, 2).is_trivial()
                   && stabilizer(g, static_cast<unsigned>(n - 1)).is_trivial();
  check_or_force(hyp, "H_2 and H_{n-1} must be trivial", options, report);
  if (n < 2) {
    return report;
  }
  auto const pairs = boundary_pairs(Presentation::from_group(g));
  for (std::size_t c = 1; c <= n; ++c) {
    auto const i  = static_cast<Letter>(c);
    auto const av = boundary_avoidance(pairs, n, i);
    ++report.cases_checked;
    if (av.complete()) {
      continue;
    }
    if (!report.hypotheses_hold) {
      ++report.hypothesis_violating;
      report.notes.push_back("no avoiding letters for i = " + std::to_string(c));
      continue;
    }
    report.violations.push_back(
        json{{"i", c},
             {"j", av.j ? json(static_cast<unsigned>(*av.j)) : json(nullptr)},
             {"j_prime", av.j_prime ? json(static_cast<unsigned>(*av.j_prime))
                                    : json(nullptr)}});
  }
  return report;
}

namespace {

struct Overlap {
  std::size_t first;   // index of the earlier pattern
  std::size_t second;  // index of the later pattern
  std::size_t length;  // 1..n-1 letters shared
};

std::vector<Overlap> compatible_overlaps(Presentation const& p) {
  std::vector<Overlap> out;
  auto const&          pats = p.patterns();
  std::size_t const    n    = p.degree();
  for (std::size_t a = 0; a < pats.size(); ++a) {
    for (std::size_t b = 0; b < pats.size(); ++b) {
      for (std::size_t d = 1; d < n; ++d) {
        if (std::equal(pats[a].end() - static_cast<long>(d), pats[a].end(),
                       pats[b].begin())) {
          out.push_back({a, b, d});
        }
      }
    }
  }
  return out;
}

// Builds sample_budget instances on p. Words are reported reversed when p is
// the opposite presentation.
void sample_overlaps(Presentation const& p,
                     std::size_t         budget,
                     bool                hypotheses_hold,
                     char const*         part,
                     std::mt19937_64&    rng,
                     SweepReport&        report) {
  std::size_t const n        = p.degree();
  auto const&       pats     = p.patterns();
  auto const        overlaps = compatible_overlaps(p);
  if (overlaps.empty()) {
    report.notes.push_back(std::string("part ") + part
                           + ": no overlapping pattern pairs");
    return;
  }
  auto pick = [&](std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(0, hi)(rng);
  };
  auto letter = [&] { return static_cast<Letter>(pick(n - 1) + 1); };

  std::size_t const limit    = budget * 1000;
  std::size_t       attempts = 0;
  std::size_t       produced = 0;
  while (produced < budget && attempts < limit) {
    ++attempts;
    Overlap const o1 = overlaps[pick(overlaps.size() - 1)];
    Overlap const o2 = overlaps[pick(overlaps.size() - 1)];
    Word          prefix(pick(2));
    for (auto& x : prefix) {
      x = letter();
    }
    std::size_t const forced1 = n - o1.length;
    std::size_t const forced2 = n - o2.length;
    Word tail(std::max(forced1, forced2) + pick(2), 0);
    std::copy(pats[o1.second].begin() + static_cast<long>(o1.length),
              pats[o1.second].end(), tail.begin());
    bool conflict = false;
    for (std::size_t k = 0; k < forced2; ++k) {
      Letter const want = pats[o2.second][o2.length + k];
      if (tail[k] != 0 && tail[k] != want) {
        conflict = true;
        break;
      }
      tail[k] = want;
    }
    if (conflict) {
      continue;
    }
    for (auto& x : tail) {
      if (x == 0) {
        x = letter();
      }
    }
    Word const w1 = concat(prefix, pats[o1.first], tail);
    Word const w2 = concat(prefix, pats[o2.first], tail);

    std::size_t const start = prefix.size() + 1;
    Span const        a{start, n - 1};
    Span const        b1{start + forced1, n - 1};
    Span const        b2{start + forced2, n - 1};
    if (!overlap(w1, a, b1) || overlap_length(w1, a, b1) != o1.length
        || !overlap(w2, a, b2) || overlap_length(w2, a, b2) != o2.length
        || !p.is_pattern(std::span(w1).subspan(b1.start - 1, n))
        || !p.is_pattern(std::span(w2).subspan(b2.start - 1, n))) {
      throw std::logic_error("overlap sampler built a malformed instance");
    }
    ++produced;
    if (w1 == w2) {
      continue;
    }
    if (!hypotheses_hold) {
      ++report.hypothesis_violating;
      continue;
    }
    Word const r1 = p.is_opposite() ? reverse(w1) : w1;
    Word const r2 = p.is_opposite() ? reverse(w2) : w2;
    report.violations.push_back(json{{"part", part},
                                     {"w1", word_to_json(r1)},
                                     {"w2", word_to_json(r2)},
                                     {"overlap1", o1.length},
                                     {"overlap2", o2.length}});
  }
  report.cases_checked += produced;
  if (produced < budget) {
    report.notes.push_back(std::string("part ") + part + ": only "
                           + std::to_string(produced) + " instances after "
                           + std::to_string(attempts) + " attempts");
  }
}

}  // namespace

SweepReport verify_overlap_sampled(Monoid const& s,
                                  std::size_t   sample_budget,
                                  SweepOptions  options) {
  auto const& p = s.presentation();
  auto const& g = require_group(p, "verify_overlap_sampled");
  SweepReport report;
  report.check  = "overlap_sampler";
  report.bounds = json{{"sample_budget", sample_budget}, {"seed", options.seed}};
  bool const abelian = is_abelian(g);
  check_or_force(abelian, "H must be abelian", options, report);
  check_or_force(p.last_letter_injective(), "H_n must be trivial", options,
                 report);
  check_or_force(p.first_letter_injective(), "H_1 must be trivial", options,
                 report);
  std::mt19937_64 rng(options.seed);
  sample_overlaps(p, sample_budget, abelian && p.last_letter_injective(), "i",
                  rng, report);
  sample_overlaps(p.opposite(), sample_budget,
                  abelian && p.first_letter_injective(), "ii", rng, report);
  return report;
}

SweepReport verify_radical_support(Monoid const& s,
                                   std::size_t   max_len,
                                   SweepOptions  options) {
  auto const&       p = s.presentation();
  auto const&       g = require_group(p, "verify_radical_support");
  std::size_t const n = p.degree();
  SweepReport       report;
  report.check  = "radical_support";
  report.bounds = json{{"max_len", max_len}};
  bool const hyp = n >= 3 && is_abelian(g) && is_transitive(g)
                   && !contains_full_cycle(g);
  check_or_force(hyp, "H must be abelian and transitive without (1,...,n), n >= 3",
                 options, report);
  Tally tally = sweep_words(
      n, n, max_len, options.jobs, [&](Word const& w, Tally& t) {
        if (!in_right_z(s, w) && !in_left_z(s, w)) {
          return;
        }
        auto cls = s.class_of(w);
        std::vector<Letter> firsts, lasts;
        for (auto const& m : cls->members) {
          firsts.push_back(m.front());
          lasts.push_back(m.back());
        }
        std::sort(firsts.begin(), firsts.end());
        firsts.erase(std::unique(firsts.begin(), firsts.end()), firsts.end());
        std::sort(lasts.begin(), lasts.end());
        lasts.erase(std::unique(lasts.begin(), lasts.end()), lasts.end());
        for (Letter i : firsts) {
          for (Letter j : lasts) {
            ++t.cases;
            Word const x = concat(Word{i}, w, Word{j});
            if (!in_right_z(s, x) && !in_left_z(s, x)) {
              continue;
            }
            if (!hyp) {
              ++t.hypothesis_violating;
              continue;
            }
            t.bad.emplace_back(w, json{{"word", word_to_json(w)},
                                       {"i", static_cast<unsigned>(i)},
                                       {"j", static_cast<unsigned>(j)}});
          }
        }
      });
  finish(report, std::move(tally));
  return report;
}

SweepReport verify_SzS_preimage(Monoid const& s,
                                std::size_t   max_len,
                                SweepOptions  options) {
  auto const& p = s.presentation();
  SweepReport report;
  report.check  = "SzS_preimage";
  report.bounds = json{{"max_len", max_len}};
  Tally tally   = sweep_words(
      p.degree(), 0, max_len, options.jobs, [&](Word const& w, Tally& t) {
        ++t.cases;
        bool const by_class   = in_two_sided_z_power(s, w, 1);
        bool const by_factors = monomial_preimage_in_SzS(p, w);
        if (by_class != by_factors) {
          t.bad.emplace_back(w, json{{"word", word_to_json(w)},
                                     {"class_based", by_class},
                                     {"literal", by_factors}});
        }
      });
  finish(report, std::move(tally));
  return report;
}

////////////////////////////////////////////////////////////////////////////////
// Suite
////////////////////////////////////////////////////////////////////////////////

SuiteConfig SuiteConfig::resolved(std::size_t n) const {
  SuiteConfig c = *this;
  if (c.cancel_len == 0) {
    c.cancel_len = n + 3;
  }
  if (c.boundary_len == 0) {
    c.boundary_len = n <= 3 ? 7 : n == 4 ? 6 : n + 1;
  }
  if (c.radical_len == 0) {
    c.radical_len = n + 2;
  }
  if (c.preimage_len == 0) {
    c.preimage_len = n + 3;
  }
  if (c.fractions_len == 0) {
    c.fractions_len = n + 3;
  }
  if (c.jobs == 0) {
    c.jobs = 1;
  }
  return c;
}

json SuiteConfig::to_json() const {
  return json{{"cancel_len", cancel_len},   {"boundary_len", boundary_len},
              {"radical_len", radical_len}, {"preimage_len", preimage_len},
              {"fractions_len", fractions_len},
              {"sample_budget", sample_budget},
              {"seed", seed},               {"jobs", jobs},
              {"checks", checks}};
}

json SuiteReport::to_json() const {
  return json{{"passed", !failed && !undecided},
              {"failed", failed},
              {"undecided", undecided},
              {"checks", entries}};
}

namespace {

template <typename F>
void run_entry(SuiteReport&       suite,
               SuiteConfig const& config,
               std::string const& name,
               F&&                body) {
  if (!config.checks.empty()
      && std::find(config.checks.begin(), config.checks.end(), name)
             == config.checks.end()) {
    return;
  }
  json entry{{"check", name}};
  try {
    auto [ok, report] = body();
    entry["status"]   = ok ? "pass" : "fail";
    entry["report"]   = std::move(report);
    if (!ok) {
      suite.failed = true;
    }
  } catch (HypothesisError const& e) {
    entry["status"] = "skipped";
    entry["reason"] = e.what();
  } catch (UndecidedAtCap const& e) {
    entry["status"] = "undecided";
    entry["reason"] = e.what();
    suite.undecided = true;
  }
  suite.entries.push_back(std::move(entry));
}

}  // namespace

std::vector<std::string> const& suite_checks() {
  static std::vector<std::string> const names{
      "cancellativity", "boundary_pairs",       "avoiding_letters",
      "overlap_sampler",         "radical_support", "SzS_preimage",
      "fractions_obstruction", "squares_not_prime"};
  return names;
}

SuiteReport run_suite(PermutationGroup const& g, SuiteConfig const& config) {
  for (auto const& name : config.checks) {
    auto const& all = suite_checks();
    if (std::find(all.begin(), all.end(), name) == all.end()) {
      throw std::invalid_argument("unknown check '" + name + "'");
    }
  }
  std::size_t const n = g.degree();
  SuiteConfig const c = config.resolved(n);
  Monoid const      s(Presentation::from_group(g));
  SweepOptions      opts;
  opts.seed = c.seed;
  opts.jobs = c.jobs;
  SuiteReport suite;

  run_entry(suite, c, "cancellativity", [&] {
    auto report = cancellativity_report(s, c.cancel_len);
    json j      = report.to_json();
    bool ok     = true;
    std::vector<std::string> notes;
    for (auto const* w : {&report.right_witness, &report.left_witness}) {
      if (*w && !verify_witness(s, **w)) {
        ok = false;
        notes.emplace_back("witness fails to re-verify");
      }
    }
    bool const found     = report.right_witness || report.left_witness;
    auto const at_length = [&](auto const& w) {
      return w && w->u.size() + 1 == n;
    };
    bool const short_witness
        = at_length(report.right_witness) || at_length(report.left_witness);
    bool const expect_cancellative
        = report.predicted.value_or(report.necessary_condition);
    if (!expect_cancellative && !short_witness) {
      ok = false;
      notes.emplace_back("predicted non-cancellative but no witness of length "
                         + std::to_string(n - 1));
    }
    if (report.predicted && *report.predicted && found) {
      ok = false;
      notes.emplace_back("predicted cancellative but a witness was found");
    }
    if (!report.predicted) {
      notes.emplace_back("H is not abelian: only the necessary condition "
                         "is predicted");
    }
    j["agreement"] = ok;
    if (!notes.empty()) {
      j["notes"] = notes;
    }
    return std::pair{ok, j};
  });

  auto sweep = [&](std::string const& name, auto&& body) {
    run_entry(suite, c, name, [&] {
      SweepReport r = body();
      return std::pair{r.passed(), r.to_json()};
    });
  };
  sweep("boundary_pairs", [&] { return verify_boundary_pairs(s, c.boundary_len, opts); });
  sweep("avoiding_letters", [&] { return verify_avoiding_letters(g, opts); });
  sweep("overlap_sampler", [&] {
    return verify_overlap_sampled(s, c.sample_budget, opts);
  });
  sweep("radical_support", [&] {
    return verify_radical_support(s, c.radical_len, opts);
  });
  sweep("SzS_preimage", [&] {
    return verify_SzS_preimage(s, c.preimage_len, opts);
  });
  run_entry(suite, c, "fractions_obstruction", [&] {
    bool ok = fractions_obstruction(s, c.fractions_len);
    return std::pair{ok, json{{"max_len", c.fractions_len}, {"clear", ok}}};
  });
  run_entry(suite, c, "squares_not_prime", [&] {
    if (n < 2 || !is_transitive(g)) {
      throw HypothesisError("the union of S a_i^2 S certificate needs H "
                            "transitive");
    }
    auto v = verify_not_prime_zSz(s, all_generator_powers(n, 2));
    return std::pair{v.outcome == PrimeVerdict::Outcome::not_prime_certified,
                     v.to_json()};
  });
  return suite;
}

}  // namespace permrel
