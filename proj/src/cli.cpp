#include "permrel/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "parallel.hpp"
#include "permrel/catalog.hpp"
#include "permrel/errors.hpp"
#include "permrel/growth.hpp"
#include "permrel/ideals.hpp"
#include "permrel/theorems.hpp"

namespace permrel {

void RunConfig::validate() const {
  if (max_len == 0 || class_cap == 0 || sample_budget == 0 || jobs == 0) {
    throw std::invalid_argument(
        "bounds (max length, class cap, sample budget, jobs) must be positive");
  }
}

json RunConfig::to_json() const {
  return json{{"max_len", max_len},
              {"class_cap", class_cap},
              {"sample_budget", sample_budget},
              {"checks", checks},
              {"out", out},
              {"jobs", jobs},
              {"seed", seed}};
}

namespace {

struct PresentationArgs {
  std::size_t n = 0;
  std::string generators;
  std::string preset;
  std::string subset;
};

void add_presentation_options(CLI::App* cmd, PresentationArgs& a) {
  cmd->add_option("-n,--degree", a.n, "Degree n");
  cmd->add_option("-g,--generators", a.generators,
                  "Generators of H in cycle notation, e.g. \"(1,2);(3,4)\"");
  cmd->add_option("--preset", a.preset, "Named group: trivial, cyclic, klein4, symN");
  cmd->add_option("--subset", a.subset,
                  "Relations from exactly these permutations (need not form a group)");
}

Presentation build_presentation(PresentationArgs const& a) {
  if (!a.preset.empty()) {
    if (!a.generators.empty() || !a.subset.empty()) {
      throw std::invalid_argument("--preset cannot be combined with -g or --subset");
    }
    return Presentation::from_group(preset_group(a.preset, a.n));
  }
  if (a.n == 0) {
    throw std::invalid_argument("-n is required unless --preset is given");
  }
  if (!a.subset.empty()) {
    if (!a.generators.empty()) {
      throw std::invalid_argument("-g and --subset are mutually exclusive");
    }
    auto const perms = parse_generators(a.subset, a.n);
    return Presentation::from_permutations(a.n, perms);
  }
  auto const gens = parse_generators(a.generators, a.n);
  return Presentation::from_group(generate(gens, a.n));
}

PermutationGroup const& require_group(Presentation const& p) {
  if (!p.group()) {
    throw std::invalid_argument(
        "this command needs a group; the given permutations are not closed");
  }
  return *p.group();
}

std::string yes_no(bool b) {
  return b ? "yes" : "no";
}

void write_report(RunConfig const&   config,
                  std::string const& command,
                  json               presentation,
                  json               result) {
  if (config.out.empty()) {
    return;
  }
  json j;
  j["schema"]       = 1;
  j["command"]      = command;
  j["config"]       = config.to_json();
  j["presentation"] = std::move(presentation);
  j["result"]       = std::move(result);
  std::ofstream file(config.out);
  if (!file) {
    throw std::runtime_error("cannot write report to " + config.out);
  }
  file << j.dump(2) << '\n';
}

void print_row(std::ostream& out, std::string const& key, std::string const& value) {
  out << std::left << std::setw(24) << key << value << '\n';
}

std::string witness_text(CancelWitness const& w) {
  std::string const a = "a_" + std::to_string(w.letter);
  if (w.side == Side::right) {
    return "u = " + to_string(w.u) + ", v = " + to_string(w.v) + ": u " + a
           + " = v " + a;
  }
  return "u = " + to_string(w.u) + ", v = " + to_string(w.v) + ": " + a + " u = "
         + a + " v";
}

std::vector<std::string> const& quick_checks() {
  static std::vector<std::string> const names{"cancellativity", "boundary_pairs",
                                              "avoiding_letters", "SzS_preimage"};
  return names;
}

void print_suite(std::ostream& out, SuiteReport const& suite) {
  for (auto const& e : suite.entries) {
    std::string detail;
    if (e.contains("reason")) {
      detail = e["reason"].get<std::string>();
    } else if (e.contains("report") && e["report"].contains("cases_checked")) {
      detail = std::to_string(e["report"]["cases_checked"].get<std::uint64_t>())
               + " cases, "
               + std::to_string(e["report"]["violations"].size())
               + " violations";
    }
    out << "  " << std::left << std::setw(24) << e["check"].get<std::string>()
        << std::setw(10) << e["status"].get<std::string>() << detail << '\n';
  }
}

int suite_exit(SuiteReport const& suite) {
  if (suite.failed) {
    return kExitViolation;
  }
  return suite.undecided ? kExitUndecided : kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> const& args,
            std::ostream&                   out,
            std::ostream&                   err) {
  CLI::App app{"Word problem, ideals and structural checks for S_n(H)", "permrel"};
  app.require_subcommand(1);

  RunConfig        config;
  PresentationArgs pa;
  std::size_t      cap = 0;

  auto common = [&](CLI::App* cmd) {
    add_presentation_options(cmd, pa);
    cmd->add_option("--cap", cap, "Class size cap (default PERMREL_CLASS_CAP or 1000000)")
      ->check(CLI::PositiveNumber);
    cmd->add_option("--out", config.out, "Write a JSON report to this path");
  };

  auto* group_cmd = app.add_subcommand("group", "Flags of the group generated by the cycles");
  std::string cycles;
  group_cmd->add_option("cycles", cycles, "Generators, e.g. \"(1,2);(3,4)\"");
  group_cmd->add_option("-n,--degree", pa.n, "Degree n")->required();
  group_cmd->add_option("--out", config.out, "Write a JSON report to this path");

  std::string w1, w2;
  auto*       eq_cmd = app.add_subcommand("eq", "Decide u = v in S");
  common(eq_cmd);
  eq_cmd->add_option("u", w1, "First word, e.g. 1,2,3")->required();
  eq_cmd->add_option("v", w2, "Second word")->required();

  auto* canon_cmd = app.add_subcommand("canon", "Canonical form of a word");
  common(canon_cmd);
  canon_cmd->add_option("w", w1, "Word")->required();

  auto* class_cmd = app.add_subcommand("class", "List the congruence class of a word");
  common(class_cmd);
  class_cmd->add_option("w", w1, "Word")->required();

  auto* cancel_cmd = app.add_subcommand("cancellative", "Prediction and witness search");
  common(cancel_cmd);
  cancel_cmd->add_option("--max-len", config.max_len, "Longest u searched (default n+3)")
      ->check(CLI::PositiveNumber);

  std::string ideal;
  auto*       member_cmd = app.add_subcommand("member", "Ideal membership of a word");
  common(member_cmd);
  member_cmd->add_option("w", w1, "Word")->required();
  member_cmd->add_option("--ideal", ideal, "Ideal, e.g. \"z + a_1^3\"")->required();

  std::size_t uv_len = 3, mid_len = 4;
  bool        zsz    = false;
  std::string wu, wv;
  auto*       prime_cmd = app.add_subcommand("prime", "Bounded primality check of an ideal");
  common(prime_cmd);
  prime_cmd->add_option("--ideal", ideal, "Ideal, e.g. \"z^2 + a_1^3\"")->required();
  prime_cmd->add_option("--uv-len", uv_len, "Longest u and v tried")
      ->check(CLI::PositiveNumber)->capture_default_str();
  prime_cmd->add_option("--mid-len", mid_len, "Longest separator tried")
      ->check(CLI::PositiveNumber)->capture_default_str();
  prime_cmd->add_flag("--zSz", zsz, "Certify non-primality via zSz inside the ideal");
  prime_cmd->add_option("--u", wu, "With --v: construct a separator for this pair");
  prime_cmd->add_option("--v", wv, "With --u: construct a separator for this pair");

  std::size_t growth_len = 0;
  auto*       growth_cmd = app.add_subcommand("growth", "Class counts and normal word counts");
  common(growth_cmd);
  growth_cmd->add_option("--len", growth_len, "Largest length")->required();
  growth_cmd->add_option("--ideal", ideal, "Also count words avoiding this ideal");

  bool  all_checks = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the structural checks");
  common(verify_cmd);
  verify_cmd->add_flag("--all", all_checks, "Run every check (default: the quick ones)");
  verify_cmd->add_option("--check", config.checks, "Run only these checks");
  verify_cmd->add_option("--max-len", config.max_len, "Cancellativity search length")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--budget", config.sample_budget, "Overlap samples per part")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", config.seed, "Sampler seed");
  verify_cmd->add_option("--jobs", config.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);

  bool  run_suite_flag = false;
  auto* catalog_cmd    = app.add_subcommand("catalog", "Abelian subgroups of Sym_n");
  catalog_cmd->add_option("-n,--degree", pa.n, "Degree n (2..5)")->required();
  catalog_cmd->add_flag("--run-suite", run_suite_flag, "Run the checks on every entry");
  catalog_cmd->add_flag("--all", all_checks, "With --run-suite: every check");
  catalog_cmd->add_option("--jobs", config.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  catalog_cmd->add_option("--out", config.out, "Write a JSON report to this path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    config.class_cap     = cap != 0 ? cap : default_class_cap();
    config.sample_budget = config.sample_budget != 0 ? config.sample_budget : 10'000;

    if (group_cmd->parsed()) {
      config.max_len = 1;
      config.validate();
      auto const gens  = parse_generators(cycles, pa.n);
      auto const entry = describe(generate(gens, pa.n));
      auto const& g    = entry.group;
      print_row(out, "generators", g.generators_string());
      print_row(out, "order", std::to_string(entry.order()));
      print_row(out, "abelian", yes_no(entry.abelian));
      print_row(out, "transitive", yes_no(entry.transitive));
      print_row(out, "semiregular", yes_no(entry.semiregular));
      print_row(out, "contains (1,...,n)", yes_no(entry.contains_full_cycle));
      bool const h1 = stabilizer(g, 1).is_trivial();
      bool const hn = stabilizer(g, static_cast<unsigned>(pa.n)).is_trivial();
      print_row(out, "H_1 trivial", yes_no(h1));
      print_row(out, "H_n trivial", yes_no(hn));
      print_row(out, "predicted cancellative",
                entry.predicted_cancellative ? yes_no(*entry.predicted_cancellative)
                                             : "n/a (not abelian)");
      json result        = entry.to_json();
      result["h1_trivial"] = h1;
      result["hn_trivial"] = hn;
      write_report(config, "group", json(nullptr), result);
      return kExitOk;
    }

    if (catalog_cmd->parsed()) {
      config.max_len = pa.n + 3;
      config.validate();
      auto const entries = enumerate_abelian_subgroups(pa.n);
      std::vector<SuiteReport> suites;
      if (run_suite_flag) {
        SuiteConfig sc;
        sc.jobs = 1;
        if (!all_checks) {
          sc.checks = quick_checks();
        }
        config.checks = sc.checks;
        auto chunks   = detail::parallel_ranges<std::vector<std::pair<std::size_t, SuiteReport>>>(
            entries.size(), config.jobs,
            [&](std::uint64_t begin, std::uint64_t end, auto& local) {
              for (auto i = begin; i < end; ++i) {
                local.emplace_back(i, run_suite(entries[i].group, sc));
              }
            });
        suites.resize(entries.size());
        for (auto& chunk : chunks) {
          for (auto& [i, r] : chunk) {
            suites[i] = std::move(r);
          }
        }
      }
      json list = json::array();
      bool failed = false, undecided = false;
      out << std::left << std::setw(7) << "order" << std::setw(24) << "generators"
          << std::setw(9) << "abelian" << std::setw(12) << "transitive"
          << std::setw(13) << "semiregular" << std::setw(12) << "full cycle"
          << "cancellative" << (run_suite_flag ? "  suite" : "") << '\n';
      for (std::size_t i = 0; i < entries.size(); ++i) {
        auto const& e = entries[i];
        json        j = e.to_json();
        out << std::left << std::setw(7) << e.order() << std::setw(24)
            << e.group.generators_string() << std::setw(9) << yes_no(e.abelian)
            << std::setw(12) << yes_no(e.transitive) << std::setw(13)
            << yes_no(e.semiregular) << std::setw(12)
            << yes_no(e.contains_full_cycle) << std::setw(12)
            << (e.predicted_cancellative ? yes_no(*e.predicted_cancellative) : "n/a");
        if (run_suite_flag) {
          auto const& s = suites[i];
          out << "  "
              << (s.failed ? "fail" : s.undecided ? "undecided" : "pass");
          failed    = failed || s.failed;
          undecided = undecided || s.undecided;
          j["suite"] = s.to_json();
        }
        out << '\n';
        list.push_back(std::move(j));
      }
      out << entries.size() << " abelian subgroups of Sym_" << pa.n << '\n';
      write_report(config, "catalog", json(nullptr), list);
      return failed ? kExitViolation : undecided ? kExitUndecided : kExitOk;
    }

    Presentation const p = build_presentation(pa);
    std::size_t const  n = p.degree();
    MonoidOptions      mo;
    mo.class_cap = config.class_cap;
    Monoid const s(p, mo);

    if (eq_cmd->parsed()) {
      config.max_len = std::max<std::size_t>(1, std::max(w1.size(), w2.size()));
      config.validate();
      Word const u     = parse_word(w1, n);
      Word const v     = parse_word(w2, n);
      bool const equal = s.equal(u, v);
      out << (equal ? "equal" : "not equal") << '\n';
      write_report(config, "eq", p.to_json(),
                   json{{"u", word_to_json(u)}, {"v", word_to_json(v)}, {"equal", equal}});
      return kExitOk;
    }

    if (canon_cmd->parsed()) {
      config.max_len = 1;
      config.validate();
      Word const w = parse_word(w1, n);
      Word const c = s.canonical_form(w);
      out << to_string(c) << '\n';
      write_report(config, "canon", p.to_json(),
                   json{{"word", word_to_json(w)}, {"canonical", word_to_json(c)}});
      return kExitOk;
    }

    if (class_cmd->parsed()) {
      config.max_len = 1;
      config.validate();
      Word const w   = parse_word(w1, n);
      auto const cls = congruence_class(p, w, config.class_cap);
      if (cls.truncated) {
        err << "undecided: the class of " << to_string(w) << " exceeds "
            << config.class_cap << " members\n";
        return kExitUndecided;
      }
      out << "size " << cls.size() << '\n';
      json members = json::array();
      for (auto const& m : cls.members) {
        out << to_string(m) << '\n';
        members.push_back(word_to_json(m));
      }
      write_report(config, "class", p.to_json(),
                   json{{"word", word_to_json(w)}, {"members", members}});
      return kExitOk;
    }

    if (cancel_cmd->parsed()) {
      if (config.max_len == 0) {
        config.max_len = n + 3;
      }
      config.validate();
      auto const report = cancellativity_report(s, config.max_len);
      print_row(out, "necessary condition", yes_no(report.necessary_condition));
      print_row(out, "predicted cancellative",
                report.predicted ? yes_no(*report.predicted) : "n/a (not abelian)");
      print_row(out, "searched |u| up to", std::to_string(report.searched_len));
      bool found = false;
      for (auto const* w : {&report.right_witness, &report.left_witness}) {
        if (!*w) {
          continue;
        }
        if (!verify_witness(s, **w)) {
          throw std::logic_error("witness failed to re-verify");
        }
        found = true;
        print_row(out, to_string((*w)->side) + " witness", witness_text(**w));
      }
      if (!found) {
        print_row(out, "witness", "none");
      }
      write_report(config, "cancellative", p.to_json(), report.to_json());
      return found ? kExitViolation : kExitOk;
    }

    if (member_cmd->parsed()) {
      config.max_len = 1;
      config.validate();
      Word const      w    = parse_word(w1, n);
      IdealSpec const spec = IdealSpec::parse(ideal, n);
      bool const      in   = in_spec(s, w, spec);
      out << (in ? "in ideal" : "not in ideal") << '\n';
      write_report(config, "member", p.to_json(),
                   json{{"word", word_to_json(w)},
                        {"ideal", spec.to_json()},
                        {"member", in}});
      return kExitOk;
    }

    if (prime_cmd->parsed()) {
      config.max_len = std::max(uv_len, mid_len);
      config.validate();
      IdealSpec const spec = IdealSpec::parse(ideal, n);
      if (!wu.empty() || !wv.empty()) {
        Word const u   = parse_word(wu, n);
        Word const v   = parse_word(wv, n);
        Word const mid = prime_witness(s, spec, u, v);
        out << "separator " << to_string(mid) << '\n';
        write_report(config, "prime", p.to_json(),
                     json{{"ideal", spec.to_json()},
                          {"u", word_to_json(u)},
                          {"v", word_to_json(v)},
                          {"separator", word_to_json(mid)}});
        return kExitOk;
      }
      PrimeVerdict const verdict = zsz ? verify_not_prime_zSz(s, spec)
                                       : check_prime_bounded(s, spec, uv_len, mid_len);
      out << to_string(verdict.outcome);
      if (verdict.u && verdict.v) {
        out << ": u = " << to_string(*verdict.u) << ", v = " << to_string(*verdict.v);
      }
      if (!verdict.reason.empty()) {
        out << ": " << verdict.reason;
      }
      out << '\n';
      if (verdict.outcome == PrimeVerdict::Outcome::no_counterexample_up_to) {
        out << verdict.pairs_checked << " pairs, |u|,|v| <= " << uv_len
            << ", |s| <= " << mid_len << '\n';
      }
      json result     = verdict.to_json();
      result["ideal"] = spec.to_json();
      write_report(config, "prime", p.to_json(), result);
      bool const bad = verdict.outcome == PrimeVerdict::Outcome::counterexample
                       || verdict.outcome == PrimeVerdict::Outcome::inconclusive;
      return bad ? kExitViolation : kExitOk;
    }

    if (growth_cmd->parsed()) {
      config.max_len = growth_len;
      config.validate();
      GrowthSeries const classes = class_series(p, growth_len);
      std::optional<GrowthSeries> normal;
      std::optional<IdealSpec>    spec;
      if (!ideal.empty()) {
        spec   = IdealSpec::parse(ideal, n);
        normal = normal_series(p, *spec, growth_len);
      }
      out << std::right << std::setw(6) << "len" << std::setw(16) << "classes";
      if (normal) {
        out << std::setw(16) << "normal";
      }
      out << '\n';
      for (std::size_t l = 0; l <= growth_len; ++l) {
        out << std::setw(6) << l << std::setw(16) << classes.counts[l];
        if (normal) {
          out << std::setw(16) << normal->counts[l];
        }
        out << '\n';
      }
      out << "classes " << classes.to_json().dump() << '\n';
      json result{{"classes", classes.to_json()}};
      if (normal) {
        out << "normal " << normal->to_json().dump() << '\n';
        result["ideal"]  = spec->to_json();
        result["normal"] = normal->to_json();
      }
      write_report(config, "growth", p.to_json(), result);
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      auto const& g = require_group(p);
      if (config.max_len == 0) {
        config.max_len = n + 3;
      }
      config.validate();
      if (config.checks.empty() && !all_checks) {
        config.checks = quick_checks();
      }
      SuiteConfig sc;
      sc.cancel_len    = config.max_len;
      sc.sample_budget = config.sample_budget;
      sc.seed          = config.seed;
      sc.jobs          = config.jobs;
      sc.checks        = config.checks;
      SuiteReport const suite = run_suite(g, sc);
      out << "verify " << g.generators_string() << " in Sym_" << n << '\n';
      print_suite(out, suite);
      json result       = suite.to_json();
      result["config"]  = sc.resolved(n).to_json();
      write_report(config, "verify", p.to_json(), result);
      return suite_exit(suite);
    }
  } catch (UndecidedAtCap const& e) {
    err << "undecided: " << e.what() << '\n';
    return kExitUndecided;
  } catch (ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (std::invalid_argument const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (std::length_error const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (std::out_of_range const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (std::overflow_error const& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (std::exception const& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitUsage;
}

}  // namespace permrel
