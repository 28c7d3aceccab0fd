#include "patineq/cli.hpp"

#include "patineq/exactmath.hpp"
#include "patineq/occur.hpp"
#include "patineq/patterns.hpp"
#include "patineq/permineq.hpp"
#include "patineq/report.hpp"
#include "patineq/verify.hpp"
#include "patineq/wordineq.hpp"

#include <CLI11.hpp>

#include <optional>
#include <string>

namespace patineq {

namespace {

struct GlobalOptions {
  std::string format = "text";
  std::uint64_t seed = 1;
  Budgets budgets;
};

Json budgets_json(const Budgets& b) {
  Json j;
  j["maxEnumeration"] = std::to_string(b.max_enumeration);
  j["maxAmbientFactorial"] = std::to_string(b.max_ambient_n);
  j["maxWordSpace"] = std::to_string(b.max_word_space);
  return j;
}

// workerCount is left out on purpose: output must not depend on it.
Json base_config(const GlobalOptions& g) {
  Json j;
  j["format"] = g.format;
  j["seed"] = std::to_string(g.seed);
  j["budgets"] = budgets_json(g.budgets);
  return j;
}

std::vector<int> parse_theorem_form(const std::string& text) { return parse_sequence(text); }

struct Outcome {
  Report report;
  bool failure = false;
};

// --- table ----------------------------------------------------------------

struct TableArgs {
  int m = 0;
  bool brace_form = false;
};

Outcome cmd_table(const TableArgs& a, const GlobalOptions& g) {
  if (a.m < 0) throw std::invalid_argument("--m must be nonnegative");
  Outcome o;
  o.report.command = "table";
  o.report.config = base_config(g);
  o.report.config["m"] = std::to_string(a.m);
  o.report.config["brace"] = a.brace_form;
  Json grid = Json::array();
  const auto table = bracket_table(a.m);
  for (int i = 0; i <= a.m; ++i) {
    Json row = Json::array();
    for (int j = 0; j <= a.m; ++j) {
      row.push_back(a.brace_form ? encode(brace(i, j, a.m)) : encode(table->at(i, j)));
    }
    grid.push_back(std::move(row));
  }
  o.report.results = std::move(grid);
  o.report.paper_refs = {a.brace_form ? "brace numbers {i,j}_m" : "bracket numbers [i,j]_m"};
  return o;
}

// --- count ----------------------------------------------------------------

struct CountArgs {
  std::string pattern;
  std::string text;
  bool word = false;
};

Outcome cmd_count(const CountArgs& a, const GlobalOptions& g) {
  Outcome o;
  o.report.command = "count";
  o.report.config = base_config(g);
  o.report.config["pattern"] = a.pattern;
  o.report.config["text"] = a.text;
  o.report.config["kind"] = a.word ? "word" : "perm";
  const auto ambient = parse_sequence(a.text);
  Natural count;
  if (a.word) {
    count = count_occurrences(parse_word(a.pattern), ambient);
  } else {
    count = count_occurrences(parse_perm(a.pattern), ambient);
  }
  Json r;
  r["pattern"] = a.pattern;
  r["ambient"] = a.text;
  r["kind"] = a.word ? "word" : "perm";
  r["count"] = encode(count);
  o.report.results = std::move(r);
  o.report.paper_refs = {"pattern occurrences"};
  return o;
}

// --- inequality -----------------------------------------------------------

struct InequalityArgs {
  std::string kind = "perm";
  int m = 0;
  std::optional<int> l;
  std::optional<std::string> tau;
  bool all = false;
};

Outcome cmd_inequality(const InequalityArgs& a, const GlobalOptions& g) {
  if (a.m < 0) throw std::invalid_argument("--m must be nonnegative");
  const bool word = a.kind == "word";
  const int l = word ? a.l.value_or(a.m) : a.m;
  Outcome o;
  o.report.command = "inequality";
  o.report.config = base_config(g);
  o.report.config["kind"] = a.kind;
  o.report.config["m"] = std::to_string(a.m);
  if (word) o.report.config["l"] = std::to_string(l);
  o.report.config["mode"] = a.tau ? "single" : "all";
  if (a.tau) o.report.config["tau"] = *a.tau;
  o.report.paper_refs = {word ? "word inequality sum [i,j]_m[tau(i),tau(j)]_l >= rhs"
                              : "permutation inequality sum [i,j]_m[tau(i),tau(j)]_m >= C(2m+1,m)^2"};

  if (a.tau) {
    const auto tau = parse_theorem_form(*a.tau);
    if (static_cast<int>(tau.size()) != a.m + 1) {
      throw std::invalid_argument("--tau must have m+1 = " + std::to_string(a.m + 1) + " values");
    }
    if (word) {
      const auto r = word_inequality_report(tau, l);
      o.report.results = to_json(r);
      o.failure = sign_of(r.margin) < 0;
    } else {
      const auto r = inequality_report(tau);
      o.report.results = to_json(r);
      o.failure = r.margin.sign() < 0;
    }
    return o;
  }

  Json rows = Json::array();
  Json summary;
  if (word) {
    if (l < 0 || l > a.m) throw std::invalid_argument("--l must satisfy 0 <= l <= m");
    const Natural count = factorial(l + 1) * stirling2(a.m + 1, l + 1);
    if (count > Natural(g.budgets.max_enumeration)) {
      throw BudgetExceeded("maxEnumeration", count.str() + " patterns exceed " +
                                                 std::to_string(g.budgets.max_enumeration));
    }
    std::optional<Ratio> lo, hi;
    for (const auto& p : enumerate_word_patterns(a.m + 1, l + 1)) {
      const auto r = word_inequality_report(p.theorem_form(), l);
      if (!lo || r.margin < *lo) lo = r.margin;
      if (!hi || r.margin > *hi) hi = r.margin;
      o.failure = o.failure || sign_of(r.margin) < 0;
      rows.push_back(to_json(r));
    }
    summary["patterns"] = std::to_string(rows.size());
    summary["minMargin"] = encode(*lo);
    summary["maxMargin"] = encode(*hi);
  } else {
    const auto ext = extremal_search(a.m, SearchOptions{g.budgets, true});
    for_each_perm_pattern(a.m + 1, [&](const PermPattern& p) {
      const auto r = inequality_report(p.theorem_form());
      o.failure = o.failure || r.margin.sign() < 0;
      rows.push_back(to_json(r));
    });
    summary["patterns"] = std::to_string(rows.size());
    summary["minMargin"] = encode(ext.m_lower);
    summary["maxMargin"] = encode(ext.m_star);
  }
  summary["violation"] = o.failure;
  Json results;
  results["summary"] = std::move(summary);
  results["rows"] = std::move(rows);
  o.report.results = std::move(results);
  return o;
}

// --- moments --------------------------------------------------------------

struct MomentsArgs {
  std::string pattern;
  int n = 0;
  std::optional<int> k;
  bool exhaustive = false;
  std::optional<std::uint64_t> samples;
};

Outcome cmd_moments(const MomentsArgs& a, const GlobalOptions& g) {
  if (a.exhaustive && a.samples) {
    throw std::invalid_argument("--exhaustive and --samples are mutually exclusive");
  }
  Outcome o;
  o.report.command = "moments";
  o.report.config = base_config(g);
  o.report.config["pattern"] = a.pattern;
  o.report.config["n"] = std::to_string(a.n);
  if (a.k) o.report.config["k"] = std::to_string(*a.k);
  o.report.config["mode"] = a.samples ? "sampled" : "exhaustive";
  if (a.samples) o.report.config["samples"] = std::to_string(*a.samples);
  o.report.paper_refs = {"E(X) = C(n,M)/M! (permutations), C(k,L)C(n,M)/k^M (words)",
                         "Var(X) = E(X^2) - E(X)^2"};

  MomentReport r;
  Json expected;
  if (a.k) {
    const WordPattern p = parse_word(a.pattern);
    r = a.samples ? sample_moments(p, a.n, a.k, *a.samples, g.seed)
                  : exhaustive_moments_word(p, a.n, *a.k, g.budgets);
    expected = encode(expectation_formula_word(p.length(), p.alphabet_size(), a.n, *a.k));
  } else {
    const PermPattern p = parse_perm(a.pattern);
    r = a.samples ? sample_moments(p, a.n, std::nullopt, *a.samples, g.seed)
                  : exhaustive_moments_perm(p, a.n, g.budgets);
    expected = encode(expectation_formula_perm(p.length(), a.n));
  }
  Json results = to_json(r);
  results["expectationFormula"] = std::move(expected);
  o.report.results = std::move(results);
  return o;
}

// --- extremal -------------------------------------------------------------

struct ExtremalArgs {
  int m = 0;
  bool word = false;
  std::optional<int> l;
  bool no_symmetry = false;
};

Outcome cmd_extremal(const ExtremalArgs& a, const GlobalOptions& g) {
  Outcome o;
  o.report.command = "extremal";
  o.report.config = base_config(g);
  o.report.config["m"] = std::to_string(a.m);
  o.report.config["kind"] = a.word ? "word" : "perm";
  if (a.word) {
    const int l = a.l.value_or(a.m);
    o.report.config["l"] = std::to_string(l);
    const auto r = word_extremal_search(a.m, l, g.budgets);
    o.report.results = to_json(r);
    o.failure = sign_of(r.min_margin) < 0;
    o.report.paper_refs = {"min/max margin of the word inequality over all onto patterns"};
  } else {
    o.report.config["symmetryPruning"] = !a.no_symmetry;
    const auto r = extremal_search(a.m, SearchOptions{g.budgets, !a.no_symmetry});
    o.report.results = to_json(r);
    o.failure = r.m_lower.sign() < 0;
    o.report.paper_refs = {"M*(m) = max margin, M_*(m) = min margin over all patterns"};
  }
  return o;
}

Outcome cmd_conjectures(int m_max, const GlobalOptions& g) {
  Outcome o;
  o.report.command = "conjectures";
  o.report.config = base_config(g);
  o.report.config["mMax"] = std::to_string(m_max);
  Json rows = Json::array();
  for (const auto& row : conjecture_tables(m_max, SearchOptions{g.budgets, true})) {
    o.failure = o.failure || row.violation;
    rows.push_back(to_json(row));
  }
  Json results;
  results["note"] = "numerical evidence for small m only, not a verified claim";
  results["rows"] = std::move(rows);
  o.report.results = std::move(results);
  o.report.paper_refs = {"strictness of the permutation inequality", "ratio M_*(m)/M*(m)"};
  return o;
}

// --- covariance -----------------------------------------------------------

struct CovarianceArgs {
  std::string p1;
  std::string p2;
  bool word = false;
};

Outcome cmd_covariance(const CovarianceArgs& a, const GlobalOptions& g) {
  Outcome o;
  o.report.command = "covariance";
  o.report.config = base_config(g);
  o.report.config["p1"] = a.p1;
  o.report.config["p2"] = a.p2;
  o.report.config["kind"] = a.word ? "word" : "perm";
  if (a.word) {
    const WordPattern p = parse_word(a.p1);
    const WordPattern q = parse_word(a.p2);
    o.report.results = to_json(word_discriminant(p, q), p, q);
    o.report.paper_refs = {"word covariance sign criterion"};
  } else {
    const auto r = covariance_leading_coeff(parse_perm(a.p1), parse_perm(a.p2));
    o.report.results = to_json(r);
    o.report.paper_refs = {"leading coefficient of Cov(X_p1, X_p2) in n"};
  }
  return o;
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::optional<std::string> suite;
  std::string level = "desk";
  bool list = false;
};

Outcome cmd_verify(const VerifyArgs& a, const GlobalOptions& g) {
  Outcome o;
  o.report.command = "verify";
  o.report.config = base_config(g);
  o.report.config["level"] = a.level;
  o.report.config["suite"] = a.suite.value_or("all");
  o.report.paper_refs = {"closed forms checked against brute-force oracles"};
  if (a.list) {
    Json rows = Json::array();
    for (const auto& s : verify_suites()) {
      Json row;
      row["suite"] = s.name;
      row["description"] = s.description;
      rows.push_back(std::move(row));
    }
    o.report.results = std::move(rows);
    return o;
  }
  const VerifyLevel level = parse_verify_level(a.level);
  const auto checks = a.suite ? run_suite(*a.suite, level, g.budgets) : run_all_suites(level, g.budgets);
  Json rows = Json::array();
  std::size_t failed = 0;
  for (const auto& c : checks) {
    Json row;
    row["suite"] = c.suite;
    row["check"] = c.name;
    row["status"] = c.passed ? "pass" : "FAIL";
    row["detail"] = c.detail;
    rows.push_back(std::move(row));
    if (!c.passed) ++failed;
  }
  Json summary;
  summary["checks"] = std::to_string(checks.size());
  summary["failed"] = std::to_string(failed);
  Json results;
  results["summary"] = std::move(summary);
  results["rows"] = std::move(rows);
  o.report.results = std::move(results);
  o.failure = failed > 0;
  return o;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact pattern-occurrence statistics and bracket-number inequalities"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for sampled runs")->capture_default_str();
  app.add_option("--budget-enumeration", g.budgets.max_enumeration,
                 "Max patterns visited by a search")
      ->envname("PATINEQ_BUDGET_ENUMERATION")
      ->capture_default_str();
  app.add_option("--budget-ambient-n", g.budgets.max_ambient_n,
                 "Max n for enumeration over all of S_n")
      ->envname("PATINEQ_BUDGET_AMBIENT_N")
      ->capture_default_str();
  app.add_option("--budget-word-space", g.budgets.max_word_space, "Max k^n for word enumeration")
      ->envname("PATINEQ_BUDGET_WORD_SPACE")
      ->capture_default_str();
  app.add_option("--workers", g.budgets.workers, "Worker threads")
      ->envname("PATINEQ_WORKERS")
      ->capture_default_str();

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Print the bracket table [i,j]_m");
  table->add_option("--m", table_args.m, "Table size parameter")->required();
  table->add_flag("--brace", table_args.brace_form, "Print {i,j}_m as exact fractions");

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Count occurrences of a pattern");
  count->add_option("--pattern", count_args.pattern, "Pattern, e.g. 132 or 10,2,3")->required();
  count->add_option("--text", count_args.text, "Ambient sequence")->required();
  count->add_flag("--word", count_args.word, "Treat pattern and text as words");

  InequalityArgs ineq_args;
  auto* ineq = app.add_subcommand("inequality", "Evaluate the bracket inequality");
  ineq->add_option("kind", ineq_args.kind, "perm or word")
      ->required()
      ->check(CLI::IsMember({"perm", "word"}));
  ineq->add_option("--m", ineq_args.m, "Patterns live on {0..m}")->required();
  ineq->add_option("--l", ineq_args.l, "Word patterns map onto {0..l}");
  auto* tau_opt = ineq->add_option("--tau", ineq_args.tau, "0-based pattern, e.g. 021");
  ineq->add_flag("--all", ineq_args.all, "Evaluate every pattern (default)")->excludes(tau_opt);

  MomentsArgs mom_args;
  auto* moments = app.add_subcommand("moments", "Moments of the occurrence count");
  moments->add_option("--pattern", mom_args.pattern, "Pattern (1-based)")->required();
  moments->add_option("--n", mom_args.n, "Ambient length")->required();
  moments->add_option("--k", mom_args.k, "Alphabet size; implies word ambient");
  moments->add_flag("--exhaustive", mom_args.exhaustive, "Enumerate every ambient (default)");
  moments->add_option("--samples", mom_args.samples, "Monte Carlo sample count");

  ExtremalArgs ext_args;
  auto* extremal = app.add_subcommand("extremal", "Max/min margin over all patterns");
  extremal->add_option("--m", ext_args.m, "Patterns live on {0..m}")->required();
  extremal->add_flag("--word", ext_args.word, "Search word patterns onto {0..l}");
  extremal->add_option("--l", ext_args.l, "Word alphabet bound");
  extremal->add_flag("--no-symmetry", ext_args.no_symmetry, "Disable orbit pruning (debug)");

  int conj_m_max = 6;
  auto* conj = app.add_subcommand("conjectures", "Per-m minimum margins and M_*/M* ratios");
  conj->add_option("--m-max", conj_m_max, "Largest m")->capture_default_str();

  CovarianceArgs cov_args;
  auto* cov = app.add_subcommand("covariance", "Leading covariance coefficient of two patterns");
  cov->add_option("--p1", cov_args.p1, "First pattern (1-based)")->required();
  cov->add_option("--p2", cov_args.p2, "Second pattern (1-based)")->required();
  cov->add_flag("--word", cov_args.word, "Word patterns: report the sign discriminant");

  VerifyArgs ver_args;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", ver_args.suite, "Suite name (default: all)");
  verify->add_option("--level", ver_args.level, "desk or extended")
      ->check(CLI::IsMember({"desk", "extended"}))
      ->capture_default_str();
  verify->add_flag("--list", ver_args.list, "List suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Outcome o;
    if (table->parsed()) {
      o = cmd_table(table_args, g);
    } else if (count->parsed()) {
      o = cmd_count(count_args, g);
    } else if (ineq->parsed()) {
      o = cmd_inequality(ineq_args, g);
    } else if (moments->parsed()) {
      o = cmd_moments(mom_args, g);
    } else if (extremal->parsed()) {
      o = cmd_extremal(ext_args, g);
    } else if (conj->parsed()) {
      o = cmd_conjectures(conj_m_max, g);
    } else if (cov->parsed()) {
      o = cmd_covariance(cov_args, g);
    } else {
      o = cmd_verify(ver_args, g);
    }
    out << o.report.render(parse_output_format(g.format));
    return o.failure ? kExitFailure : kExitOk;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace patineq
