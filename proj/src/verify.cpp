#include "patineq/verify.hpp"

#include "patineq/exactmath.hpp"
#include "patineq/occur.hpp"
#include "patineq/oracle.hpp"
#include "patineq/patterns.hpp"
#include "patineq/permineq.hpp"
#include "patineq/wordineq.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace patineq {

VerifyLevel parse_verify_level(const std::string& name) {
  if (name == "desk") return VerifyLevel::desk;
  if (name == "extended") return VerifyLevel::extended;
  throw std::invalid_argument("unknown verification level '" + name + "'");
}

std::string to_string(VerifyLevel level) {
  return level == VerifyLevel::desk ? "desk" : "extended";
}

namespace {

class Checker {
 public:
  explicit Checker(std::string suite) : suite_(std::move(suite)) {}

  void check(std::string name, bool passed, std::string detail = {}) {
    results_.push_back({suite_, std::move(name), passed, std::move(detail)});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  std::vector<CheckResult> results_;
};

struct Context {
  VerifyLevel level;
  Budgets budgets;
  bool extended() const { return level == VerifyLevel::extended; }
};

std::string str(int v) { return std::to_string(v); }

std::vector<std::vector<int>> all_bijections(int m) {
  std::vector<std::vector<int>> out;
  for_each_perm_pattern(m + 1, [&](const PermPattern& p) { out.push_back(p.theorem_form()); });
  return out;
}

std::vector<WordPattern> surjective_patterns_up_to(int max_length) {
  std::vector<WordPattern> out;
  for (int length = 1; length <= max_length; ++length) {
    for (int l = 1; l <= length; ++l) {
      auto batch = enumerate_word_patterns(length, l);
      out.insert(out.end(), batch.begin(), batch.end());
    }
  }
  return out;
}

void suite_brackets(Checker& c, const Context&) {
  constexpr int kMax = 8;
  bool symmetric = true;
  bool bounded = true;
  bool monotone = true;
  bool diagonal = true;
  bool totals = true;
  bool braces = true;
  std::string first_failure;
  for (int m = 0; m <= kMax; ++m) {
    const auto t = bracket_table(m);
    const Natural top = binomial(2 * m, m);
    Natural total;
    for (int i = 0; i <= m; ++i) {
      for (int j = 0; j <= m; ++j) {
        const Natural& v = t->at(i, j);
        total += v;
        if (v != t->at(j, i) || v != t->at(m - i, m - j)) symmetric = false;
        const bool corner_low = (i == 0 && j == m) || (i == m && j == 0);
        const bool corner_high = (i == 0 && j == 0) || (i == m && j == m);
        if (v < Natural(1) || v > top) bounded = false;
        if (m > 0 && ((v == Natural(1)) != corner_low || (v == top) != corner_high)) bounded = false;
        if (i <= j) {
          if (i > 0 && !(v > t->at(i - 1, j))) monotone = false;
          if (j < m && !(v > t->at(i, j + 1))) monotone = false;
        }
        if (Ratio(v.value()) != brace(i, j, m) * Ratio(top.value())) braces = false;
      }
    }
    for (int i = 1; i <= m / 2; ++i) {
      if (!(t->at(i, i) < t->at(i - 1, i - 1))) diagonal = false;
    }
    if (total != Natural(static_cast<std::uint64_t>(2 * m + 1)) * top) {
      totals = false;
      if (first_failure.empty()) first_failure = "total at m=" + str(m) + " is " + total.str();
    }
  }
  c.check("symmetry [i,j]=[j,i]=[m-i,m-j], m<=8", symmetric);
  c.check("1 <= [i,j] <= C(2m,m), equality only at corners, m<=8", bounded);
  c.check("monotonicity lemmas for i<=j, m<=8", monotone);
  c.check("diagonal strictly decreasing towards the centre, m<=8", diagonal);
  c.check("sum of table = (2m+1)C(2m,m), m<=8", totals, first_failure);
  c.check("[i,j] = C(2m,m){i,j}, m<=8", braces);
}

void suite_determinant(Checker& c, const Context& ctx) {
  const int max_m = ctx.extended() ? 8 : 5;
  for (int m = 0; m <= max_m; ++m) {
    const auto d = bracket_determinant(m);
    c.check("det m=" + str(m), d.agrees(),
            "elimination " + d.eliminated.str() + ", closed form " + to_string(d.closed_form));
  }
}

void suite_order_reversal(Checker& c, const Context& ctx) {
  const int max_m = ctx.extended() ? 6 : 5;
  const std::vector<int> trivial{0};
  c.check("m=0 identity is (trivially) order reversing", is_order_reversing(trivial));
  const auto report = prop1_verify(max_m);
  std::string detail = std::to_string(report.patterns_checked) + " patterns";
  if (!report.holds()) detail += ", first reversing: " + format_sequence(report.reversing.front());
  c.check("no order-reversing tau for 1<=m<=" + str(max_m), report.holds(), detail);
}

void suite_hlp(Checker& c, const Context&) {
  const std::vector<std::uint64_t> hlp{1, 8, 75, 792, 8660, 98876};
  const std::vector<std::uint64_t> rhs{1, 9, 100, 1225, 15876, 213444};
  for (int m = 1; m <= 5; ++m) {
    const auto h = hlp_lower_bound(m);
    const auto r = rhs_perm(m);
    const auto um = static_cast<std::size_t>(m);
    c.check("m=" + str(m) + " rearrangement bound " + h.str() + " < " + r.str(),
            h == Natural(hlp[um]) && r == Natural(rhs[um]) && h < r);
    Natural min_lhs;
    bool first = true;
    for (const auto& tau : all_bijections(m)) {
      const auto l = lhs_perm(tau);
      if (first || l < min_lhs) min_lhs = l;
      first = false;
    }
    c.check("m=" + str(m) + " rearrangement bound <= min lhs", h <= min_lhs,
            "min lhs " + min_lhs.str());
  }
}

void suite_perm_inequality(Checker& c, const Context& ctx) {
  const int max_m = ctx.extended() ? 7 : 6;
  for (int m = 0; m <= max_m; ++m) {
    Integer min_margin;
    bool first = true;
    std::uint64_t count = 0;
    for (const auto& tau : all_bijections(m)) {
      const Integer margin = margin_perm(tau);
      if (first || margin < min_margin) min_margin = margin;
      first = false;
      ++count;
    }
    c.check("m=" + str(m) + " margin >= 0 over " + std::to_string(count) + " patterns",
            min_margin.sign() >= 0, "min margin " + min_margin.str());
    if (m >= 1) {
      c.check("m=" + str(m) + " margin > 0 (strictness evidence)", min_margin.sign() > 0,
              "min margin " + min_margin.str());
    }
  }
}

void suite_pair_sums(Checker& c, const Context& ctx) {
  const int pair_m = ctx.extended() ? 3 : 2;
  for (int m = 1; m <= pair_m; ++m) {
    const auto taus = all_bijections(m);
    bool bounded = true;
    bool reduces = true;
    Natural min_pair;
    bool first = true;
    for (const auto& a : taus) {
      std::vector<int> inverse(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) inverse[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
      for (const auto& b : taus) {
        const auto v = lhs_pair(a, b);
        if (first || v < min_pair) min_pair = v;
        first = false;
        if (v < rhs_perm(m)) bounded = false;
        std::vector<int> composed(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) composed[i] = b[static_cast<std::size_t>(inverse[i])];
        if (v != lhs_perm(composed)) reduces = false;
      }
    }
    c.check("m=" + str(m) + " pair sums >= C(2m+1,m)^2 over all " +
                std::to_string(taus.size() * taus.size()) + " pairs",
            bounded, "min " + min_pair.str());
    c.check("m=" + str(m) + " pair sum equals lhs of the composed pattern", reduces);
  }
  const std::vector<int> id1{0, 1};
  const Ratio n1 = normalized_lhs(id1);
  c.check("normalized lhs m=1 is 5/2, >= 9/4 and < 4",
          n1 == Ratio(5, 2) && normalized_rhs(1) == Ratio(9, 4) && n1 >= normalized_rhs(1) &&
              n1 < Ratio(4),
          to_string(n1));
  bool scaled = true;
  bool above = true;
  for (int m = 0; m <= 4; ++m) {
    const Natural c2 = binomial(2 * m, m);
    for (const auto& tau : all_bijections(m)) {
      const Ratio nl = normalized_lhs(tau);
      if (nl * Ratio((c2 * c2).value()) != Ratio(lhs_perm(tau).value())) scaled = false;
      if (nl < normalized_rhs(m)) above = false;
    }
  }
  c.check("normalized lhs * C(2m,m)^2 = lhs, m<=4", scaled);
  c.check("normalized lhs >= ((2m+1)/(m+1))^2, m<=4", above);
}

void suite_oracle_paths(Checker& c, const Context& ctx) {
  const int max_paths = ctx.extended() ? 6 : 4;
  const int max_pairs = ctx.extended() ? 4 : 3;
  for (int m = 0; m <= max_paths; ++m) {
    bool ok = true;
    for (int i = 0; i <= m; ++i) {
      for (int j = 0; j <= m; ++j) ok = ok && paths_through(m, i, j) == bracket(i, j, m);
    }
    c.check("enumerated paths through (i,j) = [i,j]_m, m=" + str(m), ok);
  }
  for (int m = 0; m <= max_pairs; ++m) {
    bool ok = true;
    for (const auto& tau : all_bijections(m)) ok = ok && path_pair_lhs(tau) == lhs_perm(tau);
    c.check("path-pair count = lhs for every tau, m=" + str(m), ok);
  }
}

void suite_oracle_decomposition(Checker& c, const Context&) {
  for (int length = 1; length <= kMaxDecompositionPermLength; ++length) {
    bool ok = true;
    std::string detail;
    for_each_perm_pattern(length, [&](const PermPattern& p) {
      const auto brute = decomposition_count(p);
      const auto formula = cross_sum(p, p);
      if (brute != formula && detail.empty()) {
        detail = p.str() + ": brute " + brute.str() + " vs " + formula.str();
      }
      ok = ok && brute == formula;
    });
    c.check("perm decomposition triples = cross sum, M=" + str(length), ok, detail);
  }
  for (int k = 1; k <= 4; ++k) {
    bool ok = true;
    std::string detail;
    for (const auto& p : surjective_patterns_up_to(kMaxDecompositionWordLength)) {
      const auto brute = decomposition_count(p, k);
      const auto formula = f_function(p, k).value;
      if (brute != formula && detail.empty()) {
        detail = p.str() + ": brute " + brute.str() + " vs f " + formula.str();
      }
      ok = ok && brute == formula;
    }
    c.check("word decomposition triples = f(tau,k), M<=3, k=" + str(k), ok, detail);
  }
}

void suite_moments(Checker& c, const Context& ctx) {
  const int max_n = 7;
  for (int length = 1; length <= 3; ++length) {
    bool means = true;
    bool exchange = true;
    bool variances = true;
    for_each_perm_pattern(length, [&](const PermPattern& p) {
      for (int n = 1; n <= max_n; ++n) {
        const auto r = exhaustive_moments_perm(p, n, ctx.budgets);
        means = means && r.mean == expectation_formula_perm(length, n);
        const Ratio total = r.mean * Ratio(factorial(n).value());
        exchange = exchange && total == ratio_of(factorial(n) * binomial(n, length), factorial(length));
        variances = variances && r.variance && *r.variance >= 0 &&
                    *r.variance == r.second_moment - r.mean * r.mean;
      }
    });
    c.check("exhaustive mean over S_n = C(n,M)/M!, M=" + str(length) + ", n<=7", means);
    c.check("sum of counts over S_n = n!C(n,M)/M!, M=" + str(length) + ", n<=7", exchange);
    c.check("variance = E(X^2)-E(X)^2 >= 0, M=" + str(length) + ", n<=7", variances);
  }
  for (int k = 1; k <= 3; ++k) {
    bool means = true;
    for (const auto& p : surjective_patterns_up_to(3)) {
      for (int n = 1; n <= 6; ++n) {
        const auto r = exhaustive_moments_word(p, n, k, ctx.budgets);
        means = means && r.mean == expectation_formula_word(p.length(), p.alphabet_size(), n, k);
      }
    }
    c.check("exhaustive word mean = C(k,L)C(n,M)/k^M, M<=3, n<=6, k=" + str(k), means);
  }
}

void suite_leading_coefficient(Checker& c, const Context& ctx) {
  for (int length = 1; length <= 3; ++length) {
    for_each_perm_pattern(length, [&](const PermPattern& p) {
      const int top = 2 * length - 1;
      std::string detail;
      bool ok = false;
      try {
        const auto poly = variance_polynomial_perm(p, length, 3 * length, top, ctx.budgets);
        const auto wide = variance_polynomial_perm(p, length, 3 * length, top + 1, ctx.budgets);
        const Ratio expected = variance_leading_coeff(p);
        ok = poly.degree() <= top && poly.coefficient(top) == expected &&
             wide.coefficient(top + 1) == 0;
        detail = "fitted " + to_string(poly.coefficient(top)) + ", formula " + to_string(expected);
      } catch (const InconsistentFit& e) {
        detail = e.what();
      }
      c.check("Var(X_" + p.str() + ") has degree <= " + str(top) + " and matching top coefficient",
              ok, detail);
    });
  }
  const PermPattern p12 = parse_perm("12");
  bool inversions = true;
  for (int n = 2; n <= 6; ++n) {
    const auto r = exhaustive_moments_perm(p12, n, ctx.budgets);
    inversions = inversions && *r.variance == Ratio(n * (n - 1) * (2 * n + 5), 72);
  }
  c.check("Var(X_12) = n(n-1)(2n+5)/72 for n=2..6", inversions);
  c.check("leading coefficient of Var(X_12) is 1/36", variance_leading_coeff(p12) == Ratio(1, 36));

  if (ctx.extended()) {
    for (int k = 2; k <= 3; ++k) {
      for (const auto& p : surjective_patterns_up_to(2)) {
        const int top = 2 * p.length() - 1;
        std::string detail;
        bool ok = false;
        try {
          const auto poly =
              variance_polynomial_word(p, k, p.length(), 3 * p.length() + 1, top, ctx.budgets);
          ok = poly.coefficient(top) == word_variance_leading_coeff(p, k);
          detail = "fitted " + to_string(poly.coefficient(top));
        } catch (const InconsistentFit& e) {
          detail = e.what();
        }
        c.check("word Var(X_" + p.str() + ") over [" + str(k) + "]^n top coefficient", ok, detail);
      }
    }
    for (const auto& cls : symmetry_classes_of_pairs(3)) {
      const auto& [p, q] = cls.representative;
      const auto poly = covariance_polynomial_perm(p, q, 3, 9, 5, ctx.budgets);
      c.check("Cov(X_" + p.str() + ",X_" + q.str() + ") top coefficient",
              poly.coefficient(5) == covariance_leading_coeff(p, q).leading_coefficient,
              to_string(poly.coefficient(5)));
    }
  }
}

void suite_covariance(Checker& c, const Context&) {
  const auto classes = covariance_classes(3);
  c.check("8 symmetry classes of pairs of 3-letter patterns", classes.size() == 8,
          std::to_string(classes.size()) + " classes");

  const std::vector<std::pair<std::string, std::string>> listed{
      {"123", "123"}, {"132", "132"}, {"123", "132"}, {"132", "213"},
      {"132", "231"}, {"132", "312"}, {"123", "312"}, {"123", "321"}};
  bool order = classes.size() == listed.size();
  bool signs = order;
  for (std::size_t t = 0; order && t < listed.size(); ++t) {
    const PatternPair pair = make_pair_unordered(parse_perm(listed[t].first), parse_perm(listed[t].second));
    order = classes[t].pairs.contains(pair);
    const bool positive = classes[t].covariance.sign == Sign::positive;
    signs = signs && positive == (t < 3);
  }
  c.check("classes sorted by decreasing covariance match the listed order", order);
  c.check("positive covariance exactly for {123,123},{132,132},{123,132}", signs);
  bool non_increasing = true;
  std::string ties;
  for (std::size_t t = 1; t < classes.size(); ++t) {
    const auto& prev = classes[t - 1].covariance;
    const auto& cur = classes[t].covariance;
    non_increasing = non_increasing && prev.leading_coefficient >= cur.leading_coefficient;
    if (prev.leading_coefficient == cur.leading_coefficient) {
      ties += "{" + prev.p1 + "," + prev.p2 + "} = {" + cur.p1 + "," + cur.p2 +
              "} = " + to_string(cur.leading_coefficient) + "; ";
    }
  }
  c.check("class covariances non-increasing in listed order", non_increasing,
          ties.empty() ? "no ties" : "ties: " + ties);

  const auto patterns = enumerate_perm_patterns(3);
  bool witness = false;
  bool invariant = true;
  bool symmetric = true;
  for (const auto& p : patterns) {
    for (const auto& q : patterns) {
      const auto cov = covariance_leading_coeff(p, q);
      if (cov.cross_sum < Natural(100)) witness = true;
      symmetric = symmetric && cov.leading_coefficient == covariance_leading_coeff(q, p).leading_coefficient;
      for (const auto& g : std::vector<std::function<PermPattern(const PermPattern&)>>{
               [](const PermPattern& x) { return reverse(x); },
               [](const PermPattern& x) { return complement(x); }}) {
        invariant = invariant &&
                    covariance_leading_coeff(g(p), g(q)).leading_coefficient == cov.leading_coefficient;
      }
    }
  }
  c.check("some 3-letter pair has cross sum < C(5,2)^2 = 100", witness);
  c.check("covariance invariant under simultaneous reverse/complement", invariant);
  c.check("covariance symmetric in its arguments", symmetric);
  c.check("covariance of (p,p) is the variance coefficient",
          covariance_leading_coeff(parse_perm("132"), parse_perm("132")).leading_coefficient ==
              variance_leading_coeff(parse_perm("132")));
}

void suite_word_inequality(Checker& c, const Context& ctx) {
  const int max_m = ctx.extended() ? 6 : 5;
  for (int m = 0; m <= max_m; ++m) {
    for (int l = 0; l <= m; ++l) {
      const auto patterns = enumerate_word_patterns(m + 1, l + 1);
      const Ratio rhs = rhs_word(m, l);
      bool nonneg = true;
      bool zero_iff = true;
      for (const auto& p : patterns) {
        const auto tau = p.theorem_form();
        const Ratio margin = Ratio(lhs_word(tau, l).value()) - rhs;
        nonneg = nonneg && margin >= 0;
        zero_iff = zero_iff && ((margin == 0) == (l == 0));
      }
      const bool count_ok = Natural(patterns.size()) == factorial(l + 1) * stirling2(m + 1, l + 1);
      c.check("m=" + str(m) + " l=" + str(l) + " margin >= 0 over " +
                  std::to_string(patterns.size()) + " patterns",
              nonneg && count_ok);
      c.check("m=" + str(m) + " l=" + str(l) + " margin = 0 iff l = 0", zero_iff);
    }
    bool reduces = rhs_word(m, m) == Ratio(rhs_perm(m).value());
    for (const auto& tau : all_bijections(m)) reduces = reduces && lhs_word(tau, m) == lhs_perm(tau);
    c.check("m=" + str(m) + " l=m reduces to the permutation inequality", reduces);
  }
  const std::vector<int> constant{0, 0, 0};
  c.check("rhs_word(2,0) = lhs_word(000) = 30",
          rhs_word(2, 0) == Ratio(30) && lhs_word(constant, 0) == Natural(30));
}

void suite_word_f(Checker& c, const Context&) {
  for (const auto& p : surjective_patterns_up_to(3)) {
    const int l = p.alphabet_size();
    std::vector<std::pair<Ratio, Ratio>> points;
    for (int k = 1; k <= 2 * l + 2; ++k) {
      points.emplace_back(Ratio(k), Ratio((Natural(static_cast<std::uint64_t>(k)) * f_function(p, k).value).value()));
    }
    std::string detail;
    bool ok = false;
    try {
      const auto poly = fit_exact_polynomial(points, 2 * l);
      const Ratio scaled = poly.coefficient(2 * l) * Ratio(factorial(2 * l - 1).value());
      const auto cross = word_discriminant(p, p).cross_sum;
      ok = scaled == Ratio(cross.value());
      detail = "(2L-1)! * lead = " + to_string(scaled) + ", cross sum " + cross.str();
    } catch (const InconsistentFit& e) {
      detail = e.what();
    }
    c.check("k*f(" + p.str() + ",k) has degree 2L with leading term cross/(2L-1)!", ok, detail);

    bool h_top = true;
    for (int i = 1; i <= p.length(); ++i) {
      for (int j = 1; j <= p.length(); ++j) {
        h_top = h_top && h_function(p, l - 1, p(i) + p(j) - 1, i, j) == bracket(p(i) - 1, p(j) - 1, l - 1);
      }
    }
    c.check("h at the top letter count is [tau(i)-1,tau(j)-1]_(L-1) for " + p.str(), h_top);

    const auto d = word_discriminant(p, p);
    const auto r = word_inequality_report(p.theorem_form(), l - 1);
    c.check("discriminant of " + p.str() + " = lhs - rhs of its 0-based form", d.discriminant == r.margin);
  }
  bool perm_case = true;
  for (int length = 1; length <= 4; ++length) {
    for_each_perm_pattern(length, [&](const PermPattern& p) {
      const auto d = word_discriminant(WordPattern::from_perm(p), WordPattern::from_perm(p));
      const Natural f = factorial(2 * length - 1);
      perm_case = perm_case && d.discriminant == variance_leading_coeff(p) * Ratio((f * f).value());
    });
  }
  c.check("permutation discriminant = ((2M-1)!)^2 * variance coefficient, M<=4", perm_case);

  bool invariant = true;
  for (int length = 1; length <= 4; ++length) {
    for (int l = 1; l <= length; ++l) {
      const auto patterns = enumerate_word_patterns(length, l);
      for (const auto& a : patterns) {
        for (const auto& b : patterns) {
          const auto d = word_discriminant(a, b).discriminant;
          invariant = invariant && word_discriminant(reverse(a), reverse(b)).discriminant == d &&
                      word_discriminant(complement(a), complement(b)).discriminant == d;
        }
      }
    }
  }
  c.check("word discriminant invariant under simultaneous reverse/complement, M<=4", invariant);
}

void suite_extremal(Checker& c, const Context& ctx) {
  SearchOptions pruned{ctx.budgets, true};
  SearchOptions plain{ctx.budgets, false};
  const auto two = extremal_search(2, pruned);
  const auto two_plain = extremal_search(2, plain);
  const std::vector<int> id2{0, 1, 2};
  c.check("m=2: M* = 26 attained by the identity, M_* = 14",
          two.m_star == 26 && two.m_lower == 14 &&
              std::find(two.maximizers.begin(), two.maximizers.end(), id2) != two.maximizers.end());
  c.check("m=2 minimizer list equals the unpruned baseline", two.minimizers == two_plain.minimizers,
          "minimizers: " + [&] {
            std::string s;
            for (const auto& t : two.minimizers) s += format_sequence(t) + " ";
            return s;
          }());
  const int max_m = ctx.extended() ? 6 : 5;
  for (int m = 0; m <= max_m; ++m) {
    const auto a = extremal_search(m, pruned);
    const auto b = extremal_search(m, plain);
    std::vector<int> id(static_cast<std::size_t>(m + 1));
    for (int t = 0; t <= m; ++t) id[static_cast<std::size_t>(t)] = t;
    const bool has_id = std::find(a.maximizers.begin(), a.maximizers.end(), id) != a.maximizers.end();
    c.check("m=" + str(m) + " pruned and unpruned searches agree", a.same_result(b),
            "evaluated " + std::to_string(a.evaluated) + " of " + std::to_string(b.evaluated));
    c.check("m=" + str(m) + " identity is a maximizer", has_id);
  }
  const auto rows = conjecture_tables(6, pruned);
  bool ratios = rows.size() == 6;
  bool clean = true;
  std::string detail;
  for (const auto& r : rows) {
    ratios = ratios && r.ratio.has_value();
    clean = clean && !r.violation;
    if (r.ratio) detail += "m=" + str(r.m) + ":" + to_string(*r.ratio) + " ";
  }
  c.check("exact ratios M_*/M* for m<=6 (evidence only)", ratios, detail);
  c.check("no m<=6 row with min margin <= 0", clean);

  for (int m = 0; m <= 4; ++m) {
    const auto w = word_extremal_search(m, m, ctx.budgets);
    const auto p = extremal_search(m, pruned);
    c.check("m=" + str(m) + " word search with l=m agrees with the permutation search",
            w.min_margin == Ratio(p.m_lower) && w.max_margin == Ratio(p.m_star) &&
                w.minimizers == p.minimizers && w.maximizers == p.maximizers);
    const auto zero = word_extremal_search(m, 0, ctx.budgets);
    c.check("m=" + str(m) + " l=0 margins are all zero", zero.min_margin == 0 && zero.max_margin == 0);
  }
}

using SuiteFn = void (*)(Checker&, const Context&);

const std::vector<std::pair<SuiteInfo, SuiteFn>>& registry() {
  static const std::vector<std::pair<SuiteInfo, SuiteFn>> suites{
      {{"brackets", "symmetry, bounds, monotonicity and sums of bracket numbers"}, suite_brackets},
      {{"determinant", "bracket determinant by elimination vs closed form"}, suite_determinant},
      {{"order-reversal", "no pattern reverses the sorted order of bracket numbers"}, suite_order_reversal},
      {{"hlp", "rearrangement bound vs the bracket bound"}, suite_hlp},
      {{"perm-inequality", "permutation inequality over all patterns"}, suite_perm_inequality},
      {{"pair-sums", "pair sums and the normalized inequality"}, suite_pair_sums},
      {{"oracle-paths", "lattice path enumeration vs bracket numbers"}, suite_oracle_paths},
      {{"oracle-decomposition", "brute-force decomposition triples vs closed forms"},
       suite_oracle_decomposition},
      {{"moments", "exhaustive means vs expectation formulas"}, suite_moments},
      {{"leading-coefficient", "fitted variance polynomials vs leading coefficients"},
       suite_leading_coefficient},
      {{"covariance", "symmetry classes and covariance signs of 3-letter pairs"}, suite_covariance},
      {{"word-inequality", "word inequality, l=0 equality and l=m reduction"}, suite_word_inequality},
      {{"word-f", "h and f functions, word discriminants"}, suite_word_f},
      {{"extremal", "extremal search, pruning baseline, conjecture tables"}, suite_extremal},
  };
  return suites;
}

}  // namespace

const std::vector<SuiteInfo>& verify_suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& [info, fn] : registry()) out.push_back(info);
    return out;
  }();
  return infos;
}

std::vector<CheckResult> run_suite(const std::string& name, VerifyLevel level,
                                   const Budgets& budgets) {
  for (const auto& [info, fn] : registry()) {
    if (info.name != name) continue;
    Checker checker(name);
    try {
      fn(checker, Context{level, budgets});
    } catch (const std::exception& e) {
      checker.check("suite completed", false, e.what());
    }
    return checker.take();
  }
  throw std::invalid_argument("unknown verification suite '" + name + "'");
}

std::vector<CheckResult> run_all_suites(VerifyLevel level, const Budgets& budgets) {
  std::vector<CheckResult> all;
  for (const auto& info : verify_suites()) {
    auto part = run_suite(info.name, level, budgets);
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return all;
}

}  // namespace patineq
