#include "patineq/wordineq.hpp"

#include "patineq/detail/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace patineq {

void require_surjection(std::span<const int> tau, int l) {
  const std::string text = "'" + format_sequence({tau.begin(), tau.end()}) + "'";
  if (tau.empty()) throw std::invalid_argument("pattern on {0..m} must be nonempty");
  const int m = static_cast<int>(tau.size()) - 1;
  if (l < 0 || l > m) {
    throw std::invalid_argument("alphabet bound l=" + std::to_string(l) + " outside [0," +
                                std::to_string(m) + "]");
  }
  std::vector<bool> seen(static_cast<std::size_t>(l) + 1, false);
  for (int v : tau) {
    if (v < 0 || v > l) {
      throw std::invalid_argument(text + " has value " + std::to_string(v) + " outside {0.." +
                                  std::to_string(l) + "}");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (int v = 0; v <= l; ++v) {
    if (!seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument(text + " is not onto {0.." + std::to_string(l) +
                                  "}: value " + std::to_string(v) + " missing");
    }
  }
}

Natural lhs_word(std::span<const int> tau, int l) {
  require_surjection(tau, l);
  const int m = static_cast<int>(tau.size()) - 1;
  const auto big = bracket_table(m);
  const auto small = bracket_table(l);
  Natural acc;
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= m; ++j) {
      acc += big->at(i, j) *
             small->at(tau[static_cast<std::size_t>(i)], tau[static_cast<std::size_t>(j)]);
    }
  }
  return acc;
}

Ratio rhs_word(int m, int l) {
  if (l < 0 || l > m) throw std::invalid_argument("rhs_word needs 0 <= l <= m");
  const Natural mf = factorial(m);
  const Natural lf = factorial(l + 1);
  return ratio_of(factorial(2 * m + 1) * factorial(2 * l + 1), mf * mf * lf * lf);
}

WordInequalityReport word_inequality_report(std::span<const int> tau, int l) {
  WordInequalityReport r;
  r.m = static_cast<int>(tau.size()) - 1;
  r.l = l;
  r.tau.assign(tau.begin(), tau.end());
  r.lhs = lhs_word(tau, l);
  r.rhs = rhs_word(r.m, l);
  r.margin = Ratio(r.lhs.value()) - r.rhs;
  return r;
}

Natural h_function(const WordPattern& tau, int big_l, int r, int i, int j) {
  const std::int64_t ti = tau(i);
  const std::int64_t tj = tau(j);
  const std::int64_t l = tau.alphabet_size();
  // letters below r: only in the first copy, only in the second, in both
  const Natural below = multinomial({r - tj, r - ti, ti + tj - 1 - r});
  if (below.is_zero()) return below;
  // letters above r, split the same way
  const Natural above = multinomial({big_l - r + tj, big_l - r + ti, l - big_l + r - ti - tj});
  return below * above;
}

DecompositionCount f_function(const WordPattern& tau, int k) {
  if (k < 1) throw std::invalid_argument("f_function needs k >= 1");
  const int length = tau.length();
  const int l = tau.alphabet_size();
  const auto positions = bracket_table(length - 1);
  Natural total;
  for (int big_l = 0; big_l <= l - 1; ++big_l) {
    const Natural letters = binomial(k, l + big_l);
    if (letters.is_zero()) continue;
    Natural inner;
    for (int r = 0; r <= l + big_l; ++r) {
      for (int i = 1; i <= length; ++i) {
        for (int j = 1; j <= length; ++j) {
          const Natural h = h_function(tau, big_l, r, i, j);
          if (!h.is_zero()) inner += positions->at(i - 1, j - 1) * h;
        }
      }
    }
    total += letters * inner;
  }
  return {tau.str(), k, total};
}

Ratio word_variance_leading_coeff(const WordPattern& tau, int k) {
  const int length = tau.length();
  Integer k_pow = 1;
  for (int t = 0; t < length; ++t) k_pow *= k;
  const Integer k_pair_pow = k_pow * k_pow / k;  // k^(2M−1)
  const Ratio pair_term =
      ratio_of(f_function(tau, k).value, Natural(k_pair_pow) * factorial(2 * length - 1));
  // probability that a fixed M-subset is an occurrence
  const Ratio p = ratio_of(binomial(k, tau.alphabet_size()), Natural(k_pow));
  const Ratio mf(factorial(length).value());
  return pair_term - Ratio(length * length) * p * p / (mf * mf);
}

WordDiscriminant word_discriminant(const WordPattern& p1, const WordPattern& p2) {
  if (p1.length() != p2.length() || p1.alphabet_size() != p2.alphabet_size()) {
    throw std::invalid_argument("word_discriminant: patterns " + p1.str() + " and " + p2.str() +
                                " have different shapes");
  }
  const int length = p1.length();
  const int l = p1.alphabet_size();
  const auto positions = bracket_table(length - 1);
  const auto values = bracket_table(l - 1);
  WordDiscriminant d;
  for (int i = 1; i <= length; ++i) {
    for (int j = 1; j <= length; ++j) {
      d.cross_sum += positions->at(i - 1, j - 1) * values->at(p1(i) - 1, p2(j) - 1);
    }
  }
  const Natural mf = factorial(length - 1);
  const Natural lf = factorial(l);
  d.bound = ratio_of(factorial(2 * length - 1) * factorial(2 * l - 1), mf * mf * lf * lf);
  d.discriminant = Ratio(d.cross_sum.value()) - d.bound;
  d.sign = sign_from(d.discriminant);
  return d;
}

WordExtremalReport word_extremal_search(int m, int l, const Budgets& budgets) {
  if (m < 0 || l < 0 || l > m) throw std::invalid_argument("word search needs 0 <= l <= m");
  const Natural count = factorial(l + 1) * stirling2(m + 1, l + 1);
  if (count > Natural(budgets.max_enumeration)) {
    throw BudgetExceeded("maxEnumeration", "(l+1)!S(m+1,l+1)=" + count.str() + " exceeds " +
                                               std::to_string(budgets.max_enumeration));
  }
  const auto patterns = enumerate_word_patterns(m + 1, l + 1);
  const Ratio rhs = rhs_word(m, l);

  struct Partial {
    bool any = false;
    Ratio lo, hi;
    std::vector<std::vector<int>> argmin, argmax;
  };
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(patterns.size(), 64));
  auto partial = detail::run_chunks<Partial>(chunks, budgets.workers, [&](std::size_t c) {
    Partial acc;
    for (std::size_t t = c; t < patterns.size(); t += chunks) {
      auto tau = patterns[t].theorem_form();
      const Ratio margin = Ratio(lhs_word(tau, l).value()) - rhs;
      if (!acc.any || margin < acc.lo) {
        acc.lo = margin;
        acc.argmin.clear();
      }
      if (!acc.any || margin > acc.hi) {
        acc.hi = margin;
        acc.argmax.clear();
      }
      acc.any = true;
      if (margin == acc.lo) acc.argmin.push_back(tau);
      if (margin == acc.hi) acc.argmax.push_back(tau);
    }
    return acc;
  });

  WordExtremalReport report;
  report.m = m;
  report.l = l;
  report.patterns = patterns.size();
  bool any = false;
  for (auto& p : partial) {
    if (!p.any) continue;
    if (!any || p.lo < report.min_margin) {
      report.min_margin = p.lo;
      report.minimizers.clear();
    }
    if (!any || p.hi > report.max_margin) {
      report.max_margin = p.hi;
      report.maximizers.clear();
    }
    any = true;
    if (p.lo == report.min_margin) {
      report.minimizers.insert(report.minimizers.end(), p.argmin.begin(), p.argmin.end());
    }
    if (p.hi == report.max_margin) {
      report.maximizers.insert(report.maximizers.end(), p.argmax.begin(), p.argmax.end());
    }
  }
  std::sort(report.minimizers.begin(), report.minimizers.end());
  std::sort(report.maximizers.begin(), report.maximizers.end());
  report.strict = sign_of(report.min_margin) > 0;
  return report;
}

}  // namespace patineq
