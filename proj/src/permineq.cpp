#include "patineq/permineq.hpp"

#include "patineq/detail/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace patineq {

Sign sign_from(const Ratio& r) { return static_cast<Sign>(sign_of(r)); }
Sign sign_from(const Integer& v) { return static_cast<Sign>(v.sign()); }

std::string to_string(Sign s) {
  switch (s) {
    case Sign::negative: return "negative";
    case Sign::zero: return "zero";
    case Sign::positive: return "positive";
  }
  return "zero";
}

void require_bijection(std::span<const int> tau) {
  if (tau.empty()) throw std::invalid_argument("pattern on {0..m} must be nonempty");
  std::vector<bool> seen(tau.size(), false);
  for (int v : tau) {
    if (v < 0 || static_cast<std::size_t>(v) >= tau.size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("'" + format_sequence({tau.begin(), tau.end()}) +
                                  "' is not a bijection on {0.." +
                                  std::to_string(tau.size() - 1) + "}");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

namespace {

Natural weighted_sum(const BracketTable& table, std::span<const int> rows,
                     std::span<const int> cols, std::span<const int> rows2,
                     std::span<const int> cols2) {
  Natural acc;
  const int size = table.size();
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      acc += table(rows[ui], cols[uj]) * table(rows2[ui], cols2[uj]);
    }
  }
  return acc;
}

std::vector<int> identity_form(std::size_t size) {
  std::vector<int> id(size);
  std::iota(id.begin(), id.end(), 0);
  return id;
}

}  // namespace

Natural lhs_perm(std::span<const int> tau) {
  require_bijection(tau);
  const auto table = bracket_table(static_cast<int>(tau.size()) - 1);
  const auto id = identity_form(tau.size());
  return weighted_sum(*table, id, id, tau, tau);
}

Natural rhs_perm(int m) {
  if (m < 0) throw std::invalid_argument("rhs_perm: negative m");
  const Natural c = binomial(2 * m + 1, m);
  return c * c;
}

Integer margin_perm(std::span<const int> tau) {
  return signed_diff(lhs_perm(tau), rhs_perm(static_cast<int>(tau.size()) - 1));
}

InequalityReport inequality_report(std::span<const int> tau) {
  InequalityReport r;
  r.m = static_cast<int>(tau.size()) - 1;
  r.tau.assign(tau.begin(), tau.end());
  r.lhs = lhs_perm(tau);
  r.rhs = rhs_perm(r.m);
  r.margin = signed_diff(r.lhs, r.rhs);
  return r;
}

Natural lhs_pair(std::span<const int> tau1, std::span<const int> tau2) {
  if (tau1.size() != tau2.size()) {
    throw std::invalid_argument("lhs_pair: patterns on different ranges");
  }
  require_bijection(tau1);
  require_bijection(tau2);
  const auto table = bracket_table(static_cast<int>(tau1.size()) - 1);
  return weighted_sum(*table, tau1, tau1, tau2, tau2);
}

Ratio normalized_lhs(std::span<const int> tau) {
  require_bijection(tau);
  const int m = static_cast<int>(tau.size()) - 1;
  Ratio acc = 0;
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= m; ++j) {
      acc += brace(i, j, m) * brace(tau[static_cast<std::size_t>(i)], tau[static_cast<std::size_t>(j)], m);
    }
  }
  return acc;
}

Ratio normalized_rhs(int m) {
  if (m < 0) throw std::invalid_argument("normalized_rhs: negative m");
  const Ratio base(2 * m + 1, m + 1);
  return base * base;
}

Natural cross_sum(const PermPattern& p, const PermPattern& q) {
  if (p.length() != q.length()) {
    throw std::invalid_argument("cross_sum: patterns " + p.str() + " and " + q.str() +
                                " have different lengths");
  }
  const auto tp = p.theorem_form();
  const auto tq = q.theorem_form();
  const auto table = bracket_table(p.length() - 1);
  const auto id = identity_form(tp.size());
  return weighted_sum(*table, id, id, tp, tq);
}

namespace {

Ratio leading_from_cross(const Natural& cross, int length) {
  const Natural f = factorial(2 * length - 1);
  const Natural g = factorial(length) * factorial(length - 1);
  return ratio_of(cross, f * f) - ratio_of(Natural(1), g * g);
}

}  // namespace

Ratio variance_leading_coeff(const PermPattern& p) {
  return leading_from_cross(cross_sum(p, p), p.length());
}

CovarianceReport covariance_leading_coeff(const PermPattern& p, const PermPattern& q) {
  CovarianceReport r;
  r.p1 = p.str();
  r.p2 = q.str();
  r.cross_sum = cross_sum(p, q);
  r.leading_coefficient = leading_from_cross(r.cross_sum, p.length());
  r.sign = sign_from(r.leading_coefficient);
  return r;
}

std::vector<CovarianceClass> covariance_classes(int length) {
  std::vector<CovarianceClass> out;
  for (auto& cls : symmetry_classes_of_pairs(length)) {
    auto cov = covariance_leading_coeff(cls.representative.first, cls.representative.second);
    out.push_back({std::move(cls), std::move(cov)});
  }
  std::stable_sort(out.begin(), out.end(), [](const CovarianceClass& a, const CovarianceClass& b) {
    return a.covariance.leading_coefficient > b.covariance.leading_coefficient;
  });
  return out;
}

Natural hlp_lower_bound(int m) {
  const auto table = bracket_table(m);
  std::vector<Natural> ascending = table->values();
  std::sort(ascending.begin(), ascending.end());
  Natural acc;
  const std::size_t n = ascending.size();
  for (std::size_t t = 0; t < n; ++t) acc += ascending[t] * ascending[n - 1 - t];
  return acc;
}

bool is_order_reversing(std::span<const int> tau) {
  require_bijection(tau);
  const int size = static_cast<int>(tau.size());
  const auto table = bracket_table(size - 1);
  struct Cell {
    const Natural* before;
    const Natural* after;
  };
  std::vector<Cell> cells;
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      cells.push_back({&table->at(i, j),
                       &table->at(tau[static_cast<std::size_t>(i)], tau[static_cast<std::size_t>(j)])});
    }
  }
  for (const Cell& a : cells) {
    for (const Cell& b : cells) {
      if (*a.before < *b.before && *a.after < *b.after) return false;
    }
  }
  return true;
}

Prop1Report prop1_verify(int m_max) {
  Prop1Report report;
  report.m_max = m_max;
  for (int m = 1; m <= m_max; ++m) {
    for_each_perm_pattern(m + 1, [&](const PermPattern& p) {
      const auto tau = p.theorem_form();
      ++report.patterns_checked;
      if (is_order_reversing(tau)) report.reversing.push_back(tau);
    });
  }
  return report;
}

bool ExtremalReport::same_result(const ExtremalReport& other) const {
  return m == other.m && m_star == other.m_star && m_lower == other.m_lower &&
         maximizers == other.maximizers && minimizers == other.minimizers &&
         ratio == other.ratio && patterns == other.patterns;
}

namespace {

std::vector<std::vector<int>> theorem_orbit(const std::vector<int>& tau) {
  const int m = static_cast<int>(tau.size()) - 1;
  std::vector<int> rev(tau.rbegin(), tau.rend());
  std::vector<int> comp(tau);
  for (int& v : comp) v = m - v;
  std::vector<int> both(comp.rbegin(), comp.rend());
  std::vector<std::vector<int>> out{tau, rev, comp, both};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct PartialExtremum {
  bool any = false;
  Integer best_max;
  Integer best_min;
  std::vector<std::vector<int>> maximizers;
  std::vector<std::vector<int>> minimizers;
  std::uint64_t evaluated = 0;

  void offer(const Integer& margin, const std::vector<std::vector<int>>& members) {
    if (!any || margin > best_max) {
      best_max = margin;
      maximizers.clear();
    }
    if (!any || margin < best_min) {
      best_min = margin;
      minimizers.clear();
    }
    any = true;
    if (margin == best_max) maximizers.insert(maximizers.end(), members.begin(), members.end());
    if (margin == best_min) minimizers.insert(minimizers.end(), members.begin(), members.end());
  }

  void merge(const PartialExtremum& other) {
    if (!other.any) return;
    evaluated += other.evaluated;
    if (!any) {
      *this = other;
      return;
    }
    if (other.best_max > best_max) {
      best_max = other.best_max;
      maximizers = other.maximizers;
    } else if (other.best_max == best_max) {
      maximizers.insert(maximizers.end(), other.maximizers.begin(), other.maximizers.end());
    }
    if (other.best_min < best_min) {
      best_min = other.best_min;
      minimizers = other.minimizers;
    } else if (other.best_min == best_min) {
      minimizers.insert(minimizers.end(), other.minimizers.begin(), other.minimizers.end());
    }
  }
};

std::uint64_t checked_pattern_count(int m, const Budgets& budgets) {
  if (m < 0) throw std::invalid_argument("extremal search needs m >= 0");
  std::uint64_t count = 1;
  for (int t = 2; t <= m + 1; ++t) {
    if (count > budgets.max_enumeration / static_cast<std::uint64_t>(t)) {
      throw BudgetExceeded("maxEnumeration", "(m+1)! for m=" + std::to_string(m) +
                                                 " exceeds " +
                                                 std::to_string(budgets.max_enumeration));
    }
    count *= static_cast<std::uint64_t>(t);
  }
  return count;
}

}  // namespace

ExtremalReport extremal_search(int m, const SearchOptions& options) {
  const std::uint64_t patterns = checked_pattern_count(m, options.budgets);
  const auto table = bracket_table(m);
  const Natural rhs = rhs_perm(m);
  const auto id = identity_form(static_cast<std::size_t>(m + 1));

  auto partial = detail::run_chunks<PartialExtremum>(
      static_cast<std::size_t>(m + 1), options.budgets.workers, [&](std::size_t first) {
        PartialExtremum acc;
        std::vector<int> tau;
        tau.push_back(static_cast<int>(first));
        for (int v = 0; v <= m; ++v) {
          if (v != static_cast<int>(first)) tau.push_back(v);
        }
        do {
          std::vector<std::vector<int>> members;
          if (options.symmetry_pruning) {
            members = theorem_orbit(tau);
            if (members.front() != tau) continue;
          } else {
            members = {tau};
          }
          const Integer margin = signed_diff(weighted_sum(*table, id, id, tau, tau), rhs);
          ++acc.evaluated;
          acc.offer(margin, members);
        } while (std::next_permutation(tau.begin() + 1, tau.end()));
        return acc;
      });

  PartialExtremum total;
  for (const auto& p : partial) total.merge(p);

  ExtremalReport report;
  report.m = m;
  report.m_star = total.best_max;
  report.m_lower = total.best_min;
  report.maximizers = std::move(total.maximizers);
  report.minimizers = std::move(total.minimizers);
  std::sort(report.maximizers.begin(), report.maximizers.end());
  std::sort(report.minimizers.begin(), report.minimizers.end());
  if (!report.m_star.is_zero()) report.ratio = Ratio(report.m_lower, report.m_star);
  report.patterns = patterns;
  report.evaluated = total.evaluated;
  return report;
}

std::vector<ConjectureRow> conjecture_tables(int m_max, const SearchOptions& options) {
  std::vector<ConjectureRow> rows;
  for (int m = 1; m <= m_max; ++m) {
    const auto ext = extremal_search(m, options);
    ConjectureRow row;
    row.m = m;
    row.min_margin = ext.m_lower;
    row.max_margin = ext.m_star;
    row.ratio = ext.ratio;
    row.violation = ext.m_lower.sign() <= 0;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace patineq
