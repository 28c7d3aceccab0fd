#pragma once

/// @file permineq.hpp
/// @brief The bracket-number inequality for permutations and everything
/// derived from it: margins, variance and covariance leading coefficients,
/// the rearrangement comparison bound, and the extremal-pattern search.
///
/// Functions taking `std::span<const int> tau` expect the 0-based form: a
/// bijection on {0..m}. Functions taking `PermPattern` use the 1-based form
/// of length M = m + 1.

#include "patineq/config.hpp"
#include "patineq/exactmath.hpp"
#include "patineq/patterns.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace patineq {

enum class Sign { negative = -1, zero = 0, positive = 1 };
Sign sign_from(const Ratio& r);
Sign sign_from(const Integer& v);
std::string to_string(Sign s);

/// Throws std::invalid_argument unless `tau` is a bijection on {0..size-1}.
void require_bijection(std::span<const int> tau);

/// Σ_{i,j=0}^{m} [i,j]_m·[τ(i),τ(j)]_m.
Natural lhs_perm(std::span<const int> tau);
/// C(2m+1,m)².
Natural rhs_perm(int m);
/// lhs_perm(tau) − rhs_perm(m).
Integer margin_perm(std::span<const int> tau);

struct InequalityReport {
  int m = 0;
  std::vector<int> tau;  ///< 0-based form
  Natural lhs;
  Natural rhs;
  Integer margin;
};
InequalityReport inequality_report(std::span<const int> tau);

/// Σ [τ₁(i),τ₁(j)]_m·[τ₂(i),τ₂(j)]_m; throws on size mismatch.
Natural lhs_pair(std::span<const int> tau1, std::span<const int> tau2);

/// Brace-number form of the left side, equal to lhs_perm / C(2m,m)².
Ratio normalized_lhs(std::span<const int> tau);
/// ((2m+1)/(m+1))².
Ratio normalized_rhs(int m);

/// Σ_{i,j=1}^{M} [i−1,j−1]_{M−1}·[p(i)−1,q(j)−1]_{M−1}.
Natural cross_sum(const PermPattern& p, const PermPattern& q);

/// Coefficient of n^(2M−1) in Var(X_p).
Ratio variance_leading_coeff(const PermPattern& p);

struct CovarianceReport {
  std::string p1;
  std::string p2;
  Natural cross_sum;
  Ratio leading_coefficient;
  Sign sign = Sign::zero;
};
/// Coefficient of n^(2M−1) in Cov(X_p, X_q); throws on length mismatch.
CovarianceReport covariance_leading_coeff(const PermPattern& p, const PermPattern& q);

/// A symmetry class of pattern pairs with the covariance of its representative.
struct CovarianceClass {
  SymmetryClass pairs;
  CovarianceReport covariance;
};
/// All classes for length M, sorted by decreasing leading coefficient (ties by
/// representative).
std::vector<CovarianceClass> covariance_classes(int length);

/// Rearrangement minimum: the bracket multiset sorted ascending, dotted with
/// itself sorted descending.
Natural hlp_lower_bound(int m);

/// True iff [i,j] < [i',j'] implies [τ(i),τ(j)] >= [τ(i'),τ(j')] for all index
/// pairs, i.e. τ could reverse the sorted order of the bracket numbers.
bool is_order_reversing(std::span<const int> tau);

struct Prop1Report {
  int m_max = 0;
  std::uint64_t patterns_checked = 0;
  std::vector<std::vector<int>> reversing;  ///< counterexamples with m >= 1
  bool holds() const { return reversing.empty(); }
};
Prop1Report prop1_verify(int m_max);

struct SearchOptions {
  Budgets budgets;
  /// Evaluate one pattern per reverse/complement orbit. Results are identical
  /// either way; turning it off is the debugging baseline.
  bool symmetry_pruning = true;
};

struct ExtremalReport {
  int m = 0;
  Integer m_star;   ///< max margin
  Integer m_lower;  ///< min margin
  std::vector<std::vector<int>> maximizers;  ///< 0-based, lexicographic
  std::vector<std::vector<int>> minimizers;
  std::optional<Ratio> ratio;                ///< m_lower / m_star when m_star != 0
  std::uint64_t patterns = 0;                ///< (m+1)!
  std::uint64_t evaluated = 0;               ///< margins actually computed

  /// Compares everything except the `evaluated` bookkeeping.
  bool same_result(const ExtremalReport& other) const;
};
/// Exact max/min margin over all bijections on {0..m}. Refuses when (m+1)!
/// exceeds budgets.max_enumeration.
ExtremalReport extremal_search(int m, const SearchOptions& options = {});

struct ConjectureRow {
  int m = 0;
  Integer min_margin;
  Integer max_margin;
  std::optional<Ratio> ratio;
  bool violation = false;  ///< min margin <= 0 for m >= 1
};
std::vector<ConjectureRow> conjecture_tables(int m_max, const SearchOptions& options = {});

}  // namespace patineq
