#pragma once

/// @file wordineq.hpp
/// @brief The bracket-number inequality for word patterns (maps onto a
/// smaller alphabet), the h/f decomposition counts and covariance signs.

#include "patineq/config.hpp"
#include "patineq/exactmath.hpp"
#include "patineq/patterns.hpp"
#include "patineq/permineq.hpp"

#include <optional>
#include <span>
#include <vector>

namespace patineq {

/// Throws std::invalid_argument unless `tau` maps {0..m} onto {0..l}, l <= m.
void require_surjection(std::span<const int> tau, int l);

/// Σ_{i,j=0}^{m} [i,j]_m·[τ(i),τ(j)]_l for τ onto {0..l}.
Natural lhs_word(std::span<const int> tau, int l);
/// (2m+1)!(2l+1)! / ((m!)²((l+1)!)²).
Ratio rhs_word(int m, int l);

struct WordInequalityReport {
  int m = 0;
  int l = 0;
  std::vector<int> tau;  ///< 0-based form
  Natural lhs;
  Ratio rhs;
  Ratio margin;
};
WordInequalityReport word_inequality_report(std::span<const int> tau, int l);

/// Product of the two trinomials for the shared element with value r, sitting
/// at position i of the first copy and j of the second, when the union uses
/// L + big_l letters. Vanishes whenever a part is negative.
Natural h_function(const WordPattern& tau, int big_l, int r, int i, int j);

struct DecompositionCount {
  std::string pattern;
  int k = 0;
  Natural value;
};
/// Number of triples (ρ, S₁, S₂), ρ ∈ [k]^(2M−1), |S₁| = |S₂| = M covering all
/// positions, with both restrictions order-isomorphic to `tau`.
DecompositionCount f_function(const WordPattern& tau, int k);

/// Coefficient of n^(2M−1) in Var(X_τ) over [k]^n at fixed k.
Ratio word_variance_leading_coeff(const WordPattern& tau, int k);

struct WordDiscriminant {
  Natural cross_sum;
  Ratio bound;  ///< (2M−1)!(2L−1)! / (((M−1)!)²(L!)²)
  Ratio discriminant;
  Sign sign = Sign::zero;
};
/// Sign criterion for the covariance of two word patterns of the same shape.
WordDiscriminant word_discriminant(const WordPattern& p1, const WordPattern& p2);

struct WordExtremalReport {
  int m = 0;
  int l = 0;
  std::uint64_t patterns = 0;
  Ratio min_margin;
  Ratio max_margin;
  std::vector<std::vector<int>> minimizers;  ///< 0-based, lexicographic
  std::vector<std::vector<int>> maximizers;
  bool strict = false;  ///< every margin > 0
};
/// Exhaustive min/max margin over all maps of {0..m} onto {0..l}. Refuses when
/// (l+1)!·S(m+1,l+1) exceeds budgets.max_enumeration.
WordExtremalReport word_extremal_search(int m, int l, const Budgets& budgets = {});

}  // namespace patineq
