#pragma once

/// @file oracle.hpp
/// @brief Naive brute-force counterparts of the closed forms.
///
/// Nothing here reuses the bracket tables or the pruned occurrence counter;
/// each oracle enumerates its objects directly so that agreement with the
/// formula modules is evidence rather than tautology.

#include "patineq/config.hpp"
#include "patineq/exactmath.hpp"
#include "patineq/patterns.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace patineq {

enum class Step : unsigned char { east, north };

struct LatticePath {
  std::vector<Step> steps;

  /// True if the path visits the lattice point (x, y).
  bool passes_through(int x, int y) const;
};

/// All C(2m,m) northeast paths from (0,0) to (m,m), by filtering all 2^(2m)
/// step sequences.
std::vector<LatticePath> enumerate_lattice_paths(int m);

/// Paths from (0,0) to (m,m) through (i,j), counted by enumeration.
Natural paths_through(int m, int i, int j);

/// Σ_{i,j} #paths through (i,j) · #paths through (τ(i),τ(j)), τ 0-based.
Natural path_pair_lhs(std::span<const int> tau);

/// Default size caps for the decomposition oracles.
inline constexpr int kMaxDecompositionPermLength = 4;
inline constexpr int kMaxDecompositionWordLength = 3;

/// Triples (ρ, S₁, S₂) with ρ ∈ S_(2M−1), |S₁| = |S₂| = M, S₁ ∪ S₂ all
/// positions, and both restrictions order-isomorphic to `tau`.
Natural decomposition_count(const PermPattern& tau, int max_length = kMaxDecompositionPermLength);
/// The same with ρ ranging over [k]^(2M−1).
Natural decomposition_count(const WordPattern& tau, int k,
                            int max_length = kMaxDecompositionWordLength);

/// Polynomial with exact rational coefficients; index = degree, trailing
/// zeros trimmed.
class ExactPolynomial {
 public:
  ExactPolynomial() = default;
  explicit ExactPolynomial(std::vector<Ratio> coefficients);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  Ratio coefficient(int d) const;
  Ratio evaluate(const Ratio& x) const;
  const std::vector<Ratio>& coefficients() const noexcept { return coefficients_; }

 private:
  std::vector<Ratio> coefficients_;
};

class InconsistentFit : public std::runtime_error {
 public:
  InconsistentFit(Ratio x, Ratio expected, Ratio fitted);

  const Ratio& x() const noexcept { return x_; }
  const Ratio& expected() const noexcept { return expected_; }
  const Ratio& fitted() const noexcept { return fitted_; }

 private:
  Ratio x_, expected_, fitted_;
};

/// Newton interpolation through the first degree+1 points, then checked
/// against every point. Throws std::invalid_argument with too few or repeated
/// abscissae, InconsistentFit when any point is off the fitted polynomial.
ExactPolynomial fit_exact_polynomial(const std::vector<std::pair<Ratio, Ratio>>& points,
                                     int degree);

/// Var(X_τ) over S_n for n in [n_from, n_to] from exhaustive moments, fitted
/// with the given degree.
ExactPolynomial variance_polynomial_perm(const PermPattern& tau, int n_from, int n_to, int degree,
                                         const Budgets& budgets = {});
/// Var(X_τ) over [k]^n for n in [n_from, n_to], fixed k.
ExactPolynomial variance_polynomial_word(const WordPattern& tau, int k, int n_from, int n_to,
                                         int degree, const Budgets& budgets = {});
/// Cov(X_p, X_q) over S_n for n in [n_from, n_to].
ExactPolynomial covariance_polynomial_perm(const PermPattern& p, const PermPattern& q, int n_from,
                                           int n_to, int degree, const Budgets& budgets = {});

}  // namespace patineq
