#pragma once

/// @file occur.hpp
/// @brief Counting pattern occurrences and the moments of the occurrence
/// count X over uniformly random permutations or words.

#include "patineq/config.hpp"
#include "patineq/exactmath.hpp"
#include "patineq/patterns.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace patineq {

/// Positions 0-based, strictly increasing.
struct Occurrence {
  std::vector<int> positions;
};

/// Occurrences of `pattern` in `ambient` (a permutation of 1..n).
Natural count_occurrences(const PermPattern& pattern, std::span<const int> ambient);
/// Occurrences of a word pattern in a word of positive letters. Equal pattern
/// letters must meet equal ambient letters and vice versa.
Natural count_occurrences(const WordPattern& pattern, std::span<const int> ambient);

/// Every occurrence, in lexicographic order of positions.
std::vector<Occurrence> list_occurrences(std::span<const int> pattern,
                                         std::span<const int> ambient);

/// Fixed-width counter behind `count_occurrences`; `pattern` and `ambient`
/// are compared only through order and equality.
std::uint64_t count_order_isomorphic(std::span<const int> pattern, std::span<const int> ambient);

/// E(X) over S_n: C(n,M)/M!.
Ratio expectation_formula_perm(int length, int n);
/// E(X) over [k]^n: C(k,L)·C(n,M)/k^M.
Ratio expectation_formula_word(int length, int alphabet, int n, int k);

struct MomentReport {
  int n = 0;
  std::optional<int> k;  ///< absent for permutations
  std::string pattern;
  Ratio mean;
  Ratio second_moment;
  /// Exact variance for exhaustive runs; unbiased sample variance for sampled
  /// runs, absent when only one sample was drawn.
  std::optional<Ratio> variance;
  std::optional<std::uint64_t> sample_count;  ///< absent when exhaustive
};

/// Exact moments over all n! permutations. Refuses n > budgets.max_ambient_n.
MomentReport exhaustive_moments_perm(const PermPattern& pattern, int n,
                                     const Budgets& budgets = {});
/// Exact moments over all k^n words. Refuses k^n > budgets.max_word_space.
MomentReport exhaustive_moments_word(const WordPattern& pattern, int n, int k,
                                     const Budgets& budgets = {});

/// Exact Cov(X_p, X_q) over all n! permutations.
Ratio exhaustive_covariance_perm(const PermPattern& p, const PermPattern& q, int n,
                                 const Budgets& budgets = {});

/// Uniform integer in [0, bound) from a 64-bit Mersenne Twister by rejection,
/// so the stream is reproducible across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Fisher–Yates shuffle of 1..n driven by `uniform_below`.
std::vector<int> random_permutation(std::mt19937_64& rng, int n);

/// Monte Carlo moments from `samples` draws seeded by `seed`. With `k` the
/// ambient is a uniform word over [k]^n (pattern read as a word pattern),
/// otherwise a uniform permutation of 1..n.
MomentReport sample_moments(const AnyPattern& pattern, int n, std::optional<int> k,
                            std::uint64_t samples, std::uint64_t seed);

}  // namespace patineq
