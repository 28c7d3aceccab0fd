#include "patineq/occur.hpp"

#include "patineq/detail/parallel.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace patineq {

namespace {

int compare3(int a, int b) { return (a > b) - (a < b); }

// Depth-first choice of positions; a position is kept only if the prefix
// chosen so far is order-isomorphic to the pattern prefix.
template <typename OnMatch>
void search_occurrences(std::span<const int> pattern, std::span<const int> ambient,
                        std::vector<int>& chosen, std::size_t start, OnMatch& on_match) {
  const std::size_t t = chosen.size();
  if (t == pattern.size()) {
    on_match(chosen);
    return;
  }
  const std::size_t remaining = pattern.size() - t;
  for (std::size_t p = start; p + remaining <= ambient.size(); ++p) {
    bool ok = true;
    for (std::size_t s = 0; s < t && ok; ++s) {
      ok = compare3(ambient[p], ambient[static_cast<std::size_t>(chosen[s])]) ==
           compare3(pattern[t], pattern[s]);
    }
    if (!ok) continue;
    chosen.push_back(static_cast<int>(p));
    search_occurrences(pattern, ambient, chosen, p + 1, on_match);
    chosen.pop_back();
  }
}

void check_permutation(std::span<const int> ambient) {
  std::vector<bool> seen(ambient.size() + 1, false);
  for (int v : ambient) {
    if (v < 1 || static_cast<std::size_t>(v) > ambient.size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("ambient sequence is not a permutation of 1.." +
                                  std::to_string(ambient.size()));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

void check_word(std::span<const int> ambient) {
  for (int v : ambient) {
    if (v < 1) throw std::invalid_argument("ambient word letters must be positive");
  }
}

void check_ambient_n(int n, const Budgets& budgets) {
  if (n < 0) throw std::invalid_argument("ambient length must be nonnegative");
  if (n > budgets.max_ambient_n) {
    throw BudgetExceeded("maxAmbientFactorial",
                         "n=" + std::to_string(n) + " exceeds max ambient length " +
                             std::to_string(budgets.max_ambient_n));
  }
}

std::uint64_t checked_word_space(int n, int k, const Budgets& budgets) {
  if (n < 0 || k < 1) throw std::invalid_argument("word space needs n >= 0 and k >= 1");
  std::uint64_t space = 1;
  for (int t = 0; t < n; ++t) {
    if (space > budgets.max_word_space / static_cast<std::uint64_t>(k)) {
      throw BudgetExceeded("maxWordSpace", "k^n=" + std::to_string(k) + "^" +
                                               std::to_string(n) + " exceeds " +
                                               std::to_string(budgets.max_word_space));
    }
    space *= static_cast<std::uint64_t>(k);
  }
  return space;
}

struct PowerSums {
  Integer sum;
  Integer sum_sq;
  Integer cross;  // sum of X·Y when a second pattern is tracked
};

// Visits every permutation of 1..n whose first letter is first+1, in
// lexicographic order.
template <typename Visit>
void for_each_permutation_with_first(int n, int first, Visit&& visit) {
  std::vector<int> perm;
  perm.reserve(static_cast<std::size_t>(n));
  perm.push_back(first + 1);
  for (int v = 1; v <= n; ++v) {
    if (v != first + 1) perm.push_back(v);
  }
  do {
    visit(perm);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
}

MomentReport finish_exhaustive(std::string pattern, int n, std::optional<int> k,
                               const PowerSums& total, const Integer& space) {
  MomentReport report;
  report.n = n;
  report.k = k;
  report.pattern = std::move(pattern);
  report.mean = Ratio(total.sum, space);
  report.second_moment = Ratio(total.sum_sq, space);
  report.variance = report.second_moment - report.mean * report.mean;
  return report;
}

}  // namespace

std::uint64_t count_order_isomorphic(std::span<const int> pattern, std::span<const int> ambient) {
  if (pattern.size() > ambient.size()) return 0;
  if (binomial(static_cast<std::int64_t>(ambient.size()), static_cast<std::int64_t>(pattern.size())) >
      Natural(std::numeric_limits<std::uint64_t>::max())) {
    throw std::overflow_error("occurrence count could exceed 64 bits");
  }
  std::uint64_t count = 0;
  std::vector<int> chosen;
  chosen.reserve(pattern.size());
  auto bump = [&count](const std::vector<int>&) { ++count; };
  search_occurrences(pattern, ambient, chosen, 0, bump);
  return count;
}

std::vector<Occurrence> list_occurrences(std::span<const int> pattern,
                                         std::span<const int> ambient) {
  std::vector<Occurrence> out;
  if (pattern.size() > ambient.size()) return out;
  std::vector<int> chosen;
  auto keep = [&out](const std::vector<int>& positions) { out.push_back({positions}); };
  search_occurrences(pattern, ambient, chosen, 0, keep);
  return out;
}

Natural count_occurrences(const PermPattern& pattern, std::span<const int> ambient) {
  check_permutation(ambient);
  return count_order_isomorphic(pattern.letters(), ambient);
}

Natural count_occurrences(const WordPattern& pattern, std::span<const int> ambient) {
  check_word(ambient);
  return count_order_isomorphic(pattern.letters(), ambient);
}

Ratio expectation_formula_perm(int length, int n) {
  if (length < 1 || n < 0) throw std::invalid_argument("expectation needs M >= 1, n >= 0");
  return ratio_of(binomial(n, length), factorial(length));
}

Ratio expectation_formula_word(int length, int alphabet, int n, int k) {
  if (alphabet < 1 || alphabet > length || n < 0 || k < 1) {
    throw std::invalid_argument("expectation needs 1 <= L <= M, n >= 0, k >= 1");
  }
  Integer k_pow = 1;
  for (int t = 0; t < length; ++t) k_pow *= k;
  return ratio_of(binomial(k, alphabet) * binomial(n, length), Natural(k_pow));
}

MomentReport exhaustive_moments_perm(const PermPattern& pattern, int n, const Budgets& budgets) {
  check_ambient_n(n, budgets);
  const std::vector<int>& letters = pattern.letters();
  if (n == 0) {
    return finish_exhaustive(pattern.str(), 0, std::nullopt, PowerSums{}, 1);
  }
  auto partial = detail::run_chunks<PowerSums>(
      static_cast<std::size_t>(n), budgets.workers, [&](std::size_t first) {
        PowerSums sums;
        for_each_permutation_with_first(n, static_cast<int>(first), [&](const std::vector<int>& perm) {
          const std::uint64_t c = count_order_isomorphic(letters, perm);
          sums.sum += c;
          sums.sum_sq += Integer(c) * c;
        });
        return sums;
      });
  PowerSums total;
  for (const auto& p : partial) {
    total.sum += p.sum;
    total.sum_sq += p.sum_sq;
  }
  return finish_exhaustive(pattern.str(), n, std::nullopt, total, factorial(n).value());
}

Ratio exhaustive_covariance_perm(const PermPattern& p, const PermPattern& q, int n,
                                 const Budgets& budgets) {
  check_ambient_n(n, budgets);
  if (n == 0) return Ratio(0);
  struct Sums {
    Integer x, y, xy;
  };
  auto partial = detail::run_chunks<Sums>(
      static_cast<std::size_t>(n), budgets.workers, [&](std::size_t first) {
        Sums s;
        for_each_permutation_with_first(n, static_cast<int>(first), [&](const std::vector<int>& perm) {
          const std::uint64_t cx = count_order_isomorphic(p.letters(), perm);
          const std::uint64_t cy = count_order_isomorphic(q.letters(), perm);
          s.x += cx;
          s.y += cy;
          s.xy += Integer(cx) * cy;
        });
        return s;
      });
  Sums total;
  for (const auto& s : partial) {
    total.x += s.x;
    total.y += s.y;
    total.xy += s.xy;
  }
  const Integer space = factorial(n).value();
  return Ratio(total.xy, space) - Ratio(total.x, space) * Ratio(total.y, space);
}

MomentReport exhaustive_moments_word(const WordPattern& pattern, int n, int k,
                                     const Budgets& budgets) {
  const std::uint64_t space = checked_word_space(n, k, budgets);
  const std::vector<int>& letters = pattern.letters();
  if (n == 0) {
    return finish_exhaustive(pattern.str(), 0, k, PowerSums{}, 1);
  }
  auto partial = detail::run_chunks<PowerSums>(
      static_cast<std::size_t>(k), budgets.workers, [&](std::size_t first) {
        PowerSums sums;
        std::vector<int> word(static_cast<std::size_t>(n), 1);
        word[0] = static_cast<int>(first) + 1;
        while (true) {
          const std::uint64_t c = count_order_isomorphic(letters, word);
          sums.sum += c;
          sums.sum_sq += Integer(c) * c;
          int pos = n - 1;
          while (pos >= 1 && word[static_cast<std::size_t>(pos)] == k) {
            word[static_cast<std::size_t>(pos)] = 1;
            --pos;
          }
          if (pos < 1) break;
          ++word[static_cast<std::size_t>(pos)];
        }
        return sums;
      });
  PowerSums total;
  for (const auto& p : partial) {
    total.sum += p.sum;
    total.sum_sq += p.sum_sq;
  }
  return finish_exhaustive(pattern.str(), n, k, total, Integer(space));
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: zero bound");
  // Reject the low residue class so every value is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    const auto j = uniform_below(rng, static_cast<std::uint64_t>(i) + 1);
    std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
  }
  return perm;
}

MomentReport sample_moments(const AnyPattern& pattern, int n, std::optional<int> k,
                            std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("sample_moments needs at least one sample");
  if (n < 0) throw std::invalid_argument("ambient length must be nonnegative");
  if (k && *k < 1) throw std::invalid_argument("alphabet size k must be >= 1");
  const std::vector<int>& letters =
      std::visit([](const auto& p) -> const std::vector<int>& { return p.letters(); }, pattern);
  const std::string name = std::visit([](const auto& p) { return p.str(); }, pattern);

  std::mt19937_64 rng(seed);
  Integer sum = 0;
  Integer sum_sq = 0;
  std::vector<int> word(static_cast<std::size_t>(n));
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::uint64_t c = 0;
    if (k) {
      for (int& v : word) v = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(*k))) + 1;
      c = count_order_isomorphic(letters, word);
    } else {
      c = count_order_isomorphic(letters, random_permutation(rng, n));
    }
    sum += c;
    sum_sq += Integer(c) * c;
  }

  MomentReport report;
  report.n = n;
  report.k = k;
  report.pattern = name;
  report.sample_count = samples;
  const Integer count(samples);
  report.mean = Ratio(sum, count);
  report.second_moment = Ratio(sum_sq, count);
  if (samples > 1) {
    report.variance = Ratio(count * sum_sq - sum * sum, count * (count - 1));
  }
  return report;
}

}  // namespace patineq
