#include "patineq/oracle.hpp"

#include "patineq/occur.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace patineq {

bool LatticePath::passes_through(int x, int y) const {
  int cx = 0;
  int cy = 0;
  if (cx == x && cy == y) return true;
  for (Step s : steps) {
    (s == Step::east ? cx : cy) += 1;
    if (cx == x && cy == y) return true;
  }
  return false;
}

std::vector<LatticePath> enumerate_lattice_paths(int m) {
  if (m < 0 || m > 12) throw std::invalid_argument("lattice path oracle needs 0 <= m <= 12");
  std::vector<LatticePath> out;
  const unsigned length = 2 * static_cast<unsigned>(m);
  for (std::uint32_t mask = 0; mask < (1u << length); ++mask) {
    if (std::popcount(mask) != m) continue;
    LatticePath path;
    for (unsigned b = 0; b < length; ++b) {
      path.steps.push_back((mask >> b) & 1u ? Step::east : Step::north);
    }
    out.push_back(std::move(path));
  }
  return out;
}

Natural paths_through(int m, int i, int j) {
  std::uint64_t count = 0;
  for (const auto& path : enumerate_lattice_paths(m)) {
    if (path.passes_through(i, j)) ++count;
  }
  return count;
}

Natural path_pair_lhs(std::span<const int> tau) {
  const int m = static_cast<int>(tau.size()) - 1;
  const auto paths = enumerate_lattice_paths(m);
  auto through = [&](int x, int y) {
    std::uint64_t c = 0;
    for (const auto& p : paths) c += p.passes_through(x, y) ? 1 : 0;
    return Natural(c);
  };
  Natural total;
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= m; ++j) {
      const int ti = tau[static_cast<std::size_t>(i)];
      const int tj = tau[static_cast<std::size_t>(j)];
      if (ti < 0 || ti > m || tj < 0 || tj > m) {
        throw std::invalid_argument("path_pair_lhs: value outside {0..m}");
      }
      total += through(i, j) * through(ti, tj);
    }
  }
  return total;
}

namespace {

// Plain quadratic test, kept separate from the pruned production counter.
bool same_order_type(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < a.size(); ++y) {
      if ((a[x] < a[y]) != (b[x] < b[y]) || (a[x] == a[y]) != (b[x] == b[y])) return false;
    }
  }
  return true;
}

std::vector<int> restrict_to(const std::vector<int>& word, std::uint32_t mask) {
  std::vector<int> out;
  for (std::size_t p = 0; p < word.size(); ++p) {
    if ((mask >> p) & 1u) out.push_back(word[p]);
  }
  return out;
}

// Ordered pairs of M-subsets of {0..N-1} whose union is everything.
std::vector<std::pair<std::uint32_t, std::uint32_t>> covering_pairs(int length) {
  const int n = 2 * length - 1;
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (std::popcount(mask) == length) subsets.push_back(mask);
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (auto a : subsets) {
    for (auto b : subsets) {
      if ((a | b) == full) pairs.emplace_back(a, b);
    }
  }
  return pairs;
}

std::uint64_t count_covered(const std::vector<int>& rho, const std::vector<int>& pattern,
                            const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
  std::uint64_t c = 0;
  for (const auto& [a, b] : pairs) {
    if (same_order_type(restrict_to(rho, a), pattern) &&
        same_order_type(restrict_to(rho, b), pattern)) {
      ++c;
    }
  }
  return c;
}

void check_oracle_size(int length, int max_length) {
  if (length > max_length) {
    throw BudgetExceeded("decompositionOracle", "pattern length " + std::to_string(length) +
                                                    " exceeds oracle bound " +
                                                    std::to_string(max_length));
  }
}

}  // namespace

Natural decomposition_count(const PermPattern& tau, int max_length) {
  check_oracle_size(tau.length(), max_length);
  const int n = 2 * tau.length() - 1;
  const auto pairs = covering_pairs(tau.length());
  std::vector<int> rho(static_cast<std::size_t>(n));
  std::iota(rho.begin(), rho.end(), 1);
  std::uint64_t total = 0;
  do {
    total += count_covered(rho, tau.letters(), pairs);
  } while (std::next_permutation(rho.begin(), rho.end()));
  return total;
}

Natural decomposition_count(const WordPattern& tau, int k, int max_length) {
  check_oracle_size(tau.length(), max_length);
  if (k < 1) throw std::invalid_argument("decomposition_count needs k >= 1");
  const int n = 2 * tau.length() - 1;
  const auto pairs = covering_pairs(tau.length());
  std::vector<int> rho(static_cast<std::size_t>(n), 1);
  std::uint64_t total = 0;
  while (true) {
    total += count_covered(rho, tau.letters(), pairs);
    int pos = n - 1;
    while (pos >= 0 && rho[static_cast<std::size_t>(pos)] == k) {
      rho[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++rho[static_cast<std::size_t>(pos)];
  }
  return total;
}

ExactPolynomial::ExactPolynomial(std::vector<Ratio> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Ratio ExactPolynomial::coefficient(int d) const {
  if (d < 0 || d > degree()) return Ratio(0);
  return coefficients_[static_cast<std::size_t>(d)];
}

Ratio ExactPolynomial::evaluate(const Ratio& x) const {
  Ratio acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

InconsistentFit::InconsistentFit(Ratio x, Ratio expected, Ratio fitted)
    : std::runtime_error("point x=" + to_string(x) + " has value " + to_string(expected) +
                         " but the fitted polynomial gives " + to_string(fitted)),
      x_(std::move(x)),
      expected_(std::move(expected)),
      fitted_(std::move(fitted)) {}

ExactPolynomial fit_exact_polynomial(const std::vector<std::pair<Ratio, Ratio>>& points,
                                     int degree) {
  if (degree < 0) throw std::invalid_argument("fit degree must be >= 0");
  const auto needed = static_cast<std::size_t>(degree) + 1;
  if (points.size() < needed) {
    throw std::invalid_argument("fit of degree " + std::to_string(degree) + " needs " +
                                std::to_string(needed) + " points, got " +
                                std::to_string(points.size()));
  }
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      if (points[a].first == points[b].first) {
        throw std::invalid_argument("repeated abscissa " + to_string(points[a].first));
      }
    }
  }

  // divided differences, in place
  std::vector<Ratio> dd;
  for (std::size_t t = 0; t < needed; ++t) dd.push_back(points[t].second);
  for (std::size_t level = 1; level < needed; ++level) {
    for (std::size_t t = needed - 1; t >= level; --t) {
      dd[t] = (dd[t] - dd[t - 1]) / (points[t].first - points[t - level].first);
    }
  }
  // expand the Newton form into monomial coefficients (Horner from the top)
  std::vector<Ratio> coeffs{dd[needed - 1]};
  for (std::size_t t = needed - 1; t-- > 0;) {
    const Ratio& x = points[t].first;
    std::vector<Ratio> next(coeffs.size() + 1, Ratio(0));
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
      next[d + 1] += coeffs[d];
      next[d] -= coeffs[d] * x;
    }
    next[0] += dd[t];
    coeffs = std::move(next);
  }
  ExactPolynomial poly(std::move(coeffs));
  for (const auto& [x, y] : points) {
    const Ratio fitted = poly.evaluate(x);
    if (fitted != y) throw InconsistentFit(x, y, fitted);
  }
  return poly;
}

ExactPolynomial variance_polynomial_perm(const PermPattern& tau, int n_from, int n_to, int degree,
                                         const Budgets& budgets) {
  std::vector<std::pair<Ratio, Ratio>> points;
  for (int n = n_from; n <= n_to; ++n) {
    points.emplace_back(Ratio(n), *exhaustive_moments_perm(tau, n, budgets).variance);
  }
  return fit_exact_polynomial(points, degree);
}

ExactPolynomial variance_polynomial_word(const WordPattern& tau, int k, int n_from, int n_to,
                                         int degree, const Budgets& budgets) {
  std::vector<std::pair<Ratio, Ratio>> points;
  for (int n = n_from; n <= n_to; ++n) {
    points.emplace_back(Ratio(n), *exhaustive_moments_word(tau, n, k, budgets).variance);
  }
  return fit_exact_polynomial(points, degree);
}

ExactPolynomial covariance_polynomial_perm(const PermPattern& p, const PermPattern& q, int n_from,
                                           int n_to, int degree, const Budgets& budgets) {
  std::vector<std::pair<Ratio, Ratio>> points;
  for (int n = n_from; n <= n_to; ++n) {
    points.emplace_back(Ratio(n), exhaustive_covariance_perm(p, q, n, budgets));
  }
  return fit_exact_polynomial(points, degree);
}

}  // namespace patineq
