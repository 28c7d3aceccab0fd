#include <doctest.h>

#include "patineq/occur.hpp"
#include "patineq/oracle.hpp"
#include "patineq/permineq.hpp"

#include <stdexcept>

using namespace patineq;

TEST_CASE("lattice paths") {
  CHECK(enumerate_lattice_paths(0).size() == 1);
  CHECK(enumerate_lattice_paths(1).size() == 2);
  for (int m = 0; m <= 5; ++m) {
    CHECK(Natural(enumerate_lattice_paths(m).size()) == binomial(2 * m, m));
  }
  CHECK(paths_through(1, 0, 0) == 2);
  CHECK(paths_through(2, 1, 1) == 4);
  for (int m = 0; m <= 4; ++m) {
    CHECK(paths_through(m, 0, m) == 1);
    for (int i = 0; i <= m; ++i) {
      for (int j = 0; j <= m; ++j) CHECK(paths_through(m, i, j) == bracket(i, j, m));
    }
  }
}

TEST_CASE("path pair sums equal the bracket sums") {
  CHECK(path_pair_lhs(std::vector<int>{0, 1}) == 10);
  CHECK(path_pair_lhs(std::vector<int>{1, 0}) == 10);
  CHECK(path_pair_lhs(std::vector<int>{0, 1, 2}) == 126);
  for (int m = 0; m <= 3; ++m) {
    for (const auto& p : enumerate_perm_patterns(m + 1)) {
      CHECK(path_pair_lhs(p.theorem_form()) == lhs_perm(p.theorem_form()));
    }
  }
}

TEST_CASE("permutation decompositions equal the cross sum") {
  CHECK(decomposition_count(parse_perm("12")) == 10);
  CHECK(decomposition_count(parse_perm("1")) == 1);
  for (int m = 1; m <= 4; ++m) {
    for (const auto& p : enumerate_perm_patterns(m)) {
      CHECK(decomposition_count(p) == cross_sum(p, p));
    }
  }
  CHECK_THROWS_AS(decomposition_count(parse_perm("12345")), BudgetExceeded);
}

TEST_CASE("word decompositions") {
  // M = 1: S1 = S2 = {1}, every letter of [k] is a valid ρ.
  for (int k = 1; k <= 4; ++k) CHECK(decomposition_count(parse_word("1"), k) == k);
  CHECK_THROWS_AS(decomposition_count(parse_word("1212"), 2), BudgetExceeded);
}

TEST_CASE("exact polynomial") {
  const ExactPolynomial zero;
  CHECK(zero.degree() == -1);
  CHECK(zero.evaluate(Ratio(5)) == Ratio(0));
  const ExactPolynomial p({Ratio(1), Ratio(0), Ratio(2), Ratio(0)});
  CHECK(p.degree() == 2);
  CHECK(p.coefficient(2) == Ratio(2));
  CHECK(p.coefficient(7) == Ratio(0));
  CHECK(p.evaluate(Ratio(3)) == Ratio(19));
}

TEST_CASE("polynomial fitting") {
  std::vector<std::pair<Ratio, Ratio>> constant;
  for (int x = 0; x < 4; ++x) constant.emplace_back(Ratio(x), Ratio(7, 3));
  const auto c = fit_exact_polynomial(constant, 3);
  CHECK(c.degree() == 0);
  CHECK(c.coefficient(0) == Ratio(7, 3));

  std::vector<std::pair<Ratio, Ratio>> means;
  for (int n = 2; n <= 4; ++n) means.emplace_back(Ratio(n), exhaustive_moments_perm(parse_perm("12"), n).mean);
  const auto e = fit_exact_polynomial(means, 2);
  for (int n = 0; n <= 10; ++n) CHECK(e.evaluate(Ratio(n)) == expectation_formula_perm(2, n));

  std::vector<std::pair<Ratio, Ratio>> bent{{Ratio(0), Ratio(0)}, {Ratio(1), Ratio(1)},
                                            {Ratio(2), Ratio(4)}};
  CHECK_THROWS_AS(fit_exact_polynomial(bent, 1), InconsistentFit);
  CHECK_THROWS_AS(fit_exact_polynomial(bent, 3), std::invalid_argument);
  std::vector<std::pair<Ratio, Ratio>> repeated{{Ratio(1), Ratio(0)}, {Ratio(1), Ratio(1)}};
  CHECK_THROWS_AS(fit_exact_polynomial(repeated, 1), std::invalid_argument);
}

TEST_CASE("variance polynomials") {
  const auto inv = variance_polynomial_perm(parse_perm("12"), 2, 6, 3);
  CHECK(inv.degree() == 3);
  CHECK(inv.coefficient(3) == Ratio(1, 36));
  for (int n = 0; n <= 12; ++n) CHECK(inv.evaluate(Ratio(n)) == Ratio(n * (n - 1) * (2 * n + 5), 72));

  for (const auto& p : enumerate_perm_patterns(3)) {
    const auto v = variance_polynomial_perm(p, 2, 8, 5);
    CHECK(v.degree() <= 5);
    CHECK(v.coefficient(5) == variance_leading_coeff(p));
  }
}

TEST_CASE("covariance polynomial") {
  const auto p = parse_perm("123");
  const auto q = parse_perm("132");
  const auto cov = covariance_polynomial_perm(p, q, 2, 8, 5);
  CHECK(cov.coefficient(5) == covariance_leading_coeff(p, q).leading_coefficient);
}
