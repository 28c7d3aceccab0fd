#include <doctest.h>

#include "patineq/oracle.hpp"
#include "patineq/permineq.hpp"
#include "patineq/wordineq.hpp"

#include <stdexcept>

using namespace patineq;

TEST_CASE("word inequality values") {
  CHECK(lhs_word(std::vector<int>{0, 0, 0}, 0) == 30);
  CHECK(rhs_word(2, 0) == Ratio(30));
  CHECK(lhs_word(std::vector<int>{0}, 0) == 1);
  CHECK(rhs_word(0, 0) == Ratio(1));
  CHECK_THROWS_AS(lhs_word(std::vector<int>{0, 2}, 2), std::invalid_argument);
  CHECK_THROWS_AS(lhs_word(std::vector<int>{0, 0}, 1), std::invalid_argument);
}

TEST_CASE("words with l = m reduce to permutations") {
  for (int m = 0; m <= 4; ++m) {
    CHECK(rhs_word(m, m) == Ratio(rhs_perm(m).value()));
    for (const auto& p : enumerate_perm_patterns(m + 1)) {
      const auto tau = p.theorem_form();
      CHECK(lhs_word(tau, m) == lhs_perm(tau));
    }
  }
}

TEST_CASE("word margins") {
  for (int m = 0; m <= 5; ++m) {
    for (int l = 0; l <= m; ++l) {
      for (const auto& w : enumerate_word_patterns(m + 1, l + 1)) {
        const auto r = word_inequality_report(w.theorem_form(), l);
        if (l == 0) {
          CHECK(r.margin == Ratio(0));
        } else {
          CHECK(r.margin > Ratio(0));
        }
      }
    }
  }
}

TEST_CASE("h function") {
  // The shared-element term with maximal union collapses to a bracket number.
  const auto tau = parse_word("1212");
  const int big_l = tau.alphabet_size() - 1;
  for (int i = 1; i <= tau.length(); ++i) {
    for (int j = 1; j <= tau.length(); ++j) {
      const int r = tau(i) + tau(j) - 1;
      CHECK(h_function(tau, big_l, r, i, j) ==
            bracket(tau(i) - 1, tau(j) - 1, tau.alphabet_size() - 1));
    }
  }
  CHECK(h_function(parse_word("12"), 1, 0, 2, 2) == 0);
  CHECK(h_function(parse_word("12"), 1, 2, 1, 2) ==
        multinomial({0, 1, 0}) * multinomial({1, 0, 0}));
}

TEST_CASE("f matches the decomposition oracle") {
  for (int m = 1; m <= 3; ++m) {
    for (int l = 1; l <= m; ++l) {
      for (const auto& w : enumerate_word_patterns(m, l)) {
        for (int k = 1; k <= 4; ++k) {
          CHECK(f_function(w, k).value == decomposition_count(w, k));
        }
      }
    }
  }
}

TEST_CASE("word variance leading coefficient matches interpolation") {
  const auto w = parse_word("11");
  const auto poly = variance_polynomial_word(w, 2, 2, 8, 3);
  CHECK(poly.degree() <= 3);
  CHECK(poly.coefficient(3) == word_variance_leading_coeff(w, 2));
}

TEST_CASE("word discriminant") {
  const auto d = word_discriminant(parse_word("11"), parse_word("11"));
  CHECK(d.cross_sum == 6);
  CHECK(d.bound == Ratio(6));
  CHECK(d.discriminant == Ratio(0));
  CHECK(d.sign == Sign::zero);

  for (const auto& p : enumerate_perm_patterns(3)) {
    const auto w = WordPattern::from_perm(p);
    CHECK(word_discriminant(w, w).discriminant ==
          Ratio(factorial(5).value() * factorial(5).value()) * variance_leading_coeff(p));
  }
  CHECK_THROWS_AS(word_discriminant(parse_word("11"), parse_word("12")), std::invalid_argument);
}

TEST_CASE("word extremal search") {
  const auto zero = word_extremal_search(3, 0);
  CHECK(zero.min_margin == Ratio(0));
  CHECK(zero.max_margin == Ratio(0));
  CHECK_FALSE(zero.strict);

  const auto mixed = word_extremal_search(2, 1);
  CHECK(mixed.patterns == 6);
  CHECK(mixed.min_margin > Ratio(0));
  CHECK(mixed.strict);

  for (int m = 1; m <= 4; ++m) {
    const auto w = word_extremal_search(m, m);
    const auto p = extremal_search(m);
    CHECK(w.min_margin == Ratio(p.m_lower));
    CHECK(w.max_margin == Ratio(p.m_star));
    CHECK(w.minimizers == p.minimizers);
    CHECK(w.maximizers == p.maximizers);
  }

  Budgets tiny;
  tiny.max_enumeration = 10;
  CHECK_THROWS_AS(word_extremal_search(4, 2, tiny), BudgetExceeded);
}
