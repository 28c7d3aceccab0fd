#include <doctest.h>

#include "patineq/exactmath.hpp"

#include <stdexcept>

using namespace patineq;

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, 1) == 3);
  CHECK(binomial(11, 5) == 462);
  CHECK(binomial(11, 5) * binomial(11, 5) == 213444);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(-2, 1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(60, 30).str() == "118264581564861424");
}

TEST_CASE("binomial Pascal rule and row sums") {
  for (int n = 1; n <= 30; ++n) {
    Natural row = 0;
    for (int k = 0; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
      CHECK(binomial(n, k) == binomial(n, n - k));
      row += binomial(n, k);
    }
    CHECK(row.value() == Integer(1) << n);
  }
}

TEST_CASE("multinomial") {
  CHECK(multinomial({1, 1, 0}) == 2);
  CHECK(multinomial({0, 0, 0}) == 1);
  CHECK(multinomial({2, 1, -1}) == 0);
  CHECK(multinomial({2, 2, 2}) == 90);
  CHECK(multinomial({}) == 1);
}

TEST_CASE("factorials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(3) == 6);
  CHECK(factorial(20).str() == "2432902008176640000");
  CHECK(factorial(25).str() == "15511210043330985984000000");
  CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
  CHECK(superfactorial(0) == 1);
  CHECK(superfactorial(3) == 12);
  CHECK(superfactorial(5) == 34560);
}

TEST_CASE("stirling2") {
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(4, 3) == 6);
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(5, 0) == 0);
  CHECK(stirling2(2, 3) == 0);
  for (int n = 0; n <= 10; ++n) CHECK(stirling2(n, n) == 1);
  // Σ_k S(n,k) k! counts ordered set partitions (Fubini numbers).
  CHECK(stirling2(4, 1) + stirling2(4, 2) * 2 + stirling2(4, 3) * 6 + stirling2(4, 4) * 24 == 75);
}

TEST_CASE("bracket values") {
  CHECK(bracket(0, 1, 1) == 1);
  CHECK(bracket(0, 0, 1) == 2);
  CHECK(bracket(1, 1, 1) == 2);
  CHECK(bracket(0, 0, 2) == 6);
  CHECK(bracket(1, 1, 2) == 4);
  CHECK(bracket(1, 2, 2) == 3);
  for (int m = 0; m <= 8; ++m) {
    CHECK(bracket(0, m, m) == 1);
    CHECK(bracket(m, 0, m) == 1);
  }
  CHECK_THROWS_AS(bracket(2, 0, 1), std::out_of_range);
  CHECK_THROWS_AS(bracket(-1, 0, 1), std::out_of_range);
}

TEST_CASE("bracket symmetries and totals") {
  for (int m = 0; m <= 8; ++m) {
    Natural total = 0;
    for (int i = 0; i <= m; ++i) {
      for (int j = 0; j <= m; ++j) {
        const Natural b = bracket(i, j, m);
        CHECK(b == bracket(j, i, m));
        CHECK(b == bracket(m - i, m - j, m));
        CHECK(b >= Natural(1));
        CHECK(b <= binomial(2 * m, m));
        CHECK(Ratio(b.value()) == brace(i, j, m) * Ratio(binomial(2 * m, m).value()));
        total += b;
      }
    }
    CHECK(total == Natural(static_cast<std::uint64_t>(2 * m + 1)) * binomial(2 * m, m));
  }
}

TEST_CASE("brace") {
  CHECK(brace(0, 0, 1) == Ratio(1));
  CHECK(brace(0, 1, 1) == Ratio(1, 2));
  CHECK_THROWS_AS(brace(0, 3, 2), std::out_of_range);
}

TEST_CASE("bracket tables") {
  const BracketTable t0(0);
  CHECK(t0.size() == 1);
  CHECK(t0(0, 0) == 1);
  const BracketTable t1(1);
  CHECK(t1(0, 0) == 2);
  CHECK(t1(0, 1) == 1);
  CHECK(t1(1, 0) == 1);
  CHECK(t1(1, 1) == 2);
  const auto t2 = bracket_table(2);
  const int expected[3][3] = {{6, 3, 1}, {3, 4, 3}, {1, 3, 6}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(t2->at(i, j) == static_cast<std::uint64_t>(expected[i][j]));
  }
  CHECK(bracket_table(2) == t2);
  CHECK_THROWS_AS(BracketTable(-1), std::invalid_argument);
}

TEST_CASE("bracket determinant") {
  CHECK(bracket_determinant(0).eliminated == 1);
  CHECK(bracket_determinant(1).eliminated == 3);
  CHECK(bracket_determinant(1).closed_form == Ratio(3));
  for (int m = 0; m <= 5; ++m) CHECK(bracket_determinant(m).agrees());
}

TEST_CASE("bareiss determinant") {
  CHECK(bareiss_determinant({}) == 1);
  CHECK(bareiss_determinant({{Integer(0), Integer(1)}, {Integer(1), Integer(0)}}) == -1);
  CHECK(bareiss_determinant({{Integer(1), Integer(2)}, {Integer(2), Integer(4)}}) == 0);
  CHECK(bareiss_determinant({{Integer(2), Integer(0), Integer(1)},
                             {Integer(1), Integer(3), Integer(2)},
                             {Integer(1), Integer(1), Integer(2)}}) == 6);
}

TEST_CASE("Natural arithmetic is checked") {
  Natural a = 5;
  CHECK_THROWS_AS(a -= Natural(6), std::domain_error);
  CHECK(a == 5);
  CHECK(a - Natural(5) == 0);
  CHECK_THROWS_AS(Natural(Integer(-1)), std::domain_error);
  CHECK(Natural(12).exact_div(4) == 3);
  CHECK_THROWS_AS(Natural(12).exact_div(5), std::domain_error);
  CHECK_THROWS_AS(Natural(12).exact_div(0), std::domain_error);
  CHECK(signed_diff(3, 5) == -2);
}

TEST_CASE("ratio rendering") {
  CHECK(to_string(Ratio(13, 7200)) == "13/7200");
  CHECK(to_string(Ratio(6, 3)) == "2");
  CHECK(to_string(Ratio(-1, 2400)) == "-1/2400");
  CHECK(to_decimal(Ratio(7, 13), 6) == "0.538461");
  CHECK(to_decimal(Ratio(-1, 4), 3) == "-0.250");
  CHECK(to_decimal(Ratio(5, 2), 0) == "2");
  CHECK(sign_of(Ratio(-3, 7)) == -1);
  CHECK(sign_of(Ratio(0)) == 0);
  CHECK_THROWS_AS(ratio_of(1, 0), std::domain_error);
}
