#include <doctest.h>

#include "patineq/permineq.hpp"

#include <algorithm>
#include <stdexcept>

using namespace patineq;

namespace {

std::vector<int> iota_vec(int size) {
  std::vector<int> v(static_cast<std::size_t>(size));
  for (int t = 0; t < size; ++t) v[static_cast<std::size_t>(t)] = t;
  return v;
}

}  // namespace

TEST_CASE("lhs values") {
  CHECK(lhs_perm(std::vector<int>{0, 1}) == 10);
  CHECK(lhs_perm(std::vector<int>{1, 0}) == 10);
  CHECK(lhs_perm(std::vector<int>{0}) == 1);
  CHECK(lhs_perm(std::vector<int>{0, 1, 2}) == 126);
  CHECK(lhs_perm(std::vector<int>{0, 2, 1}) == 114);
  CHECK_THROWS_AS(lhs_perm(std::vector<int>{0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(lhs_perm(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(lhs_perm(std::vector<int>{1, 2}), std::invalid_argument);
}

TEST_CASE("rhs values") {
  CHECK(rhs_perm(0) == 1);
  CHECK(rhs_perm(1) == 9);
  CHECK(rhs_perm(2) == 100);
  CHECK(rhs_perm(3) == 1225);
  CHECK(rhs_perm(4) == 15876);
  CHECK(rhs_perm(5) == 213444);
}

TEST_CASE("margins are positive for every bijection up to m = 6") {
  for (int m = 1; m <= 6; ++m) {
    auto tau = iota_vec(m + 1);
    do {
      CHECK(margin_perm(tau) > 0);
    } while (std::next_permutation(tau.begin(), tau.end()));
  }
}

TEST_CASE("lhs is invariant under reversing and complementing tau") {
  for (int m = 1; m <= 5; ++m) {
    auto tau = iota_vec(m + 1);
    do {
      auto rev = tau;
      std::reverse(rev.begin(), rev.end());
      auto comp = tau;
      for (int& v : comp) v = m - v;
      CHECK(lhs_perm(rev) == lhs_perm(tau));
      CHECK(lhs_perm(comp) == lhs_perm(tau));
    } while (std::next_permutation(tau.begin(), tau.end()));
  }
}

TEST_CASE("pair sums") {
  const auto id = iota_vec(4);
  auto tau = id;
  do {
    CHECK(lhs_pair(id, id) == lhs_perm(id));
    CHECK(lhs_pair(tau, id) == lhs_perm(tau));
  } while (std::next_permutation(tau.begin(), tau.end()));

  Natural least = lhs_pair(iota_vec(3), iota_vec(3));
  auto a = iota_vec(3);
  do {
    auto b = iota_vec(3);
    do {
      least = std::min(least, lhs_pair(a, b));
    } while (std::next_permutation(b.begin(), b.end()));
  } while (std::next_permutation(a.begin(), a.end()));
  CHECK(least >= Natural(100));
  CHECK_THROWS_AS(lhs_pair(iota_vec(2), iota_vec(3)), std::invalid_argument);
}

TEST_CASE("normalized form") {
  CHECK(normalized_lhs(std::vector<int>{0, 1}) == Ratio(5, 2));
  CHECK(normalized_rhs(1) == Ratio(9, 4));
  CHECK(normalized_lhs(std::vector<int>{0, 1}) < Ratio(4));
  for (int m = 1; m <= 4; ++m) {
    auto tau = iota_vec(m + 1);
    const Ratio c(binomial(2 * m, m).value());
    do {
      CHECK(normalized_lhs(tau) * c * c == Ratio(lhs_perm(tau).value()));
    } while (std::next_permutation(tau.begin(), tau.end()));
    CHECK(normalized_rhs(m) * c * c == Ratio(rhs_perm(m).value()));
  }
}

TEST_CASE("variance leading coefficient") {
  CHECK(variance_leading_coeff(parse_perm("12")) == Ratio(1, 36));
  CHECK(variance_leading_coeff(parse_perm("123")) == Ratio(13, 7200));
  CHECK(variance_leading_coeff(parse_perm("1")) == Ratio(0));
  CHECK(cross_sum(parse_perm("123"), parse_perm("123")) == 126);
}

TEST_CASE("covariance leading coefficient") {
  const auto pos = covariance_leading_coeff(parse_perm("123"), parse_perm("132"));
  CHECK(pos.sign == Sign::positive);
  CHECK(pos.leading_coefficient == Ratio(1, 1200));
  const auto neg = covariance_leading_coeff(parse_perm("123"), parse_perm("321"));
  CHECK(neg.sign == Sign::negative);
  CHECK(neg.cross_sum == 76);
  CHECK_THROWS_AS(covariance_leading_coeff(parse_perm("12"), parse_perm("123")),
                  std::invalid_argument);
  for (const auto& p : enumerate_perm_patterns(3)) {
    CHECK(covariance_leading_coeff(p, p).leading_coefficient == variance_leading_coeff(p));
    for (const auto& q : enumerate_perm_patterns(3)) {
      CHECK(covariance_leading_coeff(p, q).leading_coefficient ==
            covariance_leading_coeff(q, p).leading_coefficient);
    }
  }
}

TEST_CASE("covariance classes of 3-letter patterns") {
  const auto classes = covariance_classes(3);
  REQUIRE(classes.size() == 8);
  const char* listed[8][2] = {{"123", "123"}, {"132", "132"}, {"123", "132"}, {"132", "213"},
                              {"132", "231"}, {"132", "312"}, {"123", "312"}, {"123", "321"}};
  for (std::size_t t = 0; t < 8; ++t) {
    const auto pair = make_pair_unordered(parse_perm(listed[t][0]), parse_perm(listed[t][1]));
    CHECK(classes[t].pairs.contains(pair));
    CHECK((classes[t].covariance.sign == Sign::positive) == (t < 3));
  }
  for (std::size_t t = 1; t < classes.size(); ++t) {
    CHECK(classes[t - 1].covariance.leading_coefficient >= classes[t].covariance.leading_coefficient);
  }
  // Two classes share the coefficient -1/2400.
  CHECK(classes[4].covariance.leading_coefficient == Ratio(-1, 2400));
  CHECK(classes[5].covariance.leading_coefficient == Ratio(-1, 2400));
  bool below = false;
  for (const auto& c : classes) below = below || c.covariance.cross_sum < Natural(100);
  CHECK(below);
}

TEST_CASE("rearrangement bound") {
  CHECK(hlp_lower_bound(0) == 1);
  CHECK(hlp_lower_bound(1) == 8);
  CHECK(hlp_lower_bound(2) == 75);
  CHECK(hlp_lower_bound(3) == 792);
  CHECK(hlp_lower_bound(4) == 8660);
  CHECK(hlp_lower_bound(5) == 98876);
  for (int m = 1; m <= 5; ++m) CHECK(hlp_lower_bound(m) < rhs_perm(m));
}

TEST_CASE("order reversal") {
  CHECK(is_order_reversing(std::vector<int>{0}));
  CHECK_FALSE(is_order_reversing(std::vector<int>{1, 0}));
  CHECK_FALSE(is_order_reversing(std::vector<int>{0, 1}));
  const auto report = prop1_verify(5);
  CHECK(report.holds());
  CHECK(report.patterns_checked == 2 + 6 + 24 + 120 + 720);
}

TEST_CASE("extremal search") {
  const auto one = extremal_search(1);
  CHECK(one.m_star == 1);
  CHECK(one.m_lower == 1);
  CHECK(one.ratio == Ratio(1));

  const auto two = extremal_search(2);
  CHECK(two.m_star == 26);
  CHECK(two.m_lower == 14);
  CHECK(two.ratio == Ratio(7, 13));
  CHECK(two.patterns == 6);
  CHECK(std::find(two.maximizers.begin(), two.maximizers.end(), std::vector<int>{0, 1, 2}) !=
        two.maximizers.end());
  CHECK(two.minimizers ==
        std::vector<std::vector<int>>{{0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}});
}

TEST_CASE("pruned and unpruned searches agree") {
  SearchOptions plain;
  plain.symmetry_pruning = false;
  SearchOptions threaded;
  threaded.budgets.workers = 3;
  for (int m = 0; m <= 5; ++m) {
    const auto pruned = extremal_search(m);
    const auto full = extremal_search(m, plain);
    CHECK(pruned.same_result(full));
    CHECK(pruned.same_result(extremal_search(m, threaded)));
    CHECK(full.evaluated == full.patterns);
    CHECK(pruned.evaluated <= full.evaluated);
  }
}

TEST_CASE("extremal search respects its budget") {
  SearchOptions small;
  small.budgets.max_enumeration = 100;
  CHECK_THROWS_AS(extremal_search(4, small), BudgetExceeded);
  CHECK_NOTHROW(extremal_search(3, small));
}

TEST_CASE("conjecture tables") {
  const auto rows = conjecture_tables(4);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].m == 1);
  CHECK(rows[0].min_margin == 1);
  CHECK(rows[0].ratio == Ratio(1));
  CHECK(rows[1].ratio == Ratio(7, 13));
  for (const auto& r : rows) CHECK_FALSE(r.violation);
}
