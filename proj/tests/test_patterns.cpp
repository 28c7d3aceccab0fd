#include <doctest.h>

#include "patineq/exactmath.hpp"
#include "patineq/patterns.hpp"

#include <set>
#include <stdexcept>

using namespace patineq;

TEST_CASE("parsing") {
  const PermPattern p = parse_perm("132");
  CHECK(p.letters() == std::vector<int>{1, 3, 2});
  CHECK(p.theorem_form() == std::vector<int>{0, 2, 1});
  CHECK(p(2) == 3);

  const WordPattern w = parse_word("1121");
  CHECK(w.length() == 4);
  CHECK(w.alphabet_size() == 2);

  CHECK_THROWS_AS(parse_word("133"), std::invalid_argument);
  CHECK_THROWS_AS(parse_perm("122"), std::invalid_argument);
  CHECK_THROWS_AS(parse_perm("023"), std::invalid_argument);
  CHECK_THROWS_AS(parse_perm(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_perm("1a2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sequence("1,,2"), std::invalid_argument);

  CHECK(parse_sequence("10,2,3") == std::vector<int>{10, 2, 3});
  CHECK(format_sequence({10, 2, 3}) == "10,2,3");
  CHECK(format_sequence({1, 3, 2}) == "132");
  CHECK(std::holds_alternative<WordPattern>(parse_pattern("11", PatternKind::word)));
}

TEST_CASE("long patterns round trip through comma form") {
  std::vector<int> letters;
  for (int v = 12; v >= 1; --v) letters.push_back(v);
  const PermPattern p(letters);
  CHECK(parse_perm(p.str()) == p);
}

TEST_CASE("theorem form conversion") {
  CHECK(PermPattern::from_theorem_form({0, 2, 1}) == parse_perm("132"));
  CHECK(WordPattern::from_theorem_form({0, 0, 1, 0}) == parse_word("1121"));
  CHECK(PermPattern::identity(4).str() == "1234");
}

TEST_CASE("symmetries") {
  CHECK(reverse(parse_perm("132")).str() == "231");
  CHECK(complement(parse_perm("132")).str() == "312");
  CHECK(complement(parse_word("1121")).str() == "2212");
  CHECK(reverse(parse_word("1121")).str() == "1211");
  CHECK(symmetry_orbit(parse_perm("123")).size() == 2);
  CHECK(symmetry_orbit(parse_perm("132")).size() == 4);
}

TEST_CASE("symmetries are commuting involutions") {
  for (int m = 1; m <= 6; ++m) {
    for_each_perm_pattern(m, [](const PermPattern& p) {
      CHECK(reverse(reverse(p)) == p);
      CHECK(complement(complement(p)) == p);
      CHECK(reverse(complement(p)) == complement(reverse(p)));
    });
  }
  for (const auto& w : enumerate_word_patterns(5, 3)) {
    CHECK(reverse(reverse(w)) == w);
    CHECK(complement(complement(w)) == w);
    CHECK(complement(w).alphabet_size() == w.alphabet_size());
  }
}

TEST_CASE("permutation enumeration") {
  CHECK(enumerate_perm_patterns(1).size() == 1);
  CHECK(enumerate_perm_patterns(3).size() == 6);
  const auto six = enumerate_perm_patterns(6);
  CHECK(six.size() == 720);
  CHECK(std::is_sorted(six.begin(), six.end()));
  CHECK(std::set<PermPattern>(six.begin(), six.end()).size() == 720);
}

TEST_CASE("word enumeration") {
  const auto words = enumerate_word_patterns(3, 2);
  std::vector<std::string> names;
  for (const auto& w : words) names.push_back(w.str());
  CHECK(names == std::vector<std::string>{"112", "121", "122", "211", "212", "221"});
  CHECK(enumerate_word_patterns(2, 1).size() == 1);
  CHECK(enumerate_word_patterns(4, 3).size() == 36);
  for (int m = 1; m <= 6; ++m) {
    for (int l = 1; l <= m; ++l) {
      CHECK(Natural(enumerate_word_patterns(m, l).size()) == factorial(l) * stirling2(m, l));
    }
  }
  CHECK_THROWS_AS(enumerate_word_patterns(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_word_patterns(2, 0), std::invalid_argument);
}

TEST_CASE("pair classes") {
  CHECK(symmetry_classes_of_pairs(1).size() == 1);

  const auto two = symmetry_classes_of_pairs(2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].representative == make_pair_unordered(parse_perm("12"), parse_perm("12")));
  CHECK(two[1].representative == make_pair_unordered(parse_perm("12"), parse_perm("21")));

  const auto three = symmetry_classes_of_pairs(3);
  CHECK(three.size() == 8);
  std::size_t members = 0;
  for (const auto& c : three) members += c.members.size();
  CHECK(members == 21);  // 6·7/2 unordered pairs with repetition

  const char* listed[8][2] = {{"123", "123"}, {"132", "132"}, {"123", "132"}, {"132", "213"},
                              {"132", "231"}, {"132", "312"}, {"123", "312"}, {"123", "321"}};
  for (const auto& pair : listed) {
    const auto wanted = make_pair_unordered(parse_perm(pair[0]), parse_perm(pair[1]));
    int hits = 0;
    for (const auto& c : three) hits += c.contains(wanted) ? 1 : 0;
    CHECK(hits == 1);
  }
}

TEST_CASE("pair classes are closed under simultaneous symmetries") {
  for (const auto& c : symmetry_classes_of_pairs(4)) {
    for (const auto& [a, b] : c.members) {
      CHECK(c.contains(make_pair_unordered(reverse(a), reverse(b))));
      CHECK(c.contains(make_pair_unordered(complement(a), complement(b))));
      CHECK(c.representative <= make_pair_unordered(a, b));
    }
  }
}
