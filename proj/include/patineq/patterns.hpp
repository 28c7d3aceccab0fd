#pragma once

/// @file patterns.hpp
/// @brief Permutation and word patterns, their text form, symmetries and
/// exhaustive enumeration.
///
/// Patterns are stored 1-based ("proof form"): a permutation pattern of length
/// M uses each of 1..M once, a word pattern of length M uses every letter of
/// 1..L at least once. The 0-based view on {0..m}, m = M−1, is available as
/// `theorem_form()`.

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace patineq {

enum class PatternKind { perm, word };

class PermPattern {
 public:
  /// Throws std::invalid_argument unless `letters` is a permutation of 1..M, M >= 1.
  explicit PermPattern(std::vector<int> letters);

  static PermPattern identity(int length);
  /// Builds from a 0-based bijection on {0..m}.
  static PermPattern from_theorem_form(const std::vector<int>& tau);

  int length() const noexcept { return static_cast<int>(letters_.size()); }
  /// 1-based access, p(i) for 1 <= i <= M.
  int operator()(int i) const { return letters_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::vector<int> theorem_form() const;
  std::string str() const;

  friend auto operator<=>(const PermPattern&, const PermPattern&) = default;

 private:
  std::vector<int> letters_;
};

class WordPattern {
 public:
  /// Throws std::invalid_argument unless every letter of 1..L occurs (L = max letter).
  explicit WordPattern(std::vector<int> letters);

  /// Builds from a 0-based map of {0..m} onto {0..l}.
  static WordPattern from_theorem_form(const std::vector<int>& tau);
  static WordPattern from_perm(const PermPattern& p) { return WordPattern(p.letters()); }

  int length() const noexcept { return static_cast<int>(letters_.size()); }
  int alphabet_size() const noexcept { return alphabet_; }
  int operator()(int i) const { return letters_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::vector<int> theorem_form() const;
  std::string str() const;

  friend auto operator<=>(const WordPattern&, const WordPattern&) = default;

 private:
  std::vector<int> letters_;
  int alphabet_ = 0;
};

using AnyPattern = std::variant<PermPattern, WordPattern>;

/// Splits "132" (one digit per letter) or "10,2,3" (comma separated) into
/// integers. Throws std::invalid_argument on malformed text.
std::vector<int> parse_sequence(std::string_view text);

/// Renders digits when every value is a single digit, comma form otherwise.
std::string format_sequence(const std::vector<int>& values);

PermPattern parse_perm(std::string_view text);
WordPattern parse_word(std::string_view text);
AnyPattern parse_pattern(std::string_view text, PatternKind kind);

PermPattern reverse(const PermPattern& p);
PermPattern complement(const PermPattern& p);
WordPattern reverse(const WordPattern& p);
WordPattern complement(const WordPattern& p);

/// Distinct images of `p` under {identity, reverse, complement, both}, sorted.
std::vector<PermPattern> symmetry_orbit(const PermPattern& p);
std::vector<WordPattern> symmetry_orbit(const WordPattern& p);

/// Calls `visit` on every permutation of 1..M in lexicographic order.
void for_each_perm_pattern(int length, const std::function<void(const PermPattern&)>& visit);
std::vector<PermPattern> enumerate_perm_patterns(int length);

/// All surjective words of length M onto 1..L, lexicographic.
/// Throws std::invalid_argument if L > M or L < 1.
std::vector<WordPattern> enumerate_word_patterns(int length, int alphabet);

/// Unordered pair, stored with first <= second.
using PatternPair = std::pair<PermPattern, PermPattern>;
PatternPair make_pair_unordered(PermPattern a, PermPattern b);

struct SymmetryClass {
  PatternPair representative;        ///< lexicographically least member
  std::vector<PatternPair> members;  ///< sorted orbit under simultaneous symmetries

  bool contains(const PatternPair& pair) const;
};

/// Orbits of unordered pairs of length-M permutation patterns under applying
/// the same symmetry to both members. Sorted by representative.
std::vector<SymmetryClass> symmetry_classes_of_pairs(int length);

}  // namespace patineq
