#pragma once

/// @file exactmath.hpp
/// @brief Exact integers, rationals and the combinatorial numbers built on them.
///
/// Every count in the library is an arbitrary-precision value. `Natural` is a
/// nonnegative integer whose subtraction is checked; `Integer` and `Ratio` are
/// the signed integer and the lowest-terms rational used for margins and
/// leading coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace patineq {

using Integer = boost::multiprecision::cpp_int;
using Ratio = boost::multiprecision::cpp_rational;

/// Arbitrary-precision nonnegative integer.
class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when `v` is negative.
  explicit Natural(Integer v);

  const Integer& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_.is_zero(); }

  /// Decimal rendering.
  std::string str() const { return value_.str(); }

  Natural& operator+=(const Natural& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Natural& operator*=(const Natural& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  /// Checked: throws std::domain_error if the result would be negative.
  Natural& operator-=(const Natural& rhs);

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
  friend Natural operator-(Natural a, const Natural& b) { return a -= b; }

  /// Exact quotient; throws std::domain_error unless `d` divides evenly.
  Natural exact_div(const Natural& d) const;

  friend bool operator==(const Natural&, const Natural&) = default;
  friend auto operator<=>(const Natural& a, const Natural& b) {
    return a.value_.compare(b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n) {
    return os << n.value_;
  }

 private:
  Integer value_;
};

/// Signed difference of two naturals.
Integer signed_diff(const Natural& a, const Natural& b);

/// Ratio a/b of two naturals (b nonzero).
Ratio ratio_of(const Natural& num, const Natural& den);

/// Decimal rendering "p/q", or "p" when the denominator is 1.
std::string to_string(const Ratio& r);

/// Fixed-point decimal rendering with `digits` fractional digits (truncated
/// toward zero). Display only; results are always carried as exact Ratios.
std::string to_decimal(const Ratio& r, int digits = 12);

/// Sign of a rational: -1, 0 or +1.
int sign_of(const Ratio& r);

// --- combinatorial numbers ------------------------------------------------

/// C(n,k); zero when k < 0, k > n or n < 0.
Natural binomial(std::int64_t n, std::int64_t k);

/// (sum parts)! / prod(part!); zero if any part is negative.
Natural multinomial(std::span<const std::int64_t> parts);
inline Natural multinomial(std::initializer_list<std::int64_t> parts) {
  return multinomial(std::span<const std::int64_t>(parts.begin(), parts.size()));
}

/// a! for a >= 0; throws std::invalid_argument for negative a.
Natural factorial(std::int64_t a);

/// 0!·1!·…·a!.
Natural superfactorial(std::int64_t a);

/// Stirling numbers of the second kind, S(n,k).
Natural stirling2(std::int64_t n, std::int64_t k);

/// Lattice-path bracket number [i,j]_m = C(i+j,i)·C(2m−i−j,m−i).
/// Throws std::out_of_range unless 0 <= i,j <= m.
Natural bracket(std::int64_t i, std::int64_t j, std::int64_t m);

/// {i,j}_m = C(m,i)C(m,j)/C(2m,i+j), the bracket normalized by C(2m,m).
Ratio brace(std::int64_t i, std::int64_t j, std::int64_t m);

/// Immutable (m+1)×(m+1) grid of bracket numbers.
class BracketTable {
 public:
  explicit BracketTable(int m);

  int m() const noexcept { return m_; }
  int size() const noexcept { return m_ + 1; }
  const Natural& at(int i, int j) const { return values_[index(i, j)]; }
  const Natural& operator()(int i, int j) const { return values_[index(i, j)]; }
  const std::vector<Natural>& values() const noexcept { return values_; }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(m_ + 1) +
           static_cast<std::size_t>(j);
  }

  int m_;
  std::vector<Natural> values_;
};

/// Shared, memoized table for `m`. Safe to call from several threads.
std::shared_ptr<const BracketTable> bracket_table(int m);

struct DeterminantCheck {
  int m = 0;
  Integer eliminated;  ///< fraction-free (Bareiss) elimination result
  Ratio closed_form;   ///< (2m+1)!^(m+1) / superfactorial(2m+1)
  bool agrees() const { return Ratio(eliminated) == closed_form; }
};

/// Determinant of the bracket table, by elimination and by closed form.
DeterminantCheck bracket_determinant(int m);

/// Determinant of a square integer matrix by Bareiss elimination.
Integer bareiss_determinant(std::vector<std::vector<Integer>> a);

}  // namespace patineq
