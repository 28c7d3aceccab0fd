#include "patineq/exactmath.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace patineq {

Natural::Natural(Integer v) : value_(std::move(v)) {
  if (value_.sign() < 0) {
    throw std::domain_error("Natural: negative value " + value_.str());
  }
}

Natural& Natural::operator-=(const Natural& rhs) {
  if (value_ < rhs.value_) {
    throw std::domain_error("Natural: subtraction " + value_.str() + " - " +
                            rhs.value_.str() + " underflows");
  }
  value_ -= rhs.value_;
  return *this;
}

Natural Natural::exact_div(const Natural& d) const {
  if (d.is_zero()) throw std::domain_error("Natural: division by zero");
  Integer q;
  Integer r;
  boost::multiprecision::divide_qr(value_, d.value_, q, r);
  if (!r.is_zero()) {
    throw std::domain_error("Natural: " + d.str() + " does not divide " + str());
  }
  return Natural(std::move(q));
}

Integer signed_diff(const Natural& a, const Natural& b) {
  return a.value() - b.value();
}

Ratio ratio_of(const Natural& num, const Natural& den) {
  if (den.is_zero()) throw std::domain_error("ratio_of: zero denominator");
  return Ratio(num.value(), den.value());
}

std::string to_string(const Ratio& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal(const Ratio& r, int digits) {
  Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  const bool negative = num.sign() < 0;
  if (negative) num = -num;
  Integer scale = 1;
  for (int d = 0; d < digits; ++d) scale *= 10;
  const Integer scaled = num * scale / den;
  const Integer whole = scaled / scale;
  const Integer remainder = scaled % scale;
  std::string frac = remainder.str();
  std::ostringstream os;
  if (negative && !scaled.is_zero()) os << '-';
  os << whole;
  if (digits > 0) {
    os << '.' << std::string(static_cast<std::size_t>(digits) - frac.size(), '0') << frac;
  }
  return os.str();
}

int sign_of(const Ratio& r) { return boost::multiprecision::numerator(r).sign(); }

Natural binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return Natural{};
  if (k > n - k) k = n - k;
  Integer acc = 1;
  for (std::int64_t t = 1; t <= k; ++t) {
    acc *= (n - k + t);
    acc /= t;  // exact: acc is C(n-k+t, t) after this step
  }
  return Natural(std::move(acc));
}

Natural multinomial(std::span<const std::int64_t> parts) {
  Natural acc = 1;
  std::int64_t total = 0;
  for (std::int64_t p : parts) {
    if (p < 0) return Natural{};
    total += p;
    acc *= binomial(total, p);
  }
  return acc;
}

Natural factorial(std::int64_t a) {
  if (a < 0) throw std::invalid_argument("factorial: negative argument");
  Integer acc = 1;
  for (std::int64_t t = 2; t <= a; ++t) acc *= t;
  return Natural(std::move(acc));
}

Natural superfactorial(std::int64_t a) {
  if (a < 0) throw std::invalid_argument("superfactorial: negative argument");
  Integer acc = 1;
  Integer fact = 1;
  for (std::int64_t t = 1; t <= a; ++t) {
    fact *= t;
    acc *= fact;
  }
  return Natural(std::move(acc));
}

Natural stirling2(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return Natural{};
  // row[j] = S(t, j), built up one t at a time.
  std::vector<Natural> row(static_cast<std::size_t>(k) + 1);
  row[0] = 1;
  for (std::int64_t t = 1; t <= n; ++t) {
    for (std::int64_t j = std::min(t, k); j >= 1; --j) {
      const auto uj = static_cast<std::size_t>(j);
      row[uj] = Natural(static_cast<std::uint64_t>(j)) * row[uj] + row[uj - 1];
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

namespace {

void check_bracket_range(std::int64_t i, std::int64_t j, std::int64_t m,
                         const char* who) {
  if (m < 0 || i < 0 || j < 0 || i > m || j > m) {
    std::ostringstream os;
    os << who << ": indices (" << i << "," << j << ") outside [0," << m << "]";
    throw std::out_of_range(os.str());
  }
}

}  // namespace

Natural bracket(std::int64_t i, std::int64_t j, std::int64_t m) {
  check_bracket_range(i, j, m, "bracket");
  return binomial(i + j, i) * binomial(2 * m - i - j, m - i);
}

Ratio brace(std::int64_t i, std::int64_t j, std::int64_t m) {
  check_bracket_range(i, j, m, "brace");
  return ratio_of(binomial(m, i) * binomial(m, j), binomial(2 * m, i + j));
}

BracketTable::BracketTable(int m) : m_(m) {
  if (m < 0) throw std::invalid_argument("BracketTable: negative m");
  values_.reserve(static_cast<std::size_t>(m + 1) * static_cast<std::size_t>(m + 1));
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= m; ++j) values_.push_back(bracket(i, j, m));
  }
}

std::shared_ptr<const BracketTable> bracket_table(int m) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const BracketTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[m];
  if (!slot) slot = std::make_shared<const BracketTable>(m);
  return slot;
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

DeterminantCheck bracket_determinant(int m) {
  const auto table = bracket_table(m);
  std::vector<std::vector<Integer>> grid(static_cast<std::size_t>(m + 1));
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= m; ++j) grid[static_cast<std::size_t>(i)].push_back(table->at(i, j).value());
  }
  DeterminantCheck check;
  check.m = m;
  check.eliminated = bareiss_determinant(std::move(grid));
  Integer top = 1;
  const Integer f = factorial(2 * m + 1).value();
  for (int t = 0; t <= m; ++t) top *= f;
  check.closed_form = Ratio(top, superfactorial(2 * m + 1).value());
  return check;
}

}  // namespace patineq
