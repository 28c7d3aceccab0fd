#include "patineq/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace patineq {

namespace {

std::string describe(const std::vector<int>& letters) {
  return "'" + format_sequence(letters) + "'";
}

}  // namespace

PermPattern::PermPattern(std::vector<int> letters) : letters_(std::move(letters)) {
  const int m = length();
  if (m < 1) throw std::invalid_argument("permutation pattern must be nonempty");
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  for (int v : letters_) {
    if (v < 1 || v > m) {
      throw std::invalid_argument("permutation pattern " + describe(letters_) +
                                  " has letter " + std::to_string(v) + " outside 1.." +
                                  std::to_string(m));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("permutation pattern " + describe(letters_) +
                                  " repeats letter " + std::to_string(v));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

PermPattern PermPattern::identity(int length) {
  std::vector<int> letters(static_cast<std::size_t>(length));
  std::iota(letters.begin(), letters.end(), 1);
  return PermPattern(std::move(letters));
}

PermPattern PermPattern::from_theorem_form(const std::vector<int>& tau) {
  std::vector<int> letters(tau);
  for (int& v : letters) ++v;
  return PermPattern(std::move(letters));
}

std::vector<int> PermPattern::theorem_form() const {
  std::vector<int> tau(letters_);
  for (int& v : tau) --v;
  return tau;
}

std::string PermPattern::str() const { return format_sequence(letters_); }

WordPattern::WordPattern(std::vector<int> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("word pattern must be nonempty");
  alphabet_ = *std::max_element(letters_.begin(), letters_.end());
  std::vector<bool> seen(static_cast<std::size_t>(alphabet_) + 1, false);
  for (int v : letters_) {
    if (v < 1) {
      throw std::invalid_argument("word pattern " + describe(letters_) +
                                  " has nonpositive letter " + std::to_string(v));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (int v = 1; v <= alphabet_; ++v) {
    if (!seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("word pattern " + describe(letters_) + " is not onto 1.." +
                                  std::to_string(alphabet_) + ": letter " +
                                  std::to_string(v) + " missing");
    }
  }
}

WordPattern WordPattern::from_theorem_form(const std::vector<int>& tau) {
  std::vector<int> letters(tau);
  for (int& v : letters) ++v;
  return WordPattern(std::move(letters));
}

std::vector<int> WordPattern::theorem_form() const {
  std::vector<int> tau(letters_);
  for (int& v : tau) --v;
  return tau;
}

std::string WordPattern::str() const { return format_sequence(letters_); }

std::vector<int> parse_sequence(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty pattern text");
  std::vector<int> out;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("malformed pattern text '" + std::string(text) + "'");
      }
      out.push_back(c - '0');
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string_view field = text.substr(start, comma - start);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw std::invalid_argument("malformed pattern text '" + std::string(text) + "'");
    }
    out.push_back(value);
    start = comma + 1;
  }
  return out;
}

std::string format_sequence(const std::vector<int>& values) {
  const bool digits =
      std::all_of(values.begin(), values.end(), [](int v) { return v >= 0 && v <= 9; });
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (digits) {
      out += static_cast<char>('0' + values[i]);
    } else {
      if (i > 0) out += ',';
      out += std::to_string(values[i]);
    }
  }
  return out;
}

PermPattern parse_perm(std::string_view text) { return PermPattern(parse_sequence(text)); }
WordPattern parse_word(std::string_view text) { return WordPattern(parse_sequence(text)); }

AnyPattern parse_pattern(std::string_view text, PatternKind kind) {
  if (kind == PatternKind::perm) return parse_perm(text);
  return parse_word(text);
}

PermPattern reverse(const PermPattern& p) {
  std::vector<int> letters(p.letters().rbegin(), p.letters().rend());
  return PermPattern(std::move(letters));
}

PermPattern complement(const PermPattern& p) {
  std::vector<int> letters(p.letters());
  for (int& v : letters) v = p.length() + 1 - v;
  return PermPattern(std::move(letters));
}

WordPattern reverse(const WordPattern& p) {
  std::vector<int> letters(p.letters().rbegin(), p.letters().rend());
  return WordPattern(std::move(letters));
}

WordPattern complement(const WordPattern& p) {
  std::vector<int> letters(p.letters());
  for (int& v : letters) v = p.alphabet_size() + 1 - v;
  return WordPattern(std::move(letters));
}

namespace {

template <typename P>
std::vector<P> orbit_of(const P& p) {
  std::vector<P> out{p, reverse(p), complement(p), reverse(complement(p))};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<PermPattern> symmetry_orbit(const PermPattern& p) { return orbit_of(p); }
std::vector<WordPattern> symmetry_orbit(const WordPattern& p) { return orbit_of(p); }

void for_each_perm_pattern(int length, const std::function<void(const PermPattern&)>& visit) {
  if (length < 1) throw std::invalid_argument("pattern length must be >= 1");
  std::vector<int> letters(static_cast<std::size_t>(length));
  std::iota(letters.begin(), letters.end(), 1);
  do {
    visit(PermPattern(letters));
  } while (std::next_permutation(letters.begin(), letters.end()));
}

std::vector<PermPattern> enumerate_perm_patterns(int length) {
  std::vector<PermPattern> out;
  for_each_perm_pattern(length, [&](const PermPattern& p) { out.push_back(p); });
  return out;
}

std::vector<WordPattern> enumerate_word_patterns(int length, int alphabet) {
  if (alphabet < 1 || length < 1 || alphabet > length) {
    throw std::invalid_argument("word patterns need 1 <= L <= M (got M=" +
                                std::to_string(length) + ", L=" + std::to_string(alphabet) + ")");
  }
  std::vector<WordPattern> out;
  std::vector<int> letters(static_cast<std::size_t>(length), 1);
  std::vector<int> uses(static_cast<std::size_t>(alphabet) + 1, 0);
  // odometer over [L]^M in lexicographic order, keeping the onto words
  while (true) {
    std::fill(uses.begin(), uses.end(), 0);
    for (int v : letters) ++uses[static_cast<std::size_t>(v)];
    if (std::all_of(uses.begin() + 1, uses.end(), [](int c) { return c > 0; })) {
      out.emplace_back(letters);
    }
    int pos = length - 1;
    while (pos >= 0 && letters[static_cast<std::size_t>(pos)] == alphabet) {
      letters[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++letters[static_cast<std::size_t>(pos)];
  }
  return out;
}

PatternPair make_pair_unordered(PermPattern a, PermPattern b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

bool SymmetryClass::contains(const PatternPair& pair) const {
  const PatternPair normalized = make_pair_unordered(pair.first, pair.second);
  return std::binary_search(members.begin(), members.end(), normalized);
}

std::vector<SymmetryClass> symmetry_classes_of_pairs(int length) {
  const auto patterns = enumerate_perm_patterns(length);
  const std::vector<std::function<PermPattern(const PermPattern&)>> group{
      [](const PermPattern& p) { return p; },
      [](const PermPattern& p) { return reverse(p); },
      [](const PermPattern& p) { return complement(p); },
      [](const PermPattern& p) { return reverse(complement(p)); },
  };

  std::set<PatternPair> assigned;
  std::vector<SymmetryClass> classes;
  for (std::size_t a = 0; a < patterns.size(); ++a) {
    for (std::size_t b = a; b < patterns.size(); ++b) {
      PatternPair pair{patterns[a], patterns[b]};
      if (assigned.contains(pair)) continue;
      SymmetryClass cls{pair, {}};
      for (const auto& g : group) {
        cls.members.push_back(make_pair_unordered(g(pair.first), g(pair.second)));
      }
      std::sort(cls.members.begin(), cls.members.end());
      cls.members.erase(std::unique(cls.members.begin(), cls.members.end()), cls.members.end());
      cls.representative = cls.members.front();
      assigned.insert(cls.members.begin(), cls.members.end());
      classes.push_back(std::move(cls));
    }
  }
  std::sort(classes.begin(), classes.end(),
            [](const SymmetryClass& x, const SymmetryClass& y) {
              return x.representative < y.representative;
            });
  return classes;
}

}  // namespace patineq
