#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace dyncore {

/// Non-negative exact rational num/den in lowest terms, den > 0.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  /// Reduces to lowest terms. Throws ParameterError on a zero denominator.
  static Rational make(std::uint64_t num, std::uint64_t den);

  /// Parses "0.75", "1", ".5" or "3/4". Throws ParameterError on anything
  /// else, including negative values and more than 18 fractional digits.
  static Rational parse(std::string_view text);

  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Exact comparison by cross multiplication.
bool operator<(const Rational& a, const Rational& b);
inline bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

/// True iff count / total >= r, compared exactly.
bool ratio_at_least(std::uint64_t count, std::uint64_t total, const Rational& r);

/// ceil(r * n) in integer arithmetic.
std::uint64_t ceil_mul(const Rational& r, std::uint64_t n);

}  // namespace dyncore
