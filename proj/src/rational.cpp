#include "dyncore/rational.hpp"

#include <charconv>
#include <numeric>

#include "dyncore/errors.hpp"

namespace dyncore {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t parse_digits(std::string_view digits, std::string_view whole) {
  std::uint64_t value = 0;
  if (digits.empty()) return 0;
  const auto* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParameterError("invalid number '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational Rational::make(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw ParameterError("zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw ParameterError("empty number");
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto p = text.substr(0, slash);
    const auto q = text.substr(slash + 1);
    if (p.empty() || q.empty()) {
      throw ParameterError("invalid number '" + std::string(text) + "'");
    }
    return make(parse_digits(p, text), parse_digits(q, text));
  }
  const auto dot = text.find('.');
  const auto int_part = text.substr(0, dot);
  const auto frac_part =
      dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) {
    throw ParameterError("invalid number '" + std::string(text) + "'");
  }
  if (frac_part.size() > 18 || int_part.size() > 18) {
    throw ParameterError("too many digits in '" + std::string(text) + "'");
  }
  std::uint64_t den = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
  const std::uint64_t whole = parse_digits(int_part, text);
  const std::uint64_t frac = parse_digits(frac_part, text);
  const u128 num = static_cast<u128>(whole) * den + frac;
  if (num > UINT64_MAX) {
    throw ParameterError("number '" + std::string(text) + "' out of range");
  }
  return make(static_cast<std::uint64_t>(num), den);
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<u128>(a.num) * b.den < static_cast<u128>(b.num) * a.den;
}

bool ratio_at_least(std::uint64_t count, std::uint64_t total,
                    const Rational& r) {
  return static_cast<u128>(count) * r.den >= static_cast<u128>(r.num) * total;
}

std::uint64_t ceil_mul(const Rational& r, std::uint64_t n) {
  const u128 prod = static_cast<u128>(r.num) * n;
  return static_cast<std::uint64_t>((prod + r.den - 1) / r.den);
}

}  // namespace dyncore
