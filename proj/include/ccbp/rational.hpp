#ifndef CCBP_RATIONAL_HPP
#define CCBP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ccbp {

// Exact arbitrary-precision fraction. cpp_rational keeps values canonical:
// lowest terms, denominator > 0, zero represented as 0/1.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rat(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {  // cpp_rational insists on a positive denominator
    num = -num;
    den = -den;
  }
  return Rational(BigInt(num), BigInt(den));
}

// Strict "p/q" (or bare integer "p") parser. No decimals, no whitespace.
inline Rational parse_rational(std::string_view s) {
  auto fail = [&] {
    throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
  };
  if (s.empty()) fail();
  std::size_t slash = s.find('/');
  std::string_view num_part = s.substr(0, slash == std::string_view::npos ? s.size() : slash);
  std::string_view den_part = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  // Sign allowed on the numerator only; cpp_int rejects a leading '+'.
  auto check_int = [&](std::string_view p, bool sign_ok) {
    if (p.empty()) fail();
    std::size_t start = sign_ok && (p[0] == '-' || p[0] == '+') ? 1 : 0;
    if (start == p.size()) fail();
    for (std::size_t i = start; i < p.size(); ++i)
      if (p[i] < '0' || p[i] > '9') fail();
    return p[0] == '+' ? p.substr(1) : p;
  };
  num_part = check_int(num_part, true);
  den_part = check_int(den_part, false);
  BigInt num{std::string(num_part)};
  BigInt den{std::string(den_part)};
  if (den == 0) fail();
  return Rational(num, den);
}

// Canonical text form: "p/q", or just "p" for integers.
inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

inline BigInt floor_rat(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

inline BigInt ceil_rat(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (numerator(r) > 0 && q * denominator(r) != numerator(r)) ++q;
  return q;
}

inline long long to_ll(const BigInt& v) { return v.convert_to<long long>(); }

// 6-significant-digit decimal rendering for CSV columns. The exact "p/q"
// string stays authoritative; this is display only.
inline std::string to_decimal(const Rational& r, int significant = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, r.convert_to<double>());
  return buf;
}

}  // namespace ccbp

#endif
