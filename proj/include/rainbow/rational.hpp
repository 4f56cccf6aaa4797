#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

using int128 = __int128;
using uint128 = unsigned __int128;

/// Exact rational with long long components, reduced, den > 0.
/// Comparisons cross-multiply in 128 bits, so they stay exact for every
/// value this project produces (numerators stay below ~1e18).
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d) : num(n), den(d) {
    require(den != 0, Errc::invalid_params, "rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  bool is_integer() const { return den == 1; }

  std::string to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  /// Decimal rendering with the given number of fractional digits
  /// (truncated toward zero). Exact integers print without a point.
  std::string to_decimal(int digits = 6) const {
    if (den == 1) return std::to_string(num);
    bool neg = num < 0;
    uint128 n = neg ? static_cast<uint128>(-(int128)num) : static_cast<uint128>(num);
    uint128 d = static_cast<uint128>(den);
    uint128 whole = n / d;
    uint128 rem = n % d;
    std::string out = neg ? "-" : "";
    std::string w;
    if (whole == 0) w = "0";
    while (whole > 0) {
      w.insert(w.begin(), static_cast<char>('0' + static_cast<int>(whole % 10)));
      whole /= 10;
    }
    out += w;
    out += '.';
    for (int i = 0; i < digits; ++i) {
      rem *= 10;
      out += static_cast<char>('0' + static_cast<int>(rem / d));
      rem %= d;
    }
    return out;
  }
};

inline int compare(const Rational& a, const Rational& b) {
  int128 lhs = static_cast<int128>(a.num) * b.den;
  int128 rhs = static_cast<int128>(b.num) * a.den;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

inline bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
inline bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
inline bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
inline bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }
inline bool operator==(const Rational& a, const Rational& b) { return compare(a, b) == 0; }
inline bool operator!=(const Rational& a, const Rational& b) { return compare(a, b) != 0; }

inline Rational operator+(const Rational& a, const Rational& b) {
  long long g = std::gcd(a.den, b.den);
  return Rational(a.num * (b.den / g) + b.num * (a.den / g), a.den / g * b.den);
}

inline Rational operator-(const Rational& a, const Rational& b) {
  long long g = std::gcd(a.den, b.den);
  return Rational(a.num * (b.den / g) - b.num * (a.den / g), a.den / g * b.den);
}

inline Rational operator*(const Rational& a, const Rational& b) {
  long long g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
  long long g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
  return Rational((a.num / g1) * (b.num / g2), (a.den / g2) * (b.den / g1));
}

/// floor(sqrt(x)) for unsigned 128-bit x, exact.
inline uint128 isqrt_u128(uint128 x) {
  if (x == 0) return 0;
  long double seed = std::sqrt(static_cast<long double>(x));
  uint128 s = static_cast<uint128>(seed);
  // long double gives ~64 mantissa bits; correct the seed exactly.
  while (s > 0 && s > x / s) --s;
  while ((s + 1) <= x / (s + 1)) ++s;
  return s;
}

}  // namespace rainbow
