#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "conceptdim/errors.hpp"

namespace conceptdim {

// Reduced nonnegative fraction. Comparisons against cardinality ratios are
// done in integer arithmetic so strict band bounds are decided exactly.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction() = default;

  Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den <= 0 || num < 0)
      throw InvalidInputError("Fraction requires num >= 0 and den > 0");
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  // Sign of (*this - a/b); exact. Requires b > 0.
  int cmp(std::int64_t a, std::int64_t b) const {
    __int128 lhs = static_cast<__int128>(num) * b;
    __int128 rhs = static_cast<__int128>(a) * den;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
  }

  bool operator==(const Fraction&) const = default;
};

// Sign of (x - a/b) where x is interpreted as its exact real value.
// Requires x >= 0 finite, a >= 0, b > 0.
inline int cmp_double_rational(double x, std::int64_t a, std::int64_t b) {
  if (x == 0.0) return a == 0 ? 0 : -1;
  if (a == 0) return 1;  // x > 0
  int exp = 0;
  double m = std::frexp(x, &exp);                          // x = m * 2^exp
  auto n = static_cast<std::int64_t>(std::ldexp(m, 53));   // exact 53-bit integer
  int e = exp - 53;                                        // x = n * 2^e
  // Compare n * b * 2^e against a, i.e. lhs * 2^e vs rhs.
  unsigned __int128 lhs = static_cast<unsigned __int128>(n) * static_cast<std::uint64_t>(b);
  unsigned __int128 rhs = static_cast<std::uint64_t>(a);
  if (e >= 0) {
    if (e >= 12 || (lhs << e) >> e != lhs) return 1;  // lhs * 2^e certainly exceeds a
    lhs <<= e;
  } else {
    int k = -e;
    if (k > 127) return -1;  // rhs * 2^k >= 2^128 > lhs
    unsigned __int128 hi = lhs >> k;
    unsigned __int128 rem = lhs - (hi << k);
    if (hi != rhs) return hi < rhs ? -1 : 1;
    return rem ? 1 : 0;
  }
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

}  // namespace conceptdim
