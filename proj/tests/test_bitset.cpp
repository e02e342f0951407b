#include <doctest.h>

#include <random>

#include "conceptdim/bitset.hpp"
#include "conceptdim/rational.hpp"

using conceptdim::cmp_double_rational;
using conceptdim::DynamicBitset;
using conceptdim::Fraction;

TEST_CASE("bitset basics across word boundaries") {
  DynamicBitset b(130);
  CHECK(b.none());
  b.set(0);
  b.set(64);
  b.set(129);
  CHECK(b.count() == 3);
  CHECK(b.test(64));
  CHECK_FALSE(b.test(63));
  b.reset(64);
  CHECK(b.count() == 2);

  DynamicBitset full = DynamicBitset::full(130);
  CHECK(full.count() == 130);
  CHECK(full.all());
  CHECK(b.is_subset_of(full));
  CHECK_FALSE(full.is_subset_of(b));
}

TEST_CASE("bitset equality is representation equality") {
  DynamicBitset a(70), b(70);
  a.set(3);
  b.set(3);
  CHECK(a == b);
  b.set(69);
  CHECK(a != b);
  b.reset(69);
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
}

TEST_CASE("any_diff_below looks only at the prefix") {
  DynamicBitset a(100), b(100);
  a.set(70);
  CHECK_FALSE(a.any_diff_below(b, 70));
  CHECK(a.any_diff_below(b, 71));
  a.set(2);
  CHECK(a.any_diff_below(b, 3));
  CHECK_FALSE(a.any_diff_below(b, 2));
  b.set(2);
  CHECK_FALSE(a.any_diff_below(b, 70));
}

TEST_CASE("lectic order: smallest differing element decides") {
  DynamicBitset a(8), b(8);
  // a = {1}, b = {0}: differ at 0 which is in b, so a < b
  a.set(1);
  b.set(0);
  CHECK(DynamicBitset::lectic_less(a, b));
  CHECK_FALSE(DynamicBitset::lectic_less(b, a));
  CHECK_FALSE(DynamicBitset::lectic_less(a, a));
  // {0,1} vs {0,2}: differ at 1 which is in the first
  DynamicBitset c(8), d(8);
  c.set(0);
  c.set(1);
  d.set(0);
  d.set(2);
  CHECK(DynamicBitset::lectic_less(d, c));
}

TEST_CASE("for_each_set yields ascending indices") {
  DynamicBitset b(200);
  std::vector<std::size_t> expect = {0, 17, 63, 64, 65, 198};
  for (auto i : expect) b.set(i);
  CHECK(b.to_indices() == expect);
}

TEST_CASE("fraction reduces and compares exactly") {
  Fraction f(2, 6);
  CHECK(f.num == 1);
  CHECK(f.den == 3);
  CHECK(f.cmp(1, 3) == 0);
  CHECK(f.cmp(334, 1000) < 0);   // 1/3 < 0.334
  CHECK(f.cmp(333, 1000) > 0);   // 1/3 > 0.333
  CHECK_THROWS_AS(Fraction(1, 0), conceptdim::InvalidInputError);
  CHECK_THROWS_AS(Fraction(-1, 2), conceptdim::InvalidInputError);
}

TEST_CASE("double vs rational comparison is exact at boundaries") {
  // double(1.0/3.0) and double(2.0/3.0) both round strictly below the reals
  CHECK(cmp_double_rational(1.0 / 3.0, 1, 3) < 0);
  CHECK(cmp_double_rational(2.0 / 3.0, 2, 3) < 0);
  // double(1.0/5.0) rounds strictly above the real 1/5
  CHECK(cmp_double_rational(1.0 / 5.0, 1, 5) > 0);
  CHECK(cmp_double_rational(0.25, 1, 4) == 0);
  CHECK(cmp_double_rational(0.0, 0, 1) == 0);
  CHECK(cmp_double_rational(1.0, 1, 1) == 0);
  CHECK(cmp_double_rational(1e-300, 1, 1000000) < 0);
  CHECK(cmp_double_rational(1.0, 999999, 1000000) > 0);
}

TEST_CASE("double vs rational agrees with long double on random cases") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<std::int64_t> num(0, 1 << 20);
  std::uniform_int_distribution<std::int64_t> den(1, 1 << 20);
  for (int i = 0; i < 20000; ++i) {
    std::int64_t a = num(rng);
    std::int64_t b = den(rng);
    if (a > b) std::swap(a, b);
    if (b == 0) b = 1;
    double x = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    long double diff = static_cast<long double>(x) - static_cast<long double>(a) / b;
    int expect = diff < 0 ? -1 : (diff > 0 ? 1 : 0);
    // long double has 64-bit mantissa: trust it except very near zero
    if (std::fabs(static_cast<double>(diff)) < 1e-18) continue;
    CHECK(cmp_double_rational(x, a, b) == expect);
  }
}

TEST_CASE("double vs rational at exactly representable ratios") {
  // Dyadic ratios are exact in double, so the comparison lands on zero.
  for (std::int64_t den : {1, 2, 4, 8, 16, 32, 64}) {
    for (std::int64_t num = 0; num <= den; ++num) {
      double v = static_cast<double>(num) / static_cast<double>(den);
      CHECK(cmp_double_rational(v, num, den) == 0);
    }
  }
  // Non-dyadic ratios round, and the comparator sees the rounded side.
  CHECK(cmp_double_rational(1.0 / 5.0, 1, 5) > 0);
  CHECK(cmp_double_rational(1.0 / 3.0, 1, 3) < 0);
}
