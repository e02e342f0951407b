#include <doctest.h>

#include <random>

#include "conceptdim/errors.hpp"
#include "conceptdim/intervals.hpp"

using conceptdim::Interval;
using conceptdim::interval_meet;
using conceptdim::IntervalTuple;
using conceptdim::InvalidInputError;
using conceptdim::subsumes;

namespace {

IntervalTuple random_tuple(std::mt19937& rng, std::size_t len) {
  std::uniform_int_distribution<int> v(-5, 5);
  std::uniform_int_distribution<int> w(0, 4);
  std::vector<Interval> comps;
  for (std::size_t i = 0; i < len; ++i) {
    double lo = v(rng);
    comps.push_back(Interval{lo, lo + w(rng)});
  }
  return IntervalTuple(std::move(comps));
}

}  // namespace

TEST_CASE("meet is the component-wise convex hull") {
  CHECK(interval_meet(IntervalTuple{{1, 3}}, IntervalTuple{{2, 5}}) == IntervalTuple{{1, 5}});
  IntervalTuple c{{0, 0}, {2, 2}};
  CHECK(interval_meet(c, c) == c);
  CHECK(interval_meet(IntervalTuple{{0, 0}, {2, 2}}, IntervalTuple{{1, 1}, {-1, 0}}) ==
        IntervalTuple{{0, 1}, {-1, 2}});
}

TEST_CASE("subsumption examples") {
  CHECK(subsumes(IntervalTuple{{0, 10}}, IntervalTuple{{2, 3}}));
  IntervalTuple c{{1, 4}};
  CHECK(subsumes(c, c));
  CHECK_FALSE(subsumes(IntervalTuple{{2, 3}}, IntervalTuple{{0, 10}}));
}

TEST_CASE("construction validates endpoints") {
  CHECK_THROWS_AS((IntervalTuple{{3, 1}}), InvalidInputError);
  double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS((IntervalTuple{{0, inf}}), InvalidInputError);
}

TEST_CASE("length mismatches are rejected") {
  IntervalTuple one{{0, 1}};
  IntervalTuple two{{0, 1}, {0, 1}};
  CHECK_THROWS_AS(interval_meet(one, two), InvalidInputError);
  CHECK_THROWS_AS(subsumes(one, two), InvalidInputError);
}

TEST_CASE("meet laws and subsumption order on random tuples") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t len = 1 + trial % 8;
    IntervalTuple a = random_tuple(rng, len);
    IntervalTuple b = random_tuple(rng, len);
    IntervalTuple c = random_tuple(rng, len);

    CHECK(interval_meet(a, a) == a);                                  // idempotent
    CHECK(interval_meet(a, b) == interval_meet(b, a));                // commutative
    CHECK(interval_meet(interval_meet(a, b), c) ==
          interval_meet(a, interval_meet(b, c)));                     // associative

    // c subsumes d iff c meet d == c, and iff components contain
    CHECK(subsumes(a, b) == (interval_meet(a, b) == a));
    bool contained = true;
    for (std::size_t i = 0; i < len; ++i)
      contained = contained && a[i].contains(b[i]);
    CHECK(subsumes(a, b) == contained);

    // partial order: reflexive, antisymmetric, transitive
    CHECK(subsumes(a, a));
    if (subsumes(a, b) && subsumes(b, a)) CHECK(a == b);
    IntervalTuple ab = interval_meet(a, b);
    CHECK(subsumes(ab, a));  // the meet subsumes both arguments
    CHECK(subsumes(ab, b));
    if (subsumes(a, b) && subsumes(b, c)) CHECK(subsumes(a, c));
  }
}
