#include <doctest.h>

#include <random>
#include <set>

#include "conceptdim/concept_enum.hpp"
#include "conceptdim/errors.hpp"
#include "support/oracles.hpp"

using conceptdim::DynamicBitset;
using conceptdim::enumerate_concepts;
using conceptdim::FormalConcept;
using conceptdim::FormalContext;
using conceptdim::NextClosureEnumerator;

namespace {

std::vector<bool> to_bools(const DynamicBitset& b) {
  std::vector<bool> out(b.size(), false);
  b.for_each_set([&](std::size_t i) { out[i] = true; });
  return out;
}

}  // namespace

TEST_CASE("contranominal scale has the full boolean lattice") {
  FormalContext k = testsupport::contranominal(3).to_context();
  auto concepts = enumerate_concepts(k);
  CHECK(concepts.size() == 8);
  std::set<std::vector<bool>> extents;
  for (const auto& c : concepts) extents.insert(to_bools(c.extent));
  CHECK(extents.size() == 8);  // every subset of G appears as an extent
}

TEST_CASE("full incidence yields a single concept") {
  FormalContext k = testsupport::raw_from_rows({"XX", "XX", "XX"}).to_context();
  auto concepts = enumerate_concepts(k);
  REQUIRE(concepts.size() == 1);
  CHECK(concepts[0].extent == DynamicBitset::full(3));
  CHECK(concepts[0].intent == DynamicBitset::full(2));
}

TEST_CASE("empty incidence yields exactly the two trivial concepts") {
  FormalContext k = testsupport::raw_from_rows({"..", "..", ".."}).to_context();
  auto concepts = enumerate_concepts(k);
  REQUIRE(concepts.size() == 2);
  CHECK(concepts[0].extent == DynamicBitset::full(3));
  CHECK(concepts[0].intent == DynamicBitset(2));
  CHECK(concepts[1].extent == DynamicBitset(3));
  CHECK(concepts[1].intent == DynamicBitset::full(2));
}

TEST_CASE("degenerate contexts") {
  FormalContext no_attrs({"g1", "g2"}, {}, {DynamicBitset(0), DynamicBitset(0)});
  auto concepts = enumerate_concepts(no_attrs);
  REQUIRE(concepts.size() == 1);
  CHECK(concepts[0].extent == DynamicBitset::full(2));

  FormalContext no_objects({}, {"m1", "m2"}, {});
  concepts = enumerate_concepts(no_objects);
  REQUIRE(concepts.size() == 1);
  CHECK(concepts[0].intent == DynamicBitset::full(2));
}

TEST_CASE("intents come out in strictly increasing lectic order") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    FormalContext k = testsupport::random_context(rng, 10, 10).to_context();
    NextClosureEnumerator en(k);
    std::optional<FormalConcept> prev;
    while (auto c = en.next()) {
      if (prev) CHECK(DynamicBitset::lectic_less(prev->intent, c->intent));
      prev = std::move(c);
    }
  }
}

TEST_CASE("enumeration matches the exhaustive closure oracle") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    testsupport::RawContext raw = testsupport::random_context(rng, 10, 10);
    FormalContext k = raw.to_context();
    testsupport::RawConceptSet expected = testsupport::brute_force_concepts(raw);
    testsupport::RawConceptSet actual;
    for (const auto& c : enumerate_concepts(k)) {
      bool inserted = actual.insert({to_bools(c.extent), to_bools(c.intent)}).second;
      CHECK(inserted);  // no duplicates
    }
    CHECK(actual == expected);
  }
}

TEST_CASE("enumeration bound is an explicit resource error") {
  FormalContext k = testsupport::contranominal(5).to_context();  // 32 concepts
  CHECK_THROWS_AS(enumerate_concepts(k, 10), conceptdim::ResourceLimitError);
  CHECK(enumerate_concepts(k, 32).size() == 32);
}
