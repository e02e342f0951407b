#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "conceptdim/bitset.hpp"
#include "conceptdim/concept_enum.hpp"
#include "conceptdim/intervals.hpp"

namespace conceptdim {

struct PatternConcept {
  DynamicBitset extent;
  IntervalTuple description;

  bool operator==(const PatternConcept&) const = default;
};

// Objects described by interval tuples. Immutable after construction; the
// diamond operators are pure reads.
class IntervalPatternStructure {
 public:
  IntervalPatternStructure(std::vector<std::string> objects,
                           std::vector<std::string> attribute_names,
                           std::vector<IntervalTuple> delta);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t component_count() const { return attribute_names_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attribute_names() const { return attribute_names_; }
  const IntervalTuple& delta(std::size_t g) const { return delta_[g]; }

  // Meet of the member descriptions; the empty extent has no meet here and
  // raises InvalidInputError.
  IntervalTuple extent_diamond(const DynamicBitset& extent) const;

  // Objects whose description is subsumed by d.
  DynamicBitset description_diamond(const IntervalTuple& d) const;

  // ((A diamond) diamond, A diamond).
  PatternConcept pattern_close(const DynamicBitset& extent) const;

  DynamicBitset make_object_set(std::span<const std::size_t> indices) const;

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> attribute_names_;
  std::vector<IntervalTuple> delta_;
};

// Streams every pattern concept exactly once (nonempty extents), depth-first
// close-by-one over object sets with a canonicity check; deterministic order.
class PatternConceptEnumerator {
 public:
  explicit PatternConceptEnumerator(const IntervalPatternStructure& ps);

  std::optional<PatternConcept> next();

  std::uint64_t diamond_ops() const { return diamond_ops_; }

 private:
  struct Node {
    DynamicBitset extent;
    IntervalTuple description;
    std::size_t generator;
  };

  void push_children(const DynamicBitset& extent, std::size_t from);

  const IntervalPatternStructure* ps_;
  std::vector<Node> stack_;
  std::uint64_t diamond_ops_ = 0;
};

std::vector<PatternConcept> enumerate_pattern_concepts(
    const IntervalPatternStructure& ps, std::size_t max_concepts = kDefaultConceptLimit);

}  // namespace conceptdim
