#include "conceptdim/pattern_structure.hpp"

#include "conceptdim/errors.hpp"

namespace conceptdim {

namespace {

void check_unique(const std::vector<std::string>& names, const char* kind) {
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw InvalidInputError(std::string("duplicate ") + kind + " name: " + names[i]);
}

}  // namespace

IntervalPatternStructure::IntervalPatternStructure(std::vector<std::string> objects,
                                                   std::vector<std::string> attribute_names,
                                                   std::vector<IntervalTuple> delta)
    : objects_(std::move(objects)),
      attribute_names_(std::move(attribute_names)),
      delta_(std::move(delta)) {
  check_unique(objects_, "object");
  check_unique(attribute_names_, "attribute");
  if (delta_.size() != objects_.size())
    throw InvalidInputError("description count does not match object count");
  for (const auto& d : delta_)
    if (d.size() != attribute_names_.size())
      throw InvalidInputError("description length does not match attribute count");
}

IntervalTuple IntervalPatternStructure::extent_diamond(const DynamicBitset& extent) const {
  if (extent.size() != objects_.size())
    throw InvalidInputError("object set size does not match structure");
  if (extent.none())
    throw InvalidInputError("extent diamond of the empty set is undefined");
  IntervalTuple acc;
  bool first = true;
  extent.for_each_set([&](std::size_t g) {
    if (first) {
      acc = delta_[g];
      first = false;
    } else {
      acc = interval_meet(acc, delta_[g]);
    }
  });
  return acc;
}

DynamicBitset IntervalPatternStructure::description_diamond(const IntervalTuple& d) const {
  if (d.size() != attribute_names_.size())
    throw InvalidInputError("description length does not match structure");
  DynamicBitset out(objects_.size());
  for (std::size_t g = 0; g < objects_.size(); ++g)
    if (subsumes(d, delta_[g])) out.set(g);
  return out;
}

PatternConcept IntervalPatternStructure::pattern_close(const DynamicBitset& extent) const {
  IntervalTuple description = extent_diamond(extent);
  DynamicBitset closed = description_diamond(description);
  return PatternConcept{std::move(closed), std::move(description)};
}

DynamicBitset IntervalPatternStructure::make_object_set(
    std::span<const std::size_t> indices) const {
  DynamicBitset b(objects_.size());
  for (std::size_t i : indices) {
    if (i >= objects_.size())
      throw InvalidInputError("object index out of range: " + std::to_string(i));
    b.set(i);
  }
  return b;
}

PatternConceptEnumerator::PatternConceptEnumerator(const IntervalPatternStructure& ps)
    : ps_(&ps) {
  push_children(DynamicBitset(ps.object_count()), 0);
}

void PatternConceptEnumerator::push_children(const DynamicBitset& extent, std::size_t from) {
  const std::size_t n = ps_->object_count();
  // Pushed in descending generator order so pops come out ascending.
  for (std::size_t j = n; j-- > from;) {
    if (extent.test(j)) continue;
    DynamicBitset seed = extent;
    seed.set(j);
    IntervalTuple d = ps_->extent_diamond(seed);
    DynamicBitset closed = ps_->description_diamond(d);
    diamond_ops_ += 2;
    if (!closed.any_diff_below(extent, j))
      stack_.push_back(Node{std::move(closed), std::move(d), j});
  }
}

std::optional<PatternConcept> PatternConceptEnumerator::next() {
  if (stack_.empty()) return std::nullopt;
  Node node = std::move(stack_.back());
  stack_.pop_back();
  push_children(node.extent, node.generator + 1);
  return PatternConcept{std::move(node.extent), std::move(node.description)};
}

std::vector<PatternConcept> enumerate_pattern_concepts(const IntervalPatternStructure& ps,
                                                       std::size_t max_concepts) {
  std::vector<PatternConcept> out;
  PatternConceptEnumerator en(ps);
  while (auto c = en.next()) {
    if (out.size() == max_concepts)
      throw ResourceLimitError("pattern concept enumeration exceeded the configured bound of " +
                               std::to_string(max_concepts));
    out.push_back(std::move(*c));
  }
  return out;
}

}  // namespace conceptdim
