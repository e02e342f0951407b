#include "conceptdim/context.hpp"

#include <unordered_set>

#include "conceptdim/errors.hpp"

namespace conceptdim {

namespace {

void check_unique(const std::vector<std::string>& names, const char* kind) {
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second)
      throw InvalidInputError(std::string("duplicate ") + kind + " name: " + n);
  }
}

}  // namespace

bool concept_leq(const FormalConcept& c1, const FormalConcept& c2) {
  return c1.extent.is_subset_of(c2.extent);
}

FormalContext::FormalContext(std::vector<std::string> objects,
                             std::vector<std::string> attributes,
                             std::vector<DynamicBitset> rows)
    : objects_(std::move(objects)), attributes_(std::move(attributes)), rows_(std::move(rows)) {
  check_unique(objects_, "object");
  check_unique(attributes_, "attribute");
  if (rows_.size() != objects_.size())
    throw InvalidInputError("incidence row count does not match object count");
  for (const auto& r : rows_) {
    if (r.size() != attributes_.size())
      throw InvalidInputError("incidence row width does not match attribute count");
  }
  cols_.assign(attributes_.size(), DynamicBitset(objects_.size()));
  for (std::size_t g = 0; g < rows_.size(); ++g)
    rows_[g].for_each_set([&](std::size_t m) { cols_[m].set(g); });
}

FormalContext FormalContext::from_bool_rows(std::vector<std::string> objects,
                                            std::vector<std::string> attributes,
                                            const std::vector<std::vector<bool>>& rows) {
  std::vector<DynamicBitset> bits;
  bits.reserve(rows.size());
  for (const auto& r : rows) {
    DynamicBitset b(attributes.size());
    if (r.size() != attributes.size())
      throw InvalidInputError("incidence row width does not match attribute count");
    for (std::size_t m = 0; m < r.size(); ++m)
      if (r[m]) b.set(m);
    bits.push_back(std::move(b));
  }
  return FormalContext(std::move(objects), std::move(attributes), std::move(bits));
}

DynamicBitset FormalContext::extent_prime(const DynamicBitset& a) const {
  if (a.size() != objects_.size())
    throw InvalidInputError("object set size does not match context");
  DynamicBitset result = DynamicBitset::full(attributes_.size());
  a.for_each_set([&](std::size_t g) { result &= rows_[g]; });
  return result;
}

DynamicBitset FormalContext::intent_prime(const DynamicBitset& b) const {
  if (b.size() != attributes_.size())
    throw InvalidInputError("attribute set size does not match context");
  DynamicBitset result = DynamicBitset::full(objects_.size());
  b.for_each_set([&](std::size_t m) { result &= cols_[m]; });
  return result;
}

FormalConcept FormalContext::close_attribute_set(const DynamicBitset& b) const {
  DynamicBitset extent = intent_prime(b);
  DynamicBitset intent = extent_prime(extent);
  return FormalConcept{std::move(extent), std::move(intent)};
}

bool FormalContext::is_concept(const DynamicBitset& a, const DynamicBitset& b) const {
  return extent_prime(a) == b && intent_prime(b) == a;
}

DynamicBitset FormalContext::make_object_set(std::span<const std::size_t> indices) const {
  DynamicBitset b(objects_.size());
  for (std::size_t i : indices) {
    if (i >= objects_.size())
      throw InvalidInputError("object index out of range: " + std::to_string(i));
    b.set(i);
  }
  return b;
}

DynamicBitset FormalContext::make_attribute_set(std::span<const std::size_t> indices) const {
  DynamicBitset b(attributes_.size());
  for (std::size_t i : indices) {
    if (i >= attributes_.size())
      throw InvalidInputError("attribute index out of range: " + std::to_string(i));
    b.set(i);
  }
  return b;
}

}  // namespace conceptdim
