#pragma once

#include <span>
#include <string>
#include <vector>

#include "conceptdim/bitset.hpp"

namespace conceptdim {

// A closed (extent, intent) pair of some FormalContext. Bitset storage is
// canonical, so equality of concepts is equality of representations.
struct FormalConcept {
  DynamicBitset extent;
  DynamicBitset intent;

  bool operator==(const FormalConcept&) const = default;
};

// Generality order: c1 <= c2 iff extent(c1) is contained in extent(c2).
bool concept_leq(const FormalConcept& c1, const FormalConcept& c2);

// Binary incidence table over named objects and attributes. Immutable after
// construction; all derived computations are pure reads, so a context can be
// shared freely across threads.
class FormalContext {
 public:
  FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                std::vector<DynamicBitset> rows);

  static FormalContext from_bool_rows(std::vector<std::string> objects,
                                      std::vector<std::string> attributes,
                                      const std::vector<std::vector<bool>>& rows);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t attribute_count() const { return attributes_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<std::string>& attributes() const { return attributes_; }

  bool incidence(std::size_t g, std::size_t m) const { return rows_[g].test(m); }
  const DynamicBitset& row(std::size_t g) const { return rows_[g]; }
  const DynamicBitset& column(std::size_t m) const { return cols_[m]; }

  // A' — attributes shared by every object in a; all of M for empty a.
  DynamicBitset extent_prime(const DynamicBitset& a) const;
  // B' — objects having every attribute in b; all of G for empty b.
  DynamicBitset intent_prime(const DynamicBitset& b) const;

  // (B', B'') — the concept generated by an attribute set.
  FormalConcept close_attribute_set(const DynamicBitset& b) const;

  bool is_concept(const DynamicBitset& a, const DynamicBitset& b) const;

  // Index-list conveniences; out-of-range indices raise InvalidInputError.
  DynamicBitset make_object_set(std::span<const std::size_t> indices) const;
  DynamicBitset make_attribute_set(std::span<const std::size_t> indices) const;

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<DynamicBitset> rows_;  // per object, over attributes
  std::vector<DynamicBitset> cols_;  // per attribute, over objects
};

}  // namespace conceptdim
