#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "conceptdim/context.hpp"

namespace conceptdim {

inline constexpr std::size_t kNoConceptLimit = std::numeric_limits<std::size_t>::max();

// Default cap used by callers that enumerate without an explicit bound;
// concept lattices can be exponential in the context size.
inline constexpr std::size_t kDefaultConceptLimit = std::size_t{1} << 20;

// Streams every formal concept of a context exactly once, intents in
// ascending lectic order. NextClosure with a canonicity check; state is
// per-enumerator, the context is never mutated.
class NextClosureEnumerator {
 public:
  explicit NextClosureEnumerator(const FormalContext& context);

  std::optional<FormalConcept> next();

  // Applications of a prime operator so far (each closure costs two).
  std::uint64_t prime_ops() const { return prime_ops_; }

 private:
  const FormalContext* context_;
  DynamicBitset current_intent_;
  bool started_ = false;
  bool done_ = false;
  std::uint64_t prime_ops_ = 0;
};

// Materializes the concept set; throws ResourceLimitError when the lattice
// has more than max_concepts elements.
std::vector<FormalConcept> enumerate_concepts(const FormalContext& context,
                                              std::size_t max_concepts = kDefaultConceptLimit);

}  // namespace conceptdim
