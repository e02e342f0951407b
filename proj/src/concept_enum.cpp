#include "conceptdim/concept_enum.hpp"

#include "conceptdim/errors.hpp"

namespace conceptdim {

NextClosureEnumerator::NextClosureEnumerator(const FormalContext& context)
    : context_(&context), current_intent_(context.attribute_count()) {}

std::optional<FormalConcept> NextClosureEnumerator::next() {
  if (done_) return std::nullopt;
  const std::size_t m = context_->attribute_count();
  if (!started_) {
    started_ = true;
    FormalConcept first = context_->close_attribute_set(DynamicBitset(m));
    prime_ops_ += 2;
    current_intent_ = first.intent;
    return first;
  }
  // Ganter's successor: scan attributes from largest to smallest, trimming
  // the working set as we go; the first canonical closure is the next intent.
  DynamicBitset work = current_intent_;
  for (std::size_t idx = m; idx-- > 0;) {
    if (work.test(idx)) {
      work.reset(idx);
      continue;
    }
    DynamicBitset candidate = work;
    candidate.set(idx);
    DynamicBitset extent = context_->intent_prime(candidate);
    DynamicBitset closed = context_->extent_prime(extent);
    prime_ops_ += 2;
    if (!closed.any_diff_below(work, idx)) {
      current_intent_ = closed;
      return FormalConcept{std::move(extent), std::move(closed)};
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<FormalConcept> enumerate_concepts(const FormalContext& context,
                                              std::size_t max_concepts) {
  std::vector<FormalConcept> out;
  NextClosureEnumerator en(context);
  while (auto c = en.next()) {
    if (out.size() == max_concepts)
      throw ResourceLimitError("concept enumeration exceeded the configured bound of " +
                               std::to_string(max_concepts));
    out.push_back(std::move(*c));
  }
  return out;
}

}  // namespace conceptdim
