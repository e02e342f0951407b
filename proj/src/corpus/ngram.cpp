#include "conceptdim/corpus/ngram.hpp"

#include "conceptdim/corpus/preprocess.hpp"
#include "conceptdim/errors.hpp"

namespace conceptdim::corpus {

NgramCounts extract_ngrams(std::span<const std::string> tokens, std::size_t n) {
  if (n < 1) throw InvalidInputError("n-gram order must be at least 1");
  NgramCounts out;
  if (tokens.size() < n) return out;
  for (std::size_t start = 0; start + n <= tokens.size(); ++start) {
    bool blocked = false;
    for (std::size_t k = 0; k < n; ++k) {
      if (tokens[start + k] == kSepToken) {
        blocked = true;
        break;
      }
    }
    if (blocked) continue;
    std::string gram = tokens[start];
    for (std::size_t k = 1; k < n; ++k) {
      gram += '_';
      gram += tokens[start + k];
    }
    ++out.counts[gram];
    ++out.total;
  }
  return out;
}

}  // namespace conceptdim::corpus
