#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>

namespace conceptdim::corpus {

// Multiset of contiguous n-token windows, joined with '_'. Windows that
// contain the sentence separator token are dropped; total counts the
// surviving windows.
struct NgramCounts {
  std::map<std::string, std::uint32_t> counts;
  std::size_t total = 0;
};

NgramCounts extract_ngrams(std::span<const std::string> tokens, std::size_t n);

}  // namespace conceptdim::corpus
