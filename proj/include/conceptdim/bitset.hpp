#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace conceptdim {

// Fixed-width dynamic bitset used for extents and intents. Bits past size()
// are kept zero, so equal sets have equal representations.
class DynamicBitset {
 public:
  DynamicBitset() = default;

  explicit DynamicBitset(std::size_t size, bool fill = false)
      : size_(size), words_((size + 63) / 64, fill ? ~std::uint64_t{0} : 0) {
    if (fill) trim();
  }

  static DynamicBitset full(std::size_t size) { return DynamicBitset(size, true); }

  std::size_t size() const { return size_; }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }
  bool all() const { return count() == size_; }

  DynamicBitset& operator&=(const DynamicBitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  DynamicBitset& operator|=(const DynamicBitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  bool is_subset_of(const DynamicBitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  // True iff (*this \ other) has a set bit at a position < limit.
  bool any_diff_below(const DynamicBitset& other, std::size_t limit) const {
    std::size_t full_words = limit >> 6;
    for (std::size_t i = 0; i < full_words; ++i)
      if (words_[i] & ~other.words_[i]) return true;
    std::size_t tail = limit & 63;
    if (tail) {
      std::uint64_t mask = (std::uint64_t{1} << tail) - 1;
      if (words_[full_words] & ~other.words_[full_words] & mask) return true;
    }
    return false;
  }

  // Lectic order: a < b iff the smallest element where they differ is in b.
  static bool lectic_less(const DynamicBitset& a, const DynamicBitset& b) {
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (diff) {
        int bit = std::countr_zero(diff);
        return (b.words_[i] >> bit) & 1u;
      }
    }
    return false;
  }

  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        fn((i << 6) + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> to_indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each_set([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ size_);
  }

  bool operator==(const DynamicBitset&) const = default;

 private:
  void trim() {
    std::size_t tail = size_ & 63;
    if (tail && !words_.empty()) words_.back() &= (std::uint64_t{1} << tail) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const DynamicBitset& b) const { return b.hash(); }
};

}  // namespace conceptdim
