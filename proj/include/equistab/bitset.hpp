#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace equistab {

/// Fixed-universe bitset over element indices {0..n-1}.
/// Ordering is lexicographic by membership from index 0 upward, with the set
/// containing the first differing index sorting first; this is the canonical
/// subgroup order used everywhere downstream.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe)
      : n_(universe), words_((universe + 63) / 64, 0) {}

  int universe() const { return n_; }

  void set(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool contains(const ElementSet& other) const {
    for (size_t k = 0; k < words_.size(); ++k)
      if ((other.words_[k] & ~words_[k]) != 0) return false;
    return true;
  }

  ElementSet operator&(const ElementSet& o) const {
    ElementSet r(n_);
    for (size_t k = 0; k < words_.size(); ++k)
      r.words_[k] = words_[k] & o.words_[k];
    return r;
  }

  ElementSet operator|(const ElementSet& o) const {
    ElementSet r(n_);
    for (size_t k = 0; k < words_.size(); ++k)
      r.words_[k] = words_[k] | o.words_[k];
    return r;
  }

  bool operator==(const ElementSet& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }

  bool operator<(const ElementSet& o) const {
    for (size_t k = 0; k < words_.size(); ++k) {
      uint64_t diff = words_[k] ^ o.words_[k];
      if (diff != 0) {
        int bit = std::countr_zero(diff);
        // the set containing the first differing index sorts first
        return (words_[k] >> bit) & 1;
      }
    }
    return false;
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(count());
    for (int i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace equistab
