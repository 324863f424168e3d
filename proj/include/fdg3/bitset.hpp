#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace fdg3 {

// Fixed-width dynamic bitset backing vertex sets and adjacency rows. All
// binary operations require equal widths.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  size_t size() const { return nbits_; }

  bool test(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(size_t i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  void clear() { words_.assign(words_.size(), 0); }

  void set_all() {
    words_.assign(words_.size(), ~uint64_t(0));
    trim();
  }

  size_t count() const {
    size_t c = 0;
    for (uint64_t w : words_) c += static_cast<size_t>(std::popcount(w));
    return c;
  }

  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool intersects(const DynBitset& o) const {
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  bool is_subset_of(const DynBitset& o) const {
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  DynBitset& operator&=(const DynBitset& o) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  DynBitset& operator|=(const DynBitset& o) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  // this \ o
  DynBitset& subtract(const DynBitset& o) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }
  friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }
  friend DynBitset minus(DynBitset a, const DynBitset& b) { return a.subtract(b); }

  friend bool operator==(const DynBitset& a, const DynBitset& b) {
    return a.nbits_ == b.nbits_ && a.words_ == b.words_;
  }
  friend bool operator!=(const DynBitset& a, const DynBitset& b) { return !(a == b); }

  // Smallest set bit or size() when empty.
  size_t find_first() const { return find_next(0); }

  // Smallest set bit >= from, or size().
  size_t find_next(size_t from) const {
    if (from >= nbits_) return nbits_;
    size_t k = from >> 6;
    uint64_t w = words_[k] & (~uint64_t(0) << (from & 63));
    while (true) {
      if (w) return (k << 6) + static_cast<size_t>(std::countr_zero(w));
      if (++k == words_.size()) return nbits_;
      w = words_[k];
    }
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (size_t k = 0; k < words_.size(); ++k) {
      uint64_t w = words_[k];
      while (w) {
        fn((k << 6) + static_cast<size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<uint32_t> to_vector() const {
    std::vector<uint32_t> out;
    out.reserve(count());
    for_each([&](size_t i) { out.push_back(static_cast<uint32_t>(i)); });
    return out;
  }

 private:
  void trim() {
    size_t tail = nbits_ & 63;
    if (tail && !words_.empty()) words_.back() &= (uint64_t(1) << tail) - 1;
  }

  size_t nbits_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace fdg3
