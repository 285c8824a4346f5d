#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace catrange {

// Fixed-width packed bit vector used for reachability rows and union sweeps.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  int size() const { return nbits_; }

  void set(int i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  bool test(int i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  BitRow& operator|=(const BitRow& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }

  friend bool operator==(const BitRow& a, const BitRow& b) {
    return a.nbits_ == b.nbits_ && a.words_ == b.words_;
  }

  std::int64_t popcount() const {
    std::int64_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  // Calls fn(i) for every set bit, ascending.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        int b = std::countr_zero(w);
        fn(static_cast<int>(k * 64 + b));
        w &= w - 1;
      }
    }
  }

  // OR `other` into this row, calling fn(i) for every bit newly set.
  template <class Fn>
  void merge_new(const BitRow& other, Fn&& fn) {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t fresh = other.words_[k] & ~words_[k];
      words_[k] |= fresh;
      while (fresh) {
        int b = std::countr_zero(fresh);
        fn(static_cast<int>(k * 64 + b));
        fresh &= fresh - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  int nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace catrange
