#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace catrange {

// Sparse-table range max over int64 values; O(n log n) build, O(1) query,
// leftmost position on ties. Positions are 1-based.
class RangeMaxIndex {
 public:
  struct Result {
    std::int64_t value = 0;
    int pos = 0;  // 1-based, leftmost argmax
  };

  RangeMaxIndex() = default;
  explicit RangeMaxIndex(std::vector<std::int64_t> values) {
    if (values.empty()) throw std::invalid_argument("range max over empty array");
    n_ = static_cast<int>(values.size());
    const int levels = std::bit_width(static_cast<unsigned>(n_));
    table_.resize(levels);
    table_[0].resize(n_);
    for (int i = 0; i < n_; ++i) table_[0][i] = {values[i], i + 1};
    for (int l = 1; l < levels; ++l) {
      const int len = 1 << l;
      table_[l].resize(n_ - len + 1);
      for (int i = 0; i + len <= n_; ++i)
        table_[l][i] = pick(table_[l - 1][i], table_[l - 1][i + len / 2]);
    }
  }

  // Max over ranks [lo, hi]; nullopt when the range is empty.
  std::optional<Result> query(int lo, int hi) const {
    lo = std::max(lo, 1);
    hi = std::min(hi, n_);
    if (lo > hi) return std::nullopt;
    const int l = std::bit_width(static_cast<unsigned>(hi - lo + 1)) - 1;
    return pick(table_[l][lo - 1], table_[l][hi - (1 << l)]);
  }

 private:
  static Result pick(const Result& a, const Result& b) {
    if (b.value > a.value) return b;
    if (a.value == b.value && b.pos < a.pos) return b;
    return a;
  }

  int n_ = 0;
  std::vector<std::vector<Result>> table_;
};

}  // namespace catrange
