#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace catrange {

// Weight magnitude bound: sums of up to 2^20 such weights stay inside a
// 63-bit accumulator.
inline constexpr std::int64_t kMaxAbsWeight = std::int64_t(1) << 40;

struct WeightedPoint2D {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t w = 0;
};

struct WeightedPoint3D {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;
  std::int64_t w = 0;
};

struct Point2D {
  std::int64_t x = 0;
  std::int64_t y = 0;
};

struct ColoredPoint2D {
  std::int64_t x = 0;
  std::int64_t y = 0;
  int color = 0;
};

struct ColoredPoint3D {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;
  int color = 0;
};

// Closed query interval in original (pre-rank) coordinates.
struct IntervalQuery {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  IntervalQuery(std::int64_t lo_, std::int64_t hi_) : lo(lo_), hi(hi_) {
    if (lo > hi) throw std::invalid_argument("interval lo > hi");
  }
};

struct RankReduction {
  std::vector<int> ranks;                // per input index, 1-based rank
  std::vector<std::int64_t> sorted_coords;  // coordinate at rank r is sorted_coords[r-1]
};

// Bijection onto ranks 1..n; duplicate coordinates get distinct ranks in
// stable input order.
RankReduction rank_space_reduce(std::span<const std::int64_t> coords);

// 1D colored points in rank space. Point with rank r (1-based) has color
// colors[r-1] and pre-reduction coordinate coords[r-1].
class RankedPointSet {
 public:
  RankedPointSet() = default;
  RankedPointSet(std::vector<std::int64_t> sorted_coords, std::vector<int> colors);

  int n() const { return static_cast<int>(colors_.size()); }
  bool empty() const { return colors_.empty(); }

  int color_at_rank(int r) const { return colors_[r - 1]; }
  std::int64_t coord_at_rank(int r) const { return coords_[r - 1]; }
  const std::vector<int>& colors() const { return colors_; }
  const std::vector<std::int64_t>& coords() const { return coords_; }

  // Smallest rank whose coordinate is >= lo (n+1 when none).
  int successor_rank(std::int64_t lo) const;
  // Largest rank whose coordinate is <= hi (0 when none).
  int predecessor_rank(std::int64_t hi) const;

  // Closed rank interval covering q; may come back empty (first > second).
  std::pair<int, int> rank_interval(const IntervalQuery& q) const {
    return {successor_rank(q.lo), predecessor_rank(q.hi)};
  }

 private:
  std::vector<std::int64_t> coords_;  // non-decreasing
  std::vector<int> colors_;
};

// Builds a RankedPointSet from (coordinate, color) pairs. An empty input
// yields an empty set.
RankedPointSet make_ranked_point_set(std::span<const std::pair<std::int64_t, int>> points);

// Largest index with sorted[i] <= q, if any. `sorted` must be strictly
// increasing.
std::optional<std::size_t> predecessor(std::span<const std::int64_t> sorted, std::int64_t q);

// Rank interval (1-based, possibly empty) covering q in a non-decreasing
// coordinate array ordered by rank.
std::pair<int, int> rank_interval_of(std::span<const std::int64_t> sorted_coords,
                                     const IntervalQuery& q);

}  // namespace catrange
