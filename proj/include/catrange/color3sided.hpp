#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "catrange/dominance.hpp"
#include "catrange/points.hpp"

namespace catrange {

// 3-sided color counting: distinct colors among points with l <= x <= r and
// y <= t.
//
// The structure replays the points by ascending y as an insertion timeline of
// the 1D previous-occurrence pairs. Each insertion births the pair
// (x, pred-of-x) and, when the inserted point splits an existing pair, kills
// and re-births the successor's pair; so at most 2n pairs exist over the
// whole timeline. Pairs become signed points (x, prev, birth/death time) in a
// 3D dominance index, and a query counts the pairs alive at the time
// corresponding to t that satisfy the usual CRC condition x in [l, r],
// prev < l.
class Color3sidedIndex {
 public:
  Color3sidedIndex() = default;
  explicit Color3sidedIndex(std::vector<ColoredPoint2D> points);

  // Distinct-y counting is the special case color := y; all pairs are then
  // static (same-y points insert consecutively), so no deaths occur.
  static Color3sidedIndex distinct_y(std::span<const Point2D> points);

  std::int64_t query(std::int64_t l, std::int64_t r, std::int64_t t) const;

  std::size_t pair_count() const { return pair_count_; }
  std::size_t size() const { return sorted_ys_.size(); }

 private:
  static constexpr std::int64_t kNoPrev = std::numeric_limits<std::int64_t>::min() / 4;

  std::vector<std::int64_t> sorted_ys_;  // per point, ascending; maps t -> time k
  Dominance3Index dom_;
  std::size_t pair_count_ = 0;
};

}  // namespace catrange
