#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "catrange/category_graph.hpp"
#include "catrange/dominance.hpp"
#include "catrange/heavy_path.hpp"
#include "catrange/oracles.hpp"
#include "catrange/points.hpp"
#include "catrange/rangemax.hpp"

namespace catrange {

// Closed stabbing rectangle in rank space with a nonnegative weight.
struct StabbingRectangle {
  std::int64_t x1 = 0, x2 = 0;
  std::int64_t y1 = 0, y2 = 0;
  std::int64_t w = 0;
};

// Level-i sum-max instance: each point whose color's root path reaches level
// i is emitted with color := the intersected path's id and weight := that
// path's prefix weight at the intersection vertex.
SumMaxInstance build_summax_instance(const RankedPointSet& pts, const CategoryGraph& g,
                                     const HeavyPathDecomposition& d, int level);

// One rectangle per point: nearest same-color strictly stronger neighbors
// under the (weight, position) order bound the region of queries for which
// the point is its color's maximum. Sentinels 0 / universe_hi+1 encode
// missing neighbors; universe_hi defaults to the largest position present.
std::vector<StabbingRectangle> summax_to_rectangles(const SumMaxInstance& inst,
                                                    std::int64_t universe_hi = -1);

// Four-corner trick: a dominance query at (a, b) sums w exactly when
// x1 <= a <= x2 and y1 <= b <= y2.
std::vector<WeightedPoint2D> rectangles_to_points(std::span<const StabbingRectangle> rects);

// HCC on a tree: per-level sum-max instances turned into stabbing rectangles
// and then signed points, all combined into a single 2D dominance index.
class HccTreeIndex {
 public:
  HccTreeIndex() = default;
  // weighted: count with vertex weights instead of 1 per vertex.
  HccTreeIndex(const RankedPointSet& pts, const CategoryGraph& g, bool weighted = false);

  std::int64_t query(const IntervalQuery& q) const;
  std::int64_t query_rank(int a, int b) const;

  std::size_t stored_points() const { return dom_.size(); }
  const HeavyPathDecomposition& hpd() const { return *hpd_; }
  int n() const { return pts_n_; }

 private:
  int pts_n_ = 0;
  std::vector<std::int64_t> coords_;  // for query translation
  std::shared_ptr<const HeavyPathDecomposition> hpd_;
  Dominance2Index dom_;
};

// HCC specialization for path graphs: the answer over an interval is the
// maximum root prefix weight among the colors present, so a range-max index
// over per-point values suffices.
class HccPathIndex {
 public:
  HccPathIndex() = default;
  HccPathIndex(const RankedPointSet& pts, const CategoryGraph& g, bool weighted = false);

  std::int64_t query(const IntervalQuery& q) const;
  std::int64_t query_rank(int a, int b) const;
  std::size_t stored_points() const { return values_n_; }

 private:
  int values_n_ = 0;
  std::vector<std::int64_t> coords_;
  RangeMaxIndex rmq_;
};

}  // namespace catrange
