#pragma once

#include <cstdint>
#include <vector>

#include "catrange/category_graph.hpp"
#include "catrange/color3sided.hpp"
#include "catrange/heavy_path.hpp"
#include "catrange/points.hpp"

namespace catrange {

// SCRC on a tree via heavy-path recursion. Every heavy path pi_j carries a
// 3-sided color counting structure over the points whose colors' root paths
// intersect pi_j at its level: a point maps to (x-rank, h(v)) where v is the
// intersection vertex and h(v) counts the pi_j vertices strictly below v.
// Colors on pi_j's structure stay the points' original colors, so the 3-sided
// count is exactly the number of distinct sub-categories of the query vertex
// present in the range.
class ScrcTreeIndex {
 public:
  ScrcTreeIndex() = default;
  ScrcTreeIndex(const RankedPointSet& pts, const CategoryGraph& g);

  std::int64_t query(const IntervalQuery& q, int v_q) const;
  std::int64_t query_rank(int a, int b, int v_q) const;

  std::size_t stored_points() const { return stored_; }
  const HeavyPathDecomposition& hpd() const { return hpd_; }
  // (x, h, color) triples of one path's structure, for inspection in tests.
  const std::vector<ColoredPoint2D>& path_points(int path_id) const {
    return path_points_[path_id];
  }

 private:
  int vertex_count_ = 0;
  std::vector<std::int64_t> coords_;
  HeavyPathDecomposition hpd_;
  std::vector<Color3sidedIndex> per_path_;
  std::vector<std::vector<ColoredPoint2D>> path_points_;
  std::size_t stored_ = 0;
};

}  // namespace catrange
