#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "catrange/category_graph.hpp"
#include "catrange/points.hpp"

// Brute-force reference implementations of every query family. These are the
// ground truth the engines are tested against, so they must stay simple
// direct scans and share no machinery with the engine code paths.

namespace catrange {

struct SumMaxInstance {
  struct Entry {
    std::int64_t pos = 0;
    int color = 0;
    std::int64_t weight = 0;
  };
  std::vector<Entry> points;
};

// Distinct colors among points with original coordinate in [q.lo, q.hi].
std::int64_t crc_oracle(const RankedPointSet& pts, const IntervalQuery& q);
std::int64_t crc_oracle_rank(const RankedPointSet& pts, int a, int b);
// Weighted variant: sums color_weights[c] over distinct colors.
std::int64_t crc_oracle_weighted(const RankedPointSet& pts, const IntervalQuery& q,
                                 std::span<const std::int64_t> color_weights);
std::int64_t crc_oracle_weighted_rank(const RankedPointSet& pts, int a, int b,
                                      std::span<const std::int64_t> color_weights);

// |union of reachable_up(color)| over in-range points; weighted mode sums
// vertex weights over the union.
std::int64_t hcc_oracle(const RankedPointSet& pts, const CategoryGraph& g,
                        const IntervalQuery& q, bool weighted = false);
std::int64_t hcc_oracle_rank(const RankedPointSet& pts, const CategoryGraph& g, int a, int b,
                             bool weighted = false);

// |{distinct colors in range} ∩ G<=(v_q)|.
std::int64_t scrc_oracle(const RankedPointSet& pts, const CategoryGraph& g,
                         const IntervalQuery& q, int v_q);
std::int64_t scrc_oracle_rank(const RankedPointSet& pts, const CategoryGraph& g, int a, int b,
                              int v_q);

// Sum over colors of the maximum in-range point weight of that color.
std::int64_t summax_oracle(const SumMaxInstance& inst, const IntervalQuery& q);

std::int64_t dominance_oracle_2d(std::span<const WeightedPoint2D> pts, std::int64_t qx,
                                 std::int64_t qy);
std::int64_t dominance_oracle_3d(std::span<const WeightedPoint3D> pts, std::int64_t qx,
                                 std::int64_t qy, std::int64_t qz);

// Distinct y-coordinates among points with l <= x <= r and y <= t.
std::int64_t distinct_y_3sided_oracle(std::span<const Point2D> pts, std::int64_t l,
                                      std::int64_t r, std::int64_t t);
// Distinct colors among points with l <= x <= r and y <= t.
std::int64_t color_3sided_oracle(std::span<const ColoredPoint2D> pts, std::int64_t l,
                                 std::int64_t r, std::int64_t t);

// Distinct colors among points coordinate-wise <= (qx, qy, qz).
std::int64_t dominance_color_oracle_3d(std::span<const ColoredPoint3D> pts, std::int64_t qx,
                                       std::int64_t qy, std::int64_t qz);

}  // namespace catrange
