#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "catrange/dominance.hpp"
#include "catrange/points.hpp"

namespace catrange {

// 1D colored range counting via the previous-occurrence transformation: each
// point carries the position of the previous point of the same color (0 when
// none), and a color is counted in [lo, hi] exactly when its first in-range
// occurrence has prev < lo. Queries then become two 2D dominance sums.
//
// Positions must be >= 1 but need not be dense; several colors may share a
// position (the compressed flat sets of the DAG structure do this).
class Crc1dIndex {
 public:
  Crc1dIndex() = default;

  // General builder; when color_weights is non-null a color counts with
  // weight color_weights[c] (colors must index into it).
  explicit Crc1dIndex(std::vector<std::pair<std::int64_t, int>> pos_color,
                      const std::vector<std::int64_t>* color_weights = nullptr);
  explicit Crc1dIndex(const RankedPointSet& pts,
                      const std::vector<std::int64_t>* color_weights = nullptr);

  // Count (or weight-sum) of distinct colors with position in [lo, hi];
  // lo > hi is normalized to 0.
  std::int64_t query(std::int64_t lo, std::int64_t hi) const;

  std::size_t size() const { return prev_.size(); }
  // Per point in position order: previous same-color position (0 if none).
  const std::vector<std::int64_t>& prev_positions() const { return prev_; }

 private:
  std::vector<std::int64_t> prev_;
  Dominance2Index dom_;
};

}  // namespace catrange
