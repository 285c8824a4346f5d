#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "catrange/category_graph.hpp"
#include "catrange/points.hpp"

namespace catrange::testutil {

// Fixture T1: vertices r=0, u=1, v=2, c=3; edges c->u, u->r, v->r;
// points (1, c), (2, v).
inline constexpr int kR = 0, kU = 1, kV = 2, kC = 3;

inline CategoryGraph fix_t1_graph() {
  return CategoryGraph(4, {{kC, kU}, {kU, kR}, {kV, kR}}, GraphKind::tree);
}

inline RankedPointSet fix_t1_points() {
  std::vector<std::pair<std::int64_t, int>> pts{{1, kC}, {2, kV}};
  return make_ranked_point_set(pts);
}

// Fixture P1: path b=0 -> m=1 -> t=2; points (1, b), (2, t), (3, m).
inline constexpr int kB = 0, kM = 1, kT = 2;

inline CategoryGraph fix_p1_graph() {
  return CategoryGraph(3, {{kB, kM}, {kM, kT}}, GraphKind::path);
}

inline RankedPointSet fix_p1_points() {
  std::vector<std::pair<std::int64_t, int>> pts{{1, kB}, {2, kT}, {3, kM}};
  return make_ranked_point_set(pts);
}

// Fixture SM: (1, A, 5), (2, A, 2), (3, B, 7) with colors A=0, B=1.
inline constexpr int kA_color = 0, kB_color = 1;

// Random colored 1D instance over a graph; coordinates in [0, 4n] so
// duplicates occur.
inline RankedPointSet random_points(int n, int vertex_count, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> coord(0, 4 * std::max(n, 1));
  std::uniform_int_distribution<int> color(0, vertex_count - 1);
  std::vector<std::pair<std::int64_t, int>> pts(n);
  for (auto& [x, c] : pts) {
    x = coord(rng);
    c = color(rng);
  }
  return make_ranked_point_set(pts);
}

inline std::vector<WeightedPoint2D> random_weighted_2d(int n, std::int64_t wmax,
                                                       std::mt19937_64& rng,
                                                       bool signed_weights = true) {
  std::uniform_int_distribution<std::int64_t> coord(-2 * n, 2 * n);
  std::uniform_int_distribution<std::int64_t> weight(signed_weights ? -wmax : 0, wmax);
  std::vector<WeightedPoint2D> pts(n);
  for (auto& p : pts) p = {coord(rng), coord(rng), weight(rng)};
  return pts;
}

}  // namespace catrange::testutil
