#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "catrange/category_graph.hpp"
#include "catrange/color3sided.hpp"
#include "catrange/dominance.hpp"
#include "catrange/hcc_tree.hpp"
#include "catrange/oracles.hpp"
#include "catrange/points.hpp"
#include "catrange/rangemax.hpp"

namespace catrange {

// Weight layering: weights are cut into ceil(1/eps) digit layers of `shift`
// bits each (X = 2^shift), so that sum_k(layer_k << k*shift) == w. The shift
// is eps times the weight-domain bit width, where the domain covers both
// n^O(1) and the instance's actual maximum weight.
struct WeightSplit {
  double eps = 0;
  int shift = 0;
  std::int64_t x = 0;  // 2^shift
  int layer_count = 0;
  // layers[k][i]: digit k of point i's weight.
  std::vector<std::vector<std::int64_t>> layers;

  std::int64_t reconstruct(std::size_t point_idx) const;
};

WeightSplit split_weights(std::span<const WeightedPoint2D> points, double eps);

// Leaf backend of the grid recursion.
class DominanceEngine {
 public:
  virtual ~DominanceEngine() = default;
  virtual std::int64_t query(std::int64_t qx, std::int64_t qy) const = 0;
};

using LeafFactory =
    std::function<std::unique_ptr<DominanceEngine>(std::vector<WeightedPoint2D>)>;

LeafFactory dominance2_leaf_factory();

// Grid recursion over a rank-space dominance instance: each node carries a
// sqrt(m) x sqrt(m) grid with a 2D partial-sum table of cell weights plus one
// child per row and per column; recursion stops at depth s where leaves are
// built by the factory. A query reads one table cell, recurses into the
// column owning the query cell, and queries the row child with the x-bound
// pulled back to the previous column so the two parts stay disjoint.
class GridIndex {
 public:
  GridIndex() = default;
  GridIndex(std::vector<WeightedPoint2D> points, int depth,
            const LeafFactory& factory = dominance2_leaf_factory());
  GridIndex(GridIndex&&) noexcept;
  GridIndex& operator=(GridIndex&&) noexcept;
  ~GridIndex();

  std::int64_t query(std::int64_t qx, std::int64_t qy) const;

  // Recursion shape, for the node-count bound tests: (point count, child
  // count) per grid node.
  std::vector<std::pair<int, int>> children_per_node() const;

 private:
  struct Node;
  static std::unique_ptr<Node> build(std::vector<WeightedPoint2D> points, int depth,
                                     const LeafFactory& factory);
  static std::int64_t query_node(const Node* nd, std::int64_t qx, std::int64_t qy);
  std::unique_ptr<Node> root_;
};

// Dominance counting as a difference of two sum-max instances: point
// p = (x, y, w) with index i becomes 1D points -x and y; instance A colors
// both i, instance B colors them 2i+1 and 2i+2. A dominance query (qx, qy)
// maps to the interval [-qx, qy] on both and the answer is B - A: both
// copies land inside exactly when p is dominated, counting w twice in B and
// once in A, while a single copy cancels. Zero-weight points contribute
// nothing to any dominance sum and are dropped so downstream caterpillar
// instances see positive weights only.
struct SumMaxPair {
  SumMaxInstance a;
  SumMaxInstance b;
};

SumMaxPair dominance_to_summax(std::span<const WeightedPoint2D> points);

// Evaluates the pair with the sum-max oracle (reduction-level ground truth).
std::int64_t summax_pair_oracle_query(const SumMaxPair& pair, std::int64_t qx, std::int64_t qy);

// Sum-max instance realized as unweighted HCC on a generalized caterpillar:
// central path of length L = #colors, a leg of length W = max weight on
// every central vertex, and the point of color i and weight w recolored to
// the w-th vertex of leg i. A sum-max query is then the HCC answer minus the
// central-path contribution, which equals the range max of the (1-based)
// color ids present in the interval.
class CaterpillarInstance {
 public:
  CaterpillarInstance() = default;
  explicit CaterpillarInstance(const SumMaxInstance& inst);

  std::int64_t summax_query(std::int64_t lo, std::int64_t hi) const;

  bool empty() const { return !graph_; }
  const CategoryGraph& graph() const { return *graph_; }
  const RankedPointSet& hcc_points() const { return hcc_points_; }
  const HccTreeIndex& hcc_index() const { return hcc_; }
  // Caterpillar vertex for (1-based color id, weight >= 1).
  int leg_vertex(int color_id, std::int64_t w) const;
  int central_len() const { return central_len_; }
  std::int64_t leg_len() const { return leg_len_; }
  // HCC minus range-max combination on an original-coordinate interval, with
  // the HCC value supplied by the caller (lets tests drive it by the oracle).
  std::int64_t combine(std::int64_t hcc_value, std::int64_t lo, std::int64_t hi) const;

 private:
  int central_len_ = 0;
  std::int64_t leg_len_ = 0;
  std::unique_ptr<CategoryGraph> graph_;
  RankedPointSet hcc_points_;
  HccTreeIndex hcc_;
  RangeMaxIndex color_id_max_;
  std::vector<std::int64_t> coords_;
};

// Full P3 -> P1 composition: weight layers, grid recursion, and caterpillar
// leaves; every dominance answer is assembled from caterpillar HCC queries.
class P3ToP1 {
 public:
  P3ToP1(std::span<const WeightedPoint2D> points, double eps, int depth);

  std::int64_t query(std::int64_t qx, std::int64_t qy) const;
  const WeightSplit& split() const { return split_; }

 private:
  WeightSplit split_;
  std::vector<GridIndex> layer_grids_;
};

// SCRC on a path <-> 3-sided distinct-coordinate counting. Forward: point
// (x, c) maps to (x, h(c)) with h(c) = #vertices below c; query (I, c_q)
// maps to I x (-inf, h(c_q)].
std::vector<Point2D> scrc_path_to_distinct_y(const RankedPointSet& pts, const CategoryGraph& g);
std::int64_t scrc_path_query_threshold(const CategoryGraph& g, int c_q);

// Backward direction: a path vertex per distinct Y value, bottom-up.
class DistinctYToScrcPath {
 public:
  explicit DistinctYToScrcPath(std::span<const Point2D> points);

  const CategoryGraph& graph() const { return *graph_; }
  const RankedPointSet& points() const { return pts_; }
  // Vertex for the predecessor of t among the distinct Y values, if any.
  std::optional<int> query_vertex(std::int64_t t) const;
  // The mapped SCRC query evaluated with the oracle.
  std::int64_t oracle_query(std::int64_t l, std::int64_t r, std::int64_t t) const;

 private:
  std::vector<std::int64_t> distinct_ys_;
  std::unique_ptr<CategoryGraph> graph_;
  RankedPointSet pts_;
};

// 3-sided color counting -> 3D colored dominance: (x, y) -> (-x, y, x) and
// query [l, r] x (-inf, t] -> corner (-l, t, r).
std::vector<ColoredPoint3D> colored3sided_to_dom3dcolor(std::span<const ColoredPoint2D> points);
struct Dom3dCorner {
  std::int64_t x, y, z;
};
Dom3dCorner colored3sided_query_corner(std::int64_t l, std::int64_t r, std::int64_t t);

// 3D dominance counting via two distinct-Y structures: a rank-space point
// (x, y, z) contributes (-x, 2z) and (y, 2z) to structure 1 and (-x, 2z) and
// (y, 2z+1) to structure 2; the doubled z realizes the half-integer shift.
// The query (x, y, z) asks both structures for [-x, y] x (-inf, 2z+1] and
// subtracts.
class Dom3dViaDistinctY {
 public:
  explicit Dom3dViaDistinctY(std::span<const WeightedPoint3D> points);

  // Query corner in original coordinates (weights of input ignored: counts).
  std::int64_t query(std::int64_t qx, std::int64_t qy, std::int64_t qz) const;

 private:
  std::vector<std::int64_t> xs_, ys_, zs_;  // sorted originals per axis
  Color3sidedIndex s1_, s2_;
};

// Appendix reduction CRC -> two HCC-on-tree instances: T1 is a balanced
// binary tree with the (dummy-padded) colors at its leaves, T2 collapses
// sibling leaves into their parents; the CRC answer is HCC1 - HCC2.
class CrcToHcc {
 public:
  explicit CrcToHcc(const RankedPointSet& pts);

  std::int64_t query(const IntervalQuery& q) const;
  std::int64_t query_rank(int a, int b) const;

  const CategoryGraph& tree1() const { return *t1_; }
  const CategoryGraph& tree2() const { return *t2_; }
  const RankedPointSet& points1() const { return pts1_; }
  const RankedPointSet& points2() const { return pts2_; }

 private:
  std::unique_ptr<CategoryGraph> t1_, t2_;
  RankedPointSet pts1_, pts2_;
  HccTreeIndex hcc1_, hcc2_;
};

}  // namespace catrange
