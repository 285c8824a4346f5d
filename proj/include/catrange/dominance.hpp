#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "catrange/points.hpp"

namespace catrange {

// Static signed-weight dominance counting over 2D points: query(qx, qy)
// returns the sum of weights of points with x <= qx and y <= qy.
//
// Layout: points sorted by x, with a 16-ary hierarchy over the x-sorted
// array; every node stores its points' y-ranks in sorted order plus prefix
// sums of the weights. A query resolves the x-bound to a prefix length once,
// then walks the hierarchy doing one binary search per visited node, so a
// query costs O(log^2 n) and the structure is O(n log n) words.
class Dominance2Index {
 public:
  Dominance2Index() = default;
  explicit Dominance2Index(std::vector<WeightedPoint2D> points);

  std::int64_t query(std::int64_t qx, std::int64_t qy) const;
  std::size_t size() const { return xs_.size(); }

 private:
  static constexpr int kFanout = 16;

  struct Node {
    int lo = 0, hi = 0;  // covered range of the x-sorted array
    int ypool = 0;       // offset of this node's sorted y-ranks
    int cumpool = 0;     // offset of this node's prefix sums (size+1 entries)
    std::vector<int> children;
  };

  std::int64_t node_sum(const Node& nd, int ybound) const;
  int build_node(int lo, int hi);

  std::vector<std::int64_t> xs_;         // sorted x per point
  std::vector<std::int64_t> unique_ys_;  // for y -> rank bound
  std::vector<int> yrank_by_x_;          // y-rank per x-sorted point
  std::vector<std::int64_t> weight_by_x_;
  std::vector<Node> nodes_;  // nodes_[0] is the root
  std::vector<int> ypool_;
  std::vector<std::int64_t> cumpool_;
};

// Same contract in 3D: a Fenwick tree over z-rank whose nodes each hold a
// Dominance2Index of their points.
class Dominance3Index {
 public:
  Dominance3Index() = default;
  explicit Dominance3Index(std::vector<WeightedPoint3D> points);

  std::int64_t query(std::int64_t qx, std::int64_t qy, std::int64_t qz) const;
  std::size_t size() const { return size_; }

 private:
  std::vector<std::int64_t> unique_zs_;
  std::vector<Dominance2Index> slabs_;  // 1-based Fenwick nodes
  std::size_t size_ = 0;
};

}  // namespace catrange
