#include "catrange/dominance.hpp"

#include <algorithm>
#include <stdexcept>

namespace catrange {

namespace {

void check_weight_bounds(std::int64_t w, std::uint64_t& abs_sum) {
  if (w >= kMaxAbsWeight || w <= -kMaxAbsWeight)
    throw std::invalid_argument("point weight magnitude exceeds 2^40");
  abs_sum += static_cast<std::uint64_t>(w < 0 ? -w : w);
  if (abs_sum >= (std::uint64_t(1) << 62))
    throw std::invalid_argument("total weight magnitude exceeds the 63-bit accumulator bound");
}

}  // namespace

Dominance2Index::Dominance2Index(std::vector<WeightedPoint2D> points) {
  std::uint64_t abs_sum = 0;
  for (const auto& p : points) check_weight_bounds(p.w, abs_sum);

  std::stable_sort(points.begin(), points.end(),
                   [](const WeightedPoint2D& a, const WeightedPoint2D& b) { return a.x < b.x; });
  const int n = static_cast<int>(points.size());
  if (n == 0) return;

  xs_.resize(n);
  unique_ys_.resize(n);
  for (int i = 0; i < n; ++i) {
    xs_[i] = points[i].x;
    unique_ys_[i] = points[i].y;
  }
  std::sort(unique_ys_.begin(), unique_ys_.end());
  unique_ys_.erase(std::unique(unique_ys_.begin(), unique_ys_.end()), unique_ys_.end());

  yrank_by_x_.resize(n);
  weight_by_x_.resize(n);
  for (int i = 0; i < n; ++i) {
    yrank_by_x_[i] =
        static_cast<int>(std::lower_bound(unique_ys_.begin(), unique_ys_.end(), points[i].y) -
                         unique_ys_.begin()) +
        1;
    weight_by_x_[i] = points[i].w;
  }
  build_node(0, n);
}

int Dominance2Index::build_node(int lo, int hi) {
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(Node{lo, hi, static_cast<int>(ypool_.size()),
                        static_cast<int>(cumpool_.size()), {}});

  std::vector<std::pair<int, std::int64_t>> ys(hi - lo);
  for (int i = lo; i < hi; ++i) ys[i - lo] = {yrank_by_x_[i], weight_by_x_[i]};
  std::sort(ys.begin(), ys.end());
  cumpool_.push_back(0);
  std::int64_t run = 0;
  for (const auto& [yr, w] : ys) {
    ypool_.push_back(yr);
    run += w;
    cumpool_.push_back(run);
  }

  if (hi - lo > kFanout) {
    const int step = (hi - lo + kFanout - 1) / kFanout;
    std::vector<int> kids;
    for (int c = lo; c < hi; c += step) kids.push_back(build_node(c, std::min(c + step, hi)));
    nodes_[id].children = std::move(kids);
  }
  return id;
}

std::int64_t Dominance2Index::node_sum(const Node& nd, int ybound) const {
  const int* first = ypool_.data() + nd.ypool;
  const int* last = first + (nd.hi - nd.lo);
  auto cnt = std::upper_bound(first, last, ybound) - first;
  return cumpool_[nd.cumpool + cnt];
}

std::int64_t Dominance2Index::query(std::int64_t qx, std::int64_t qy) const {
  if (xs_.empty()) return 0;
  const int prefix = static_cast<int>(std::upper_bound(xs_.begin(), xs_.end(), qx) - xs_.begin());
  if (prefix == 0) return 0;
  const int ybound = static_cast<int>(std::upper_bound(unique_ys_.begin(), unique_ys_.end(), qy) -
                                      unique_ys_.begin());
  if (ybound == 0) return 0;

  std::int64_t sum = 0;
  int cur = 0;
  while (cur >= 0) {
    const Node& nd = nodes_[cur];
    if (prefix >= nd.hi) {
      sum += node_sum(nd, ybound);
      break;
    }
    if (nd.children.empty()) {
      for (int i = nd.lo; i < prefix; ++i)
        if (yrank_by_x_[i] <= ybound) sum += weight_by_x_[i];
      break;
    }
    int next = -1;
    for (int child : nd.children) {
      const Node& ch = nodes_[child];
      if (prefix >= ch.hi) {
        sum += node_sum(ch, ybound);
      } else {
        if (prefix > ch.lo) next = child;
        break;
      }
    }
    cur = next;
  }
  return sum;
}

Dominance3Index::Dominance3Index(std::vector<WeightedPoint3D> points) {
  size_ = points.size();
  if (points.empty()) return;
  unique_zs_.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) unique_zs_[i] = points[i].z;
  std::sort(unique_zs_.begin(), unique_zs_.end());
  unique_zs_.erase(std::unique(unique_zs_.begin(), unique_zs_.end()), unique_zs_.end());

  const int zmax = static_cast<int>(unique_zs_.size());
  std::vector<std::vector<WeightedPoint2D>> buckets(zmax + 1);
  for (const auto& p : points) {
    int zr = static_cast<int>(std::lower_bound(unique_zs_.begin(), unique_zs_.end(), p.z) -
                              unique_zs_.begin()) +
             1;
    for (int k = zr; k <= zmax; k += k & -k)
      buckets[k].push_back(WeightedPoint2D{p.x, p.y, p.w});
  }
  slabs_.resize(zmax + 1);
  for (int k = 1; k <= zmax; ++k) slabs_[k] = Dominance2Index(std::move(buckets[k]));
}

std::int64_t Dominance3Index::query(std::int64_t qx, std::int64_t qy, std::int64_t qz) const {
  if (slabs_.empty()) return 0;
  std::int64_t sum = 0;
  int k = static_cast<int>(std::upper_bound(unique_zs_.begin(), unique_zs_.end(), qz) -
                           unique_zs_.begin());
  for (; k > 0; k -= k & -k) sum += slabs_[k].query(qx, qy);
  return sum;
}

}  // namespace catrange
