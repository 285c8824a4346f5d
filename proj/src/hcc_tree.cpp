#include "catrange/hcc_tree.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>

namespace catrange {

SumMaxInstance build_summax_instance(const RankedPointSet& pts, const CategoryGraph& g,
                                     const HeavyPathDecomposition& d, int level) {
  SumMaxInstance inst;
  for (int r = 1; r <= pts.n(); ++r) {
    int c = g.check(pts.color_at_rank(r));
    auto hit = d.lowest_intersection(c, level);
    if (hit) inst.points.push_back({r, hit->path_id, hit->prefix_weight});
  }
  return inst;
}

std::vector<StabbingRectangle> summax_to_rectangles(const SumMaxInstance& inst,
                                                    std::int64_t universe_hi) {
  if (universe_hi < 0)
    for (const auto& e : inst.points) universe_hi = std::max(universe_hi, e.pos);

  // Group points of one color by position, then find the nearest strictly
  // stronger neighbor on each side with a monotonic stack. "Stronger" is the
  // lexicographic (weight, position) order, which makes the per-color
  // maximum unique under weight ties.
  std::map<int, std::vector<SumMaxInstance::Entry>> by_color;
  for (const auto& e : inst.points) by_color[e.color].push_back(e);

  std::vector<StabbingRectangle> rects;
  rects.reserve(inst.points.size());
  for (auto& [color, entries] : by_color) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.pos < b.pos; });
    const int m = static_cast<int>(entries.size());
    auto key = [&](int i) { return std::pair(entries[i].weight, entries[i].pos); };
    std::vector<std::int64_t> left(m, 0), right(m, universe_hi + 1);
    std::vector<int> stack;
    for (int i = 0; i < m; ++i) {
      while (!stack.empty() && key(stack.back()) < key(i)) stack.pop_back();
      if (!stack.empty()) left[i] = entries[stack.back()].pos;
      stack.push_back(i);
    }
    stack.clear();
    for (int i = m - 1; i >= 0; --i) {
      while (!stack.empty() && key(stack.back()) < key(i)) stack.pop_back();
      if (!stack.empty()) right[i] = entries[stack.back()].pos;
      stack.push_back(i);
    }
    for (int i = 0; i < m; ++i)
      rects.push_back(StabbingRectangle{left[i] + 1, entries[i].pos, entries[i].pos,
                                        right[i] - 1, entries[i].weight});
  }
  return rects;
}

std::vector<WeightedPoint2D> rectangles_to_points(std::span<const StabbingRectangle> rects) {
  std::vector<WeightedPoint2D> pts;
  pts.reserve(rects.size() * 4);
  for (const auto& r : rects) {
    pts.push_back({r.x1, r.y1, +r.w});
    pts.push_back({r.x2 + 1, r.y2 + 1, +r.w});
    pts.push_back({r.x1, r.y2 + 1, -r.w});
    pts.push_back({r.x2 + 1, r.y1, -r.w});
  }
  return pts;
}

HccTreeIndex::HccTreeIndex(const RankedPointSet& pts, const CategoryGraph& g, bool weighted)
    : pts_n_(pts.n()), coords_(pts.coords()) {
  if (!g.is_tree_like()) throw std::invalid_argument("hcc-tree requires a tree graph");
  // Unweighted counting is the all-ones weighted instance.
  auto hpd = std::make_shared<HeavyPathDecomposition>(g, /*unit_weights=*/!weighted);

  // One walk up the root path per point covers every level at once.
  std::vector<std::vector<SumMaxInstance::Entry>> per_level(hpd->height());
  for (int r = 1; r <= pts_n_; ++r) {
    int c = g.check(pts.color_at_rank(r));
    for (const auto& hit : hpd->root_path_intersections(c))
      per_level[hpd->ref(hit.vertex).level - 1].push_back({r, hit.path_id, hit.prefix_weight});
  }

  std::vector<WeightedPoint2D> all_points;
  for (auto& level_points : per_level) {
    SumMaxInstance inst;
    inst.points = std::move(level_points);
    auto four = rectangles_to_points(summax_to_rectangles(inst, pts_n_));
    all_points.insert(all_points.end(), four.begin(), four.end());
  }
  dom_ = Dominance2Index(std::move(all_points));
  hpd_ = std::move(hpd);
}

std::int64_t HccTreeIndex::query_rank(int a, int b) const {
  a = std::max(a, 1);
  b = std::min(b, pts_n_);
  if (a > b) return 0;
  return dom_.query(a, b);
}

std::int64_t HccTreeIndex::query(const IntervalQuery& q) const {
  auto [a, b] = rank_interval_of(coords_, q);
  return query_rank(a, b);
}

HccPathIndex::HccPathIndex(const RankedPointSet& pts, const CategoryGraph& g, bool weighted)
    : values_n_(pts.n()), coords_(pts.coords()) {
  if (g.kind() != GraphKind::path) throw std::invalid_argument("hcc-path requires a path graph");

  // Prefix weight of each vertex from the root; on a path the HCC answer is
  // the maximum such prefix among the colors present.
  std::vector<std::int64_t> depth_weight(g.vertex_count(), 0);
  int v = g.root();
  std::int64_t run = 0;
  while (true) {
    run += weighted ? g.weight(v) : 1;
    depth_weight[v] = run;
    const auto& kids = g.children_of(v);
    if (kids.empty()) break;
    v = kids[0];
  }

  if (pts.n() > 0) {
    std::vector<std::int64_t> values(pts.n());
    for (int r = 1; r <= pts.n(); ++r) values[r - 1] = depth_weight[g.check(pts.color_at_rank(r))];
    rmq_ = RangeMaxIndex(std::move(values));
  }
}

std::int64_t HccPathIndex::query_rank(int a, int b) const {
  if (values_n_ == 0) return 0;
  auto res = rmq_.query(a, b);
  return res ? res->value : 0;
}

std::int64_t HccPathIndex::query(const IntervalQuery& q) const {
  auto [a, b] = rank_interval_of(coords_, q);
  return query_rank(a, b);
}

}  // namespace catrange
