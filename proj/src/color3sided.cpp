#include "catrange/color3sided.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace catrange {

Color3sidedIndex::Color3sidedIndex(std::vector<ColoredPoint2D> points) {
  std::sort(points.begin(), points.end(), [](const ColoredPoint2D& a, const ColoredPoint2D& b) {
    if (a.y != b.y) return a.y < b.y;
    if (a.x != b.x) return a.x < b.x;
    return a.color < b.color;
  });
  sorted_ys_.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) sorted_ys_[i] = points[i].y;

  std::vector<WeightedPoint3D> signed_points;
  signed_points.reserve(points.size() * 3);
  std::unordered_map<int, std::multiset<std::int64_t>> chains;
  std::int64_t time = 0;
  for (const auto& p : points) {
    ++time;
    auto& chain = chains[p.color];
    auto it = chain.upper_bound(p.x);
    const std::int64_t pred = (it == chain.begin()) ? kNoPrev : *std::prev(it);
    const bool has_succ = (it != chain.end());
    const std::int64_t succ = has_succ ? *it : 0;

    signed_points.push_back(WeightedPoint3D{p.x, pred, time, +1});
    ++pair_count_;
    if (has_succ && pred != p.x) {
      // The successor's pair (succ, pred) dies; (succ, x) replaces it.
      signed_points.push_back(WeightedPoint3D{succ, pred, time, -1});
      signed_points.push_back(WeightedPoint3D{succ, p.x, time, +1});
      ++pair_count_;
    }
    chain.insert(it, p.x);
  }
  dom_ = Dominance3Index(std::move(signed_points));
}

Color3sidedIndex Color3sidedIndex::distinct_y(std::span<const Point2D> points) {
  // Color ids are ranks of the distinct y values.
  std::vector<std::int64_t> ys(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) ys[i] = points[i].y;
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  std::vector<ColoredPoint2D> colored(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    int c = static_cast<int>(std::lower_bound(ys.begin(), ys.end(), points[i].y) - ys.begin());
    colored[i] = ColoredPoint2D{points[i].x, points[i].y, c};
  }
  return Color3sidedIndex(std::move(colored));
}

std::int64_t Color3sidedIndex::query(std::int64_t l, std::int64_t r, std::int64_t t) const {
  if (l > r) return 0;
  const std::int64_t k =
      std::upper_bound(sorted_ys_.begin(), sorted_ys_.end(), t) - sorted_ys_.begin();
  if (k == 0) return 0;
  // g(X) = signed pairs with x <= X, prev <= l-1, time <= k.
  return dom_.query(r, l - 1, k) - dom_.query(l - 1, l - 1, k);
}

}  // namespace catrange
