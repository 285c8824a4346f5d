#include "catrange/oracles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace catrange {

namespace {

// Collects the distinct colors with rank in [a, b].
std::set<int> colors_in_rank_range(const RankedPointSet& pts, int a, int b) {
  std::set<int> colors;
  a = std::max(a, 1);
  b = std::min(b, pts.n());
  for (int r = a; r <= b; ++r) colors.insert(pts.color_at_rank(r));
  return colors;
}

}  // namespace

std::int64_t crc_oracle_rank(const RankedPointSet& pts, int a, int b) {
  return static_cast<std::int64_t>(colors_in_rank_range(pts, a, b).size());
}

std::int64_t crc_oracle(const RankedPointSet& pts, const IntervalQuery& q) {
  auto [a, b] = pts.rank_interval(q);
  return crc_oracle_rank(pts, a, b);
}

std::int64_t crc_oracle_weighted_rank(const RankedPointSet& pts, int a, int b,
                                      std::span<const std::int64_t> color_weights) {
  std::int64_t sum = 0;
  for (int c : colors_in_rank_range(pts, a, b)) sum += color_weights[c];
  return sum;
}

std::int64_t crc_oracle_weighted(const RankedPointSet& pts, const IntervalQuery& q,
                                 std::span<const std::int64_t> color_weights) {
  auto [a, b] = pts.rank_interval(q);
  return crc_oracle_weighted_rank(pts, a, b, color_weights);
}

std::int64_t hcc_oracle_rank(const RankedPointSet& pts, const CategoryGraph& g, int a, int b,
                             bool weighted) {
  BitRow counted(g.vertex_count());
  a = std::max(a, 1);
  b = std::min(b, pts.n());
  for (int r = a; r <= b; ++r) counted |= reachable_up_row(g, pts.color_at_rank(r));
  if (!weighted) return counted.popcount();
  std::int64_t sum = 0;
  counted.for_each([&](int v) { sum += g.weight(v); });
  return sum;
}

std::int64_t hcc_oracle(const RankedPointSet& pts, const CategoryGraph& g,
                        const IntervalQuery& q, bool weighted) {
  auto [a, b] = pts.rank_interval(q);
  return hcc_oracle_rank(pts, g, a, b, weighted);
}

std::int64_t scrc_oracle_rank(const RankedPointSet& pts, const CategoryGraph& g, int a, int b,
                              int v_q) {
  BitRow subcats = reachable_down_row(g, v_q);
  std::set<int> colors;
  a = std::max(a, 1);
  b = std::min(b, pts.n());
  for (int r = a; r <= b; ++r) {
    int c = pts.color_at_rank(r);
    if (subcats.test(c)) colors.insert(c);
  }
  return static_cast<std::int64_t>(colors.size());
}

std::int64_t scrc_oracle(const RankedPointSet& pts, const CategoryGraph& g,
                         const IntervalQuery& q, int v_q) {
  auto [a, b] = pts.rank_interval(q);
  return scrc_oracle_rank(pts, g, a, b, v_q);
}

std::int64_t summax_oracle(const SumMaxInstance& inst, const IntervalQuery& q) {
  // Max in-range weight per color; colors with no in-range point contribute 0.
  std::vector<std::pair<int, std::int64_t>> best;
  for (const auto& e : inst.points) {
    if (e.pos < q.lo || e.pos > q.hi) continue;
    auto it = std::find_if(best.begin(), best.end(),
                           [&](const auto& p) { return p.first == e.color; });
    if (it == best.end())
      best.emplace_back(e.color, e.weight);
    else
      it->second = std::max(it->second, e.weight);
  }
  std::int64_t sum = 0;
  for (const auto& [c, w] : best) sum += w;
  return sum;
}

std::int64_t dominance_oracle_2d(std::span<const WeightedPoint2D> pts, std::int64_t qx,
                                 std::int64_t qy) {
  std::int64_t sum = 0;
  for (const auto& p : pts)
    if (p.x <= qx && p.y <= qy) sum += p.w;
  return sum;
}

std::int64_t dominance_oracle_3d(std::span<const WeightedPoint3D> pts, std::int64_t qx,
                                 std::int64_t qy, std::int64_t qz) {
  std::int64_t sum = 0;
  for (const auto& p : pts)
    if (p.x <= qx && p.y <= qy && p.z <= qz) sum += p.w;
  return sum;
}

std::int64_t distinct_y_3sided_oracle(std::span<const Point2D> pts, std::int64_t l,
                                      std::int64_t r, std::int64_t t) {
  if (l > r) throw std::invalid_argument("empty x-range");
  std::set<std::int64_t> ys;
  for (const auto& p : pts)
    if (l <= p.x && p.x <= r && p.y <= t) ys.insert(p.y);
  return static_cast<std::int64_t>(ys.size());
}

std::int64_t color_3sided_oracle(std::span<const ColoredPoint2D> pts, std::int64_t l,
                                 std::int64_t r, std::int64_t t) {
  if (l > r) throw std::invalid_argument("empty x-range");
  std::set<int> colors;
  for (const auto& p : pts)
    if (l <= p.x && p.x <= r && p.y <= t) colors.insert(p.color);
  return static_cast<std::int64_t>(colors.size());
}

std::int64_t dominance_color_oracle_3d(std::span<const ColoredPoint3D> pts, std::int64_t qx,
                                       std::int64_t qy, std::int64_t qz) {
  std::set<int> colors;
  for (const auto& p : pts)
    if (p.x <= qx && p.y <= qy && p.z <= qz) colors.insert(p.color);
  return static_cast<std::int64_t>(colors.size());
}

}  // namespace catrange
