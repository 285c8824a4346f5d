#include "catrange/scrc_tree.hpp"

#include <stdexcept>

namespace catrange {

ScrcTreeIndex::ScrcTreeIndex(const RankedPointSet& pts, const CategoryGraph& g)
    : vertex_count_(g.vertex_count()), coords_(pts.coords()), hpd_(g) {
  if (!g.is_tree_like()) throw std::invalid_argument("scrc-tree requires a tree graph");

  path_points_.resize(hpd_.paths().size());
  for (int r = 1; r <= pts.n(); ++r) {
    int c = g.check(pts.color_at_rank(r));
    for (const auto& hit : hpd_.root_path_intersections(c)) {
      path_points_[hit.path_id].push_back(
          ColoredPoint2D{r, hpd_.below_on_path(hit.vertex), c});
      ++stored_;
    }
  }
  per_path_.resize(path_points_.size());
  for (std::size_t j = 0; j < path_points_.size(); ++j)
    if (!path_points_[j].empty()) per_path_[j] = Color3sidedIndex(path_points_[j]);
}

std::int64_t ScrcTreeIndex::query_rank(int a, int b, int v_q) const {
  if (v_q < 0 || v_q >= vertex_count_) throw std::out_of_range("invalid vertex id");
  if (a > b) return 0;
  const auto& ref = hpd_.ref(v_q);
  return per_path_[ref.path_id].query(a, b, hpd_.below_on_path(v_q));
}

std::int64_t ScrcTreeIndex::query(const IntervalQuery& q, int v_q) const {
  auto [a, b] = rank_interval_of(coords_, q);
  return query_rank(a, b, v_q);
}

}  // namespace catrange
