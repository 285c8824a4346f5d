#include "catrange/crc1d.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace catrange {

Crc1dIndex::Crc1dIndex(std::vector<std::pair<std::int64_t, int>> pos_color,
                       const std::vector<std::int64_t>* color_weights) {
  std::stable_sort(pos_color.begin(), pos_color.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<WeightedPoint2D> dom_points;
  dom_points.reserve(pos_color.size());
  prev_.reserve(pos_color.size());
  std::unordered_map<int, std::int64_t> last_pos;
  for (const auto& [pos, color] : pos_color) {
    if (pos < 1) throw std::invalid_argument("crc1d positions must be >= 1");
    auto [it, inserted] = last_pos.try_emplace(color, 0);
    std::int64_t prev = inserted ? 0 : it->second;
    it->second = pos;
    prev_.push_back(prev);
    std::int64_t w = color_weights ? (*color_weights)[color] : 1;
    dom_points.push_back(WeightedPoint2D{pos, prev, w});
  }
  dom_ = Dominance2Index(std::move(dom_points));
}

Crc1dIndex::Crc1dIndex(const RankedPointSet& pts, const std::vector<std::int64_t>* color_weights) {
  std::vector<std::pair<std::int64_t, int>> pc(pts.n());
  for (int r = 1; r <= pts.n(); ++r) pc[r - 1] = {r, pts.color_at_rank(r)};
  *this = Crc1dIndex(std::move(pc), color_weights);
}

std::int64_t Crc1dIndex::query(std::int64_t lo, std::int64_t hi) const {
  if (lo > hi) return 0;
  // f(X) = sum over {x <= X, prev <= lo-1}; answer = f(hi) - f(lo-1).
  return dom_.query(hi, lo - 1) - dom_.query(lo - 1, lo - 1);
}

}  // namespace catrange
