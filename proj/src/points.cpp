#include "catrange/points.hpp"

#include <algorithm>
#include <numeric>

namespace catrange {

RankReduction rank_space_reduce(std::span<const std::int64_t> coords) {
  if (coords.empty()) throw std::invalid_argument("empty point set");
  std::vector<int> order(coords.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return coords[a] < coords[b]; });
  RankReduction out;
  out.ranks.resize(coords.size());
  out.sorted_coords.resize(coords.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    out.ranks[order[r]] = static_cast<int>(r) + 1;
    out.sorted_coords[r] = coords[order[r]];
  }
  return out;
}

RankedPointSet::RankedPointSet(std::vector<std::int64_t> sorted_coords, std::vector<int> colors)
    : coords_(std::move(sorted_coords)), colors_(std::move(colors)) {
  if (coords_.size() != colors_.size())
    throw std::invalid_argument("coords/colors size mismatch");
  if (!std::is_sorted(coords_.begin(), coords_.end()))
    throw std::invalid_argument("coordinates not sorted by rank");
}

int RankedPointSet::successor_rank(std::int64_t lo) const {
  auto it = std::lower_bound(coords_.begin(), coords_.end(), lo);
  return static_cast<int>(it - coords_.begin()) + 1;
}

int RankedPointSet::predecessor_rank(std::int64_t hi) const {
  auto it = std::upper_bound(coords_.begin(), coords_.end(), hi);
  return static_cast<int>(it - coords_.begin());
}

RankedPointSet make_ranked_point_set(std::span<const std::pair<std::int64_t, int>> points) {
  if (points.empty()) return RankedPointSet{};
  std::vector<std::int64_t> coords(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) coords[i] = points[i].first;
  RankReduction red = rank_space_reduce(coords);
  std::vector<int> colors(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    colors[red.ranks[i] - 1] = points[i].second;
  return RankedPointSet(std::move(red.sorted_coords), std::move(colors));
}

std::optional<std::size_t> predecessor(std::span<const std::int64_t> sorted, std::int64_t q) {
  auto it = std::upper_bound(sorted.begin(), sorted.end(), q);
  if (it == sorted.begin()) return std::nullopt;
  return static_cast<std::size_t>(it - sorted.begin() - 1);
}

std::pair<int, int> rank_interval_of(std::span<const std::int64_t> sorted_coords,
                                     const IntervalQuery& q) {
  auto lo = std::lower_bound(sorted_coords.begin(), sorted_coords.end(), q.lo) -
            sorted_coords.begin() + 1;
  auto hi = std::upper_bound(sorted_coords.begin(), sorted_coords.end(), q.hi) -
            sorted_coords.begin();
  return {static_cast<int>(lo), static_cast<int>(hi)};
}

}  // namespace catrange
