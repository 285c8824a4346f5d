#include "catrange/heavy_path.hpp"

#include <deque>
#include <stdexcept>

namespace catrange {

HeavyPathDecomposition::HeavyPathDecomposition(const CategoryGraph& g, bool unit_weights) {
  if (!g.is_tree_like()) throw std::invalid_argument("heavy-path decomposition requires a tree");
  const int n = g.vertex_count();
  refs_.resize(n);
  parent_.assign(n, -1);
  for (int v = 0; v < n; ++v)
    if (!g.parents_of(v).empty()) parent_[v] = g.parents_of(v)[0];

  // Subtree sizes, iterative post-order over children (= in-neighbors).
  std::vector<int> size(n, 1);
  {
    std::vector<int> order;
    order.reserve(n);
    std::vector<int> stack{g.root()};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int c : g.children_of(v)) stack.push_back(c);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
      for (int c : g.children_of(*it)) size[*it] += size[c];
  }

  // Peel heavy paths breadth-first so path ids are deterministic: descend to
  // the child with the largest subtree, smallest id on ties.
  std::deque<std::pair<int, int>> work{{g.root(), 1}};
  while (!work.empty()) {
    auto [root, level] = work.front();
    work.pop_front();
    const int path_id = static_cast<int>(paths_.size());
    Path path;
    path.level = level;
    int v = root;
    std::int64_t run = 0;
    while (true) {
      run += unit_weights ? 1 : g.weight(v);
      refs_[v] = VertexRef{level, path_id, static_cast<int>(path.vertices.size()), run};
      path.vertices.push_back(v);
      path.prefix.push_back(run);
      int heavy = -1;
      for (int c : g.children_of(v))
        if (heavy < 0 || size[c] > size[heavy] || (size[c] == size[heavy] && c < heavy))
          heavy = c;
      for (int c : g.children_of(v))
        if (c != heavy) work.emplace_back(c, level + 1);
      if (heavy < 0) break;
      v = heavy;
    }
    if (static_cast<int>(levels_.size()) < level) levels_.resize(level);
    levels_[level - 1].push_back(path_id);
    paths_.push_back(std::move(path));
  }
}

std::optional<HeavyPathDecomposition::Intersection> HeavyPathDecomposition::lowest_intersection(
    int c, int level) const {
  const VertexRef& r = refs_[c];
  if (level > r.level || level < 1) return std::nullopt;
  int v = c;
  int cur = r.level;
  while (cur > level) {
    int head = paths_[refs_[v].path_id].vertices.front();
    v = parent_[head];
    cur = refs_[v].level;
  }
  const VertexRef& rv = refs_[v];
  return Intersection{rv.path_id, v, rv.prefix_weight};
}

std::vector<HeavyPathDecomposition::Intersection> HeavyPathDecomposition::root_path_intersections(
    int c) const {
  std::vector<Intersection> out(refs_[c].level);
  int v = c;
  while (true) {
    const VertexRef& rv = refs_[v];
    out[rv.level - 1] = Intersection{rv.path_id, v, rv.prefix_weight};
    if (rv.level == 1) break;
    v = parent_[paths_[rv.path_id].vertices.front()];
  }
  return out;
}

HeavyPathDecomposition decompose(const CategoryGraph& g) { return HeavyPathDecomposition(g); }

}  // namespace catrange
