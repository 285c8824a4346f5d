#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "catrange/category_graph.hpp"

namespace catrange {

// Recursive heavy-path decomposition of a category tree. Level 1 is the heavy
// path from the root; removing it leaves forests whose heavy paths form level
// 2, and so on. Every vertex belongs to exactly one path at exactly one
// level, paths within a level are ancestor/descendant independent, and any
// root-to-leaf walk crosses at most floor(log2 n) + 1 paths.
class HeavyPathDecomposition {
 public:
  struct Path {
    int level = 0;                      // 1-based recursion depth
    std::vector<int> vertices;          // head (shallowest) to tail
    std::vector<std::int64_t> prefix;   // cumulative vertex weights from head
  };

  struct VertexRef {
    int level = 0;
    int path_id = 0;
    int offset = 0;  // position within the path, 0 = head
    std::int64_t prefix_weight = 0;
  };

  struct Intersection {
    int path_id = 0;
    int vertex = 0;
    std::int64_t prefix_weight = 0;
  };

  // unit_weights: take every vertex weight as 1 regardless of the graph's
  // weights (prefix sums then count vertices).
  explicit HeavyPathDecomposition(const CategoryGraph& g, bool unit_weights = false);

  int height() const { return static_cast<int>(levels_.size()); }
  const std::vector<Path>& paths() const { return paths_; }
  const Path& path(int id) const { return paths_[id]; }
  const VertexRef& ref(int v) const { return refs_[v]; }
  // Path ids created at 1-based level i.
  const std::vector<int>& level_paths(int i) const { return levels_[i - 1]; }
  int level_of(int v) const { return refs_[v].level; }

  // Number of path vertices strictly below v on v's own path.
  int below_on_path(int v) const {
    const VertexRef& r = refs_[v];
    return static_cast<int>(paths_[r.path_id].vertices.size()) - 1 - r.offset;
  }

  // Deepest vertex shared by c's root path and its unique level-i path,
  // together with that path's prefix weight there; nullopt when c's root
  // path does not reach level i (i > level(c)).
  std::optional<Intersection> lowest_intersection(int c, int level) const;

  // lowest_intersection(c, i) for i = 1..level(c); index i-1.
  std::vector<Intersection> root_path_intersections(int c) const;

 private:
  std::vector<Path> paths_;
  std::vector<VertexRef> refs_;
  std::vector<std::vector<int>> levels_;
  std::vector<int> parent_;  // tree parent, -1 at the root
};

HeavyPathDecomposition decompose(const CategoryGraph& g);

}  // namespace catrange
