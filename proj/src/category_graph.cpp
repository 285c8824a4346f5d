#include "catrange/category_graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace catrange {

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::path: return "path";
    case GraphKind::tree: return "tree";
    case GraphKind::caterpillar: return "caterpillar";
    case GraphKind::dag: return "dag";
  }
  return "dag";
}

GraphKind graph_kind_from_string(const std::string& s) {
  if (s == "path") return GraphKind::path;
  if (s == "tree") return GraphKind::tree;
  if (s == "caterpillar") return GraphKind::caterpillar;
  if (s == "dag") return GraphKind::dag;
  throw std::invalid_argument("unknown graph kind: " + s);
}

CategoryGraph::CategoryGraph(int vertex_count, std::vector<std::pair<int, int>> edges,
                             GraphKind kind, std::vector<std::int64_t> weights)
    : n_(vertex_count), kind_(kind), edges_(std::move(edges)) {
  if (n_ <= 0) throw std::invalid_argument("vertex count must be positive");
  out_.resize(n_);
  in_.resize(n_);
  for (auto [u, v] : edges_) {
    check(u);
    check(v);
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  for (auto& adj : out_) std::sort(adj.begin(), adj.end());
  for (auto& adj : in_) std::sort(adj.begin(), adj.end());

  if (weights.empty()) {
    weights_.assign(n_, 1);
  } else {
    if (static_cast<int>(weights.size()) != n_)
      throw std::invalid_argument("weight vector size mismatch");
    for (std::int64_t w : weights)
      if (w < 0) throw std::invalid_argument("vertex weights must be nonnegative");
    weights_ = std::move(weights);
  }

  // Kahn peel from sinks; failure to consume every vertex means a cycle.
  std::vector<int> remaining_out(n_);
  std::queue<int> ready;
  for (int v = 0; v < n_; ++v) {
    remaining_out[v] = static_cast<int>(out_[v].size());
    if (remaining_out[v] == 0) ready.push(v);
  }
  topo_.reserve(n_);
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop();
    topo_.push_back(v);
    for (int u : in_[v])
      if (--remaining_out[u] == 0) ready.push(u);
  }
  if (static_cast<int>(topo_.size()) != n_)
    throw std::invalid_argument("category graph has a cycle");

  validate_kind();
}

bool CategoryGraph::has_nonunit_weights() const {
  return std::any_of(weights_.begin(), weights_.end(), [](std::int64_t w) { return w != 1; });
}

int CategoryGraph::root() const {
  if (!is_tree_like()) throw std::logic_error("root() requires a tree-like graph");
  for (int v = 0; v < n_; ++v)
    if (out_[v].empty()) return v;
  throw std::logic_error("tree has no root");
}

void CategoryGraph::validate_kind() const {
  if (kind_ == GraphKind::dag) return;

  int roots = 0;
  for (int v = 0; v < n_; ++v) {
    if (out_[v].size() > 1)
      throw std::invalid_argument("tree vertex has out-degree > 1");
    if (out_[v].empty()) ++roots;
  }
  if (roots != 1) throw std::invalid_argument("tree must have exactly one root");

  if (kind_ == GraphKind::path) {
    for (int v = 0; v < n_; ++v)
      if (in_[v].size() > 1)
        throw std::invalid_argument("path vertex has in-degree > 1");
  }

  if (kind_ == GraphKind::caterpillar) {
    // All vertices of undirected degree >= 3 must lie on one simple path.
    std::vector<int> high;
    for (int v = 0; v < n_; ++v)
      if (in_[v].size() + out_[v].size() >= 3) high.push_back(v);
    if (high.size() <= 1) return;

    auto bfs_dist = [&](int src) {
      std::vector<int> dist(n_, -1);
      std::queue<int> q;
      dist[src] = 0;
      q.push(src);
      while (!q.empty()) {
        int v = q.front();
        q.pop();
        auto relax = [&](int u) {
          if (dist[u] < 0) {
            dist[u] = dist[v] + 1;
            q.push(u);
          }
        };
        for (int u : out_[v]) relax(u);
        for (int u : in_[v]) relax(u);
      }
      return dist;
    };

    auto d0 = bfs_dist(high[0]);
    int a = high[0];
    for (int v : high)
      if (d0[v] > d0[a]) a = v;
    auto da = bfs_dist(a);
    int b = a;
    for (int v : high)
      if (da[v] > da[b]) b = v;
    auto db = bfs_dist(b);
    for (int v : high)
      if (da[v] + db[v] != da[b])
        throw std::invalid_argument("degree-3 vertices not on a single path");
  }
}

namespace {

BitRow traverse(const CategoryGraph& g, int v, bool up) {
  g.check(v);
  BitRow seen(g.vertex_count());
  std::vector<int> stack{v};
  seen.set(v);
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    const auto& next = up ? g.parents_of(cur) : g.children_of(cur);
    for (int u : next)
      if (!seen.test(u)) {
        seen.set(u);
        stack.push_back(u);
      }
  }
  return seen;
}

std::vector<int> to_sorted_ids(const BitRow& row) {
  std::vector<int> out;
  row.for_each([&](int v) { out.push_back(v); });
  return out;
}

}  // namespace

BitRow reachable_up_row(const CategoryGraph& g, int v) { return traverse(g, v, true); }
BitRow reachable_down_row(const CategoryGraph& g, int v) { return traverse(g, v, false); }

std::vector<int> reachable_up(const CategoryGraph& g, int v) {
  return to_sorted_ids(reachable_up_row(g, v));
}

std::vector<int> reachable_down(const CategoryGraph& g, int v) {
  return to_sorted_ids(reachable_down_row(g, v));
}

}  // namespace catrange
