#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "catrange/bitrow.hpp"

namespace catrange {

enum class GraphKind { path, tree, caterpillar, dag };

std::string to_string(GraphKind kind);
GraphKind graph_kind_from_string(const std::string& s);

// Category DAG or tree. An edge (u, v) means "u is a sub-category of v", so
// edges point from children toward the root(s). Acyclicity and the per-kind
// shape invariants are checked at construction; instances are immutable.
class CategoryGraph {
 public:
  CategoryGraph(int vertex_count, std::vector<std::pair<int, int>> edges, GraphKind kind,
                std::vector<std::int64_t> weights = {});

  int vertex_count() const { return n_; }
  GraphKind kind() const { return kind_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // Super-categories one edge away (out-neighbors).
  const std::vector<int>& parents_of(int v) const { return out_[check(v)]; }
  // Sub-categories one edge away (in-neighbors).
  const std::vector<int>& children_of(int v) const { return in_[check(v)]; }

  std::int64_t weight(int v) const { return weights_[check(v)]; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  bool has_nonunit_weights() const;

  // Vertices ordered so that every out-neighbor precedes its source
  // (sinks/roots first).
  const std::vector<int>& topo_sinks_first() const { return topo_; }

  bool is_tree_like() const { return kind_ != GraphKind::dag; }
  // Root of a tree-like graph (the unique out-degree-0 vertex).
  int root() const;

  int check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("invalid vertex id");
    return v;
  }

 private:
  void validate_kind() const;

  int n_ = 0;
  GraphKind kind_ = GraphKind::dag;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<std::int64_t> weights_;
  std::vector<int> topo_;
};

// G>=(v): vertices v can reach, v included; ascending vertex ids.
std::vector<int> reachable_up(const CategoryGraph& g, int v);
// G<=(v): vertices that can reach v, v included; ascending vertex ids.
std::vector<int> reachable_down(const CategoryGraph& g, int v);

BitRow reachable_up_row(const CategoryGraph& g, int v);
BitRow reachable_down_row(const CategoryGraph& g, int v);

}  // namespace catrange
