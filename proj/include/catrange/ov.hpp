#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "catrange/category_graph.hpp"
#include "catrange/points.hpp"

namespace catrange {

// Orthogonal-vectors instance: two sets of eta boolean vectors of dimension
// d, stored as bit masks (d <= 64).
struct OvInstance {
  int dim = 0;
  std::vector<std::uint64_t> a;
  std::vector<std::uint64_t> b;

  OvInstance(int dim_, std::vector<std::uint64_t> a_, std::vector<std::uint64_t> b_);
  int eta() const { return static_cast<int>(b.size()); }
};

// Three-layer category DAG of the reduction. Layers are A-vertices,
// coordinate vertices, B-vertices; edges run B -> coordinates -> A so that
// reachable_up(b_i) collects b_i, its one-coordinates, and every a_j sharing
// a one with b_i. One point per b_i at position i+1.
struct OvDag {
  CategoryGraph graph;
  RankedPointSet points;
  std::vector<std::int64_t> expected;  // |b_i|_1 + 1 + eta per point
  int a_vertex_base = 0;               // a_j is vertex a_vertex_base + j
  int b_vertex_base = 0;
};

OvDag build_ov_dag(const OvInstance& inst);

struct OvDecision {
  bool found = false;
  int witness = -1;  // smallest failing index, -1 when none
};

// HCC route: query each point individually; an orthogonal pair exists iff
// some per-point count differs from |b_i|_1 + 1 + eta. The querier is any
// HCC-DAG implementation exposed as rank-interval count(i, j).
using HccRankQuerier = std::function<std::int64_t(int, int)>;
OvDecision decide_ov_hcc(const OvInstance& inst, const OvDag& dag, const HccRankQuerier& hcc);
OvDecision decide_ov_hcc(const OvInstance& inst);

// SCRC route: query each a_i with the all-points interval; orthogonality iff
// some answer is below eta.
using ScrcRankQuerier = std::function<std::int64_t(int, int, int)>;
OvDecision decide_ov_scrc(const OvInstance& inst, const OvDag& dag, const ScrcRankQuerier& scrc);
OvDecision decide_ov_scrc(const OvInstance& inst);

bool brute_ov(const OvInstance& inst);
// First orthogonal (a index, b index) pair in lexicographic order, if any.
std::optional<std::pair<int, int>> brute_ov_pair(const OvInstance& inst);

}  // namespace catrange
