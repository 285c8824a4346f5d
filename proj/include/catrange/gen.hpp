#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "catrange/category_graph.hpp"
#include "catrange/ov.hpp"
#include "catrange/points.hpp"

namespace catrange {

// Deterministic instance generators shared by the CLI and the test suites.
// All draw from a seeded mt19937_64 so identical parameters give identical
// instances.

// Uniform-attachment tree on n vertices rooted at 0; weights uniform in
// [1, max_weight] when max_weight > 1, else all 1.
CategoryGraph gen_tree(int n, std::uint64_t seed, std::int64_t max_weight = 1);

CategoryGraph gen_path(int n, std::uint64_t seed, std::int64_t max_weight = 1);

// Central path of `legs` vertices, one leg of `leg_len` vertices each.
CategoryGraph gen_caterpillar(int legs, int leg_len, std::int64_t max_weight = 1,
                              std::uint64_t seed = 0);

// Sparse DAG: every vertex v >= 1 gets 1..3 edges to lower ids, so the edge
// count stays <= 3n.
CategoryGraph gen_dag(int n, std::uint64_t seed, std::int64_t max_weight = 1);

// n points with coordinates in [0, coord_range] (duplicates allowed) and
// colors uniform over the graph's vertices.
std::vector<std::pair<std::int64_t, int>> gen_points(int n, int vertex_count,
                                                     std::uint64_t seed,
                                                     std::int64_t coord_range = -1);

// eta random vectors per side; when `plant` is set, one orthogonal (a, b)
// pair is forced.
OvInstance gen_ov(int eta, int dim, std::uint64_t seed, bool plant = false);

}  // namespace catrange
