#include "catrange/gen.hpp"

#include <stdexcept>

namespace catrange {

namespace {

std::vector<std::int64_t> gen_weights(int n, std::int64_t max_weight, std::mt19937_64& rng) {
  if (max_weight <= 1) return {};
  std::uniform_int_distribution<std::int64_t> dist(1, max_weight);
  std::vector<std::int64_t> w(n);
  for (auto& x : w) x = dist(rng);
  return w;
}

}  // namespace

CategoryGraph gen_tree(int n, std::uint64_t seed, std::int64_t max_weight) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> dist(0, v - 1);
    edges.emplace_back(v, dist(rng));
  }
  return CategoryGraph(n, std::move(edges), GraphKind::tree, gen_weights(n, max_weight, rng));
}

CategoryGraph gen_path(int n, std::uint64_t seed, std::int64_t max_weight) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v - 1);
  return CategoryGraph(n, std::move(edges), GraphKind::path, gen_weights(n, max_weight, rng));
}

CategoryGraph gen_caterpillar(int legs, int leg_len, std::int64_t max_weight,
                              std::uint64_t seed) {
  if (legs < 1 || leg_len < 0) throw std::invalid_argument("bad caterpillar parameters");
  std::mt19937_64 rng(seed);
  const int n = legs * (leg_len + 1);
  std::vector<std::pair<int, int>> edges;
  for (int k = 1; k < legs; ++k) edges.emplace_back(k, k - 1);
  for (int i = 0; i < legs; ++i)
    for (int j = 0; j < leg_len; ++j) {
      int id = legs + i * leg_len + j;
      edges.emplace_back(id, j == 0 ? i : id - 1);
    }
  return CategoryGraph(n, std::move(edges), GraphKind::caterpillar,
                       gen_weights(n, max_weight, rng));
}

CategoryGraph gen_dag(int n, std::uint64_t seed, std::int64_t max_weight) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  std::uniform_int_distribution<int> deg_dist(1, 3);
  for (int v = 1; v < n; ++v) {
    int deg = std::min(deg_dist(rng), v);
    std::uniform_int_distribution<int> tgt(0, v - 1);
    std::vector<int> seen;
    for (int e = 0; e < deg; ++e) {
      int t = tgt(rng);
      bool dup = false;
      for (int s : seen) dup = dup || (s == t);
      if (!dup) {
        edges.emplace_back(v, t);
        seen.push_back(t);
      }
    }
  }
  return CategoryGraph(n, std::move(edges), GraphKind::dag, gen_weights(n, max_weight, rng));
}

std::vector<std::pair<std::int64_t, int>> gen_points(int n, int vertex_count,
                                                     std::uint64_t seed,
                                                     std::int64_t coord_range) {
  if (n < 0 || vertex_count < 1) throw std::invalid_argument("bad point parameters");
  if (coord_range < 0) coord_range = 4 * std::max(n, 1);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<std::int64_t> coord(0, coord_range);
  std::uniform_int_distribution<int> color(0, vertex_count - 1);
  std::vector<std::pair<std::int64_t, int>> pts(n);
  for (auto& [x, c] : pts) {
    x = coord(rng);
    c = color(rng);
  }
  return pts;
}

OvInstance gen_ov(int eta, int dim, std::uint64_t seed, bool plant) {
  if (eta < 1 || dim < 1 || dim > 64) throw std::invalid_argument("bad ov parameters");
  std::mt19937_64 rng(seed ^ 0xc2b2ae3d27d4eb4fULL);
  const std::uint64_t mask = dim == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << dim) - 1);
  std::vector<std::uint64_t> a(eta), b(eta);
  for (auto& v : a) v = rng() & mask;
  for (auto& v : b) v = rng() & mask;
  if (plant) {
    std::uniform_int_distribution<int> pick(0, eta - 1);
    int i = pick(rng), j = pick(rng);
    b[j] = ~a[i] & mask;
  }
  return OvInstance(dim, std::move(a), std::move(b));
}

}  // namespace catrange
