#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "catrange/gen.hpp"
#include "catrange/oracles.hpp"
#include "catrange/scrc_tree.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace catrange;
using namespace catrange::testutil;

TEST_CASE("path fixture builds a single structure with h-values") {
  CategoryGraph g = fix_p1_graph();
  RankedPointSet pts = fix_p1_points();
  ScrcTreeIndex idx(pts, g);
  CHECK(idx.hpd().paths().size() == 1);
  const auto& stored = idx.path_points(0);
  REQUIRE(stored.size() == 3);
  CHECK(stored[0].x == 1);
  CHECK(stored[0].y == 0);  // h(b)
  CHECK(stored[0].color == kB);
  CHECK(stored[1].x == 2);
  CHECK(stored[1].y == 2);  // h(t)
  CHECK(stored[1].color == kT);
  CHECK(stored[2].x == 3);
  CHECK(stored[2].y == 1);  // h(m)
  CHECK(stored[2].color == kM);
}

TEST_CASE("query examples on fixture P1") {
  CategoryGraph g = fix_p1_graph();
  RankedPointSet pts = fix_p1_points();
  ScrcTreeIndex idx(pts, g);
  CHECK(idx.query(IntervalQuery(1, 3), kM) == 2);
  CHECK(idx.query(IntervalQuery(1, 3), kT) == 3);
  CHECK(idx.query(IntervalQuery(2, 2), kB) == 0);
  CHECK_THROWS_AS(idx.query(IntervalQuery(1, 3), 9), std::out_of_range);
}

TEST_CASE("star graph and empty inputs") {
  CategoryGraph star(5, {{1, 0}, {2, 0}, {3, 0}, {4, 0}}, GraphKind::tree);
  std::mt19937_64 rng(3);
  RankedPointSet pts = random_points(12, 5, rng);
  ScrcTreeIndex idx(pts, star);
  CHECK(idx.hpd().paths().size() == 4);  // root+leaf1, then three singletons

  RankedPointSet empty;
  ScrcTreeIndex eidx(empty, star);
  for (int v = 0; v < 5; ++v) CHECK(eidx.query(IntervalQuery(0, 50), v) == 0);
}

TEST_CASE("non-tree input is rejected") {
  std::mt19937_64 rng(5);
  CategoryGraph dag = gen_dag(8, 2);
  RankedPointSet pts = random_points(4, 8, rng);
  CHECK_THROWS_AS(ScrcTreeIndex(pts, dag), std::invalid_argument);
}

TEST_CASE("exhaustive oracle equivalence on random trees") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> size(1, 64);
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const int n = size(rng);
    CategoryGraph g = gen_tree(std::max(2, n / 2), seed);
    RankedPointSet pts = random_points(n, g.vertex_count(), rng);
    ScrcTreeIndex idx(pts, g);
    for (int a = 1; a <= n; ++a)
      for (int b = a; b <= n; ++b)
        for (int v = 0; v < g.vertex_count(); ++v)
          REQUIRE(idx.query_rank(a, b, v) == scrc_oracle_rank(pts, g, a, b, v));
  }
}

TEST_CASE("sampled oracle equivalence on a larger tree") {
  std::mt19937_64 rng(11);
  const int n = 512;
  CategoryGraph g = gen_tree(300, 4);
  RankedPointSet pts = random_points(n, 300, rng);
  ScrcTreeIndex idx(pts, g);
  std::uniform_int_distribution<int> pick(1, n), pickv(0, 299);
  for (int q = 0; q < 3000; ++q) {
    int a = pick(rng), b = pick(rng), v = pickv(rng);
    if (a > b) std::swap(a, b);
    REQUIRE(idx.query_rank(a, b, v) == scrc_oracle_rank(pts, g, a, b, v));
  }
}

TEST_CASE("stored points stay within n log n") {
  std::mt19937_64 rng(13);
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const int n = 256;
    CategoryGraph g = gen_tree(n, seed);
    RankedPointSet pts = random_points(n, n, rng);
    ScrcTreeIndex idx(pts, g);
    int log_n = 0;
    while ((1 << (log_n + 1)) <= n) ++log_n;
    CHECK(idx.stored_points() <= static_cast<std::size_t>(n) * (log_n + 1));
  }
}
