#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdlib>
#include <random>

#include "catrange/gen.hpp"
#include "catrange/hcc_dag.hpp"
#include "catrange/ov.hpp"
#include "catrange/parallel.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace catrange;
using namespace catrange::testutil;

TEST_CASE("parallel closure is bit-identical to the serial reference") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CategoryGraph g = seed % 2 ? gen_dag(257, seed) : gen_tree(300, seed);
    TransitiveClosure serial = transitive_closure_serial(g);
    TransitiveClosure parallel = transitive_closure(g);
    REQUIRE(serial.rows.size() == parallel.rows.size());
    for (std::size_t v = 0; v < serial.rows.size(); ++v)
      REQUIRE(serial.rows[v] == parallel.rows[v]);
  }
}

TEST_CASE("parallel short table matches the serial reference") {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const int n = 120 + 17 * static_cast<int>(seed);
    CategoryGraph g = gen_dag(96, seed, /*max_weight=*/seed % 2 ? 5 : 1);
    RankedPointSet pts = random_points(n, 96, rng);
    TransitiveClosure tc = transitive_closure(g);
    const int block = std::max(1, static_cast<int>(std::ceil(std::sqrt(double(n)))));
    std::vector<std::int64_t> weights = g.weights();
    REQUIRE(hcc_short_table_serial(pts, tc, weights, block) ==
            hcc_short_table(pts, tc, weights, block));
  }
}

TEST_CASE("parallel ov sweep returns the smallest witness") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    OvInstance inst = gen_ov(48, 6, seed, /*plant=*/seed % 3 == 0);
    OvDag dag = build_ov_dag(inst);
    // Serial reference witness: first failing index by definition.
    HccDagIndex idx(dag.points, dag.graph);
    int serial_witness = -1;
    for (int i = 0; i < inst.eta() && serial_witness < 0; ++i)
      if (idx.query_rank(i + 1, i + 1) != dag.expected[i]) serial_witness = i;
    OvDecision d = decide_ov_hcc(inst);
    CHECK(d.found == (serial_witness >= 0));
    CHECK(d.witness == serial_witness);
  }
}

TEST_CASE("thread cap respects CATALOG_RANGE_THREADS") {
  setenv("CATALOG_RANGE_THREADS", "1", 1);
  CHECK(thread_cap() == 1);
  setenv("CATALOG_RANGE_THREADS", "garbage", 1);
  CHECK(thread_cap() >= 1);
  unsetenv("CATALOG_RANGE_THREADS");
  CHECK(thread_cap() >= 1);
}
