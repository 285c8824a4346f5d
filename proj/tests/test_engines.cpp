#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "catrange/color3sided.hpp"
#include "catrange/crc1d.hpp"
#include "catrange/dominance.hpp"
#include "catrange/oracles.hpp"
#include "catrange/rangemax.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace catrange;
using namespace catrange::testutil;

TEST_CASE("dominance2 matches the oracle examples") {
  std::vector<WeightedPoint2D> pts{{1, 1, 5}, {3, 4, 5}, {1, 4, -5}, {3, 1, -5}};
  Dominance2Index idx(pts);
  CHECK(idx.query(2, 3) == 5);
  CHECK(idx.query(9, 9) == 0);
  CHECK(idx.query(0, 0) == 0);

  Dominance2Index empty_idx;
  CHECK(empty_idx.query(5, 5) == 0);

  Dominance2Index single({{2, 2, 7}});
  CHECK(single.query(2, 2) == 7);  // boundaries are inclusive
  CHECK(single.query(1, 2) == 0);
}

TEST_CASE("dominance build rejects out-of-bound weights") {
  CHECK_THROWS_AS(Dominance2Index({{0, 0, kMaxAbsWeight}}), std::invalid_argument);
  CHECK_THROWS_AS(Dominance2Index({{0, 0, -kMaxAbsWeight}}), std::invalid_argument);
  CHECK_NOTHROW(Dominance2Index({{0, 0, kMaxAbsWeight - 1}}));
}

TEST_CASE("dominance3 basics and random agreement") {
  Dominance3Index idx({{1, 1, 1, 1}});
  CHECK(idx.query(1, 1, 1) == 1);
  CHECK(idx.query(0, 1, 1) == 0);

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> c(-40, 40), w(-(1 << 20), 1 << 20);
  std::vector<WeightedPoint3D> pts(64);
  for (auto& p : pts) p = {c(rng), c(rng), c(rng), w(rng)};
  Dominance3Index big(pts);
  for (int q = 0; q < 1000; ++q) {
    std::int64_t qx = c(rng), qy = c(rng), qz = c(rng);
    CHECK(big.query(qx, qy, qz) == dominance_oracle_3d(pts, qx, qy, qz));
  }
}

TEST_CASE("dominance2 equals oracle across random instances") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> size(0, 256);
  for (int inst = 0; inst < 500; ++inst) {
    auto pts = random_weighted_2d(size(rng), 1 << 20, rng);
    Dominance2Index idx(pts);
    std::uniform_int_distribution<std::int64_t> c(-600, 600);
    for (int q = 0; q < 20; ++q) {
      std::int64_t qx = c(rng), qy = c(rng);
      REQUIRE(idx.query(qx, qy) == dominance_oracle_2d(pts, qx, qy));
    }
  }
}

TEST_CASE("dominance monotone in each coordinate for positive weights") {
  std::mt19937_64 rng(23);
  auto pts = random_weighted_2d(128, 1000, rng, /*signed_weights=*/false);
  Dominance2Index idx(pts);
  std::uniform_int_distribution<std::int64_t> c(-300, 300);
  for (int q = 0; q < 200; ++q) {
    std::int64_t qx = c(rng), qy = c(rng);
    CHECK(idx.query(qx, qy) <= idx.query(qx + 3, qy));
    CHECK(idx.query(qx, qy) <= idx.query(qx, qy + 3));
  }
}

TEST_CASE("crc1d examples") {
  std::vector<std::pair<std::int64_t, int>> raw{{1, kA_color}, {2, kB_color}, {3, kA_color}};
  RankedPointSet pts = make_ranked_point_set(raw);
  Crc1dIndex idx(pts);
  CHECK(idx.query(1, 3) == 2);
  CHECK(idx.query(2, 3) == 2);
  CHECK(idx.query(3, 1) == 0);  // normalized, not an error

  std::vector<std::int64_t> weights{10, 1};
  Crc1dIndex widx(pts, &weights);
  CHECK(widx.query(1, 3) == 11);
}

TEST_CASE("crc1d prev links are per-color predecessors") {
  std::mt19937_64 rng(31);
  RankedPointSet pts = random_points(128, 9, rng);
  Crc1dIndex idx(pts);
  const auto& prev = idx.prev_positions();
  std::vector<std::int64_t> last(9, 0);
  for (int r = 1; r <= pts.n(); ++r) {
    int c = pts.color_at_rank(r);
    CHECK(prev[r - 1] == last[c]);
    CHECK(prev[r - 1] < r);
    last[c] = r;
  }
}

TEST_CASE("crc1d equals oracle on all rank intervals across random instances") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> size(1, 256);
  for (int inst = 0; inst < 500; ++inst) {
    const int n = size(rng);
    std::uniform_int_distribution<int> colors(1, n);
    RankedPointSet pts = random_points(n, colors(rng), rng);
    Crc1dIndex idx(pts);
    for (int a = 1; a <= n; ++a) {
      // Incremental distinct count per left endpoint.
      std::set<int> seen;
      for (int b = a; b <= n; ++b) {
        seen.insert(pts.color_at_rank(b));
        REQUIRE(idx.query(a, b) == static_cast<std::int64_t>(seen.size()));
      }
    }
  }
}

TEST_CASE("range max examples and tie rule") {
  RangeMaxIndex idx({5, 2, 7});
  REQUIRE(idx.query(1, 3).has_value());
  CHECK(idx.query(1, 3)->value == 7);
  CHECK(idx.query(1, 3)->pos == 3);
  CHECK(idx.query(1, 1)->value == 5);
  CHECK(idx.query(1, 1)->pos == 1);
  CHECK_FALSE(idx.query(3, 1).has_value());

  RangeMaxIndex ties({4, 4});
  CHECK(ties.query(1, 2)->pos == 1);  // leftmost wins

  CHECK_THROWS_AS(RangeMaxIndex(std::vector<std::int64_t>{}), std::invalid_argument);
}

TEST_CASE("range max equals scan on random arrays") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<std::int64_t> val(-50, 50);
  for (int it = 0; it < 40; ++it) {
    std::uniform_int_distribution<int> size(1, 200);
    std::vector<std::int64_t> vals(size(rng));
    for (auto& v : vals) v = val(rng);
    RangeMaxIndex idx(vals);
    const int n = static_cast<int>(vals.size());
    std::uniform_int_distribution<int> pick(1, n);
    for (int q = 0; q < 50; ++q) {
      int a = pick(rng), b = pick(rng);
      if (a > b) std::swap(a, b);
      auto res = idx.query(a, b);
      std::int64_t best = vals[a - 1];
      int best_pos = a;
      for (int i = a; i <= b; ++i)
        if (vals[i - 1] > best) {
          best = vals[i - 1];
          best_pos = i;
        }
      CHECK(res->value == best);
      CHECK(res->pos == best_pos);
    }
  }
}

TEST_CASE("color3sided examples") {
  std::vector<ColoredPoint2D> pts{{1, 2, 0}, {2, 2, 0}, {3, 5, 1}};
  Color3sidedIndex idx(pts);
  CHECK(idx.query(1, 3, 5) == 2);
  CHECK(idx.query(2, 3, 2) == 1);
  CHECK(idx.query(1, 3, 1) == 0);
  CHECK(idx.query(3, 1, 5) == 0);  // l > r normalized
  CHECK(idx.pair_count() <= 2 * pts.size());
}

TEST_CASE("color3sided equals oracle on random instances") {
  std::mt19937_64 rng(43);
  for (int inst = 0; inst < 60; ++inst) {
    std::uniform_int_distribution<int> size(1, 128);
    const int n = size(rng);
    std::uniform_int_distribution<std::int64_t> c(-2 * n, 2 * n);
    std::uniform_int_distribution<int> color(0, std::max(1, n / 3));
    std::vector<ColoredPoint2D> pts(n);
    for (auto& p : pts) p = {c(rng), c(rng), color(rng)};
    Color3sidedIndex idx(pts);
    CHECK(idx.pair_count() <= 2 * pts.size());
    for (int q = 0; q < 100; ++q) {
      std::int64_t l = c(rng), r = c(rng), t = c(rng);
      if (l > r) std::swap(l, r);
      REQUIRE(idx.query(l, r, t) == color_3sided_oracle(pts, l, r, t));
    }
  }
}

TEST_CASE("distinct-y mode equals the distinct-y oracle") {
  std::mt19937_64 rng(47);
  for (int inst = 0; inst < 40; ++inst) {
    std::uniform_int_distribution<int> size(1, 100);
    const int n = size(rng);
    std::uniform_int_distribution<std::int64_t> c(-n, n);
    std::vector<Point2D> pts(n);
    for (auto& p : pts) p = {c(rng), c(rng)};
    Color3sidedIndex idx = Color3sidedIndex::distinct_y(pts);
    for (int q = 0; q < 80; ++q) {
      std::int64_t l = c(rng), r = c(rng), t = c(rng);
      if (l > r) std::swap(l, r);
      REQUIRE(idx.query(l, r, t) == distinct_y_3sided_oracle(pts, l, r, t));
    }
  }
}
