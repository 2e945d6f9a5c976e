#include <gtest/gtest.h>

#include "rcn/census.hpp"
#include "rcn/crossings.hpp"
#include "rcn/io.hpp"
#include "support/oracles.hpp"
#include "support/random_sets.hpp"

using namespace rcn;

namespace {

// Ordered pairs with exactly k points to the right and one triangle corner
// strictly to the right, counted with arbitrary-precision orientation.
Count good_edges_by_enumeration(const PointSet& s, const Triangle& t, std::size_t k) {
  const auto pts = oracle::to_big(s);
  const oracle::BigPoint corners[3] = {{t.a.x, t.a.y}, {t.b.x, t.b.y}, {t.c.x, t.c.y}};
  Count good = 0;
  for (std::size_t p = 0; p < pts.size(); ++p) {
    for (std::size_t q = 0; q < pts.size(); ++q) {
      if (p == q) continue;
      std::size_t right = 0;
      for (std::size_t x = 0; x < pts.size(); ++x) {
        if (x != p && x != q && oracle::orient(pts[p], pts[q], pts[x]) < 0) ++right;
      }
      int right_corners = 0;
      for (const auto& c : corners) right_corners += oracle::orient(pts[p], pts[q], c) < 0;
      if (right == k && right_corners == 1) ++good;
    }
  }
  return good;
}

}  // namespace

TEST(EdgeDepth, SmallExamples) {
  const PointSet quad({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
  EXPECT_EQ(edge_depth(quad, 0, 1), 0u);
  EXPECT_EQ(edge_depth(quad, 0, 2), 1u);
}

TEST(EdgeDepth, InteriorPairInTriangle) {
  const PointSet s({{0, 0}, {12, 0}, {0, 12}, {3, 3}, {5, 6}});
  // Line through (3,3) and (5,6): y = 1.5x - 1.5. (12,0) below, (0,12)
  // above, (0,0) above.
  EXPECT_EQ(edge_depth(s, 3, 4), 1u);
  EXPECT_THROW(edge_depth(s, 2, 2), std::invalid_argument);
  EXPECT_THROW(edge_depth(s, 0, 5), std::out_of_range);
}

TEST(EdgeVector, ConvexPolygons) {
  EXPECT_EQ(edge_vector_bruteforce(testgen::convex_polygon(5)).counts, (std::vector<Count>{5, 5}));
  EXPECT_EQ(edge_vector_bruteforce(testgen::convex_polygon(6)).counts,
            (std::vector<Count>{6, 6, 3}));
  EXPECT_EQ(edge_vector_sweep(testgen::convex_polygon(7)).counts, (std::vector<Count>{7, 7, 7}));
  EXPECT_EQ(edge_vector_sweep(PointSet({{0, 0}, {5, 1}, {2, 4}})).counts, (std::vector<Count>{3}));
  for (std::size_t n = 4; n <= 12; ++n) {
    const EdgeVector e = edge_vector_sweep(testgen::convex_polygon(n));
    for (std::size_t j = 0; j < e.counts.size(); ++j) {
      EXPECT_EQ(e[j], (2 * j + 2 == n) ? Count(n / 2) : Count(n)) << "n=" << n << " j=" << j;
    }
  }
}

TEST(EdgeVector, SweepMatchesBruteForceAndOracle) {
  testgen::SplitMix64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + trial % 12;
    const PointSet s = testgen::random_set(rng, n, trial % 2 ? 20 : 1'000'000'000);
    const EdgeVector sweep = edge_vector_sweep(s);
    EXPECT_EQ(sweep, edge_vector_bruteforce(s)) << "trial " << trial;
    EXPECT_EQ(sweep.counts, oracle::edge_vector(oracle::to_big(s))) << "trial " << trial;
    EXPECT_EQ(sweep.total(), oracle::choose(static_cast<std::int64_t>(n), 2));
  }
}

TEST(EdgeVector, TriangularHullHasThreeZeroEdges) {
  const PointSet s({{0, 0}, {100, 0}, {0, 100}, {10, 20}, {30, 31}, {21, 10}, {40, 41}});
  EXPECT_EQ(convex_hull(s).size(), 3u);
  EXPECT_EQ(edge_vector_sweep(s)[0], 3);
}

TEST(EdgeVector, LargeCoordinates) {
  const Coord m = kMaxCoordinate;
  const PointSet s({{-m, -m}, {m, -m}, {m, m}, {-m, m}, {1, 2}, {-m + 1, 3}});
  EXPECT_EQ(edge_vector_sweep(s), edge_vector_bruteforce(s));
}

TEST(Cumulative, PrefixSums) {
  EXPECT_EQ(cumulative(EdgeVector{3, {3}}).values, (std::vector<Count>{3}));
  EXPECT_EQ(cumulative(EdgeVector{5, {5, 5}}).values, (std::vector<Count>{5, 10}));
  testgen::SplitMix64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3 + trial % 10;
    const auto big_e = cumulative(edge_vector_sweep(testgen::random_set(rng, n, 500)));
    EXPECT_EQ(big_e.values.back(), oracle::choose(static_cast<std::int64_t>(n), 2));
  }
}

TEST(HalvingEdges, Examples) {
  EXPECT_EQ(halving_edge_count(testgen::convex_polygon(6)), 3);
  EXPECT_EQ(halving_edge_count(testgen::convex_polygon(5)), 5);
  const PointSet eight = read_point_set_file(RCN_TEST_DATA_DIR "/halving8.txt");
  EXPECT_EQ(convex_hull(eight).size(), 4u);
  EXPECT_EQ(halving_edge_count(eight), 9);
}

TEST(KEdges, AtLeastTwoKPlusThreeOnRandomSets) {
  testgen::SplitMix64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 4 + trial % 12;
    const PointSet s = testgen::random_set(rng, n, 80);
    const EdgeVector e = edge_vector_sweep(s);
    const std::vector<Count> oriented = oriented_edge_counts(s);
    for (std::size_t k = 0; 2 * k + 2 < n; ++k) {
      EXPECT_GE(e[k], static_cast<Count>(2 * k + 3)) << "trial " << trial << " k " << k;
      EXPECT_GE(oriented[k], static_cast<Count>(2 * k + 3)) << "trial " << trial << " k " << k;
    }
  }
}

TEST(GoodEdges, SquareInLargeTriangle) {
  const PointSet square({{0, 0}, {10, 0}, {10, 10}, {0, 10}});
  const Triangle t = enclosing_triangle(square);
  for (const Point& p : square) EXPECT_TRUE(strictly_inside(t, p));
  EXPECT_EQ(good_k_edge_count(square, t, 1), good_edges_by_enumeration(square, t, 1));
  EXPECT_GE(good_k_edge_count(square, t, 1), 3 * 1 - 4 + 3);
}

TEST(GoodEdges, RangeAndContainmentErrors) {
  const PointSet hex = testgen::convex_polygon(6);
  const Triangle t = enclosing_triangle(hex);
  EXPECT_THROW(good_k_edge_count(hex, t, 1), std::domain_error);
  EXPECT_THROW(good_k_edge_count(hex, t, 3), std::domain_error);
  EXPECT_NO_THROW(good_k_edge_count(hex, t, 2));
  const Triangle small{{0, 0}, {1, 0}, {0, 1}};
  EXPECT_THROW(good_k_edge_count(hex, small, 2), std::invalid_argument);
}

TEST(GoodEdges, LowerBoundAndEnumerationOnRandomSets) {
  testgen::SplitMix64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + trial % 11;
    const PointSet s = testgen::random_set(rng, n, 60);
    const Triangle t = enclosing_triangle(s);
    for (std::size_t k = n / 3; 2 * k + 2 <= n; ++k) {
      const Count good = good_k_edge_count(s, t, k);
      EXPECT_EQ(good, good_edges_by_enumeration(s, t, k));
      EXPECT_GE(good, 3 * static_cast<Count>(k) - static_cast<Count>(n) + 3)
          << "trial " << trial << " k " << k;
    }
  }
}

TEST(GoodEdges, HalfOfOrientedHalvingEdgesWhenMinimal) {
  testgen::SplitMix64 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 4 + 2 * (trial % 4);
    const PointSet s = testgen::random_set(rng, n, 100);
    if (halving_edge_count(s) != static_cast<Count>(n / 2)) continue;
    ++checked;
    EXPECT_EQ(good_k_edge_count(s, enclosing_triangle(s), n / 2 - 1), static_cast<Count>(n / 2));
  }
  EXPECT_EQ(good_k_edge_count(testgen::convex_polygon(8), enclosing_triangle(testgen::convex_polygon(8)), 3),
            4);
  EXPECT_GT(checked, 10);
}
