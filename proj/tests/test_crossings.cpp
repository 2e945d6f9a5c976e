#include <gtest/gtest.h>

#include <limits>

#include "rcn/census.hpp"
#include "rcn/crossings.hpp"
#include "support/oracles.hpp"
#include "support/random_sets.hpp"

using namespace rcn;

TEST(ConvexQuadrilateral, Examples) {
  EXPECT_TRUE(is_convex_quadrilateral({0, 0}, {1, 0}, {1, 1}, {0, 1}));
  EXPECT_TRUE(is_convex_quadrilateral({0, 0}, {1, 1}, {1, 0}, {0, 1}));
  EXPECT_FALSE(is_convex_quadrilateral({0, 0}, {10, 0}, {0, 10}, {2, 3}));
  // (1,1) is inside the triangle (0,0),(4,0),(0,4): orient signs of the
  // triples around it all agree.
  EXPECT_FALSE(is_convex_quadrilateral({0, 0}, {4, 0}, {1, 1}, {0, 4}));
  EXPECT_THROW(is_convex_quadrilateral({0, 0}, {1, 1}, {2, 2}, {0, 5}), GeneralPositionError);
}

TEST(ConvexQuadrilateral, MatchesSegmentIntersectionOracle) {
  testgen::SplitMix64 rng(8);
  for (int trial = 0; trial < 2000; ++trial) {
    const PointSet s = testgen::random_set(rng, 4, 30);
    const auto big = oracle::to_big(s);
    EXPECT_EQ(is_convex_quadrilateral(s[0], s[1], s[2], s[3]), oracle::crossings(big) == 1);
  }
}

TEST(Crossings, SmallConfigurations) {
  EXPECT_EQ(crossings_bruteforce(testgen::convex_polygon(5)).crossings, 5);
  const PointSet tri_plus({{0, 0}, {10, 0}, {0, 10}, {2, 3}});
  EXPECT_EQ(crossings_bruteforce(tri_plus).crossings, 0);
  EXPECT_EQ(crossings_via_identity(tri_plus).crossings, 0);
  EXPECT_EQ(edge_vector_sweep(tri_plus).counts, (std::vector<Count>{3, 3}));
  const PointSet quad({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
  EXPECT_EQ(crossings_via_identity(quad).crossings, 1);
  EXPECT_EQ(quadruple_constant(4), 3);
  EXPECT_EQ(exact_lcr_from_E(CumulativeEdgeVector{4, {4, 6}}), 1);
  EXPECT_EQ(crossings_bruteforce(PointSet({{0, 0}, {1, 0}, {0, 1}})).crossings, 0);
  EXPECT_EQ(crossings_via_identity(PointSet({{0, 0}, {1, 0}, {0, 1}})).crossings, 0);
}

TEST(Crossings, ConvexPolygonsHaveAllQuadruples) {
  for (std::size_t n = 4; n <= 12; ++n) {
    const PointSet s = testgen::convex_polygon(n);
    const Count all = binomial(static_cast<std::int64_t>(n), 4);
    EXPECT_EQ(crossings_bruteforce(s).crossings, all);
    EXPECT_EQ(crossings_via_identity(s).crossings, all);
  }
}

TEST(Crossings, MethodsAgreeWithOracle) {
  testgen::SplitMix64 rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 4 + trial % 9;
    const PointSet s = testgen::random_set(rng, n, trial % 3 ? 50 : 4'000'000'000'000'000'000);
    const Count brute = crossings_bruteforce(s).crossings;
    EXPECT_EQ(brute, oracle::crossings(oracle::to_big(s))) << "trial " << trial;
    EXPECT_EQ(crossings_via_identity(s).crossings, brute);
    EXPECT_EQ(exact_lcr_from_E(cumulative(edge_vector_sweep(s))), brute);
  }
}

TEST(Crossings, SixPointMinimumOnSmallGrid) {
  // Every 6-subset of the 5x5 grid in general position.
  std::vector<Point> grid;
  for (Coord x = 0; x < 5; ++x)
    for (Coord y = 0; y < 5; ++y) grid.push_back({x, y});
  Count best = std::numeric_limits<Count>::max();
  std::vector<std::size_t> idx{0, 1, 2, 3, 4, 5};
  const std::size_t g = grid.size();
  auto advance = [&] {
    for (int i = 5; i >= 0; --i) {
      if (idx[i] < g - 6 + static_cast<std::size_t>(i)) {
        ++idx[i];
        for (std::size_t j = i + 1; j < 6; ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  do {
    std::vector<Point> pts;
    for (std::size_t i : idx) pts.push_back(grid[i]);
    if (validate_general_position(pts)) continue;
    best = std::min(best, crossings_bruteforce(PointSet(pts)).crossings);
  } while (advance());
  EXPECT_EQ(best, 3);
}

TEST(ExactFromE, Validation) {
  EXPECT_THROW(exact_lcr_from_E(CumulativeEdgeVector{4, {4}}), std::invalid_argument);
  EXPECT_THROW(exact_lcr_from_E(CumulativeEdgeVector{4, {4, 7}}), std::invalid_argument);
  EXPECT_THROW(exact_lcr_from_E(CumulativeEdgeVector{5, {6, 5}}), std::invalid_argument);
}

TEST(ExactFromE, PublishedOptimalVectors) {
  EXPECT_EQ(exact_lcr_from_E(CumulativeEdgeVector{19, {3, 9, 18, 30, 45, 63, 86, 115, 171}}), 1318);
  EXPECT_EQ(exact_lcr_from_E(CumulativeEdgeVector{21, {3, 9, 18, 30, 45, 63, 84, 111, 144, 210}}),
            2055);
}

TEST(LinearIdentity, ConstantHoldsOnRandomSets) {
  testgen::SplitMix64 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 4 + trial % 12;
    const PointSet s = testgen::random_set(rng, n, 100);
    const EdgeVector e = edge_vector_sweep(s);
    Count sum = 0;
    for (std::size_t j = 0; j < e.counts.size(); ++j) {
      sum += static_cast<Count>(j * (n - j - 2)) * e[j];
    }
    const auto nn = static_cast<Count>(n);
    EXPECT_EQ(crossings_bruteforce(s).crossings + sum,
              (nn * nn * nn * nn - 6 * nn * nn * nn + 11 * nn * nn - 6 * nn) / 8);
  }
}
