#pragma once

// Rectilinear crossing count of a fixed configuration: the number of
// 4-subsets in convex position.

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "rcn/census.hpp"
#include "rcn/geometry.hpp"

namespace rcn {

enum class CrossingMethod { Bruteforce, Identity };

std::string_view to_string(CrossingMethod m) noexcept;

struct CrossingReport {
  std::size_t n = 0;
  Count crossings = 0;
  CrossingMethod method = CrossingMethod::Bruteforce;
};

/// C(n, k) for the small arguments used here; exact in 64 bits for n <= 2^16.
Count binomial(std::int64_t n, std::int64_t k) noexcept;

/// (n^4 - 6n^3 + 11n^2 - 6n) / 8, i.e. 3 * C(n, 4).
Count quadruple_constant(std::size_t n) noexcept;

/// Throws GeneralPositionError if three of the points are collinear.
bool is_convex_quadrilateral(const Point& a, const Point& b, const Point& c, const Point& d);

CrossingReport crossings_bruteforce(const PointSet& set);

/// lcr(S) = 3 C(n,4) - sum_j j (n - j - 2) e_j.
Count crossings_from_edges(const EdgeVector& edges);
CrossingReport crossings_via_identity(const PointSet& set);

/// Summation-by-parts form of the identity above:
///   lcr = sum_{k<m} (n - 2k - 3) E_k - m (n - 2 - m) C(n,2) + 3 C(n,4).
/// Throws std::invalid_argument unless E is nondecreasing and E_m = C(n,2).
Count exact_lcr_from_E(const CumulativeEdgeVector& cumulative_edges);

}  // namespace rcn
