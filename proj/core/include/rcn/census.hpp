#pragma once

// j-edge census. An unordered pair {p, q} is a j-edge when the line pq
// leaves j points of the set on its smaller side; j ranges over
// 0..halving_depth(n) with halving_depth(n) = floor((n - 2) / 2).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rcn/geometry.hpp"

namespace rcn {

using Count = std::int64_t;

constexpr std::size_t halving_depth(std::size_t n) noexcept { return n >= 2 ? (n - 2) / 2 : 0; }

/// Unoriented j-edge counts e_0..e_m.
struct EdgeVector {
  std::size_t n = 0;
  std::vector<Count> counts;

  Count total() const noexcept;
  Count operator[](std::size_t j) const noexcept { return counts[j]; }

  friend bool operator==(const EdgeVector&, const EdgeVector&) = default;
};

/// E_k = number of (<=k)-edges, k = 0..m.
struct CumulativeEdgeVector {
  std::size_t n = 0;
  std::vector<Count> values;

  Count operator[](std::size_t k) const noexcept { return values[k]; }

  friend bool operator==(const CumulativeEdgeVector&, const CumulativeEdgeVector&) = default;
};

/// min(#left, #right) of the line through points p and q.
std::size_t edge_depth(const PointSet& set, std::size_t p, std::size_t q);

/// O(n^3) reference census.
EdgeVector edge_vector_bruteforce(const PointSet& set);

/// O(n^2 log n) census from one exact angular sweep per point.
EdgeVector edge_vector_sweep(const PointSet& set);

/// Entry k counts ordered pairs (p, q) with exactly k points strictly to the
/// right of the directed line p -> q, k = 0..n-2.
std::vector<Count> oriented_edge_counts(const PointSet& set);

CumulativeEdgeVector cumulative(const EdgeVector& edges);

Count halving_edge_count(const PointSet& set);

struct Triangle {
  Point a;
  Point b;
  Point c;
};

/// A right triangle strictly containing every point of `set`, with no corner
/// collinear with two points of `set`. Throws std::overflow_error if the
/// corners would leave the coordinate range.
Triangle enclosing_triangle(const PointSet& set);

bool strictly_inside(const Triangle& t, const Point& p) noexcept;

/// Ordered pairs (p, q) with exactly k points of `set` and exactly one
/// vertex of `t` strictly to the right of p -> q. Requires every point of
/// `set` strictly inside `t`, no corner of `t` collinear with two points
/// (std::invalid_argument) and floor(n/3) <= k <= n/2 - 1 (std::domain_error).
Count good_k_edge_count(const PointSet& set, const Triangle& t, std::size_t k);

namespace detail {

/// left[p * n + q] = number of points strictly left of the directed line
/// p -> q (diagonal entries unused). Built by per-point angular sweeps.
std::vector<std::uint32_t> left_count_matrix(const PointSet& set);

}  // namespace detail
}  // namespace rcn
