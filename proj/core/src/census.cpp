#include "rcn/census.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace rcn {
namespace {

// Upper half-plane (angle in [0, pi)) sorts before the lower one.
bool upper_half(const Vector2& v) noexcept { return v.y > 0 || (v.y == 0 && v.x > 0); }

bool angle_less(const Vector2& a, const Vector2& b) noexcept {
  const bool ua = upper_half(a);
  const bool ub = upper_half(b);
  if (ua != ub) return ua;
  return cross(a, b) > 0;
}

void check_pair(const PointSet& set, std::size_t p, std::size_t q) {
  if (p >= set.size() || q >= set.size()) throw std::out_of_range("point index out of range");
  if (p == q) throw std::invalid_argument("edge endpoints must differ");
}

}  // namespace

Count EdgeVector::total() const noexcept { return std::accumulate(counts.begin(), counts.end(), Count{0}); }

std::size_t edge_depth(const PointSet& set, std::size_t p, std::size_t q) {
  check_pair(set, p, q);
  std::size_t left = 0;
  std::size_t right = 0;
  for (std::size_t r = 0; r < set.size(); ++r) {
    if (r == p || r == q) continue;
    (orientation(set[p], set[q], set[r]) == Orientation::CCW ? left : right) += 1;
  }
  return std::min(left, right);
}

EdgeVector edge_vector_bruteforce(const PointSet& set) {
  const std::size_t n = set.size();
  EdgeVector out{n, std::vector<Count>(halving_depth(n) + 1, 0)};
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      ++out.counts[edge_depth(set, p, q)];
    }
  }
  return out;
}

namespace detail {

std::vector<std::uint32_t> left_count_matrix(const PointSet& set) {
  const std::size_t n = set.size();
  std::vector<std::uint32_t> left(n * n, 0);
  std::vector<std::size_t> order(n - 1);
  std::vector<Vector2> dir(n);

  for (std::size_t p = 0; p < n; ++p) {
    std::size_t m = 0;
    for (std::size_t q = 0; q < n; ++q) {
      if (q == p) continue;
      dir[q] = set[q] - set[p];
      order[m++] = q;
    }
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return angle_less(dir[a], dir[b]); });
    for (std::size_t i = 0; i + 1 < m; ++i) {
      if (upper_half(dir[order[i]]) == upper_half(dir[order[i + 1]]) &&
          cross(dir[order[i]], dir[order[i + 1]]) == 0) {
        throw GeneralPositionError(Triple{p, order[i], order[i + 1]});
      }
    }

    // Points strictly left of p -> order[i] form a contiguous run that
    // starts right after i in cyclic angular order.
    std::size_t j = 1;
    for (std::size_t i = 0; i < m; ++i) {
      j = std::max(j, i + 1);
      while (j < i + m && cross(dir[order[i]], dir[order[j % m]]) > 0) ++j;
      left[p * n + order[i]] = static_cast<std::uint32_t>(j - i - 1);
    }
  }
  return left;
}

}  // namespace detail

EdgeVector edge_vector_sweep(const PointSet& set) {
  const std::size_t n = set.size();
  const auto left = detail::left_count_matrix(set);
  EdgeVector out{n, std::vector<Count>(halving_depth(n) + 1, 0)};
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const std::size_t l = left[p * n + q];
      ++out.counts[std::min(l, n - 2 - l)];
    }
  }
  return out;
}

std::vector<Count> oriented_edge_counts(const PointSet& set) {
  const std::size_t n = set.size();
  const auto left = detail::left_count_matrix(set);
  std::vector<Count> out(n - 1, 0);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p != q) ++out[n - 2 - left[p * n + q]];
    }
  }
  return out;
}

CumulativeEdgeVector cumulative(const EdgeVector& edges) {
  CumulativeEdgeVector out{edges.n, std::vector<Count>(edges.counts.size())};
  std::partial_sum(edges.counts.begin(), edges.counts.end(), out.values.begin());
  return out;
}

Count halving_edge_count(const PointSet& set) {
  return edge_vector_sweep(set).counts.back();
}

namespace {

// Index pair of `set` collinear with c, if any.
std::optional<std::pair<std::size_t, std::size_t>> collinear_pair(const PointSet& set,
                                                                  const Point& c) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (orientation(set[i], set[j], c) == Orientation::Collinear) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

}  // namespace

Triangle enclosing_triangle(const PointSet& set) {
  Coord x0 = set[0].x, x1 = set[0].x, y0 = set[0].y, y1 = set[0].y;
  for (const Point& p : set) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  // Legs of length 3w cover the box [x0-1, x0-1+w] x [y0-1, y0-1+w]
  // strictly below the hypotenuse. Attempt i shifts the corners along three
  // parabolas, so a line through two points blocks at most two attempts.
  const Wide w = static_cast<Wide>(std::max(x1 - x0, y1 - y0)) + 2;
  const std::size_t max_attempts = 6 * set.size() * set.size() + 1;
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    const auto i = static_cast<Wide>(attempt);
    const Wide ax = x0 - 1 - i;
    const Wide ay = y0 - 1 - i * i;
    const Wide leg = 3 * w + 2 * i * i + 2 * i;
    const Wide corners[3][2] = {{ax, ay}, {ax + leg, ay}, {ax, ay + leg}};
    for (const auto& c : corners) {
      for (const Wide v : c) {
        if (v > kMaxCoordinate || v < -kMaxCoordinate) {
          throw std::overflow_error("no enclosing triangle within the coordinate range");
        }
      }
    }
    const Triangle t{{static_cast<Coord>(corners[0][0]), static_cast<Coord>(corners[0][1])},
                     {static_cast<Coord>(corners[1][0]), static_cast<Coord>(corners[1][1])},
                     {static_cast<Coord>(corners[2][0]), static_cast<Coord>(corners[2][1])}};
    if (!collinear_pair(set, t.a) && !collinear_pair(set, t.b) && !collinear_pair(set, t.c)) {
      return t;
    }
  }
  throw std::logic_error("no enclosing triangle in general position found");
}

bool strictly_inside(const Triangle& t, const Point& p) noexcept {
  const Orientation o = orientation(t.a, t.b, t.c);
  if (o == Orientation::Collinear) return false;
  return orientation(t.a, t.b, p) == o && orientation(t.b, t.c, p) == o &&
         orientation(t.c, t.a, p) == o;
}

Count good_k_edge_count(const PointSet& set, const Triangle& t, std::size_t k) {
  const std::size_t n = set.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!strictly_inside(t, set[i])) {
      throw std::invalid_argument("point " + std::to_string(i + 1) +
                                  " is not strictly inside the triangle");
    }
  }
  for (const Point& corner : {t.a, t.b, t.c}) {
    if (const auto pair = collinear_pair(set, corner)) {
      throw std::invalid_argument("triangle corner is collinear with points " +
                                  std::to_string(pair->first + 1) + " and " +
                                  std::to_string(pair->second + 1));
    }
  }
  if (k < n / 3 || 2 * k + 2 > n) {
    throw std::domain_error("k must satisfy floor(n/3) <= k <= n/2 - 1");
  }
  const auto left = detail::left_count_matrix(set);
  const Point corners[3] = {t.a, t.b, t.c};
  Count good = 0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q || n - 2 - left[p * n + q] != k) continue;
      int right_corners = 0;
      for (const Point& c : corners) {
        if (orientation(set[p], set[q], c) == Orientation::CW) ++right_corners;
      }
      if (right_corners == 1) ++good;
    }
  }
  return good;
}

}  // namespace rcn
