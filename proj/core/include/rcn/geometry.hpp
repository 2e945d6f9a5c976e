#pragma once

// Exact planar predicates on integer points, convex hulls and order types.
//
// Coordinates are signed 64-bit integers bounded by kMaxCoordinate so that
// every coordinate difference fits in 64 bits and every 2x2 determinant of
// differences fits in a signed 128-bit integer. No predicate rounds.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcn {

using Coord = std::int64_t;
using Wide = __int128;

/// |x|, |y| <= kMaxCoordinate keeps |b - a| < 2^63 and |det| < 2^127.
inline constexpr Coord kMaxCoordinate = (Coord{1} << 62) - 1;

struct Point {
  Coord x = 0;
  Coord y = 0;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

struct Vector2 {
  Coord x = 0;
  Coord y = 0;

  friend constexpr auto operator<=>(const Vector2&, const Vector2&) = default;
};

constexpr Vector2 operator-(const Point& a, const Point& b) noexcept {
  return {a.x - b.x, a.y - b.y};
}

constexpr Wide cross(const Vector2& u, const Vector2& v) noexcept {
  return static_cast<Wide>(u.x) * v.y - static_cast<Wide>(u.y) * v.x;
}

constexpr Wide dot(const Vector2& u, const Vector2& v) noexcept {
  return static_cast<Wide>(u.x) * v.x + static_cast<Wide>(u.y) * v.y;
}

enum class Orientation : int { CW = -1, Collinear = 0, CCW = 1 };

constexpr Orientation operator-(Orientation o) noexcept {
  return static_cast<Orientation>(-static_cast<int>(o));
}

/// Twice the signed area of triangle abc.
constexpr Wide signed_area2(const Point& a, const Point& b, const Point& c) noexcept {
  return cross(b - a, c - a);
}

constexpr Orientation orientation(const Point& a, const Point& b, const Point& c) noexcept {
  const Wide d = signed_area2(a, b, c);
  return d > 0 ? Orientation::CCW : (d < 0 ? Orientation::CW : Orientation::Collinear);
}

std::string to_string(Orientation o);

/// Zero-based point indices. Printed one-based (labels 1..n) by the CLI.
struct Triple {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;

  friend constexpr auto operator<=>(const Triple&, const Triple&) = default;
};

class GeneralPositionError : public std::invalid_argument {
 public:
  explicit GeneralPositionError(Triple triple);
  const Triple& triple() const noexcept { return triple_; }

 private:
  Triple triple_;
};

/// First collinear triple in lexicographic index order, if any. Repeated
/// points count as collinear with any third point.
std::optional<Triple> validate_general_position(std::span<const Point> points);

/// Immutable point configuration: n >= 3, coordinates within kMaxCoordinate,
/// no three points collinear.
class PointSet {
 public:
  explicit PointSet(std::vector<Point> points);

  std::size_t size() const noexcept { return points_.size(); }
  const Point& operator[](std::size_t i) const noexcept { return points_[i]; }
  std::span<const Point> points() const noexcept { return points_; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> points_;
};

/// Extreme-point indices in counterclockwise order, starting at the
/// lexicographically smallest point.
std::vector<std::size_t> convex_hull(const PointSet& set);

bool is_extreme(const PointSet& set, std::size_t index);

/// Orientation of every ordered triple, stored densely (n^3 entries).
class OrderType {
 public:
  OrderType() = default;
  explicit OrderType(const PointSet& set);

  std::size_t size() const noexcept { return n_; }
  Orientation operator()(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return static_cast<Orientation>(signs_[(i * n_ + j) * n_ + k]);
  }

  /// Unordered triples i < j < k whose orientation differs from `other`.
  std::vector<Triple> differences(const OrderType& other) const;

  friend bool operator==(const OrderType&, const OrderType&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int8_t> signs_;
};

OrderType order_type(const PointSet& set);

}  // namespace rcn
