#include "rcn/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace rcn {

std::string to_string(Orientation o) {
  switch (o) {
    case Orientation::CCW:
      return "CCW";
    case Orientation::CW:
      return "CW";
    case Orientation::Collinear:
      return "COLLINEAR";
  }
  return "?";
}

GeneralPositionError::GeneralPositionError(Triple triple)
    : std::invalid_argument("points " + std::to_string(triple.i + 1) + ", " +
                            std::to_string(triple.j + 1) + ", " + std::to_string(triple.k + 1) +
                            " are collinear"),
      triple_(triple) {}

std::optional<Triple> validate_general_position(std::span<const Point> points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (orientation(points[i], points[j], points[k]) == Orientation::Collinear) {
          return Triple{i, j, k};
        }
      }
    }
  }
  return std::nullopt;
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.size() < 3) {
    throw std::invalid_argument("a point set needs at least 3 points");
  }
  for (const Point& p : points_) {
    if (p.x > kMaxCoordinate || p.x < -kMaxCoordinate || p.y > kMaxCoordinate ||
        p.y < -kMaxCoordinate) {
      throw std::out_of_range("coordinate magnitude exceeds 2^62 - 1");
    }
  }
  if (auto bad = validate_general_position(points_)) {
    throw GeneralPositionError(*bad);
  }
}

std::vector<std::size_t> convex_hull(const PointSet& set) {
  // Andrew's monotone chain over indices. Lexicographic sort puts the
  // smallest point first, which is the canonical starting vertex.
  const std::size_t n = set.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return set[a] < set[b]; });

  std::vector<std::size_t> hull(2 * n);
  std::size_t h = 0;
  for (std::size_t idx : order) {
    while (h >= 2 &&
           orientation(set[hull[h - 2]], set[hull[h - 1]], set[idx]) != Orientation::CCW) {
      --h;
    }
    hull[h++] = idx;
  }
  const std::size_t lower = h + 1;
  for (std::size_t r = n - 1; r-- > 0;) {
    const std::size_t idx = order[r];
    while (h >= lower &&
           orientation(set[hull[h - 2]], set[hull[h - 1]], set[idx]) != Orientation::CCW) {
      --h;
    }
    hull[h++] = idx;
  }
  hull.resize(h - 1);
  return hull;
}

bool is_extreme(const PointSet& set, std::size_t index) {
  const auto hull = convex_hull(set);
  return std::find(hull.begin(), hull.end(), index) != hull.end();
}

OrderType::OrderType(const PointSet& set) : n_(set.size()), signs_(n_ * n_ * n_, 0) {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) {
        signs_[(i * n_ + j) * n_ + k] =
            static_cast<std::int8_t>(orientation(set[i], set[j], set[k]));
      }
    }
  }
}

std::vector<Triple> OrderType::differences(const OrderType& other) const {
  if (other.n_ != n_) {
    throw std::invalid_argument("order types of different sizes");
  }
  std::vector<Triple> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      for (std::size_t k = j + 1; k < n_; ++k) {
        if ((*this)(i, j, k) != other(i, j, k)) {
          out.push_back({i, j, k});
        }
      }
    }
  }
  return out;
}

OrderType order_type(const PointSet& set) { return OrderType(set); }

}  // namespace rcn
