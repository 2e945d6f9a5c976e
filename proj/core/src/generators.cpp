#include "rcn/generators.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

#include "rcn/crossings.hpp"

namespace rcn {
namespace {

constexpr int kMaxAttempts = 100000;

bool fits_in_general_position(const std::vector<Point>& points, const Point& candidate) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] == candidate) return false;
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (orientation(points[i], points[j], candidate) == Orientation::Collinear) return false;
    }
  }
  return true;
}

PointSet random_disc(std::size_t n, Rng& rng, Coord radius) {
  if (radius < 2) throw std::invalid_argument("random-disc needs scale >= 2");
  std::vector<Point> points;
  const Wide r2 = static_cast<Wide>(radius) * radius;
  for (int attempt = 0; points.size() < n; ++attempt) {
    if (attempt > kMaxAttempts * static_cast<int>(n)) {
      throw std::runtime_error("random-disc: too many rejected samples; increase scale");
    }
    const Point c{rng.between(-radius, radius), rng.between(-radius, radius)};
    if (static_cast<Wide>(c.x) * c.x + static_cast<Wide>(c.y) * c.y > r2) continue;
    if (fits_in_general_position(points, c)) points.push_back(c);
  }
  return PointSet(std::move(points));
}

// Points on the two arcs y = x^2 and y = C - x^2, C > 2 scale^2, bound a
// strictly convex region, so every point is extreme and no line meets three.
PointSet convex(std::size_t n, Rng& rng, Coord scale) {
  if (scale < static_cast<Coord>(n)) scale = static_cast<Coord>(n);
  if (scale > (Coord{1} << 29)) throw std::invalid_argument("convex: scale must be <= 2^29");
  const Coord top = 2 * scale * scale + 2;
  std::set<Coord> lower_x;
  std::set<Coord> upper_x;
  const std::size_t lower_count = (n + 1) / 2;
  while (lower_x.size() < lower_count) lower_x.insert(rng.between(-scale, scale));
  while (upper_x.size() < n - lower_count) upper_x.insert(rng.between(-scale, scale));
  std::vector<Point> points;
  // Counterclockwise: lower arc left to right, then upper arc right to left.
  for (Coord x : lower_x) points.push_back({x, x * x});
  for (auto it = upper_x.rbegin(); it != upper_x.rend(); ++it) points.push_back({*it, top - *it * *it});
  return PointSet(std::move(points));
}

// Three clusters near the corners of a large triangle. Cluster points run
// radially inward from the corner along a slightly bent curve, so a line
// through two points of one cluster separates the other two clusters, and a
// line through the i-th point of one cluster and the j-th of another has
// exactly i + j points on its outer side (0-based, outermost first).
PointSet three_cluster(std::size_t n, Rng& rng, Coord scale) {
  constexpr Coord kStepDivisor = 10000;
  Coord radius = std::max<Coord>(scale, 1'000'000'000);
  radius = std::min<Coord>(radius, Coord{1} << 60);
  radius -= radius % (kStepDivisor * 1000 * 2);
  const Vector2 corner_dirs[3] = {
      {0, radius}, {-866 * (radius / 1000), -radius / 2}, {866 * (radius / 1000), -radius / 2}};
  const std::size_t sizes[3] = {(n + 2) / 3, (n + 1) / 3, n / 3};
  if (sizes[0] > 1000) throw std::invalid_argument("three-cluster supports n <= 3000");

  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Point> points;
    for (int c = 0; c < 3; ++c) {
      const Vector2 step{corner_dirs[c].x / kStepDivisor, corner_dirs[c].y / kStepDivisor};
      const Vector2 bend{-step.y / 50000, step.x / 50000};
      const Coord jitter = radius / 1000;
      const Point corner{corner_dirs[c].x + rng.between(-jitter, jitter),
                         corner_dirs[c].y + rng.between(-jitter, jitter)};
      for (std::size_t i = 0; i < sizes[c]; ++i) {
        const auto ii = static_cast<Coord>(i);
        points.push_back({corner.x - ii * step.x + ii * ii * bend.x,
                          corner.y - ii * step.y + ii * ii * bend.y});
      }
    }
    if (!validate_general_position(points)) return PointSet(std::move(points));
  }
  throw std::runtime_error("three-cluster: no general-position jitter found");
}

// Local search on the integer grid [0, scale]^2: move one point to a random
// cell and keep the move when the crossing count does not increase.
PointSet grid_search(std::size_t n, Rng& rng, Coord side) {
  if (side < static_cast<Coord>(n)) throw std::invalid_argument("grid-search: scale must be >= n");
  std::vector<Point> points;
  for (int attempt = 0; points.size() < n; ++attempt) {
    if (attempt > kMaxAttempts * static_cast<int>(n)) {
      throw std::runtime_error("grid-search: grid too small for general position");
    }
    const Point c{rng.between(0, side), rng.between(0, side)};
    if (fits_in_general_position(points, c)) points.push_back(c);
  }
  PointSet best(points);
  Count best_crossings = crossings_via_identity(best).crossings;
  const std::size_t iterations = 2000 + 400 * n;
  for (std::size_t it = 0; it < iterations && best_crossings > 0; ++it) {
    const std::size_t victim = rng.below(n);
    const Point c{rng.between(0, side), rng.between(0, side)};
    std::vector<Point> others;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != victim) others.push_back(points[i]);
    }
    if (!fits_in_general_position(others, c)) continue;
    std::vector<Point> trial = points;
    trial[victim] = c;
    PointSet candidate(trial);
    const Count crossings = crossings_via_identity(candidate).crossings;
    if (crossings <= best_crossings) {
      points = std::move(trial);
      best = std::move(candidate);
      best_crossings = crossings;
    }
  }
  return best;
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t v = engine_();
    if (v < limit) return v % bound;
  }
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(span));
}

std::string_view to_string(GeneratorKind kind) noexcept {
  switch (kind) {
    case GeneratorKind::RandomDisc:
      return "random-disc";
    case GeneratorKind::Convex:
      return "convex";
    case GeneratorKind::ThreeCluster:
      return "three-cluster";
    case GeneratorKind::GridSearch:
      return "grid-search";
  }
  return "?";
}

std::optional<GeneratorKind> parse_generator_kind(std::string_view name) noexcept {
  for (auto kind : {GeneratorKind::RandomDisc, GeneratorKind::Convex, GeneratorKind::ThreeCluster,
                    GeneratorKind::GridSearch}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

PointSet generate(const GeneratorSpec& spec) {
  if (spec.n < 3) throw std::invalid_argument("generators need n >= 3");
  Rng rng(spec.seed);
  switch (spec.kind) {
    case GeneratorKind::RandomDisc:
      return random_disc(spec.n, rng, spec.scale);
    case GeneratorKind::Convex:
      return convex(spec.n, rng, spec.scale);
    case GeneratorKind::ThreeCluster:
      return three_cluster(spec.n, rng, spec.scale);
    case GeneratorKind::GridSearch:
      return grid_search(spec.n, rng, spec.scale);
  }
  throw std::invalid_argument("unknown generator kind");
}

}  // namespace rcn
