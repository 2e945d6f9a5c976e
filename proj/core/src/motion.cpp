#include "rcn/motion.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "rcn/crossings.hpp"

namespace rcn {
namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

struct BigPoint {
  Integer x;
  Integer y;
};

Integer big_cross(const Vector2& u, const Vector2& v) {
  return Integer(u.x) * v.y - Integer(u.y) * v.x;
}

int orient(const BigPoint& a, const BigPoint& b, const BigPoint& c) {
  return sign((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

// Boost's rational constructor rejects negative denominators.
Rational ratio(Integer num, Integer den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

Integer floor_of(const Rational& r) {
  // cpp_int division truncates toward zero.
  Integer q = numerator(r) / denominator(r);
  if (r < 0 && Rational(q) != r) q -= 1;
  return q;
}

/// Every point scaled by the denominator of t, with `moving` placed at
/// S[moving] + t*direction.
std::vector<BigPoint> scaled_configuration(const PointSet& set, std::size_t moving,
                                           const Vector2& direction, const Rational& t) {
  const Integer den = denominator(t);
  const Integer num = numerator(t);
  std::vector<BigPoint> out;
  out.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    BigPoint b{den * set[i].x, den * set[i].y};
    if (i == moving) {
      b.x += num * direction.x;
      b.y += num * direction.y;
    }
    out.push_back(std::move(b));
  }
  return out;
}

/// Positive weights (i, j) with gcd 1, enumerated by increasing i + j.
std::pair<Coord, Coord> nudge_weights(unsigned index) {
  unsigned seen = 0;
  for (Coord total = 2;; ++total) {
    for (Coord i = 1; i < total; ++i) {
      const Coord j = total - i;
      if (std::gcd(i, j) != 1) continue;
      if (seen++ == index) return {i, j};
    }
  }
}

/// Consecutive neighbours around an extreme point, CCW: cross(lo, hi) > 0.
struct Gap {
  Vector2 lo;
  Vector2 hi;
};

/// Candidate median gaps around extreme point p; one for odd n, two for
/// even n (smaller clockwise part first).
std::vector<Gap> median_gaps(const PointSet& set, std::size_t p) {
  if (p >= set.size()) throw std::out_of_range("point index out of range");
  if (!is_extreme(set, p)) {
    throw std::invalid_argument("point " + std::to_string(p + 1) + " is not extreme");
  }
  std::vector<Vector2> around;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i != p) around.push_back(set[i] - set[p]);
  }
  // All vectors lie in an open half-plane, where "cross > 0" is a strict
  // total order.
  std::sort(around.begin(), around.end(),
            [](const Vector2& a, const Vector2& b) { return cross(a, b) > 0; });
  const std::size_t n = set.size();
  std::vector<std::size_t> splits;
  if (n % 2 == 1) {
    splits.push_back((n - 1) / 2);
  } else {
    splits.push_back((n - 2) / 2);
    splits.push_back(n / 2);
  }
  std::vector<Gap> gaps;
  for (std::size_t s : splits) gaps.push_back({around[s - 1], around[s]});
  return gaps;
}

/// Tail direction strictly inside the gap.
Vector2 tail_in_gap(const Gap& gap, unsigned nudge) {
  const auto [i, j] = nudge_weights(nudge);
  Vector2 w{i * gap.lo.x + j * gap.hi.x, i * gap.lo.y + j * gap.hi.y};
  const Coord g = std::gcd(w.x, w.y);
  if (g > 1) w = {w.x / g, w.y / g};
  return w;
}

Vector2 negate(const Vector2& v) { return {-v.x, -v.y}; }

bool consecutive_on_hull(const std::vector<std::size_t>& hull, std::size_t p, std::size_t q) {
  const std::size_t h = hull.size();
  const auto ip = static_cast<std::size_t>(std::find(hull.begin(), hull.end(), p) - hull.begin());
  const auto iq = static_cast<std::size_t>(std::find(hull.begin(), hull.end(), q) - hull.begin());
  return (ip + 1) % h == iq || (iq + 1) % h == ip;
}

/// +1 if the open left side of p -> q holds at least as many points as the
/// right side, else -1.
int heavier_side(const PointSet& set, std::size_t p, std::size_t q) {
  std::size_t left = 0;
  std::size_t right = 0;
  for (std::size_t x = 0; x < set.size(); ++x) {
    if (x == p || x == q) continue;
    (orientation(set[p], set[q], set[x]) == Orientation::CCW ? left : right) += 1;
  }
  return left >= right ? 1 : -1;
}

HalvingRay ray_with_tail_on_side(const PointSet& set, std::size_t anchor, const Vector2& pq,
                                 int side, unsigned nudge) {
  for (const Gap& gap : median_gaps(set, anchor)) {
    const Vector2 tail = tail_in_gap(gap, nudge);
    const Wide s = cross(pq, tail);
    if ((s > 0 ? 1 : -1) == side && s != 0) return {anchor, negate(tail)};
  }
  throw std::logic_error("no median gap of point " + std::to_string(anchor + 1) +
                         " opens into the heavier side of pq");
}

bool strictly_inside_hull(const PointSet& set, const std::vector<std::size_t>& hull,
                          const BigPoint& scaled, const Integer& den) {
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point& a = set[hull[i]];
    const Point& b = set[hull[(i + 1) % hull.size()]];
    const BigPoint sa{den * a.x, den * a.y};
    const BigPoint sb{den * b.x, den * b.y};
    if (orient(sa, sb, scaled) <= 0) return false;
  }
  return true;
}

Coord to_coord(const Integer& v) {
  if (v > kMaxCoordinate || v < -kMaxCoordinate) {
    throw std::overflow_error("moved configuration exceeds the coordinate range");
  }
  return static_cast<Coord>(v);
}

}  // namespace

HalvingRay halving_ray(const PointSet& set, std::size_t p, unsigned variant) {
  const auto gaps = median_gaps(set, p);
  const Gap& gap = gaps[variant % gaps.size()];
  return {p, negate(tail_in_gap(gap, variant / static_cast<unsigned>(gaps.size())))};
}

std::pair<HalvingRay, HalvingRay> halving_ray_pair(const PointSet& set, std::size_t p,
                                                   std::size_t q, unsigned variant_p,
                                                   unsigned variant_q) {
  if (p >= set.size() || q >= set.size() || p == q) {
    throw std::invalid_argument("halving_ray_pair needs two distinct point indices");
  }
  const auto hull = convex_hull(set);
  if (std::find(hull.begin(), hull.end(), p) == hull.end() ||
      std::find(hull.begin(), hull.end(), q) == hull.end()) {
    throw std::invalid_argument("halving_ray_pair needs extreme points");
  }
  if (consecutive_on_hull(hull, p, q)) {
    throw std::invalid_argument("points " + std::to_string(p + 1) + " and " +
                                std::to_string(q + 1) + " share a hull edge");
  }
  const Vector2 pq = set[q] - set[p];
  const int side = heavier_side(set, p, q);
  HalvingRay rp = ray_with_tail_on_side(set, p, pq, side, variant_p);
  HalvingRay rq = ray_with_tail_on_side(set, q, pq, side, variant_q);

  // Supporting lines p + s*dp and q + u*dq meet at X = p + s*dp with
  // s = cross(q - p, dq) / cross(dp, dq).
  const Integer det = big_cross(rp.direction, rq.direction);
  if (det == 0) throw std::logic_error("halving rays are parallel");
  Integer num = big_cross(pq, rq.direction);
  Integer den = det;
  if (den < 0) {
    den = -den;
    num = -num;
  }
  const BigPoint x{den * set[p].x + num * rp.direction.x, den * set[p].y + num * rp.direction.y};
  if (!strictly_inside_hull(set, hull, x, den)) {
    throw std::logic_error("halving rays do not cross inside the hull");
  }
  return {rp, rq};
}

bool is_halving_ray(const PointSet& set, const HalvingRay& ray) {
  const std::size_t n = set.size();
  if (ray.anchor >= n || (ray.direction.x == 0 && ray.direction.y == 0)) return false;
  if (!is_extreme(set, ray.anchor)) return false;
  const Point& a = set[ray.anchor];
  std::size_t left = 0;
  std::vector<Vector2> around;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == ray.anchor) continue;
    const Wide s = cross(ray.direction, set[i] - a);
    if (s == 0) return false;
    if (s > 0) ++left;
    around.push_back(set[i] - a);
  }
  if (std::min(left, n - 1 - left) != (n - 1) / 2) return false;
  // Head away from the set: the tail lies strictly inside the angular span
  // (< pi) of the other points.
  std::sort(around.begin(), around.end(),
            [](const Vector2& u, const Vector2& v) { return cross(u, v) > 0; });
  const Vector2 tail = negate(ray.direction);
  return cross(around.front(), tail) > 0 && cross(tail, around.back()) > 0;
}

std::vector<MutationEvent> motion_events(const PointSet& set, std::size_t p,
                                         const Vector2& direction,
                                         const std::optional<Rational>& stop) {
  const std::size_t n = set.size();
  if (p >= n) throw std::out_of_range("point index out of range");
  if (direction.x == 0 && direction.y == 0) throw std::invalid_argument("zero direction");
  if (stop && *stop <= 0) throw std::invalid_argument("stop must be positive");

  const Point& a = set[p];
  struct Raw {
    Rational t;
    std::size_t q;
    std::size_t r;
  };
  std::vector<Raw> raw;
  for (std::size_t q = 0; q < n; ++q) {
    if (q == p) continue;
    for (std::size_t r = q + 1; r < n; ++r) {
      if (r == p) continue;
      // orient(a + t d, q, r) = cross(q - a, r - a) - t * cross(d, r - q)
      const Integer slope = big_cross(direction, set[r] - set[q]);
      if (slope == 0) continue;
      const Rational t = ratio(big_cross(set[q] - a, set[r] - a), slope);
      if (t <= 0 || (stop && t > *stop)) continue;
      raw.push_back({t, q, r});
    }
  }
  std::sort(raw.begin(), raw.end(), [](const Raw& x, const Raw& y) { return x.t < y.t; });
  for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
    if (raw[i].t == raw[i + 1].t) {
      throw SimultaneousEventsError("point " + std::to_string(p + 1) +
                                    " crosses two lines at the same parameter");
    }
  }

  std::vector<MutationEvent> events;
  events.reserve(raw.size());
  Rational previous = 0;
  for (const Raw& e : raw) {
    MutationEvent ev;
    ev.moving = p;
    ev.pair = {e.q, e.r};
    ev.t = e.t;

    // Center: the middle one of the three collinear points at t.
    const auto at = scaled_configuration(set, p, direction, e.t);
    const BigPoint& mp = at[p];
    const BigPoint& mq = at[e.q];
    const BigPoint& mr = at[e.r];
    const Integer ux = mr.x - mq.x;
    const Integer uy = mr.y - mq.y;
    const Integer along = (mp.x - mq.x) * ux + (mp.y - mq.y) * uy;
    const Integer length2 = ux * ux + uy * uy;
    if (along == 0 || along == length2) {
      throw SimultaneousEventsError("moving point passes through another point");
    }
    std::size_t other_a = 0;
    std::size_t other_b = 0;
    if (along > 0 && along < length2) {
      ev.center = p;
      other_a = e.q;
      other_b = e.r;
    } else if (along < 0) {
      ev.center = e.q;
      other_a = p;
      other_b = e.r;
    } else {
      ev.center = e.r;
      other_a = p;
      other_b = e.q;
    }

    // k from the configuration just before the flip.
    const auto before = scaled_configuration(set, p, direction, simplest_between(previous, e.t));
    const int center_side = orient(before[other_a], before[other_b], before[ev.center]);
    std::size_t k = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (x == p || x == e.q || x == e.r) continue;
      if (orient(before[other_a], before[other_b], before[x]) == center_side) ++k;
    }
    ev.k = k;
    ev.crossing_delta = 2 * static_cast<Count>(k) - static_cast<Count>(n) + 3;
    events.push_back(std::move(ev));
    previous = e.t;
  }
  return events;
}

std::vector<MutationEvent> motion_events(const PointSet& set, const HalvingRay& ray,
                                         const std::optional<Rational>& stop) {
  return motion_events(set, ray.anchor, ray.direction, stop);
}

PointSet apply_motion(const PointSet& set, std::size_t p, const Vector2& direction,
                      const Rational& stop) {
  if (p >= set.size()) throw std::out_of_range("point index out of range");
  if (stop <= 0) throw std::invalid_argument("stop must be positive");
  const auto scaled = scaled_configuration(set, p, direction, stop);
  std::vector<Point> points;
  points.reserve(scaled.size());
  for (const BigPoint& b : scaled) points.push_back({to_coord(b.x), to_coord(b.y)});
  return PointSet(std::move(points));
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("empty interval");
  if (lo < 0) throw std::invalid_argument("lower end must be nonnegative");
  const Integer whole = floor_of(lo);
  if (Rational(whole + 1) < hi) return Rational(whole + 1);
  const Rational lo_frac = lo - whole;
  const Rational hi_frac = hi - whole;
  if (lo_frac == 0) {
    // 1/m < hi_frac  <=>  m > 1/hi_frac
    const Integer m = floor_of(1 / hi_frac) + 1;
    return whole + ratio(1, m);
  }
  return whole + 1 / simplest_between(1 / hi_frac, 1 / lo_frac);
}

ConfigurationStats configuration_stats(const PointSet& set) {
  ConfigurationStats s;
  s.edges = edge_vector_sweep(set);
  s.crossings = crossings_from_edges(s.edges);
  s.hull_size = convex_hull(set).size();
  s.halving_count = s.edges.counts.back();
  return s;
}

namespace {

constexpr unsigned kMaxVariants = 256;

/// Moves `anchor` along its ray (re-nudged until events are distinct, skipping
/// variants that are not halving rays of `set`) to an
/// integer parameter >= min_stop at which the point is in general position.
MotionStep run_motion(const PointSet& set, const std::function<HalvingRay(unsigned)>& ray_for,
                      const std::function<Integer(const HalvingRay&)>& min_stop_for,
                      PointSet& moved) {
  for (unsigned variant = 0; variant < kMaxVariants; ++variant) {
    const HalvingRay ray = ray_for(variant);
    if (!is_halving_ray(set, ray)) continue;
    std::vector<MutationEvent> events;
    try {
      events = motion_events(set, ray, std::nullopt);
    } catch (const SimultaneousEventsError&) {
      continue;
    }
    Integer stop = min_stop_for(ray);
    for (;; stop += 1) {
      const Rational s(stop);
      if (std::any_of(events.begin(), events.end(), [&](const MutationEvent& e) { return e.t == s; })) {
        continue;
      }
      try {
        moved = apply_motion(set, ray.anchor, ray.direction, s);
      } catch (const GeneralPositionError&) {
        continue;
      }
      std::erase_if(events, [&](const MutationEvent& e) { return e.t > s; });
      return MotionStep{set, ray.anchor, ray.direction, s, std::move(events)};
    }
  }
  throw std::runtime_error("no direction with distinct events found");
}

std::optional<std::pair<std::size_t, std::size_t>> first_non_consecutive_pair(
    const std::vector<std::size_t>& hull) {
  std::vector<std::size_t> sorted = hull;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (!consecutive_on_hull(hull, sorted[i], sorted[j])) return std::pair{sorted[i], sorted[j]};
    }
  }
  return std::nullopt;
}

}  // namespace

std::pair<PointSet, ReductionTrace> reduce_to_triangle(const PointSet& set) {
  ReductionTrace trace;
  trace.before = configuration_stats(set);
  PointSet current = set;
  for (auto hull = convex_hull(current); hull.size() > 3; hull = convex_hull(current)) {
    const auto [p, q] = *first_non_consecutive_pair(hull);
    const PointSet round_start = current;
    const Vector2 pq = current[q] - current[p];
    // Stop line s: parallel to pq, strictly beyond every point on the side
    // the heads point to.
    const int far_side = -heavier_side(current, p, q);
    Integer level = 0;
    for (const Point& x : current) {
      const Integer v = far_side * big_cross(pq, x - current[p]);
      if (v > level) level = v;
    }
    auto min_stop = [&](const HalvingRay& ray) {
      const Integer rate = far_side * big_cross(pq, ray.direction);
      const Point& origin = round_start[ray.anchor];
      const Integer offset = far_side * big_cross(pq, origin - round_start[p]);
      // Smallest integer t with offset + t*rate > level.
      return floor_of(ratio(level - offset, rate)) + 1;
    };

    PointSet after_p = current;
    trace.steps.push_back(run_motion(
        current, [&](unsigned v) { return halving_ray_pair(round_start, p, q, v, 0).first; },
        min_stop, after_p));
    // Once p has moved, q may already be inside the hull, or its ray may no
    // longer split the set evenly; it then stays put.
    PointSet after_q = after_p;
    const HalvingRay q_ray = halving_ray_pair(round_start, p, q, 0, 0).second;
    if (is_extreme(after_p, q) && is_halving_ray(after_p, q_ray)) {
      trace.steps.push_back(run_motion(
          after_p,
          [&](unsigned v) { return halving_ray_pair(round_start, p, q, 0, v).second; },
          min_stop, after_q));
    }
    current = after_q;
    if (convex_hull(current).size() >= hull.size()) {
      throw std::logic_error("hull did not shrink after moving points " + std::to_string(p + 1) +
                             " and " + std::to_string(q + 1));
    }
  }
  trace.after = configuration_stats(current);
  return {current, trace};
}

bool far_extreme_check(const PointSet& set) {
  const auto hull = convex_hull(set);
  if (hull.size() != 3) throw std::invalid_argument("far_extreme_check needs a triangular hull");
  for (std::size_t p : hull) {
    const HalvingRay ray = halving_ray(set, p, 0);
    std::vector<Vector2> around;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i != p) around.push_back(set[i] - set[p]);
    }
    std::sort(around.begin(), around.end(),
              [](const Vector2& u, const Vector2& v) { return cross(u, v) > 0; });
    // Seen from p at infinity along the ray, CCW order is decreasing
    // cross(direction, x).
    for (std::size_t i = 0; i + 1 < around.size(); ++i) {
      if (cross(ray.direction, around[i]) < cross(ray.direction, around[i + 1])) return false;
    }
  }
  return true;
}

std::pair<PointSet, ReductionTrace> push_extremes_far(const PointSet& set) {
  auto [current, trace] = reduce_to_triangle(set);
  for (;;) {
    if (convex_hull(current).size() > 3) {
      auto [next, more] = reduce_to_triangle(current);
      trace.steps.insert(trace.steps.end(), more.steps.begin(), more.steps.end());
      current = next;
    }
    if (far_extreme_check(current)) break;
    bool moved_any = false;
    for (std::size_t p : convex_hull(current)) {
      if (motion_events(current, halving_ray(current, p, 0), std::nullopt).empty()) continue;
      PointSet next = current;
      MotionStep step = run_motion(
          current, [&](unsigned v) { return halving_ray(current, p, v); },
          [&](const HalvingRay& ray) {
            const auto events = motion_events(current, ray, std::nullopt);
            return events.empty() ? Integer(1) : floor_of(events.back().t) + 1;
          },
          next);
      trace.steps.push_back(std::move(step));
      current = next;
      moved_any = true;
      break;
    }
    if (!moved_any) break;
  }
  trace.after = configuration_stats(current);
  return {current, trace};
}

}  // namespace rcn
