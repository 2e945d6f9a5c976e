#pragma once

// Continuous motion of single points and the mutations (single-triple
// orientation flips) it causes.
//
// A point p moving along p + t*d crosses the line through q and r exactly
// once unless d is parallel to qr: orient(p + t d, q, r) is affine in t, so
// every event parameter is an exact rational. Nothing here simulates the
// motion; configurations are only ever evaluated at rational parameters.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rcn/census.hpp"
#include "rcn/geometry.hpp"

namespace rcn {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Oriented line through an extreme point that avoids every other point and
/// splits them as evenly as possible. `direction` points along the head,
/// away from the set; moving the anchor that way is the motion.
struct HalvingRay {
  std::size_t anchor = 0;
  Vector2 direction;
};

struct MutationEvent {
  std::size_t moving = 0;
  std::pair<std::size_t, std::size_t> pair;
  Rational t;
  /// Points strictly on the center's side of the line through the other
  /// two, just before the flip, excluding the center.
  std::size_t k = 0;
  /// 2k - n + 3.
  Count crossing_delta = 0;
  /// The one of the three that crosses the segment spanned by the others.
  std::size_t center = 0;
};

class SimultaneousEventsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws std::invalid_argument if `p` is not extreme. `variant` picks among
/// the candidate median gaps (two when n is even) and then among directions
/// inside the gap; variant 0 is the canonical ray.
HalvingRay halving_ray(const PointSet& set, std::size_t p, unsigned variant = 0);

/// Halving rays for non-consecutive extreme points whose tails both lie in
/// the open side of line pq holding more points (ties: left of p -> q), so
/// that their supporting lines meet strictly inside the hull.
std::pair<HalvingRay, HalvingRay> halving_ray_pair(const PointSet& set, std::size_t p,
                                                   std::size_t q, unsigned variant_p = 0,
                                                   unsigned variant_q = 0);

/// True iff `ray` satisfies the halving-ray invariants on `set`.
bool is_halving_ray(const PointSet& set, const HalvingRay& ray);

/// Events of moving point `p` along S[p] + t*direction for t in (0, stop],
/// or all t > 0 when `stop` is empty. Sorted by t. Throws
/// SimultaneousEventsError if two lines are crossed at the same t.
std::vector<MutationEvent> motion_events(const PointSet& set, std::size_t p,
                                         const Vector2& direction,
                                         const std::optional<Rational>& stop);
std::vector<MutationEvent> motion_events(const PointSet& set, const HalvingRay& ray,
                                         const std::optional<Rational>& stop);

/// The configuration with p relocated to S[p] + stop*direction, with every
/// coordinate multiplied by the denominator of `stop` (so integer stops leave
/// the other points in place).
/// Throws GeneralPositionError if p is collinear with two points at `stop`
/// and std::overflow_error if coordinates leave the supported range.
PointSet apply_motion(const PointSet& set, std::size_t p, const Vector2& direction,
                      const Rational& stop);

/// Simplest rational (smallest denominator) strictly inside (lo, hi), lo >= 0.
Rational simplest_between(const Rational& lo, const Rational& hi);

struct ConfigurationStats {
  Count crossings = 0;
  EdgeVector edges;
  std::size_t hull_size = 0;
  Count halving_count = 0;
};

ConfigurationStats configuration_stats(const PointSet& set);

struct MotionStep {
  PointSet before;
  std::size_t moved = 0;
  Vector2 direction;
  Rational stop;
  std::vector<MutationEvent> events;
};

struct ReductionTrace {
  std::vector<MotionStep> steps;
  ConfigurationStats before;
  ConfigurationStats after;
};

/// Moves pairs of non-consecutive extreme points outward along crossing
/// halving rays until the hull is a triangle. Every mutation on the way
/// lowers the crossing count and the (<=k)-edge vector.
std::pair<PointSet, ReductionTrace> reduce_to_triangle(const PointSet& set);

/// For each extreme point p of a triangular-hull set: the angular order of
/// the other points around p agrees with their order along the normal of
/// p's canonical halving ray. Throws std::invalid_argument if the hull is
/// not a triangle.
bool far_extreme_check(const PointSet& set);

/// reduce_to_triangle followed by moving extreme points along their
/// canonical halving rays past their last event, until far_extreme_check
/// holds.
std::pair<PointSet, ReductionTrace> push_extremes_far(const PointSet& set);

}  // namespace rcn
