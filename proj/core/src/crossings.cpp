#include "rcn/crossings.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rcn {

std::string_view to_string(CrossingMethod m) noexcept {
  return m == CrossingMethod::Bruteforce ? "bruteforce" : "identity";
}

Count binomial(std::int64_t n, std::int64_t k) noexcept {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  Wide r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<Count>(r);
}

Count quadruple_constant(std::size_t n) noexcept {
  const Wide m = static_cast<Wide>(n);
  return static_cast<Count>((m * m * m * m - 6 * m * m * m + 11 * m * m - 6 * m) / 8);
}

namespace {

// Four points in general position are in convex position iff none lies
// inside the triangle of the other three. Arguments are the orientations of
// (a,b,c), (a,b,d), (a,c,d), (b,c,d).
bool convex_from_orientations(Orientation abc, Orientation abd, Orientation acd,
                              Orientation bcd) noexcept {
  const bool d_in = abd == abc && bcd == abc && -acd == abc;
  const bool c_in = abc == abd && -bcd == abd && acd == abd;
  const bool b_in = -abc == acd && bcd == acd && abd == acd;
  const bool a_in = abc == bcd && acd == bcd && -abd == bcd;
  return !(a_in || b_in || c_in || d_in);
}

}  // namespace

bool is_convex_quadrilateral(const Point& a, const Point& b, const Point& c, const Point& d) {
  static constexpr Triple kTriples[4] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  const Orientation o[4] = {orientation(a, b, c), orientation(a, b, d), orientation(a, c, d),
                            orientation(b, c, d)};
  for (int i = 0; i < 4; ++i) {
    if (o[i] == Orientation::Collinear) throw GeneralPositionError(kTriples[i]);
  }
  return convex_from_orientations(o[0], o[1], o[2], o[3]);
}

CrossingReport crossings_bruteforce(const PointSet& set) {
  const std::size_t n = set.size();
  const OrderType ot(set);
  Count total = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        const Orientation abc = ot(a, b, c);
        for (std::size_t d = c + 1; d < n; ++d) {
          if (convex_from_orientations(abc, ot(a, b, d), ot(a, c, d), ot(b, c, d))) ++total;
        }
      }
    }
  }
  return {n, total, CrossingMethod::Bruteforce};
}

Count crossings_from_edges(const EdgeVector& edges) {
  const auto n = static_cast<Count>(edges.n);
  Count weighted = 0;
  for (std::size_t j = 0; j < edges.counts.size(); ++j) {
    const auto jj = static_cast<Count>(j);
    weighted += jj * (n - jj - 2) * edges.counts[j];
  }
  const Count lcr = quadruple_constant(edges.n) - weighted;
  if (lcr < 0 || lcr > binomial(n, 4)) {
    throw std::logic_error("crossing identity out of range (" + std::to_string(lcr) +
                           "): inconsistent edge census");
  }
  return lcr;
}

CrossingReport crossings_via_identity(const PointSet& set) {
  return {set.size(), crossings_from_edges(edge_vector_sweep(set)), CrossingMethod::Identity};
}

Count exact_lcr_from_E(const CumulativeEdgeVector& cumulative_edges) {
  const std::size_t n = cumulative_edges.n;
  const auto& values = cumulative_edges.values;
  const std::size_t m = halving_depth(n);
  if (n < 3 || values.size() != m + 1) {
    throw std::invalid_argument("cumulative edge vector must have floor((n-2)/2)+1 entries");
  }
  const auto nn = static_cast<Count>(n);
  if (values.back() != binomial(nn, 2)) {
    throw std::invalid_argument("E_m must equal C(n,2)");
  }
  Count previous = 0;
  for (Count v : values) {
    if (v < previous) throw std::invalid_argument("E must be nonnegative and nondecreasing");
    previous = v;
  }
  Wide sum = 0;
  for (std::size_t k = 0; k < m; ++k) {
    sum += static_cast<Wide>(nn - 2 * static_cast<Count>(k) - 3) * values[k];
  }
  const auto mm = static_cast<Count>(m);
  sum -= static_cast<Wide>(mm) * (nn - 2 - mm) * binomial(nn, 2);
  sum += quadruple_constant(n);
  return static_cast<Count>(sum);
}

}  // namespace rcn
