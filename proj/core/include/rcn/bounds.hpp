#pragma once

// Closed-form lower bounds on (<=k)-edges and on the rectilinear crossing
// number of K_n, plus the numeric pieces of the asymptotic refinement.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rcn/census.hpp"

namespace rcn {

/// 3 * C(k+2, 2). Requires 0 <= k < (n-2)/2.
Count bound_simple(std::size_t n, std::size_t k);

/// 3 * C(k+2, 2) + sum_{j=floor(n/3)}^{k} (3j - n + 3), the sum being empty
/// for k < floor(n/3). Requires k < floor((n-2)/2).
Count bound_refined(std::size_t n, std::size_t k);

/// The same bound through the divisibility closed forms; valid for
/// k >= floor(n/3).
Count bound_refined_closed_form(std::size_t n, std::size_t k);

/// C(n,2) - n * sqrt(n^2 - 2n - 4k(k+1)). Throws std::domain_error when the
/// radicand is negative.
double bound_quadratic(std::size_t n, std::size_t k);

/// exact_lcr_from_E applied to (E^_0, ..., E^_{m-1}, C(n,2)). Requires n >= 4.
Count crossing_lower_bound_exact(std::size_t n);

/// sum_{k<m} (n - 2k - 3) E^_k / C(n,4).
double asymptotic_coefficient(std::size_t n);

/// Smallest k < floor((n-2)/2) with bound_quadratic >= bound_refined, if any.
std::optional<std::size_t> quadratic_crossover(std::size_t n);

/// 24 * int_{t0}^{1/2} (1 - 2t)(1/3 + t - 3t^2 - sqrt(1 - 4t^2)) dt.
double epsilon_integral(double t0);
double epsilon_integrand(double t);

/// C(n,2) - E^_{m-1}. Requires n >= 5.
Count halving_upper_bound(std::size_t n);

struct BoundRow {
  std::size_t k = 0;
  Count refined = 0;
  Count simple = 0;
  double quadratic = 0.0;
  Count quadratic_ceiling = 0;
  Count best = 0;
};

/// One row per k = 0..m-1. `best` is the larger of the refined bound and the
/// quadratic ceiling clamped at zero.
struct BoundTable {
  std::size_t n = 0;
  std::vector<BoundRow> rows;
};

BoundTable bound_table(std::size_t n);

/// Adaptive Simpson quadrature on [a, b] with absolute tolerance `tol`.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth = 60);

}  // namespace rcn
