#include "rcn/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rcn/crossings.hpp"

namespace rcn {
namespace {

Count choose2(Count x) noexcept { return x * (x - 1) / 2; }

void require_depth_range(std::size_t n, std::size_t k) {
  if (k >= halving_depth(n)) {
    throw std::out_of_range("k = " + std::to_string(k) + " outside 0 <= k < floor((n-2)/2) for n = " +
                            std::to_string(n));
  }
}

}  // namespace

Count bound_simple(std::size_t n, std::size_t k) {
  if (n < 3 || 2 * k + 2 >= n) {
    throw std::out_of_range("k = " + std::to_string(k) + " outside 0 <= k < (n-2)/2 for n = " +
                            std::to_string(n));
  }
  return 3 * choose2(static_cast<Count>(k) + 2);
}

Count bound_refined(std::size_t n, std::size_t k) {
  require_depth_range(n, k);
  const auto nn = static_cast<Count>(n);
  const auto kk = static_cast<Count>(k);
  const Count first = nn / 3;
  Count extra = 0;
  if (kk >= first) {
    const Count terms = kk - first + 1;
    extra = 3 * ((first + kk) * terms / 2) - (nn - 3) * terms;
  }
  return 3 * choose2(kk + 2) + extra;
}

Count bound_refined_closed_form(std::size_t n, std::size_t k) {
  require_depth_range(n, k);
  const auto nn = static_cast<Count>(n);
  const auto kk = static_cast<Count>(k);
  if (kk < nn / 3) throw std::out_of_range("closed forms hold for k >= floor(n/3)");
  if (nn % 3 == 0) return 3 * choose2(kk + 2) + 3 * choose2(kk - nn / 3 + 2);
  return 3 * choose2(kk + 2) + choose2(3 * kk - nn + 5) / 3;
}

double bound_quadratic(std::size_t n, std::size_t k) {
  const double nn = static_cast<double>(n);
  const double kk = static_cast<double>(k);
  const double radicand = nn * nn - 2.0 * nn - 4.0 * kk * (kk + 1.0);
  if (radicand < 0.0) throw std::domain_error("n^2 - 2n - 4k(k+1) is negative");
  return nn * (nn - 1.0) / 2.0 - nn * std::sqrt(radicand);
}

Count crossing_lower_bound_exact(std::size_t n) {
  if (n < 4) throw std::out_of_range("crossing lower bound needs n >= 4");
  const std::size_t m = halving_depth(n);
  CumulativeEdgeVector bound{n, std::vector<Count>(m + 1)};
  for (std::size_t k = 0; k < m; ++k) bound.values[k] = bound_refined(n, k);
  bound.values[m] = binomial(static_cast<Count>(n), 2);
  return exact_lcr_from_E(bound);
}

double asymptotic_coefficient(std::size_t n) {
  if (n < 4) throw std::out_of_range("asymptotic coefficient needs n >= 4");
  const std::size_t m = halving_depth(n);
  const auto nn = static_cast<Count>(n);
  Wide sum = 0;
  for (std::size_t k = 0; k < m; ++k) {
    sum += static_cast<Wide>(nn - 2 * static_cast<Count>(k) - 3) * bound_refined(n, k);
  }
  return static_cast<double>(static_cast<long double>(sum) /
                             static_cast<long double>(binomial(nn, 4)));
}

std::optional<std::size_t> quadratic_crossover(std::size_t n) {
  const std::size_t m = halving_depth(n);
  for (std::size_t k = 0; k < m; ++k) {
    if (bound_quadratic(n, k) >= static_cast<double>(bound_refined(n, k))) return k;
  }
  return std::nullopt;
}

double epsilon_integrand(double t) {
  const double root = std::sqrt(std::max(0.0, 1.0 - 4.0 * t * t));
  return (1.0 - 2.0 * t) * (1.0 / 3.0 + t - 3.0 * t * t - root);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth) {
  struct Panel {
    double a, b, fa, fm, fb, whole;
  };
  auto simpson = [](double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  };
  auto recurse = [&](auto&& self, const Panel& p, double eps, int depth) -> double {
    const double m = 0.5 * (p.a + p.b);
    const double lm = 0.5 * (p.a + m);
    const double rm = 0.5 * (m + p.b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(p.a, m, p.fa, flm, p.fm);
    const double right = simpson(m, p.b, p.fm, frm, p.fb);
    const double delta = left + right - p.whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
    return self(self, Panel{p.a, m, p.fa, flm, p.fm, left}, eps / 2.0, depth - 1) +
           self(self, Panel{m, p.b, p.fm, frm, p.fb, right}, eps / 2.0, depth - 1);
  };
  if (b <= a) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  return recurse(recurse, Panel{a, b, fa, fm, fb, simpson(a, b, fa, fm, fb)}, tol, max_depth);
}

double epsilon_integral(double t0) {
  if (!(t0 > 0.0) || t0 > 0.5) throw std::domain_error("t0 must lie in (0, 1/2]");
  if (t0 == 0.5) return 0.0;
  // The integrand vanishes at 1/2; its sqrt term has an unbounded slope
  // there, which the adaptive refinement absorbs.
  return 24.0 * adaptive_simpson(epsilon_integrand, t0, 0.5, 1e-9 / 24.0 / 16.0);
}

Count halving_upper_bound(std::size_t n) {
  if (n < 5) throw std::out_of_range("halving upper bound needs n >= 5");
  return binomial(static_cast<Count>(n), 2) - bound_refined(n, halving_depth(n) - 1);
}

BoundTable bound_table(std::size_t n) {
  BoundTable table{n, {}};
  const std::size_t m = halving_depth(n);
  for (std::size_t k = 0; k < m; ++k) {
    BoundRow row;
    row.k = k;
    row.refined = bound_refined(n, k);
    row.simple = bound_simple(n, k);
    row.quadratic = bound_quadratic(n, k);
    row.quadratic_ceiling = static_cast<Count>(std::ceil(row.quadratic));
    row.best = std::max(row.refined, std::max<Count>(row.quadratic_ceiling, 0));
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace rcn
