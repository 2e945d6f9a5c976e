#include "rcn/verify.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "rcn/bounds.hpp"
#include "rcn/census.hpp"
#include "rcn/crossings.hpp"

namespace rcn {
namespace {

std::string join(const std::vector<Count>& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ']';
  return out.str();
}

}  // namespace

std::vector<CheckResult> verify_point_set(const PointSet& set) {
  const std::size_t n = set.size();
  std::vector<CheckResult> results;
  auto add = [&](std::string name, bool passed, std::string detail) {
    results.push_back({std::move(name), passed, std::move(detail)});
  };

  const EdgeVector sweep = edge_vector_sweep(set);
  const EdgeVector brute = edge_vector_bruteforce(set);
  add("edge-vector sweep == bruteforce", sweep == brute,
      "sweep " + join(sweep.counts) + " brute " + join(brute.counts));

  const Count cr_brute = crossings_bruteforce(set).crossings;
  const Count cr_identity = crossings_via_identity(set).crossings;
  add("crossings identity == bruteforce", cr_brute == cr_identity,
      "brute " + std::to_string(cr_brute) + " identity " + std::to_string(cr_identity));

  const CumulativeEdgeVector cumulative_edges = cumulative(sweep);
  const Count cr_from_e = exact_lcr_from_E(cumulative_edges);
  add("crossings from cumulative edges == bruteforce", cr_from_e == cr_brute,
      "from E " + std::to_string(cr_from_e));

  Count weighted = 0;
  for (std::size_t j = 0; j < sweep.counts.size(); ++j) {
    const auto jj = static_cast<Count>(j);
    weighted += jj * (static_cast<Count>(n) - jj - 2) * sweep[j];
  }
  add("sum j(n-j-2)e_j + crossings == 3 C(n,4)", weighted + cr_brute == 3 * binomial(n, 4),
      "sum " + std::to_string(weighted) + " 3C(n,4) " + std::to_string(3 * binomial(n, 4)));

  const std::size_t m = halving_depth(n);
  bool simple_ok = true;
  bool refined_ok = true;
  std::string failures;
  for (std::size_t k = 0; k < m; ++k) {
    if (cumulative_edges[k] < bound_simple(n, k)) {
      simple_ok = false;
      failures += " simple k=" + std::to_string(k);
    }
    if (cumulative_edges[k] < bound_refined(n, k)) {
      refined_ok = false;
      failures += " refined k=" + std::to_string(k);
    }
  }
  add("E_k >= 3 C(k+2,2)", simple_ok, "E " + join(cumulative_edges.values) + failures);
  add("E_k >= refined lower bound", refined_ok, "E " + join(cumulative_edges.values) + failures);

  std::optional<Triangle> t;
  try {
    t = enclosing_triangle(set);
  } catch (const std::overflow_error&) {
    add("good k-edges >= 3k-n+3", true, "skipped: no enclosing triangle within the coordinate range");
  }
  if (t) {
    bool good_ok = true;
    std::string good_detail;
    for (std::size_t k = n / 3; 2 * k + 2 <= n; ++k) {
      const Count good = good_k_edge_count(set, *t, k);
      const Count floor_value = 3 * static_cast<Count>(k) - static_cast<Count>(n) + 3;
      good_detail += " k=" + std::to_string(k) + ":" + std::to_string(good) + ">=" +
                     std::to_string(floor_value);
      if (good < floor_value) good_ok = false;
    }
    add("good k-edges >= 3k-n+3", good_ok, good_detail.empty() ? "no k in range" : good_detail);
  }

  return results;
}

bool all_passed(const std::vector<CheckResult>& results) noexcept {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace rcn
