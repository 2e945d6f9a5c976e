#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "rcn/bounds.hpp"
#include "rcn/census.hpp"
#include "rcn/crossings.hpp"
#include "rcn/generators.hpp"
#include "rcn/io.hpp"
#include "rcn/motion.hpp"
#include "rcn/verify.hpp"

namespace rcn::cli {
namespace {

using nlohmann::json;

// Exit codes.
constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

PointSet load(const std::string& file) {
  try {
    if (file == "-") return read_point_set(std::cin);
    return read_point_set_file(file);
  } catch (const GeneralPositionError& e) {
    throw InputError(file + ": " + e.what());
  } catch (const ParseError& e) {
    throw InputError(file + ": " + e.what());
  }
}

std::string join(const std::vector<Count>& v, const char* sep = " ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

std::string rational_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

json stats_json(const ConfigurationStats& s) {
  return json{{"E", cumulative(s.edges).values},
              {"crossings", s.crossings},
              {"e", s.edges.counts},
              {"halving", s.halving_count},
              {"hull", s.hull_size}};
}

int census(const std::string& file, bool csv, bool as_json, std::ostream& out) {
  const PointSet set = load(file);
  const EdgeVector e = edge_vector_sweep(set);
  const CumulativeEdgeVector big_e = cumulative(e);
  const Count halving = e.counts.back();
  if (as_json) {
    out << json{{"E", big_e.values}, {"e", e.counts}, {"halving", halving}, {"n", set.size()}}.dump()
        << '\n';
  } else if (csv) {
    out << "n,k,e_k,E_k,halving\n";
    for (std::size_t k = 0; k < e.counts.size(); ++k) {
      out << set.size() << ',' << k << ',' << e[k] << ',' << big_e[k] << ',' << halving << '\n';
    }
  } else {
    out << "n: " << set.size() << '\n'
        << "e: " << join(e.counts) << '\n'
        << "E: " << join(big_e.values) << '\n'
        << "halving: " << halving << '\n';
  }
  return kOk;
}

int crossings(const std::string& file, const std::string& method, bool as_json, std::ostream& out,
              std::ostream& err) {
  const PointSet set = load(file);
  using Clock = std::chrono::steady_clock;
  auto timed = [&](auto fn) {
    const auto start = Clock::now();
    const CrossingReport r = fn(set);
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return std::pair{r, ms};
  };
  if (method == "both") {
    const auto [brute, brute_ms] = timed(crossings_bruteforce);
    const auto [identity, identity_ms] = timed(crossings_via_identity);
    const bool agree = brute.crossings == identity.crossings;
    if (as_json) {
      out << json{{"agree", agree},
                  {"bruteforce", {{"crossings", brute.crossings}, {"ms", brute_ms}}},
                  {"identity", {{"crossings", identity.crossings}, {"ms", identity_ms}}},
                  {"n", set.size()}}
                 .dump()
          << '\n';
    } else {
      char line[128];
      std::snprintf(line, sizeof line, "bruteforce: %lld (%.3f ms)\n",
                    static_cast<long long>(brute.crossings), brute_ms);
      out << line;
      std::snprintf(line, sizeof line, "identity: %lld (%.3f ms)\n",
                    static_cast<long long>(identity.crossings), identity_ms);
      out << line;
    }
    if (!agree) {
      err << "crossing counts disagree: " << brute.crossings << " vs " << identity.crossings << '\n';
      return kFailed;
    }
    return kOk;
  }
  const CrossingReport r =
      method == "brute" ? crossings_bruteforce(set) : crossings_via_identity(set);
  if (as_json) {
    out << json{{"crossings", r.crossings}, {"method", to_string(r.method)}, {"n", set.size()}}.dump()
        << '\n';
  } else {
    out << "crossings: " << r.crossings << '\n';
  }
  return kOk;
}

int bounds(std::size_t n, bool csv, bool as_json, std::ostream& out, std::ostream& err) {
  if (n < 4) {
    err << "bounds needs --n >= 4\n";
    return kBadInput;
  }
  const BoundTable table = bound_table(n);
  const Count lower = crossing_lower_bound_exact(n);
  const std::optional<Count> halving =
      n >= 5 ? std::optional<Count>(halving_upper_bound(n)) : std::nullopt;
  if (as_json) {
    json rows = json::array();
    for (const BoundRow& r : table.rows) {
      rows.push_back({{"best", r.best},
                      {"k", r.k},
                      {"quadratic", r.quadratic},
                      {"quadratic_ceiling", r.quadratic_ceiling},
                      {"simple", r.simple},
                      {"refined", r.refined}});
    }
    json doc{{"crossing_lower_bound", lower}, {"n", n}, {"rows", rows}};
    doc["halving_upper_bound"] = halving ? json(*halving) : json(nullptr);
    out << doc.dump() << '\n';
    return kOk;
  }
  char line[160];
  if (csv) {
    out << "k,refined,simple,quadratic,quadratic_ceiling,best\n";
    for (const BoundRow& r : table.rows) {
      std::snprintf(line, sizeof line, "%zu,%lld,%lld,%.6f,%lld,%lld\n", r.k,
                    static_cast<long long>(r.refined), static_cast<long long>(r.simple), r.quadratic,
                    static_cast<long long>(r.quadratic_ceiling), static_cast<long long>(r.best));
      out << line;
    }
    out << "# crossing_lower_bound," << lower << '\n';
    if (halving) out << "# halving_upper_bound," << *halving << '\n';
    return kOk;
  }
  out << "n: " << n << '\n';
  std::snprintf(line, sizeof line, "%4s %10s %10s %14s %10s\n", "k", "refined", "simple", "quadratic",
                "best");
  out << line;
  for (const BoundRow& r : table.rows) {
    std::snprintf(line, sizeof line, "%4zu %10lld %10lld %14.3f %10lld\n", r.k,
                  static_cast<long long>(r.refined), static_cast<long long>(r.simple), r.quadratic,
                  static_cast<long long>(r.best));
    out << line;
  }
  out << "crossing lower bound: " << lower << '\n';
  if (halving) out << "halving upper bound: " << *halving << '\n';
  return kOk;
}

json trace_json(const PointSet& final_set, const ReductionTrace& trace) {
  json steps = json::array();
  for (const MotionStep& step : trace.steps) {
    json events = json::array();
    for (const MutationEvent& e : step.events) {
      events.push_back({{"center", e.center + 1},
                        {"delta", e.crossing_delta},
                        {"k", e.k},
                        {"pair", {e.pair.first + 1, e.pair.second + 1}},
                        {"t", rational_string(e.t)}});
    }
    steps.push_back({{"direction", {step.direction.x, step.direction.y}},
                     {"events", events},
                     {"moved", step.moved + 1},
                     {"stop", rational_string(step.stop)}});
  }
  json points = json::array();
  for (const Point& p : final_set) points.push_back({p.x, p.y});
  return json{{"after", stats_json(trace.after)},
              {"before", stats_json(trace.before)},
              {"points", points},
              {"steps", steps}};
}

int reduce(const std::string& file, const std::string& trace_path, bool as_json, std::ostream& out,
           std::ostream& err) {
  const PointSet set = load(file);
  const auto [final_set, trace] = reduce_to_triangle(set);
  std::size_t events = 0;
  for (const MotionStep& s : trace.steps) events += s.events.size();
  if (!trace_path.empty()) {
    std::ofstream f(trace_path);
    if (!f) {
      err << "cannot write " << trace_path << '\n';
      return kBadInput;
    }
    f << trace_json(final_set, trace).dump(2) << '\n';
  }
  if (as_json) {
    out << json{{"after", stats_json(trace.after)},
                {"before", stats_json(trace.before)},
                {"events", events},
                {"steps", trace.steps.size()}}
               .dump()
        << '\n';
    return kOk;
  }
  const auto& b = trace.before;
  const auto& a = trace.after;
  out << "steps: " << trace.steps.size() << '\n'
      << "events: " << events << '\n'
      << "hull: " << b.hull_size << " -> " << a.hull_size << '\n'
      << "crossings: " << b.crossings << " -> " << a.crossings << '\n'
      << "E: " << join(cumulative(b.edges).values) << " -> " << join(cumulative(a.edges).values)
      << '\n'
      << "halving: " << b.halving_count << " -> " << a.halving_count << '\n';
  return kOk;
}

int generate_cmd(const std::string& kind_name, std::size_t n, std::uint64_t seed, Coord scale,
                 const std::string& output, std::ostream& out, std::ostream& err) {
  const auto kind = parse_generator_kind(kind_name);
  if (!kind) {
    err << "unknown generator kind: " << kind_name << '\n';
    return kBadInput;
  }
  const PointSet set = generate({*kind, n, seed, scale});
  if (output.empty() || output == "-") {
    write_point_set(out, set);
    return kOk;
  }
  std::ofstream f(output);
  if (!f) {
    err << "cannot write " << output << '\n';
    return kBadInput;
  }
  write_point_set(f, set);
  return kOk;
}

int epsilon(double t0, bool as_json, std::ostream& out) {
  const double value = epsilon_integral(t0);
  char line[96];
  if (as_json) {
    out << json{{"epsilon", value}, {"t0", t0}}.dump() << '\n';
  } else {
    std::snprintf(line, sizeof line, "epsilon(%.6g) = %.6e\n", t0, value);
    out << line;
  }
  return kOk;
}

int verify(const std::string& file, bool as_json, std::ostream& out) {
  const PointSet set = load(file);
  const auto results = verify_point_set(set);
  if (as_json) {
    json checks = json::array();
    for (const CheckResult& r : results) {
      checks.push_back({{"detail", r.detail}, {"name", r.name}, {"passed", r.passed}});
    }
    out << json{{"checks", checks}, {"n", set.size()}, {"passed", all_passed(results)}}.dump()
        << '\n';
  } else {
    for (const CheckResult& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    }
  }
  return all_passed(results) ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rectilinear crossing numbers, k-edges and point motions", "rcn"};
  app.require_subcommand(1);

  std::string file;
  std::string method = "identity";
  std::string trace;
  std::string kind = "random-disc";
  std::string output;
  std::size_t n = 0;
  std::uint64_t seed = 1;
  Coord scale = 1000;
  double t0 = 0.4981;
  bool csv = false;
  bool as_json = false;

  auto format_flags = [&](CLI::App* sub, bool with_csv) {
    sub->add_flag("--json", as_json, "JSON output (keys sorted)");
    if (with_csv) sub->add_flag("--csv", csv, "CSV output");
  };

  auto* census_cmd = app.add_subcommand("census", "j-edge counts of a point set");
  census_cmd->add_option("file", file, "point-set file, - for stdin")->required();
  format_flags(census_cmd, true);

  auto* crossings_cmd = app.add_subcommand("crossings", "rectilinear crossings of a point set");
  crossings_cmd->add_option("file", file)->required();
  crossings_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"brute", "identity", "both"}))
      ->capture_default_str();
  format_flags(crossings_cmd, false);

  auto* bounds_cmd = app.add_subcommand("bounds", "lower bounds for n points");
  bounds_cmd->add_option("--n", n)->required();
  format_flags(bounds_cmd, true);

  auto* reduce_cmd = app.add_subcommand("reduce", "move extreme points until the hull is a triangle");
  reduce_cmd->add_option("file", file)->required();
  reduce_cmd->add_option("--trace", trace, "write the motion trace as JSON");
  format_flags(reduce_cmd, false);

  auto* generate_cmd_app = app.add_subcommand("generate", "write a generated point set");
  generate_cmd_app->add_option("--kind", kind)
      ->check(CLI::IsMember({"random-disc", "convex", "three-cluster", "grid-search"}))
      ->capture_default_str();
  generate_cmd_app->add_option("--n", n)->required();
  generate_cmd_app->add_option("--seed", seed)->capture_default_str();
  generate_cmd_app->add_option("--scale", scale)->capture_default_str();
  generate_cmd_app->add_option("-o,--output", output);

  auto* epsilon_cmd = app.add_subcommand("epsilon", "the correction integral from t0 to 1/2");
  epsilon_cmd->add_option("--t0", t0)->capture_default_str();
  format_flags(epsilon_cmd, false);

  auto* verify_cmd = app.add_subcommand("verify", "cross-check every exact quantity");
  verify_cmd->add_option("file", file)->required();
  format_flags(verify_cmd, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*census_cmd) return census(file, csv, as_json, out);
    if (*crossings_cmd) return crossings(file, method, as_json, out, err);
    if (*bounds_cmd) return bounds(n, csv, as_json, out, err);
    if (*reduce_cmd) return reduce(file, trace, as_json, out, err);
    if (*generate_cmd_app) return generate_cmd(kind, n, seed, scale, output, out, err);
    if (*epsilon_cmd) return epsilon(t0, as_json, out);
    if (*verify_cmd) return verify(file, as_json, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kOk;
}

}  // namespace rcn::cli
