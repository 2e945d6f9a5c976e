#pragma once

// Deterministic point-set generators.
//
// Randomness comes from std::mt19937_64, whose output sequence is fixed by
// the C++ standard, mapped to ranges by rejection sampling (no
// std::uniform_int_distribution, whose algorithm is implementation-defined).
// Identical (kind, n, seed, scale) therefore give identical sets everywhere.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "rcn/geometry.hpp"

namespace rcn {

enum class GeneratorKind { RandomDisc, Convex, ThreeCluster, GridSearch };

std::string_view to_string(GeneratorKind kind) noexcept;
std::optional<GeneratorKind> parse_generator_kind(std::string_view name) noexcept;

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::RandomDisc;
  std::size_t n = 10;
  std::uint64_t seed = 1;
  /// Coordinate radius. random-disc: disc radius; convex: x-range of the
  /// two parabolic arcs; three-cluster: corner radius, raised to at least
  /// 10^9; grid-search: side of the [0, scale]^2 grid.
  Coord scale = 1000;
};

/// Throws std::invalid_argument for n < 3 and std::runtime_error when the
/// bounded rejection resampling fails.
PointSet generate(const GeneratorSpec& spec);

/// Seeded uniform integers on top of mt19937_64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform on [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace rcn
