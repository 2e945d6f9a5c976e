#pragma once

// Brute-force replay of a point motion: configurations strictly between
// consecutive events are rebuilt exactly and recounted with the oracles.

#include <optional>
#include <string>
#include <vector>

#include "rcn/motion.hpp"

namespace oracle {

struct ReplayOptions {
  /// Also require crossing_delta < 0 for every event.
  bool require_decrease = false;
};

/// Empty on success, otherwise a description of the first violation.
std::optional<std::string> replay_motion(const rcn::PointSet& set, std::size_t p,
                                         const rcn::Vector2& direction,
                                         const std::vector<rcn::MutationEvent>& events,
                                         const std::optional<rcn::Rational>& stop,
                                         ReplayOptions options = {});

/// Replays every step of a reduction and checks that the steps chain.
std::optional<std::string> replay_trace(const rcn::ReductionTrace& trace,
                                        const rcn::PointSet& final_set,
                                        ReplayOptions options = {});

}  // namespace oracle
