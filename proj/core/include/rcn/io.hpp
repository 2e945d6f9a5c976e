#pragma once

// Point-set text format:
//
//   # comment lines start with '#', blank lines are ignored
//   n
//   x_1 y_1
//   ...
//   x_n y_n
//
// Coordinates are integers. Trailing content after the n-th point is an error.

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "rcn/geometry.hpp"

namespace rcn {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws ParseError on malformed text and GeneralPositionError on
/// collinear input.
PointSet read_point_set(std::istream& in);
PointSet read_point_set_file(const std::filesystem::path& path);

void write_point_set(std::ostream& out, const PointSet& set);
std::string format_point_set(const PointSet& set);

}  // namespace rcn
