#include "rcn/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace rcn {
namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

template <class Int>
Int parse_integer(const std::string& tok, std::size_t line_no) {
  Int value{};
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" + tok +
                     "'");
  }
  return value;
}

}  // namespace

PointSet read_point_set(std::istream& in) {
  std::size_t line_no = 0;
  std::optional<std::size_t> expected;
  std::vector<Point> points;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    const auto toks = tokens_of(line);
    if (!expected) {
      if (toks.size() != 1) {
        throw ParseError("line " + std::to_string(line_no) + ": expected the point count");
      }
      expected = parse_integer<std::size_t>(toks[0], line_no);
      points.reserve(*expected);
      continue;
    }
    if (points.size() == *expected) {
      throw ParseError("line " + std::to_string(line_no) + ": more points than declared");
    }
    if (toks.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected two integers");
    }
    points.push_back({parse_integer<Coord>(toks[0], line_no), parse_integer<Coord>(toks[1], line_no)});
  }
  if (!expected) throw ParseError("empty point-set file");
  if (points.size() != *expected) {
    throw ParseError("declared " + std::to_string(*expected) + " points, found " +
                     std::to_string(points.size()));
  }
  try {
    return PointSet(std::move(points));
  } catch (const GeneralPositionError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
}

PointSet read_point_set_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_point_set(in);
}

void write_point_set(std::ostream& out, const PointSet& set) {
  out << set.size() << '\n';
  for (const Point& p : set) out << p.x << ' ' << p.y << '\n';
}

std::string format_point_set(const PointSet& set) {
  std::ostringstream ss;
  write_point_set(ss, set);
  return ss.str();
}

}  // namespace rcn
