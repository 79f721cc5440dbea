#pragma once

#include <istream>
#include <string>
#include <vector>

#include "edgeguard/geometry.hpp"

namespace edgeguard {

// Polygon text format:
//
//   # comment
//   N
//   x0 y0
//   ...
//
// Coordinates are integers or decimal fractions ("-2.75"), read exactly.
// '#' starts a comment anywhere on a line; blank lines are skipped.

// Exact value of an integer or decimal literal. Throws std::invalid_argument.
Scalar parse_decimal(const std::string& text);

// Integer or terminating decimal text; throws Error if the value has no
// finite decimal expansion.
std::string format_decimal(const Scalar& v);

// Raw vertices in file order. Throws ParseError naming the line.
std::vector<Point> parse_polyfile(std::istream& in);
std::vector<Point> parse_polyfile_string(const std::string& text);

// Parses and validates a file on disk. Throws Error on I/O failure.
Polygon read_polygon_file(const std::string& path);

std::string write_polyfile(const std::vector<Point>& pts);
std::string write_polyfile(const Polygon& poly);

}  // namespace edgeguard
