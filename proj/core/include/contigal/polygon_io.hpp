#pragma once

#include <iosfwd>
#include <string>

#include "contigal/polygon.hpp"

namespace contigal {

/// Polygon text format:
///   line 1: n
///   lines 2..n+1: "x y" with each coordinate a decimal literal or "p/q"
/// '#' starts a comment; blank lines are ignored. ASCII, locale-independent.
/// Throws std::runtime_error with a line reference on malformed input.
Polygon parse_polygon(std::istream& in);
Polygon parse_polygon_string(const std::string& text);
Polygon load_polygon_file(const std::string& path);

/// Emits the exact same format; parse(emit(poly)) == poly.
/// `header_comment` lines (if any) are written as leading '#' comments.
void emit_polygon(std::ostream& out, const Polygon& poly,
                  const std::vector<std::string>& header_comment = {});
std::string emit_polygon_string(const Polygon& poly,
                                const std::vector<std::string>& header_comment = {});
void save_polygon_file(const std::string& path, const Polygon& poly,
                       const std::vector<std::string>& header_comment = {});

}  // namespace contigal
