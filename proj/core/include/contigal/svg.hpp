#pragma once

#include <string>

#include "contigal/solver.hpp"

namespace contigal {

/// Static SVG figure: the polygon outline, guard points, and each guard's
/// boundary chain drawn in its own color. Deterministic for fixed input.
std::string render_svg(const Polygon& poly, const Solution& sol, int size_px = 720);
void save_svg(const std::string& path, const Polygon& poly, const Solution& sol,
              int size_px = 720);

}  // namespace contigal
