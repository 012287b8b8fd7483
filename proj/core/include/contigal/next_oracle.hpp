#pragma once

#include <optional>

#include "contigal/solver.hpp"

namespace contigal {

/// Exact feasibility of a single guard for the chain [u, v] (lifted
/// parameters, v <= u+n): emptiness test of the guard-feasible region
/// core(u, v) intersected with the visibility regions of the chain ends.
/// Independent of the dominator/sliding-sequence pipeline: works from the
/// core and visibility-window candidate points only.
std::optional<Point2> oracle_guard_for(const PolygonStructure& ps, const Coord& u, const Coord& v);

/// Reference implementation of next(u) by binary search on v with the exact
/// feasibility test; the returned value is within tol of the true supremum
/// and carries a feasible witness guard. Saturation at v == u+n is exact.
NextValue next_oracle(const PolygonStructure& ps, const Coord& u, const Rat& tol);

}  // namespace contigal
