#pragma once

#include <optional>

#include "contigal/corewindow.hpp"
#include "contigal/polystruct.hpp"

namespace contigal {

/// A contiguous guard: a point together with a boundary chain it fully sees.
struct Guard {
  Point2 g;
  BoundaryChain chain;
};

/// True iff the closed segment g-p stays inside the polygon (grazing contact
/// along the boundary counts as visible). Both points must be inside.
bool sees(const PolygonStructure& ps, const Point2& g, const Point2& p);

/// True iff g sees every point of the chain. Uses the finite
/// characterization: g sees every chain vertex and lies (weakly) left of the
/// supporting line of every chain edge.
bool sees_chain(const PolygonStructure& ps, const Point2& g, const BoundaryChain& chain);

bool certify_guard(const PolygonStructure& ps, const Guard& guard);

/// Maximal sub-span [u, v] of [s, t] visible from g and containing m, in the
/// caller's (lifted) parameter frame: s <= u <= m <= v <= t. nullopt when g
/// does not see the point at m. Throws std::domain_error when g is outside
/// the core of [s, t].
std::optional<std::pair<Coord, Coord>> max_visible_span(const PolygonStructure& ps,
                                                        const Point2& g, const Coord& s,
                                                        const Coord& m, const Coord& t);

/// Same, packaged as a saturating BoundaryChain.
std::optional<BoundaryChain> max_visible_chain(const PolygonStructure& ps, const Point2& g,
                                               const Coord& s, const Coord& m, const Coord& t);

/// Decides whether some guard (g, [s, t]) with g in `core` exists and
/// returns one witness guard. `core` must be the visibility core of a window
/// [i-1, j+1] with s in [i-1, i] and t in [j, j+1]. The candidate set is the
/// emptiness witness, the last segment intersection, the angle maximizer and
/// the two supporting-halfline exits; each candidate is verified before it
/// is returned.
std::optional<Guard> guard_exists(const PolygonStructure& ps, const VisibilityCore& core,
                                  const Coord& s, const Coord& t);

}  // namespace contigal
