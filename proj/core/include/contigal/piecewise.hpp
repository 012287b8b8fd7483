#pragma once

#include <vector>

#include "contigal/visibility.hpp"

namespace contigal {

/// One piece of the piecewise representation of next over [1, n+1).
/// Values are lifted: for x in [lo, hi), next(x) lies in (x, x+n].
struct MobiusPiece {
  Coord lo, hi;  // half-open [lo, hi)
  enum Kind { Constant, Mobius } kind;
  // Constant: next(x) == value, realized by `guard`.
  Coord value;
  Guard guard;
  // Mobius: next(x) = (A + Bx) / (C + Dx), strictly increasing on the piece.
  Rat A, B, C, D;

  Coord eval(const Coord& x) const;
};

struct PiecewiseNext {
  std::vector<MobiusPiece> pieces;  // ordered, interior-disjoint, covering [1, n+1)
  long fallback_splits = 0;         // ambiguous configurations resolved by splitting

  const MobiusPiece& piece_at(const Coord& x) const;
  Coord eval(const Coord& x) const;
};

class Engine;

/// Builds the piecewise representation; requires that no solution with at
/// most 3 guards exists (throws std::domain_error otherwise).
PiecewiseNext build_piecewise_next(Engine& engine);

}  // namespace contigal
