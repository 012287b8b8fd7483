#pragma once

#include <memory>
#include <optional>

#include "contigal/dominators.hpp"
#include "contigal/piecewise.hpp"
#include "contigal/stab.hpp"

namespace contigal {

/// next(u) packaged: the farthest lifted parameter v in [u, u+n] such that a
/// single guard sees [u, v], the realizing guard, and the saturation flag
/// (v == u+n certifies full coverage).
struct NextValue {
  Coord v;
  bool full = false;
  Guard guard;
};

struct Solution {
  int k = 0;
  std::vector<Guard> guards;
  Coord start;
};

/// Solver pipeline for one validated polygon: preprocessed structure,
/// dominator supersets, conforming sliding sequence, stabbing index, and the
/// solvers on top. Single-owner; build once per polygon.
class Engine {
 public:
  explicit Engine(const Polygon& poly);

  const Polygon& polygon() const { return poly_; }
  const PolygonStructure& structure() const { return ps_; }

  /// Builds sigma, D', B_sigma and the stabbing structures (idempotent).
  void build_pipeline();
  const SlidingSequence& sigma() {
    build_pipeline();
    return sigma_;
  }
  const DominatorSet& dprime() {
    build_pipeline();
    return dprime_;
  }
  const DominatorSet& bsigma() {
    build_pipeline();
    return bsigma_;
  }
  const RectStab& bad_guard_stab() {
    build_pipeline();
    return *rect_stab_;
  }
  const IntervalMaxStab& guard_stab() {
    build_pipeline();
    return *stab_;
  }
  /// All stored guards behind the stabbing index, D' then B_sigma.
  const std::vector<const TaggedGuard*>& stored_guards() {
    build_pipeline();
    return stored_;
  }

  /// Greedy starts: polygon vertices plus the chain start of every D' guard.
  std::vector<Coord> starts();

  /// next(x) for every x (canonical parameters in [1, n+1)), one sliding
  /// sweep for the whole batch. Results in input order.
  std::vector<NextValue> next_batch(const std::vector<Coord>& xs);
  NextValue next_point(const Coord& x);

  /// Nonempty-kernel shortcut: a single guard covering the whole boundary.
  std::optional<Guard> kernel_guard();

  Solution solve_greedy();
  std::optional<Solution> has_solution_of_size(int K);
  Solution solve();

  const PiecewiseNext& piecewise();

 private:
  friend PiecewiseNext build_piecewise_next(Engine&);

  struct Resolution {
    Coord v;
    Guard guard;
  };
  Resolution resolve_window(const Coord& x, int j, const SlidingCore& window, const Coord& cap);
  Solution materialize(const Coord& start, int k);

  Polygon poly_;
  PolygonStructure ps_;

  bool pipeline_built_ = false;
  SlidingSequence sigma_;
  DominatorSet dprime_, bsigma_;
  std::vector<const TaggedGuard*> stored_;
  std::unique_ptr<IntervalMaxStab> stab_;
  std::unique_ptr<RectStab> rect_stab_;

  std::optional<PiecewiseNext> piecewise_;
  std::optional<bool> solvable3_;  // cached has_solution_of_size(3) verdict
  std::optional<Solution> sol3_;
};

}  // namespace contigal
