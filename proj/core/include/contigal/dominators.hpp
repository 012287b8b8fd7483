#pragma once

#include <optional>
#include <vector>

#include "contigal/visibility.hpp"

namespace contigal {

enum class GuardTag { GoodSegment, GoodAngle, Bad };

struct TaggedGuard {
  Guard guard;
  GuardTag tag;
  // Chain span in the birth window's lifted parameter frame.
  Coord lift_u, lift_v;
  // For bad guards: the defining core-vertex edge pair and birth window.
  int src_a = -1, src_b = -1;
  int window_i = -1, window_j = -1;
  // Sliding-sequence positions during which the core vertex was alive.
  long t_enter = -1, t_exit = -1;
};

struct DominatorSet {
  std::vector<TaggedGuard> guards;
};

/// Monotone walk over index pairs (i, j); consecutive deltas are (1,0) or
/// (0,1). Conforming: it visits the window of every (u, next(u)) pair.
struct SlidingSequence {
  std::vector<std::pair<int, int>> pairs;
};

/// Replays a sliding sequence, exposing the window core Core(i-1, j+1) and
/// the lookahead core Core(i-1, j+2) at every position.
class SigmaReplay {
 public:
  SigmaReplay(const Polygon& poly, const SlidingSequence& sigma);
  bool done() const { return pos_ + 1 >= sigma_.pairs.size(); }
  void step();
  size_t pos() const { return pos_; }
  int i() const { return sc_.i(); }
  int j() const { return sc_.j(); }
  const SlidingCore& window() const { return sc_; }

 private:
  const SlidingSequence& sigma_;
  SlidingCore sc_;
  size_t pos_ = 0;
};

/// The unique good dominator for the window (i, j), if it exists: the
/// segment-intersecting guard when the core meets the open chord i -> j, the
/// angle-maximizing guard when the core lies left of it, each completed to
/// its maximal visible chain containing [i, j]. For i == j the dominator is
/// the vertex guard (i, [i-1, i+1]).
std::optional<TaggedGuard> good_dominator(const PolygonStructure& ps, const VisibilityCore& core,
                                          int i, int j);

/// Sweep computing a linear-size superset of the reduced good dominators.
DominatorSet compute_Dprime(const PolygonStructure& ps);

/// Conforming sliding sequence via the guard-existence walk from (1, 2).
SlidingSequence compute_sigma(const PolygonStructure& ps);

/// Bad-dominator superset: one candidate guard per distinct core vertex over
/// the sliding sequence, completed to its maximal visible chain around its
/// defining edges. Guards carry their core-vertex lifetimes for the stabbing
/// structure.
DominatorSet compute_Bsigma(const PolygonStructure& ps, const SlidingSequence& sigma);

/// Ugly dominator for the point u in the window (i, j): shoot the supporting
/// line of the first edge of the geodesic u -> j+1 through the core, take
/// the last intersection g*, and complete to the maximal chain around j.
/// Returns a certified guard (g*, [u, v*]) or nullopt.
std::optional<Guard> ugly_dominator(const PolygonStructure& ps, const VisibilityCore& core,
                                    const Coord& u, int j, int* exit_edge_source = nullptr);

}  // namespace contigal
