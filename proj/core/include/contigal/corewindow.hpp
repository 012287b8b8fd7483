#pragma once

#include <deque>
#include <map>
#include <vector>

#include "contigal/polygon.hpp"
#include "contigal/region.hpp"

namespace contigal {

/// A visibility core is the intersection of the half-planes left of every
/// polygon edge meeting an open boundary chain.
using VisibilityCore = ConvexRegion;

/// Half-plane left of lifted edge m (edge index wraps modulo n; the source
/// tag keeps the lifted index).
HalfPlane edge_halfplane(const Polygon& poly, long lifted_edge);

/// Lifted edge indices m whose open edge (m, m+1) meets the open chain (u, v).
std::vector<long> chain_edges(const Polygon& poly, const Coord& u, const Coord& v);

/// Core of the chain [u, v]; the full boundary yields the kernel.
VisibilityCore core_of_chain(const Polygon& poly, const BoundaryChain& chain);
VisibilityCore core_of_chain(const Polygon& poly, const Coord& u, const Coord& v);
VisibilityCore kernel(const Polygon& poly);

/// Sliding window over index pairs (i, j): caches the cores of the chains
/// [i-1, j+1] and [i-1, j+2] under first-in-first-out half-plane updates,
/// and logs core-vertex lifetimes.
///
/// Incrementing j re-uses the lookahead core; incrementing i rebuilds from
/// the retained half-plane queue (worst-case linear per update, which is the
/// documented desk-scale trade-off).
class SlidingCore {
 public:
  SlidingCore(const Polygon& poly, int i, int j);

  int i() const { return i_; }
  int j() const { return j_; }
  long step() const { return step_; }

  /// Window span cap: j may grow until the chain [i-1, j+1] covers one full
  /// revolution (j <= i + n - 1); beyond that every core is the kernel.
  bool can_advance_j() const;
  void advance_i();
  void advance_j();

  const VisibilityCore& core() const { return w1_; }
  /// Core(i-1, j+2), for lookahead queries.
  const VisibilityCore& lookahead() const { return w2_; }

  struct Lifetime {
    Point2 p;
    int src_in, src_out;  // lifted defining edges
    long enter_step;
    long exit_step;  // -1 while the vertex is still on the core
  };
  const std::vector<Lifetime>& lifetimes() const { return lifetimes_; }
  /// Total vertex insertions + removals observed so far.
  long vertex_events() const { return events_; }
  /// Number of times a vertex re-entered after leaving (0 in theory).
  long readmission_violations() const { return readmissions_; }

 private:
  void rebuild();
  void refresh_lookahead();
  void log_diff();

  const Polygon& poly_;
  int i_, j_;
  long step_ = 0;
  std::deque<HalfPlane> planes_;  // half-planes of lifted edges i-1 .. j
  VisibilityCore w1_, w2_;

  struct RatPairLess {
    bool operator()(const std::pair<Rat, Rat>& a, const std::pair<Rat, Rat>& b) const {
      int c = cmp(a.first, b.first);
      if (c != 0) return c < 0;
      return cmp(a.second, b.second) < 0;
    }
  };
  std::map<std::pair<Rat, Rat>, long, RatPairLess> alive_;   // point -> lifetime index
  std::map<std::pair<Rat, Rat>, bool, RatPairLess> known_;   // true once dead
  std::vector<Lifetime> lifetimes_;
  long events_ = 0;
  long readmissions_ = 0;
};

}  // namespace contigal
