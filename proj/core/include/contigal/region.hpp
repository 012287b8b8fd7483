#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "contigal/point.hpp"

namespace contigal {

/// Closed half-plane {p : a*x + b*y + c >= 0}, the region left of a directed
/// line. `source` is a caller tag (the lifted polygon edge index for cores).
struct HalfPlane {
  Rat a, b, c;
  int source = -1;

  /// Half-plane left of the directed line p -> q (p, q rational points).
  static HalfPlane left_of(const Point2& p, const Point2& q, int source = -1);

  Coord eval(const Point2& p) const { return Coord(a) * p.x + Coord(b) * p.y + Coord(c); }
  Rat eval_rat(const Rat& x, const Rat& y) const { return a * x + b * y + c; }
  /// Sign of the linear part only; the side a direction points toward.
  Rat eval_dir(const Rat& dx, const Rat& dy) const { return a * dx + b * dy; }
};

/// A boundary corner of a convex region: intersection point of the two
/// half-planes tagged src_in (incoming edge) and src_out (outgoing edge).
struct RegionVertex {
  Point2 p;
  int src_in;
  int src_out;
};

/// Exact intersection of closed half-planes.
///
/// The boundary is cached as a cyclic sequence of homogeneous points
/// (x, y, w), w >= 0; w == 0 encodes a direction at infinity. Each node
/// carries the source of the edge leaving it; arcs at infinity (bookkeeping
/// only, no boundary points) carry kInfinitySource. Every real edge with two
/// infinite endpoints keeps an interior finite node, so a nonempty region
/// always exposes a finite witness point. Unbounded, lower-dimensional and
/// single-point regions are all represented exactly.
class ConvexRegion {
 public:
  static constexpr int kInfinitySource = -1000000;

  struct Node {
    Rat x, y, w;
    int edge_source;  // source of edge to the next node
  };

  /// The whole plane (no constraints yet).
  ConvexRegion();

  static ConvexRegion intersection(const std::vector<HalfPlane>& planes);

  /// Intersect with h. Amortized cost is the cycle size.
  void clip(const HalfPlane& h);

  bool empty() const { return empty_; }
  const std::vector<Node>& cycle() const { return cycle_; }
  const std::vector<HalfPlane>& planes() const { return planes_; }

  /// Half-planes certifying emptiness (2 or 3 of them); empty unless empty().
  const std::vector<HalfPlane>& conflict() const { return conflict_; }

  /// Any point of the closed region; nullopt iff empty.
  std::optional<Point2> witness() const;

  bool contains(const Point2& p) const;

  /// Point maximizing dot(w, p). nullopt when the region is unbounded in
  /// direction w (or empty). Ties resolve to the lexicographically smallest.
  std::optional<Point2> extreme(const Rat& wx, const Rat& wy) const;

  /// Clip of {origin + t*dir : 0 <= t <= tmax} against the region; pass
  /// tmax = nullopt for a ray. Returns the parameter interval, nullopt when
  /// the intersection is empty, and {t0, nullopt} when unbounded.
  struct SegmentClip {
    Coord t_enter;
    std::optional<Coord> t_exit;
  };
  std::optional<SegmentClip> clip_line(const Point2& origin, const Point2& dir,
                                       const std::optional<Coord>& tmax) const;

  /// Last point of the ray origin + t*dir, t >= 0, inside the region.
  /// binding_source (optional out) reports the half-plane active at the exit.
  /// nullopt when the ray misses; throws std::domain_error when the region is
  /// unbounded along the ray.
  std::optional<Point2> ray_last(const Point2& origin, const Point2& dir,
                                 int* binding_source = nullptr) const;

  /// Finite boundary corners with their defining half-plane sources.
  std::vector<RegionVertex> vertices() const;

  /// Point of the region maximizing the angle spanned by u and v, for a
  /// region lying (weakly) left of the directed line u -> v. u, v must be
  /// rational. Ties resolve to the lexicographically smallest point.
  /// Throws std::domain_error if the precondition fails or region is empty.
  Point2 angle_max(const Point2& u, const Point2& v) const;

 private:
  void fix_infinite_real_edges();
  void dedupe();
  void record_conflict(const HalfPlane& h, const std::vector<Node>& old_cycle);

  bool empty_ = false;
  std::vector<Node> cycle_;
  std::vector<HalfPlane> planes_;
  std::vector<HalfPlane> conflict_;
};

}  // namespace contigal
