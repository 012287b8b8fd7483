#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "contigal/polygon.hpp"

namespace contigal {

/// Shortest path between two points inside a simple polygon. Interior
/// vertices are always polygon vertices.
struct GeodesicPath {
  std::vector<Point2> pts;  // s first, t last

  const Point2& s() const { return pts.front(); }
  const Point2& t() const { return pts.back(); }
  bool is_segment() const { return pts.size() <= 2; }
};

enum class TurnKind { AllLeft, AllRight, Mixed };

struct TurnInfo {
  TurnKind kind;
  /// For Mixed: index k such that path edge pts[k] -> pts[k+1] enters with a
  /// left turn and exits with a right turn.
  int mixed_edge = -1;
};

/// Per-polygon preprocessed structure: ear-clipping triangulation with dual
/// tree, funnel shortest paths, and exact ray shooting by triangle walking.
/// Build once, then query concurrently (all queries are const).
class PolygonStructure {
 public:
  struct Tri {
    int v[3];   // vertex indices, 0-based, CCW
    int nb[3];  // neighbor across edge (v[k], v[k+1]), -1 on the boundary
  };

  explicit PolygonStructure(const Polygon& poly);

  const Polygon& polygon() const { return poly_; }
  const std::vector<Tri>& triangles() const { return tris_; }

  /// Triangle containing the boundary point at parameter t (lifted params ok).
  int triangle_at_param(const Coord& t) const;

  /// Exact point location, O(n); -1 when p lies outside the closed polygon.
  int locate(const Point2& p) const;
  /// Closed containment test, O(n).
  bool contains(const Point2& p) const;

  /// Whether the closed segment from `from` (inside triangle `from_tri`)
  /// to `to` stays inside the polygon; grazing along the boundary counts as
  /// inside. On success returns the triangle containing `to`.
  std::optional<int> walk_visible(int from_tri, const Point2& from, const Point2& to) const;

  GeodesicPath shortest_path(const Point2& s, const Point2& t) const;
  GeodesicPath shortest_path_hint(int s_tri, const Point2& s, int t_tri, const Point2& t) const;

  /// First edge of the geodesic s -> t as a directed segment from s.
  std::pair<Point2, Point2> first_edge(const Point2& s, const Point2& t) const;

  static TurnInfo turn_profile(const GeodesicPath& path);

  struct RayHit {
    Coord param;  // canonical boundary parameter in [1, n+1)
    Point2 point;
  };
  /// First point where the open ray truly exits the polygon; contacts that
  /// graze a reflex vertex and continue inside are passed through. A hit at
  /// a vertex reports the vertex parameter.
  RayHit ray_shoot(const Point2& origin, const Point2& dir) const;
  RayHit ray_shoot_hint(int origin_tri, const Point2& origin, const Point2& dir) const;

  /// Boundary parameter of a point known to lie on edge `lifted_edge`.
  Coord param_on_edge(long lifted_edge, const Point2& p) const;

 private:
  struct WalkStop {
    bool reached;      // target reached (walk_visible) — never set for rays
    int tri;           // triangle containing the target when reached
    long hit_edge;     // 1-based boundary edge when blocked on an edge, else 0
    long hit_vertex;   // 1-based vertex when blocked at a vertex, else 0
    Point2 hit;
  };
  WalkStop walk(int tri, Point2 cur, const Point2& dir, const Point2* target) const;
  std::vector<int> tri_path(int a, int b) const;

  const Polygon& poly_;
  std::vector<Tri> tris_;
  std::vector<int> vert_tri_;               // one incident triangle per vertex
  std::vector<std::vector<int>> vert_tris_; // all incident triangles per vertex
  std::vector<int> edge_tri_;               // triangle incident to boundary edge m (0-based)
  std::vector<int> parent_, depth_;         // dual tree rooted at triangle 0
};

}  // namespace contigal
