#include "contigal/visibility.hpp"

#include <stdexcept>

namespace contigal {

namespace {

// Visibility via a triangle walk anchored at a point with a known triangle.
bool visible_from(const PolygonStructure& ps, int from_tri, const Point2& from, const Point2& to) {
  return ps.walk_visible(from_tri, from, to).has_value();
}

// Lift of the canonical parameter p into (anchor - n, anchor].
Coord lift_below(const Coord& p, const Coord& anchor, int n) {
  Coord period{Rat(n)};
  Coord r = p;
  while (r > anchor) r -= period;
  while (r + period <= anchor) r += period;
  return r;
}

// Lift of p into [anchor, anchor + n).
Coord lift_above(const Coord& p, const Coord& anchor, int n) {
  Coord period{Rat(n)};
  Coord r = p;
  while (r < anchor) r += period;
  while (r - period >= anchor) r -= period;
  return r;
}

}  // namespace

bool sees(const PolygonStructure& ps, const Point2& g, const Point2& p) {
  int t = ps.locate(g);
  if (t < 0) throw std::invalid_argument("sees: point outside polygon");
  return visible_from(ps, t, g, p);
}

bool sees_chain(const PolygonStructure& ps, const Point2& g, const BoundaryChain& chain) {
  const Polygon& poly = ps.polygon();
  // Left of all chain-edge supporting lines.
  for (long m : chain_edges(poly, chain.u, chain.v)) {
    if (edge_halfplane(poly, m).eval(g).sign() < 0) return false;
  }
  // Sees every chain vertex (walks anchored at the boundary side).
  auto check_param = [&](const Coord& t) {
    Point2 w = poly.boundary_point(poly.normalize_param(t));
    return visible_from(ps, ps.triangle_at_param(t), w, g);
  };
  if (!check_param(chain.u)) return false;
  if (!check_param(chain.v)) return false;
  long first = chain.u.floor_long() + 1;
  if (Coord(Rat(first - 1)) == chain.u) first -= 1;
  for (long k = first; Coord(Rat(k)) <= chain.v; ++k) {
    if (!check_param(Coord(Rat(k)))) return false;
  }
  return true;
}

bool certify_guard(const PolygonStructure& ps, const Guard& guard) {
  return sees_chain(ps, guard.g, guard.chain);
}

std::optional<std::pair<Coord, Coord>> max_visible_span(const PolygonStructure& ps,
                                                        const Point2& g, const Coord& s,
                                                        const Coord& m, const Coord& t) {
  const Polygon& poly = ps.polygon();
  const int n = poly.n();
  if (s > m || m > t) throw std::invalid_argument("max_visible_span: need s <= m <= t");
  for (long e : chain_edges(poly, s, t)) {
    if (edge_halfplane(poly, e).eval(g).sign() < 0)
      throw std::domain_error("max_visible_span: g outside the chain core");
  }
  Point2 mp = poly.boundary_point(poly.normalize_param(m));
  int m_tri = ps.triangle_at_param(m);
  auto g_tri = ps.walk_visible(m_tri, mp, g);
  if (!g_tri) return std::nullopt;

  auto side_hit = [&](const Coord& target_param, bool low_side) -> Coord {
    Point2 tp = poly.boundary_point(poly.normalize_param(target_param));
    if (tp == g) return target_param;  // g sits on the boundary at the target
    GeodesicPath path = ps.shortest_path_hint(*g_tri, g, ps.triangle_at_param(target_param), tp);
    Point2 dir = path.pts[1] - path.pts[0];
    PolygonStructure::RayHit hit = ps.ray_shoot_hint(*g_tri, g, dir);
    return low_side ? lift_below(hit.param, m, n) : lift_above(hit.param, m, n);
  };

  Coord u = (m == s) ? s : side_hit(s, true);
  if (u < s) u = s;
  if (u > m) u = m;  // grazing artifacts clamp to the anchor
  Coord v = (m == t) ? t : side_hit(t, false);
  if (v > t) v = t;
  if (v < m) v = m;
  return std::make_pair(u, v);
}

std::optional<BoundaryChain> max_visible_chain(const PolygonStructure& ps, const Point2& g,
                                               const Coord& s, const Coord& m, const Coord& t) {
  auto span = max_visible_span(ps, g, s, m, t);
  if (!span) return std::nullopt;
  return make_chain(ps.polygon(), span->first, span->second);
}

std::optional<Guard> guard_exists(const PolygonStructure& ps, const VisibilityCore& core,
                                  const Coord& s, const Coord& t) {
  const Polygon& poly = ps.polygon();
  if (t < s) throw std::invalid_argument("guard_exists: t < s");
  if (s == t) {
    return Guard{poly.boundary_point(poly.normalize_param(s)), make_chain(poly, s, s)};
  }
  // i* = s+1 for integer s, else ceil(s); j* mirrors it on the other side.
  long istar = s.floor_long() + 1;
  long jstar = (Coord(Rat(t.floor_long())) == t) ? t.floor_long() - 1 : t.floor_long();
  if (istar >= jstar) {
    // A single vertex sees the whole span [s, t] (it lies on its two edges).
    Guard guard{poly.vertex(istar), make_chain(poly, s, t)};
    if (certify_guard(ps, guard)) return guard;
    return std::nullopt;
  }
  if (core.empty()) return std::nullopt;

  std::vector<Point2> candidates;
  auto wit = core.witness();
  if (wit) candidates.push_back(*wit);

  Point2 pi = poly.vertex(istar);
  Point2 pj = poly.vertex(jstar);
  Point2 dij = pj - pi;
  // Last point of the segment i* -> j* inside the core.
  if (auto clip = core.clip_line(pi, dij, Coord(1))) {
    Coord hi = clip->t_exit ? *clip->t_exit : Coord(1);
    if (hi > Coord(1)) hi = Coord(1);
    if (clip->t_enter <= hi && hi.sign() > 0 && clip->t_enter < Coord(1)) {
      candidates.emplace_back(pi.x + hi * dij.x, pi.y + hi * dij.y);
    }
  }
  // Angle maximizer, applicable when the core lies weakly left of i* -> j*.
  bool weakly_left = true;
  for (const auto& node : core.cycle()) {
    if (sgn(node.w) == 0) {
      if (sgn(dij.x.as_rat() * node.y - dij.y.as_rat() * node.x) < 0) {
        weakly_left = false;
        break;
      }
    } else {
      Point2 p(Coord(Rat(node.x / node.w)), Coord(Rat(node.y / node.w)));
      if (orient(pi, pj, p) < 0) {
        weakly_left = false;
        break;
      }
    }
  }
  if (weakly_left) {
    if (core.contains(pi)) {
      candidates.push_back(pi);
    } else if (core.contains(pj)) {
      candidates.push_back(pj);
    } else {
      candidates.push_back(core.angle_max(pi, pj));
    }
  }
  // Supporting halflines of the first/last geodesic edge for the reflex case.
  Point2 sp = poly.boundary_point(poly.normalize_param(s));
  Point2 tp = poly.boundary_point(poly.normalize_param(t));
  GeodesicPath path = ps.shortest_path_hint(ps.triangle_at_param(s), sp, ps.triangle_at_param(t), tp);
  TurnInfo turns = PolygonStructure::turn_profile(path);
  if (!path.is_segment() && turns.kind == TurnKind::AllLeft) {
    try {
      Point2 d1 = path.pts[1] - path.pts[0];
      if (auto g1 = core.ray_last(sp, d1)) candidates.push_back(*g1);
    } catch (const std::domain_error&) {
    }
    try {
      size_t k = path.pts.size();
      Point2 d2 = path.pts[k - 2] - path.pts[k - 1];
      if (auto g2 = core.ray_last(tp, d2)) candidates.push_back(*g2);
    } catch (const std::domain_error&) {
    }
  }

  for (const Point2& g : candidates) {
    auto span = max_visible_span(ps, g, s, s, t);
    if (span && span->first == s && span->second == t) {
      return Guard{g, make_chain(poly, s, t)};
    }
  }
  return std::nullopt;
}

}  // namespace contigal
