#include "contigal/next_oracle.hpp"

#include <stdexcept>

namespace contigal {

namespace {

struct Seg {
  Point2 a, b;
};

// Visibility windows of the boundary point w: for every reflex vertex R
// visible from w, the segment from R to the boundary point hit by extending
// w->R beyond R. These segments carry the non-polygon part of the
// visibility-region boundary of w.
std::vector<Seg> visibility_windows(const PolygonStructure& ps, int w_tri, const Point2& w) {
  const Polygon& poly = ps.polygon();
  std::vector<Seg> out;
  for (int r = 1; r <= poly.n(); ++r) {
    if (!poly.is_reflex(r)) continue;
    const Point2& rp = poly.vertex(r);
    if (rp == w) continue;
    if (!ps.walk_visible(w_tri, w, rp)) continue;
    Point2 dir = rp - w;
    PolygonStructure::RayHit hit = ps.ray_shoot_hint(w_tri, w, dir);
    if (hit.point == rp) continue;  // the ray exits exactly at the reflex vertex
    out.push_back({rp, hit.point});
  }
  return out;
}

std::optional<Point2> seg_seg_intersection(const Seg& s, const Seg& t) {
  Point2 d1 = s.b - s.a, d2 = t.b - t.a;
  Coord den = cross(d1, d2);
  if (den.sign() == 0) return std::nullopt;
  Coord t1 = cross(t.a - s.a, d2) / den;
  Coord t2 = cross(t.a - s.a, d1) / den;
  if (t1.sign() < 0 || t1 > Coord(1)) return std::nullopt;
  if (t2.sign() < 0 || t2 > Coord(1)) return std::nullopt;
  return Point2(s.a.x + t1 * d1.x, s.a.y + t1 * d1.y);
}

std::optional<Point2> seg_line_intersection(const Seg& s, const HalfPlane& h) {
  Coord fa = h.eval(s.a), fb = h.eval(s.b);
  int sa = fa.sign(), sb = fb.sign();
  if (sa == 0) return s.a;
  if (sb == 0) return s.b;
  if (sa == sb) return std::nullopt;
  Coord t = fa / (fa - fb);
  Point2 d = s.b - s.a;
  return Point2(s.a.x + t * d.x, s.a.y + t * d.y);
}

}  // namespace

std::optional<Point2> oracle_guard_for(const PolygonStructure& ps, const Coord& u, const Coord& v) {
  const Polygon& poly = ps.polygon();
  if (v < u || v > u + Coord(Rat(poly.n()))) throw std::invalid_argument("oracle_guard_for: bad chain");
  Point2 pu = poly.boundary_point(poly.normalize_param(u));
  Point2 pv = poly.boundary_point(poly.normalize_param(v));
  int tri_u = ps.triangle_at_param(u);
  int tri_v = ps.triangle_at_param(v);
  if (u == v) return pu;

  VisibilityCore core = core_of_chain(poly, u, v);
  if (core.empty()) return std::nullopt;

  auto test = [&](const Point2& g) -> bool {
    if (!core.contains(g)) return false;
    if (!(g == pu) && !ps.walk_visible(tri_u, pu, g)) return false;
    if (!(g == pv) && !ps.walk_visible(tri_v, pv, g)) return false;
    return true;
  };

  // Cheap candidates first: core witness, chain ends, core corners.
  if (auto w = core.witness()) {
    if (test(*w)) return *w;
  }
  if (test(pu)) return pu;
  if (!(pv == pu) && test(pv)) return pv;
  for (const RegionVertex& cv : core.vertices()) {
    if (test(cv.p)) return cv.p;
  }

  // Full enumeration over the arrangement of window segments, polygon edges
  // and core boundary lines.
  std::vector<Seg> segs = visibility_windows(ps, tri_u, pu);
  {
    std::vector<Seg> wv = visibility_windows(ps, tri_v, pv);
    segs.insert(segs.end(), wv.begin(), wv.end());
  }
  size_t n_windows = segs.size();
  for (int m = 1; m <= poly.n(); ++m) segs.push_back({poly.vertex(m), poly.vertex(m + 1)});

  std::vector<Point2> cands;
  for (size_t a = 0; a < segs.size(); ++a) {
    // Window endpoints (polygon-edge endpoints are covered by the vertex loop).
    if (a < n_windows) {
      cands.push_back(segs[a].a);
      cands.push_back(segs[a].b);
    }
    for (size_t b = a + 1; b < segs.size(); ++b) {
      if (a >= n_windows && b >= n_windows) continue;  // edge-edge meets only at vertices
      if (auto p = seg_seg_intersection(segs[a], segs[b])) cands.push_back(*p);
    }
    for (const HalfPlane& h : core.planes()) {
      if (auto p = seg_line_intersection(segs[a], h)) cands.push_back(*p);
    }
  }
  for (int m = 1; m <= poly.n(); ++m) cands.push_back(poly.vertex(m));

  for (const Point2& g : cands) {
    if (test(g)) return g;
  }
  return std::nullopt;
}

NextValue next_oracle(const PolygonStructure& ps, const Coord& u, const Rat& tol) {
  const Polygon& poly = ps.polygon();
  if (sgn(tol) <= 0) throw std::invalid_argument("next_oracle: tol must be positive");
  Coord period{Rat(poly.n())};
  Coord un = poly.normalize_param(u);

  NextValue out;
  if (auto g = oracle_guard_for(ps, un, un + period)) {
    out.v = un + period;
    out.full = true;
    out.guard = Guard{*g, make_chain(poly, un, un + period)};
    return out;
  }
  Coord lo = un;  // a boundary point trivially guards [u, u]
  Point2 lo_witness = poly.boundary_point(un);
  Coord hi = un + period;
  Coord tolc{tol};
  while (hi - lo > tolc) {
    Coord mid = (lo + hi) / Coord(2);
    if (auto g = oracle_guard_for(ps, un, mid)) {
      lo = mid;
      lo_witness = *g;
    } else {
      hi = mid;
    }
  }
  out.v = lo;
  out.full = false;
  out.guard = Guard{lo_witness, make_chain(poly, un, lo)};
  return out;
}

}  // namespace contigal
