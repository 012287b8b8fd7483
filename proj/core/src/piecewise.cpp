#include "contigal/piecewise.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "contigal/solver.hpp"

namespace contigal {

Coord MobiusPiece::eval(const Coord& x) const {
  if (kind == Constant) return value;
  return (Coord(A) + Coord(B) * x) / (Coord(C) + Coord(D) * x);
}

const MobiusPiece& PiecewiseNext::piece_at(const Coord& x) const {
  size_t lo = 0, hi = pieces.size();
  while (lo + 1 < hi) {
    size_t mid = (lo + hi) / 2;
    if (pieces[mid].lo <= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return pieces[lo];
}

Coord PiecewiseNext::eval(const Coord& x) const { return piece_at(x).eval(x); }

namespace {

// ---- guard-value envelope ---------------------------------------------

struct EnvPiece {
  Coord from, to;
  bool has = false;
  Coord value;
  const TaggedGuard* guard = nullptr;
};

// Upper envelope over x in [1, n+1) of v(guard) for guards whose chain
// covers [x, v]; both parameter lifts of every stored chain contribute.
std::vector<EnvPiece> build_envelope(const Polygon& poly,
                                     const std::vector<const TaggedGuard*>& guards) {
  const Coord lo{1};
  const Coord hi{Rat(poly.n() + 1)};
  const Coord period{Rat(poly.n())};
  struct Event {
    Coord x;
    bool open;
    Coord value;
    size_t idx;
  };
  std::vector<Event> events;
  for (size_t k = 0; k < guards.size(); ++k) {
    const BoundaryChain& c = guards[k]->guard.chain;
    auto add = [&](Coord a, Coord b, const Coord& val) {
      if (a < lo) a = lo;
      if (b > hi) b = hi;
      if (a >= b) return;
      events.push_back({a, true, val, k});
      events.push_back({b, false, val, k});
    };
    add(c.u, c.v, c.v);
    add(c.u - period, c.v - period, c.v - period);
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    int c = Coord::compare(a.x, b.x);
    if (c != 0) return c < 0;
    return a.open > b.open;  // opens before closes at equal coordinates
  });

  struct ActiveLess {
    bool operator()(const std::pair<Coord, size_t>& a, const std::pair<Coord, size_t>& b) const {
      int c = Coord::compare(a.first, b.first);
      if (c != 0) return c > 0;  // max first
      return a.second < b.second;
    }
  };
  std::multiset<std::pair<Coord, size_t>, ActiveLess> active;
  std::vector<EnvPiece> out;
  Coord cursor = lo;
  size_t e = 0;
  auto flush_to = [&](const Coord& x) {
    if (cursor >= x) return;
    EnvPiece p;
    p.from = cursor;
    p.to = x;
    if (!active.empty()) {
      p.has = true;
      p.value = active.begin()->first;
      p.guard = guards[active.begin()->second];
    }
    out.push_back(p);
    cursor = x;
  };
  while (e < events.size()) {
    Coord x = events[e].x;
    flush_to(x);
    while (e < events.size() && events[e].x == x) {
      if (events[e].open) {
        active.insert({events[e].value, events[e].idx});
      } else {
        active.erase(active.find({events[e].value, events[e].idx}));
      }
      ++e;
    }
  }
  flush_to(hi);
  if (out.empty()) out.push_back({lo, hi, false, Coord(0), nullptr});
  return out;
}

const EnvPiece& env_at(const std::vector<EnvPiece>& env, const Coord& x) {
  size_t lo = 0, hi = env.size();
  while (lo + 1 < hi) {
    size_t mid = (lo + hi) / 2;
    if (env[mid].from <= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return env[lo];
}

// ---- symbolic configuration of the ugly dominator ----------------------

struct LinPoint {
  // Homogeneous point with coordinates linear in u: (x0 + u x1, y0 + u y1, w0 + u w1).
  Rat x0, x1, y0, y1, w0, w1;
};

struct LinLine {
  // Line coefficients linear in u.
  Rat a0, a1, b0, b1, c0, c1;
};

LinLine join(const LinPoint& p, const Rat& qx, const Rat& qy) {
  // Cross product p x (qx, qy, 1).
  LinLine l;
  l.a0 = p.y0 - qy * p.w0;
  l.a1 = p.y1 - qy * p.w1;
  l.b0 = qx * p.w0 - p.x0;
  l.b1 = qx * p.w1 - p.x1;
  l.c0 = p.x0 * qy - p.y0 * qx;
  l.c1 = p.x1 * qy - p.y1 * qx;
  return l;
}

LinPoint meet(const LinLine& l, const Rat& ea, const Rat& eb, const Rat& ec) {
  // Cross product l x (ea, eb, ec).
  LinPoint p;
  p.x0 = l.b0 * ec - l.c0 * eb;
  p.x1 = l.b1 * ec - l.c1 * eb;
  p.y0 = l.c0 * ea - l.a0 * ec;
  p.y1 = l.c1 * ea - l.a1 * ec;
  p.w0 = l.a0 * eb - l.b0 * ea;
  p.w1 = l.a1 * eb - l.b1 * ea;
  return p;
}

struct UglyConfig {
  bool has_gstar = false;
  bool valid = false;
  Point2 X1, Y1, gstar;
  int exit_src = -1;
  LinPoint gh;        // g*(u), homogeneous linear
  Rat A, B, C, D;     // next(u) = (A + Bu)/(C + Du)
  Coord value_probe;  // certified value at the probe
  Guard probe_guard;  // realizing guard at the probe
  bool increasing = false;  // sign of BC - AD
};

Coord lin_eval_x(const LinPoint& p, const Coord& u) {
  Coord w = Coord(p.w0) + Coord(p.w1) * u;
  return (Coord(p.x0) + Coord(p.x1) * u) / w;
}
Coord lin_eval_y(const LinPoint& p, const Coord& u) {
  Coord w = Coord(p.w0) + Coord(p.w1) * u;
  return (Coord(p.y0) + Coord(p.y1) * u) / w;
}

struct SweepState {
  const PolygonStructure& ps;
  const Polygon& poly;
  std::vector<int> reflex;  // 1-based reflex vertex indices
  std::vector<EnvPiece> env;
  PiecewiseNext out;
};

UglyConfig make_ugly_config(SweepState& st, const VisibilityCore& core, const Coord& x, int i,
                            int j) {
  UglyConfig cfg;
  const Polygon& poly = st.poly;
  Point2 px = poly.boundary_point(poly.normalize_param(x));
  Point2 pt = poly.boundary_point(poly.normalize_param(Coord(Rat(j + 1))));
  if (px == pt || core.empty()) return cfg;
  GeodesicPath path = st.ps.shortest_path_hint(st.ps.triangle_at_param(x), px,
                                               st.ps.triangle_at_param(Coord(Rat(j + 1))), pt);
  cfg.X1 = path.pts[1];
  Point2 dir = cfg.X1 - px;
  int exit_src = -1;
  std::optional<Point2> gstar;
  try {
    gstar = core.ray_last(px, dir, &exit_src);
  } catch (const std::domain_error&) {
    return cfg;
  }
  if (!gstar || exit_src == ConvexRegion::kInfinitySource || exit_src < 0) return cfg;
  cfg.has_gstar = true;
  cfg.gstar = *gstar;
  cfg.exit_src = exit_src;

  // P(u) on edge i-1, linear in u.
  const Point2& va = poly.vertex(i - 1);
  const Point2& vb = poly.vertex(i);
  Rat ax = va.x.as_rat(), ay = va.y.as_rat();
  Rat ex = vb.x.as_rat() - ax, ey = vb.y.as_rat() - ay;
  LinPoint ph;
  ph.x0 = ax - Rat(i - 1) * ex;
  ph.x1 = ex;
  ph.y0 = ay - Rat(i - 1) * ey;
  ph.y1 = ey;
  ph.w0 = 1;
  ph.w1 = 0;

  HalfPlane eplane = edge_halfplane(poly, exit_src);
  LinLine l1 = join(ph, cfg.X1.x.as_rat(), cfg.X1.y.as_rat());
  cfg.gh = meet(l1, eplane.a, eplane.b, eplane.c);

  // Right pivot: first vertex of the geodesic g* -> j+1.
  GeodesicPath path2 = st.ps.shortest_path_hint(st.ps.locate(cfg.gstar), cfg.gstar,
                                                st.ps.triangle_at_param(Coord(Rat(j + 1))), pt);
  if (path2.pts.size() < 2) return cfg;
  cfg.Y1 = path2.pts[1];

  HalfPlane jplane = edge_halfplane(poly, j);
  LinLine l2 = join(cfg.gh, cfg.Y1.x.as_rat(), cfg.Y1.y.as_rat());
  LinPoint wh = meet(l2, jplane.a, jplane.b, jplane.c);

  // Parameter on edge j along the dominant axis.
  const Point2& vj = poly.vertex(j);
  const Point2& vj1 = poly.vertex(j + 1);
  Rat djx = vj1.x.as_rat() - vj.x.as_rat();
  Rat djy = vj1.y.as_rat() - vj.y.as_rat();
  bool use_x = rat_abs(djx) >= rat_abs(djy);
  Rat base = use_x ? vj.x.as_rat() : vj.y.as_rat();
  Rat dj = use_x ? djx : djy;
  const Rat& wn0 = use_x ? wh.x0 : wh.y0;
  const Rat& wn1 = use_x ? wh.x1 : wh.y1;
  // v(u) = j + ((wn/ww) - base)/dj = (wn + (j*dj - base) ww) / (dj ww)
  Rat off = Rat(j) * dj - base;
  cfg.A = wn0 + off * wh.w0;
  cfg.B = wn1 + off * wh.w1;
  cfg.C = dj * wh.w0;
  cfg.D = dj * wh.w1;

  // Validity at the probe: the guard must cover back to x, and the value
  // must land in the regime window and agree with the formula.
  std::optional<std::pair<Coord, Coord>> span;
  try {
    span = max_visible_span(st.ps, cfg.gstar, x, Coord(Rat(j)), Coord(Rat(j + 1)));
  } catch (const std::domain_error&) {
    return cfg;
  }
  if (!span || span->first > x) return cfg;
  Coord denom = Coord(cfg.C) + Coord(cfg.D) * x;
  if (denom.sign() == 0) return cfg;
  Coord formula = (Coord(cfg.A) + Coord(cfg.B) * x) / denom;
  if (formula != span->second) return cfg;  // inconsistent: leave invalid
  if (span->second <= Coord(Rat(j)) || span->second > Coord(Rat(j + 1))) return cfg;
  cfg.valid = true;
  cfg.value_probe = span->second;
  cfg.probe_guard = Guard{cfg.gstar, make_chain(poly, x, span->second)};
  cfg.increasing = sgn(Rat(cfg.B * cfg.C - cfg.A * cfg.D)) > 0;
  return cfg;
}

// Root of a0 + a1*u = 0 inside (lo, hi).
void add_linear_root(std::vector<Coord>& roots, const Rat& a0, const Rat& a1, const Coord& lo,
                     const Coord& hi) {
  if (sgn(a1) == 0) return;
  Coord r{Rat(-a0 / a1)};
  if (lo < r && r < hi) roots.push_back(r);
}

// Roots of a + b*u + c*u^2 = 0 inside (lo, hi).
void add_quadratic_roots(std::vector<Coord>& roots, const Rat& a, const Rat& b, const Rat& c,
                         const Coord& lo, const Coord& hi) {
  if (sgn(c) == 0) {
    add_linear_root(roots, a, b, lo, hi);
    return;
  }
  Rat disc = b * b - 4 * a * c;
  int sd = sgn(disc);
  if (sd < 0) return;
  Coord r1{Rat(-b / (2 * c)), Rat(Rat(1) / (2 * c)), disc};
  Coord r2{Rat(-b / (2 * c)), Rat(Rat(-1) / (2 * c)), disc};
  if (lo < r1 && r1 < hi) roots.push_back(r1);
  if (sd > 0 && lo < r2 && r2 < hi) roots.push_back(r2);
}

// cross(A - P(u), R - P(u)) as a linear polynomial in u, for P(u) linear.
void sightline_poly(const LinPoint& ph, const Point2& A, const Point2& R, Rat* c0, Rat* c1) {
  // cross(A,R) - cross(A,P) + cross(R,P); P = (px0 + u px1, py0 + u py1).
  Rat axx = A.x.as_rat(), ayy = A.y.as_rat();
  Rat rxx = R.x.as_rat(), ryy = R.y.as_rat();
  Rat k = axx * ryy - ayy * rxx;
  // -cross(A,P) = -(ax*Py - ay*Px) ; +cross(R,P) = rx*Py - ry*Px
  *c0 = k - axx * ph.y0 + ayy * ph.x0 + rxx * ph.y0 - ryy * ph.x0;
  *c1 = -axx * ph.y1 + ayy * ph.x1 + rxx * ph.y1 - ryy * ph.x1;
}

// det[gh(u); Rh; Qh] with gh linear homogeneous, R and Q fixed affine points.
void det_gh_point_point(const LinPoint& gh, const Point2& R, const Point2& Q, Rat* c0, Rat* c1) {
  Rat rx = R.x.as_rat(), ry = R.y.as_rat();
  Rat qx = Q.x.as_rat(), qy = Q.y.as_rat();
  // cofactors of (Rh x Qh)
  Rat ca = ry - qy;
  Rat cb = qx - rx;
  Rat cc = rx * qy - ry * qx;
  *c0 = gh.x0 * ca + gh.y0 * cb + gh.w0 * cc;
  *c1 = gh.x1 * ca + gh.y1 * cb + gh.w1 * cc;
}

// det[gh(u); Rh; Ph(u)]: quadratic in u.
void det_gh_point_ph(const LinPoint& gh, const Point2& R, const LinPoint& ph, Rat* q0, Rat* q1,
                     Rat* q2) {
  Rat rx = R.x.as_rat(), ry = R.y.as_rat();
  // M(u) = Rh x Ph(u): linear components.
  Rat ma0 = ry * ph.w0 - ph.y0, ma1 = ry * ph.w1 - ph.y1;
  Rat mb0 = ph.x0 - rx * ph.w0, mb1 = ph.x1 - rx * ph.w1;
  Rat mc0 = rx * ph.y0 - ry * ph.x0, mc1 = rx * ph.y1 - ry * ph.x1;
  // det = gh . M
  *q0 = gh.x0 * ma0 + gh.y0 * mb0 + gh.w0 * mc0;
  *q1 = gh.x0 * ma1 + gh.x1 * ma0 + gh.y0 * mb1 + gh.y1 * mb0 + gh.w0 * mc1 + gh.w1 * mc0;
  *q2 = gh.x1 * ma1 + gh.y1 * mb1 + gh.w1 * mc1;
}

Coord local_eval(SweepState& st, const VisibilityCore& core, const Coord& xm, int j) {
  Coord best{Rat(xm.floor_long() + 1)};
  const EnvPiece& ep = env_at(st.env, xm);
  if (ep.has && ep.value > best) best = ep.value;
  if (auto ug = ugly_dominator(st.ps, core, xm, j)) {
    Coord v = xm + (ug->chain.v - ug->chain.u);
    if (v > best) best = v;
  }
  return best;
}

void emit_piece(SweepState& st, MobiusPiece p) {
  if (p.lo >= p.hi) return;
  st.out.pieces.push_back(std::move(p));
}

// Emits verified pieces on [x, *) for the regime (i, j) until a break, and
// returns the parameter where the sweep should resume.
Coord emit_regime_step(SweepState& st, Engine& eng, const VisibilityCore& core, const Coord& x,
                       int i, int j) {
  const Polygon& poly = st.poly;
  Coord col_end{Rat(i)};
  const EnvPiece& ep = env_at(st.env, x);
  Coord hard_end = ep.to < col_end ? ep.to : col_end;
  UglyConfig cfg = make_ugly_config(st, core, x, i, j);

  std::vector<Coord> roots;
  if (cfg.has_gstar) {
    for (int r : st.reflex) {
      const Point2& R = poly.vertex(r);
      Rat c0, c1;
      // Left-pivot events: sightline P(u) -> X1 grazing R.
      LinPoint ph;  // rebuild the same P(u) map used by the config
      {
        const Point2& va = poly.vertex(i - 1);
        const Point2& vb = poly.vertex(i);
        Rat ax = va.x.as_rat(), ay = va.y.as_rat();
        Rat ex = vb.x.as_rat() - ax, ey = vb.y.as_rat() - ay;
        ph = {ax - Rat(i - 1) * ex, ex, ay - Rat(i - 1) * ey, ey, Rat(1), Rat(0)};
      }
      sightline_poly(ph, cfg.X1, R, &c0, &c1);
      add_linear_root(roots, c0, c1, x, hard_end);
      // Right-pivot events: g*(u), R, Y1 collinear.
      det_gh_point_point(cfg.gh, R, cfg.Y1, &c0, &c1);
      add_linear_root(roots, c0, c1, x, hard_end);
      // Back-sight events: g*(u), R, P(u) collinear.
      Rat q0, q1, q2;
      det_gh_point_ph(cfg.gh, R, ph, &q0, &q1, &q2);
      add_quadratic_roots(roots, q0, q1, q2, x, hard_end);
    }
    // Exit-edge endpoint events: g*(u) reaching a corner of its edge.
    for (const RegionVertex& rv : core.vertices()) {
      if (rv.src_in != cfg.exit_src && rv.src_out != cfg.exit_src) continue;
      Rat c0 = cfg.gh.x0 - rv.p.x.as_rat() * cfg.gh.w0;
      Rat c1 = cfg.gh.x1 - rv.p.x.as_rat() * cfg.gh.w1;
      add_linear_root(roots, c0, c1, x, hard_end);
      c0 = cfg.gh.y0 - rv.p.y.as_rat() * cfg.gh.w0;
      c1 = cfg.gh.y1 - rv.p.y.as_rat() * cfg.gh.w1;
      add_linear_root(roots, c0, c1, x, hard_end);
    }
    // Regime end: formula reaching j+1.
    add_linear_root(roots, cfg.A - Rat(j + 1) * cfg.C, cfg.B - Rat(j + 1) * cfg.D, x, hard_end);
  } else {
    // The supporting line may start hitting the core later in the column.
    Point2 px = poly.boundary_point(poly.normalize_param(x));
    Point2 pt = poly.boundary_point(poly.normalize_param(Coord(Rat(j + 1))));
    if (!(px == pt)) {
      GeodesicPath path = st.ps.shortest_path_hint(st.ps.triangle_at_param(x), px,
                                                   st.ps.triangle_at_param(Coord(Rat(j + 1))), pt);
      const Point2& X1 = path.pts[1];
      const Point2& va = poly.vertex(i - 1);
      const Point2& vb = poly.vertex(i);
      Rat ax = va.x.as_rat(), ay = va.y.as_rat();
      Rat ex = vb.x.as_rat() - ax, ey = vb.y.as_rat() - ay;
      LinPoint ph{ax - Rat(i - 1) * ex, ex, ay - Rat(i - 1) * ey, ey, Rat(1), Rat(0)};
      for (const RegionVertex& rv : core.vertices()) {
        Rat c0, c1;
        sightline_poly(ph, X1, rv.p, &c0, &c1);
        add_linear_root(roots, c0, c1, x, hard_end);
      }
      for (int r : st.reflex) {
        Rat c0, c1;
        sightline_poly(ph, X1, poly.vertex(r), &c0, &c1);
        add_linear_root(roots, c0, c1, x, hard_end);
      }
    }
  }

  Coord piece_end = hard_end;
  for (const Coord& r : roots) {
    if (r < piece_end) piece_end = r;
  }
  if (piece_end <= x) throw std::logic_error("piecewise: empty piece");

  // Candidate crossing between the constant envelope value and the formula.
  // The formula is strictly increasing on valid pieces, so it crosses a
  // constant at most once.
  std::optional<Coord> cross_at;
  if (cfg.valid && ep.has && cfg.increasing && cfg.value_probe < ep.value) {
    Coord num = ep.value * Coord(cfg.C) - Coord(cfg.A);
    Coord den = Coord(cfg.B) - ep.value * Coord(cfg.D);
    if (den.sign() != 0) {
      Coord r = num / den;
      if (x < r && r < piece_end) cross_at = r;
    }
  }

  auto const_piece = [&](const Coord& a, const Coord& b) {
    MobiusPiece p;
    p.lo = a;
    p.hi = b;
    p.kind = MobiusPiece::Constant;
    p.value = ep.value;
    p.guard = ep.guard->guard;
    return p;
  };
  auto flat_ugly_piece = [&](const Coord& a, const Coord& b) {
    MobiusPiece p;
    p.lo = a;
    p.hi = b;
    p.kind = MobiusPiece::Constant;
    p.value = cfg.value_probe;
    p.guard = cfg.probe_guard;
    return p;
  };
  auto mobius_piece = [&](const Coord& a, const Coord& b) {
    MobiusPiece p;
    p.lo = a;
    p.hi = b;
    p.kind = MobiusPiece::Mobius;
    p.A = cfg.A;
    p.B = cfg.B;
    p.C = cfg.C;
    p.D = cfg.D;
    return p;
  };
  auto assemble = [&](const Coord& a, const Coord& b) {
    std::vector<MobiusPiece> batch;
    bool ugly_usable = cfg.valid;
    if (ugly_usable && ep.has) {
      if (cross_at && a < *cross_at && *cross_at < b) {
        batch.push_back(const_piece(a, *cross_at));
        batch.push_back(cfg.increasing ? mobius_piece(*cross_at, b) : flat_ugly_piece(*cross_at, b));
      } else if (cfg.value_probe >= ep.value) {
        batch.push_back(cfg.increasing ? mobius_piece(a, b) : flat_ugly_piece(a, b));
      } else {
        batch.push_back(const_piece(a, b));
      }
    } else if (ugly_usable) {
      batch.push_back(cfg.increasing ? mobius_piece(a, b) : flat_ugly_piece(a, b));
    } else if (ep.has) {
      batch.push_back(const_piece(a, b));
    } else {
      throw std::logic_error("piecewise: window with no realizing candidate");
    }
    return batch;
  };

  // Verify each piece at its midpoint against a direct evaluation; on
  // mismatch shrink and retry (bounded), counting the fallback.
  std::vector<MobiusPiece> batch = assemble(x, piece_end);
  for (int attempt = 0;; ++attempt) {
    if (attempt > 80) throw std::logic_error("piecewise: verification did not stabilize");
    bool ok = true;
    for (const MobiusPiece& p : batch) {
      Coord xm = (p.lo + p.hi) / Coord(2);
      Coord expect = local_eval(st, core, xm, j);
      if (p.eval(xm) != expect) {
        ok = false;
        break;
      }
    }
    if (ok) break;
    ++st.out.fallback_splits;
    Coord mid = (x + piece_end) / Coord(2);
    if (!(x < mid && mid < piece_end))
      throw std::logic_error("piecewise: fallback split exhausted");
    piece_end = mid;
    batch = assemble(x, piece_end);
  }
  for (MobiusPiece& p : batch) emit_piece(st, std::move(p));
  (void)eng;
  return piece_end;
}

void merge_pieces(PiecewiseNext& pw) {
  std::vector<MobiusPiece> merged;
  for (MobiusPiece& p : pw.pieces) {
    if (!merged.empty()) {
      MobiusPiece& q = merged.back();
      bool same = q.hi == p.lo && q.kind == p.kind &&
                  (p.kind == MobiusPiece::Constant
                       ? q.value == p.value
                       : (q.A == p.A && q.B == p.B && q.C == p.C && q.D == p.D));
      if (same) {
        q.hi = p.hi;
        continue;
      }
    }
    merged.push_back(std::move(p));
  }
  pw.pieces = std::move(merged);
}

}  // namespace

PiecewiseNext build_piecewise_next(Engine& eng) {
  if (eng.has_solution_of_size(3))
    throw std::domain_error("build_piecewise_next: a solution with <= 3 guards exists");
  eng.build_pipeline();
  const Polygon& poly = eng.polygon();
  const int n = poly.n();

  SweepState st{eng.structure(), poly, {}, build_envelope(poly, eng.stored_guards()), {}};
  for (int r = 1; r <= n; ++r) {
    if (poly.is_reflex(r)) st.reflex.push_back(r);
  }

  SigmaReplay replay(poly, eng.sigma());
  Coord x{1};
  const Coord end{Rat(n + 1)};
  long safety = 0;
  while (x < end) {
    if (++safety > 64L * n + 256) throw std::logic_error("build_piecewise_next: sweep stalled");
    int i = replay.i(), j = replay.j();
    if (x >= Coord(Rat(i))) {
      if (replay.done()) throw std::logic_error("build_piecewise_next: sequence exhausted");
      replay.step();
      continue;
    }
    Coord target{Rat(j + 1)};
    if (auto g = guard_exists(st.ps, replay.window().lookahead(), x, target)) {
      bool column_continues =
          !replay.done() && eng.sigma().pairs[replay.pos() + 1].first == i;
      if (column_continues) {
        replay.step();
        continue;
      }
      // next == j+1 on the rest of this column: constant piece.
      MobiusPiece p;
      p.lo = x;
      p.hi = Coord(Rat(i));
      p.kind = MobiusPiece::Constant;
      p.value = target;
      p.guard = *g;
      st.out.pieces.push_back(p);
      x = Coord(Rat(i));
      continue;
    }
    x = emit_regime_step(st, eng, replay.window().core(), x, i, j);
  }
  merge_pieces(st.out);
  // Coverage sanity.
  if (st.out.pieces.empty() || !(st.out.pieces.front().lo == Coord(1)) ||
      !(st.out.pieces.back().hi == end))
    throw std::logic_error("build_piecewise_next: domain not covered");
  for (size_t k = 1; k < st.out.pieces.size(); ++k) {
    if (!(st.out.pieces[k].lo == st.out.pieces[k - 1].hi))
      throw std::logic_error("build_piecewise_next: gap between pieces");
  }
  return st.out;
}

}  // namespace contigal
