#include "contigal/region.hpp"

#include <algorithm>
#include <stdexcept>

namespace contigal {

HalfPlane HalfPlane::left_of(const Point2& p, const Point2& q, int source) {
  // left of p->q: cross(q-p, x-p) >= 0
  Rat px = p.x.as_rat(), py = p.y.as_rat();
  Rat qx = q.x.as_rat(), qy = q.y.as_rat();
  HalfPlane h;
  h.a = py - qy;
  h.b = qx - px;
  h.c = qy * px - qx * py;
  h.source = source;
  if (sgn(h.a) == 0 && sgn(h.b) == 0) throw std::invalid_argument("HalfPlane: zero direction");
  return h;
}

ConvexRegion::ConvexRegion() {
  cycle_ = {{Rat(1), Rat(0), Rat(0), kInfinitySource},
            {Rat(0), Rat(1), Rat(0), kInfinitySource},
            {Rat(-1), Rat(0), Rat(0), kInfinitySource},
            {Rat(0), Rat(-1), Rat(0), kInfinitySource}};
}

ConvexRegion ConvexRegion::intersection(const std::vector<HalfPlane>& planes) {
  ConvexRegion r;
  for (const HalfPlane& h : planes) r.clip(h);
  return r;
}

namespace {

bool nodes_equal(const ConvexRegion::Node& p, const ConvexRegion::Node& q) {
  bool pinf = sgn(p.w) == 0, qinf = sgn(q.w) == 0;
  if (pinf != qinf) return false;
  if (sgn(p.x * q.y - p.y * q.x) != 0) return false;
  if (pinf) return sgn(p.x * q.x + p.y * q.y) > 0;  // same direction
  return sgn(p.x * q.w - q.x * p.w) == 0 && sgn(p.y * q.w - q.y * p.w) == 0;
}

Point2 node_point(const ConvexRegion::Node& n) {
  return Point2(Coord(Rat(n.x / n.w)), Coord(Rat(n.y / n.w)));
}

}  // namespace

void ConvexRegion::record_conflict(const HalfPlane& h, const std::vector<Node>& old_cycle) {
  conflict_.clear();
  conflict_.push_back(h);
  std::vector<int> seen;
  for (const Node& n : old_cycle) {
    if (n.edge_source == kInfinitySource) continue;
    if (std::find(seen.begin(), seen.end(), n.edge_source) != seen.end()) continue;
    seen.push_back(n.edge_source);
    for (auto it = planes_.rbegin(); it != planes_.rend(); ++it) {
      if (it->source == n.edge_source) {
        conflict_.push_back(*it);
        break;
      }
    }
    if (conflict_.size() >= 3) break;
  }
}

void ConvexRegion::dedupe() {
  bool changed = true;
  while (changed && cycle_.size() > 1) {
    changed = false;
    for (size_t i = 0; i < cycle_.size() && cycle_.size() > 1; ++i) {
      size_t j = (i + 1) % cycle_.size();
      if (nodes_equal(cycle_[i], cycle_[j])) {
        // Zero-length edge: the merged node keeps the later outgoing source.
        cycle_.erase(cycle_.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
}

void ConvexRegion::fix_infinite_real_edges() {
  for (size_t i = 0; i < cycle_.size(); ++i) {
    const Node& p = cycle_[i];
    const Node& q = cycle_[(i + 1) % cycle_.size()];
    if (p.edge_source == kInfinitySource) continue;
    if (sgn(p.w) != 0 || sgn(q.w) != 0) continue;
    // Real edge spanning the whole line of its source: keep a finite
    // interior node so the region always exposes finite points.
    const HalfPlane* h = nullptr;
    for (auto it = planes_.rbegin(); it != planes_.rend(); ++it) {
      if (it->source == p.edge_source) {
        h = &*it;
        break;
      }
    }
    if (!h) continue;
    Node m;
    if (sgn(h->b) != 0) {
      m = {Rat(0), Rat(-h->c / h->b), Rat(1), p.edge_source};
    } else {
      m = {Rat(-h->c / h->a), Rat(0), Rat(1), p.edge_source};
    }
    cycle_.insert(cycle_.begin() + static_cast<long>(i) + 1, m);
    ++i;
  }
}

void ConvexRegion::clip(const HalfPlane& h) {
  planes_.push_back(h);
  if (empty_) return;
  const size_t n = cycle_.size();
  std::vector<Rat> fv(n);
  bool any_neg = false;
  for (size_t i = 0; i < n; ++i) {
    fv[i] = h.a * cycle_[i].x + h.b * cycle_[i].y + h.c * cycle_[i].w;
    if (sgn(fv[i]) < 0) any_neg = true;
  }
  if (!any_neg) return;

  std::vector<Node> out;
  out.reserve(n + 2);
  for (size_t i = 0; i < n; ++i) {
    const Node& p = cycle_[i];
    const Node& q = cycle_[(i + 1) % n];
    int sp = sgn(fv[i]);
    int sq = sgn(fv[(i + 1) % n]);
    if (sp >= 0) {
      Node kept = p;
      if (sq < 0 && sp == 0) kept.edge_source = h.source;
      out.push_back(kept);
      if (sp > 0 && sq < 0) {
        // Exit crossing: positive combination |fq| p + |fp| q, so w >= 0 and
        // direction orientation are preserved.
        Node r{-fv[(i + 1) % n] * p.x + fv[i] * q.x, -fv[(i + 1) % n] * p.y + fv[i] * q.y,
               -fv[(i + 1) % n] * p.w + fv[i] * q.w, h.source};
        out.push_back(r);
      }
    } else if (sq > 0) {
      Node r{fv[(i + 1) % n] * p.x - fv[i] * q.x, fv[(i + 1) % n] * p.y - fv[i] * q.y,
             fv[(i + 1) % n] * p.w - fv[i] * q.w, p.edge_source};
      out.push_back(r);
    }
  }
  if (out.empty()) {
    empty_ = true;
    record_conflict(h, cycle_);
    cycle_.clear();
    return;
  }
  cycle_ = std::move(out);
  dedupe();
  fix_infinite_real_edges();
}

std::optional<Point2> ConvexRegion::witness() const {
  if (empty_) return std::nullopt;
  for (const Node& n : cycle_)
    if (sgn(n.w) != 0) return node_point(n);
  return Point2(Coord(0), Coord(0));  // no constraints: whole plane
}

bool ConvexRegion::contains(const Point2& p) const {
  if (empty_) return false;
  for (const HalfPlane& h : planes_)
    if (h.eval(p).sign() < 0) return false;
  return true;
}

std::optional<Point2> ConvexRegion::extreme(const Rat& wx, const Rat& wy) const {
  if (empty_) return std::nullopt;
  const Point2* best = nullptr;
  std::vector<Point2> pts;
  pts.reserve(cycle_.size());
  for (const Node& n : cycle_) {
    if (sgn(n.w) == 0) {
      if (sgn(wx * n.x + wy * n.y) > 0) return std::nullopt;  // unbounded in w
    } else {
      pts.push_back(node_point(n));
    }
  }
  if (pts.empty()) return std::nullopt;  // whole plane
  Coord w_x(wx), w_y(wy);
  Coord best_val;
  for (const Point2& p : pts) {
    Coord val = w_x * p.x + w_y * p.y;
    if (!best || val > best_val || (val == best_val && lex_less(p, *best))) {
      best = &p;
      best_val = val;
    }
  }
  return *best;
}

std::optional<ConvexRegion::SegmentClip> ConvexRegion::clip_line(
    const Point2& origin, const Point2& dir, const std::optional<Coord>& tmax) const {
  if (empty_) return std::nullopt;
  Coord lo(0);
  std::optional<Coord> hi = tmax;
  for (const HalfPlane& h : planes_) {
    Coord f0 = h.eval(origin);
    Coord fd = Coord(h.a) * dir.x + Coord(h.b) * dir.y;
    int sfd = fd.sign();
    if (sfd == 0) {
      if (f0.sign() < 0) return std::nullopt;
      continue;
    }
    Coord bound = -f0 / fd;
    if (sfd > 0) {
      if (bound > lo) lo = bound;
    } else {
      if (!hi || bound < *hi) hi = bound;
    }
    if (hi && lo > *hi) return std::nullopt;
  }
  return SegmentClip{lo, hi};
}

std::optional<Point2> ConvexRegion::ray_last(const Point2& origin, const Point2& dir,
                                             int* binding_source) const {
  auto clip = clip_line(origin, dir, std::nullopt);
  if (!clip) return std::nullopt;
  if (!clip->t_exit) throw std::domain_error("ray_last: region unbounded along ray");
  const Coord& t = *clip->t_exit;
  if (binding_source) {
    *binding_source = -1;
    for (const HalfPlane& h : planes_) {
      Coord fd = Coord(h.a) * dir.x + Coord(h.b) * dir.y;
      if (fd.sign() < 0 && (h.eval(origin) + t * fd).sign() == 0) {
        *binding_source = h.source;
        break;
      }
    }
  }
  return Point2(origin.x + t * dir.x, origin.y + t * dir.y);
}

std::vector<RegionVertex> ConvexRegion::vertices() const {
  std::vector<RegionVertex> out;
  const size_t n = cycle_.size();
  for (size_t i = 0; i < n; ++i) {
    const Node& cur = cycle_[i];
    if (sgn(cur.w) == 0) continue;
    const Node& prev = cycle_[(i + n - 1) % n];
    int in_src = prev.edge_source;
    int out_src = cur.edge_source;
    if (in_src == out_src) continue;
    if (in_src == kInfinitySource || out_src == kInfinitySource) continue;
    out.push_back({node_point(cur), in_src, out_src});
  }
  return out;
}

namespace {

struct AngleCandidate {
  // cls 2: angle == pi (maximum); cls 1: proper angle with cotangent value;
  // cls 0: zero angle.
  int cls = -1;
  Coord cot;
  Point2 p;

  bool better_than(const AngleCandidate& o) const {
    if (o.cls < 0) return true;
    if (cls != o.cls) return cls > o.cls;
    if (cls == 1 && cot != o.cot) return cot < o.cot;
    return lex_less(p, o.p);
  }
};

AngleCandidate eval_angle(const Point2& u, const Point2& v, const Point2& g) {
  Point2 gu = u - g, gv = v - g;
  Coord cr = cross(gu, gv);
  Coord dt = dot(gu, gv);
  AngleCandidate c;
  c.p = g;
  int s = cr.sign();
  if (s > 0) {
    c.cls = 1;
    c.cot = dt / cr;
  } else if (s == 0) {
    c.cls = dt.sign() < 0 ? 2 : 0;
  } else {
    c.cls = 0;  // strictly right; precondition says this cannot win
  }
  return c;
}

}  // namespace

Point2 ConvexRegion::angle_max(const Point2& u, const Point2& v) const {
  if (empty_) throw std::domain_error("angle_max: empty region");
  if (!u.x.is_rational() || !u.y.is_rational() || !v.x.is_rational() || !v.y.is_rational())
    throw std::domain_error("angle_max: u, v must be rational");
  // Precondition: region weakly left of u->v.
  Point2 d = v - u;
  for (const Node& n : cycle_) {
    if (sgn(n.w) == 0) {
      if (quad_sign(Rat(d.x.as_rat() * n.y - d.y.as_rat() * n.x), Rat(0), Rat(0)) < 0)
        throw std::domain_error("angle_max: region not left of u->v");
    } else if (orient(u, v, node_point(n)) < 0) {
      throw std::domain_error("angle_max: region not left of u->v");
    }
  }

  AngleCandidate best;
  // Region touching the open segment (u, v): angle pi is the supremum.
  if (auto seg = clip_line(u, d, Coord(1))) {
    Coord a = seg->t_enter;
    Coord b = seg->t_exit ? *seg->t_exit : Coord(1);
    if (b > Coord(1)) b = Coord(1);
    if (a <= b && b.sign() > 0 && a < Coord(1)) {
      Coord mid = (a == b) ? a : (a + b) / Coord(2);
      if (mid.sign() > 0 && mid < Coord(1)) {
        Point2 g(u.x + mid * d.x, u.y + mid * d.y);
        AngleCandidate c = eval_angle(u, v, g);
        if (c.cls == 2 && c.better_than(best)) best = c;
      }
    }
  }

  const size_t n = cycle_.size();
  for (size_t i = 0; i < n; ++i) {
    const Node& p = cycle_[i];
    if (sgn(p.w) != 0) {
      AngleCandidate c = eval_angle(u, v, node_point(p));
      if (c.better_than(best)) best = c;
    }
    if (p.edge_source == kInfinitySource) continue;
    const Node& q = cycle_[(i + 1) % n];
    // Interior extremum along the edge. Parametrize base + t * step with
    // t in (0, inf) or (0, 1) depending on which endpoints are finite.
    Point2 base, step;
    bool bounded_t;
    if (sgn(p.w) != 0 && sgn(q.w) != 0) {
      base = node_point(p);
      step = node_point(q) - base;
      bounded_t = true;
    } else if (sgn(p.w) != 0) {  // q at infinity
      base = node_point(p);
      step = Point2(Coord(q.x), Coord(q.y));
      bounded_t = false;
    } else if (sgn(q.w) != 0) {  // p at infinity, walk backwards from q
      base = node_point(q);
      step = Point2(Coord(p.x), Coord(p.y));
      bounded_t = false;
    } else {
      continue;  // no finite interior (cannot happen on real edges)
    }
    // cot(t) = dot(t)/cross(t); dot quadratic in t, cross linear.
    Point2 a0 = u - base, b0 = v - base;
    Coord A2 = dot(step, step);
    Coord A1 = -(dot(a0, step) + dot(b0, step));
    Coord A0 = dot(a0, b0);
    Coord C1 = -(cross(a0, step) + cross(step, b0));
    Coord C0 = cross(a0, b0);
    // d/dt [ (A2 t^2 + A1 t + A0) / (C1 t + C0) ] = 0 =>
    // (2 A2 t + A1)(C1 t + C0) - (A2 t^2 + A1 t + A0) C1 = 0
    Coord qa = A2 * C1;
    Coord qb = Coord(2) * A2 * C0;
    Coord qc = A1 * C0 - A0 * C1;
    std::vector<Coord> roots;
    if (qa.sign() == 0) {
      if (qb.sign() != 0) roots.push_back(-qc / qb);
    } else {
      Coord disc = qb * qb - Coord(4) * qa * qc;
      int sd = disc.sign();
      if (sd == 0) {
        roots.push_back(-qb / (Coord(2) * qa));
      } else if (sd > 0) {
        // Roots are rational +- sqrt(disc) scaled; coefficients here are
        // rational because the cycle and u, v are rational.
        Rat ra = qa.as_rat(), rb = qb.as_rat(), rc_ = qc.as_rat();
        Rat dd = rb * rb - 4 * ra * rc_;
        roots.emplace_back(Rat(-rb / (2 * ra)), Rat(Rat(1) / (2 * ra)), dd);
        roots.emplace_back(Rat(-rb / (2 * ra)), Rat(Rat(-1) / (2 * ra)), dd);
      }
    }
    for (const Coord& t : roots) {
      if (t.sign() <= 0) continue;
      if (bounded_t && t >= Coord(1)) continue;
      Point2 g(base.x + t * step.x, base.y + t * step.y);
      AngleCandidate c = eval_angle(u, v, g);
      if (c.better_than(best)) best = c;
    }
  }
  if (best.cls < 0) throw std::domain_error("angle_max: region has no finite points");
  return best.p;
}

}  // namespace contigal
