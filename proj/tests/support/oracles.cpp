#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <stdexcept>

#include "contigal/dominators.hpp"

namespace contigal::test {

namespace {

bool point_in_poly(const Polygon& poly, const Point2& p) {
  int crossings = 0;
  for (int m = 1; m <= poly.n(); ++m) {
    const Point2& a = poly.vertex(m);
    const Point2& b = poly.vertex(m + 1);
    int o = orient(a, b, p);
    if (o == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
        std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y))
      return true;
    bool ab = a.y <= p.y, bb = b.y <= p.y;
    if (ab == bb) continue;
    if (ab ? o > 0 : o < 0) ++crossings;
  }
  return crossings % 2 == 1;
}

}  // namespace

bool naive_sees(const Polygon& poly, const Point2& a, const Point2& b) {
  if (!point_in_poly(poly, a) || !point_in_poly(poly, b)) return false;
  if (a == b) return true;
  Point2 d = b - a;
  // Contact parameters of the segment with every edge.
  std::vector<Coord> ts{Coord(0), Coord(1)};
  for (int m = 1; m <= poly.n(); ++m) {
    const Point2& p = poly.vertex(m);
    const Point2& q = poly.vertex(m + 1);
    Point2 e = q - p;
    Coord den = cross(d, e);
    if (den.sign() == 0) {
      // Parallel: collinear overlap contributes the projected endpoints.
      if (cross(e, a - p).sign() != 0) continue;
      Coord dd = dot(d, d);
      ts.push_back(dot(p - a, d) / dd);
      ts.push_back(dot(q - a, d) / dd);
      continue;
    }
    Coord t = cross(p - a, e) / den;
    Coord s = cross(p - a, d) / den;
    if (t.sign() < 0 || t > Coord(1) || s.sign() < 0 || s > Coord(1)) continue;
    ts.push_back(t);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (size_t k = 0; k + 1 < ts.size(); ++k) {
    if (ts[k].sign() < 0 || ts[k] >= Coord(1)) continue;
    Coord mid = (ts[k] + ts[k + 1]) / Coord(2);
    if (mid.sign() < 0 || mid > Coord(1)) continue;
    Point2 pm(a.x + mid * d.x, a.y + mid * d.y);
    if (!point_in_poly(poly, pm)) return false;
  }
  return true;
}

Point2 naive_ray_shoot(const Polygon& poly, const Point2& origin, const Point2& dir) {
  // Contact parameters along the ray, then the first gap midpoint outside.
  std::vector<Coord> ts{Coord(0)};
  for (int m = 1; m <= poly.n(); ++m) {
    const Point2& p = poly.vertex(m);
    const Point2& q = poly.vertex(m + 1);
    Point2 e = q - p;
    Coord den = cross(dir, e);
    if (den.sign() == 0) {
      if (cross(e, origin - p).sign() != 0) continue;
      Coord dd = dot(dir, dir);
      Coord t1 = dot(p - origin, dir) / dd;
      Coord t2 = dot(q - origin, dir) / dd;
      if (t1.sign() > 0) ts.push_back(t1);
      if (t2.sign() > 0) ts.push_back(t2);
      continue;
    }
    Coord t = cross(p - origin, e) / den;
    Coord s = cross(p - origin, dir) / den;
    if (t.sign() <= 0 || s.sign() < 0 || s > Coord(1)) continue;
    ts.push_back(t);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (size_t k = 0; k + 1 < ts.size(); ++k) {
    Coord mid = (ts[k] + ts[k + 1]) / Coord(2);
    Point2 pm(origin.x + mid * dir.x, origin.y + mid * dir.y);
    if (!point_in_poly(poly, pm)) {
      Coord t = ts[k];
      return Point2(origin.x + t * dir.x, origin.y + t * dir.y);
    }
  }
  throw std::runtime_error("naive_ray_shoot: ray never exits the polygon");
}

std::vector<Point2> visgraph_shortest_path(const Polygon& poly, const Point2& s, const Point2& t) {
  std::vector<Point2> nodes{s, t};
  for (int m = 1; m <= poly.n(); ++m) nodes.push_back(poly.vertex(m));
  size_t N = nodes.size();
  std::vector<std::vector<std::pair<size_t, double>>> adj(N);
  for (size_t a = 0; a < N; ++a) {
    for (size_t b = a + 1; b < N; ++b) {
      if (naive_sees(poly, nodes[a], nodes[b])) {
        Point2 d = nodes[b] - nodes[a];
        double len = std::sqrt(dot(d, d).to_double());
        adj[a].push_back({b, len});
        adj[b].push_back({a, len});
      }
    }
  }
  std::vector<double> dist(N, 1e300);
  std::vector<int> prev(N, -1);
  using QE = std::pair<double, size_t>;
  std::priority_queue<QE, std::vector<QE>, std::greater<>> pq;
  dist[0] = 0;
  pq.push({0, 0});
  while (!pq.empty()) {
    auto [d0, a] = pq.top();
    pq.pop();
    if (d0 > dist[a]) continue;
    for (auto [b, w] : adj[a]) {
      if (dist[a] + w < dist[b]) {
        dist[b] = dist[a] + w;
        prev[b] = static_cast<int>(a);
        pq.push({dist[b], b});
      }
    }
  }
  std::vector<Point2> path;
  for (int cur = 1; cur != -1; cur = prev[static_cast<size_t>(cur)]) {
    path.push_back(nodes[static_cast<size_t>(cur)]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

NaiveCore naive_bounded_core(const Polygon& poly, const Coord& u, const Coord& v) {
  // Start from a box strictly containing the polygon and clip.
  Rat minx, maxx, miny, maxy;
  bool first = true;
  for (const Point2& p : poly.vertices()) {
    Rat x = p.x.as_rat(), y = p.y.as_rat();
    if (first) {
      minx = maxx = x;
      miny = maxy = y;
      first = false;
    }
    minx = std::min(minx, x);
    maxx = std::max(maxx, x);
    miny = std::min(miny, y);
    maxy = std::max(maxy, y);
  }
  Rat w = maxx - minx + 1, h = maxy - miny + 1;
  std::vector<Point2> cyc = {
      {Coord(Rat(minx - w)), Coord(Rat(miny - h))},
      {Coord(Rat(maxx + w)), Coord(Rat(miny - h))},
      {Coord(Rat(maxx + w)), Coord(Rat(maxy + h))},
      {Coord(Rat(minx - w)), Coord(Rat(maxy + h))},
  };
  for (long m : chain_edges(poly, u, v)) {
    HalfPlane hp = edge_halfplane(poly, m);
    std::vector<Point2> next;
    size_t N = cyc.size();
    for (size_t k = 0; k < N; ++k) {
      const Point2& pcur = cyc[k];
      const Point2& pnext = cyc[(k + 1) % N];
      Coord fc = hp.eval(pcur), fn = hp.eval(pnext);
      if (fc.sign() >= 0) next.push_back(pcur);
      if ((fc.sign() > 0 && fn.sign() < 0) || (fc.sign() < 0 && fn.sign() > 0)) {
        Coord t = fc / (fc - fn);
        Point2 d = pnext - pcur;
        next.emplace_back(pcur.x + t * d.x, pcur.y + t * d.y);
      }
    }
    cyc = std::move(next);
    if (cyc.empty()) break;
  }
  NaiveCore out;
  out.empty = cyc.empty();
  out.pts = std::move(cyc);
  return out;
}

std::optional<SampledChain> sampled_visible_chain(const PolygonStructure& ps, const Point2& g,
                                                  const Coord& s, const Coord& m, const Coord& t,
                                                  int per_edge, int bits) {
  const Polygon& poly = ps.polygon();
  auto vis = [&](const Coord& param) {
    Point2 p = poly.boundary_point(poly.normalize_param(param));
    return naive_sees(poly, g, p);
  };
  if (!vis(m)) return std::nullopt;
  // Sample outward from m to the first invisible sample on each side, then
  // bisect the visibility flip.
  auto probe = [&](bool low) -> Coord {
    Coord bound = low ? s : t;
    Coord step{Rat(1, per_edge)};
    Coord good = m, bad = bound;
    bool found_bad = false;
    Coord cur = m;
    while (true) {
      cur = low ? cur - step : cur + step;
      if (low ? cur <= bound : cur >= bound) break;
      if (vis(cur)) {
        good = cur;
      } else {
        bad = cur;
        found_bad = true;
        break;
      }
    }
    if (!found_bad) {
      if (vis(bound)) return bound;
      bad = bound;
    }
    for (int it = 0; it < bits; ++it) {
      Coord mid = (good + bad) / Coord(2);
      if (vis(mid)) {
        good = mid;
      } else {
        bad = mid;
      }
    }
    return good;
  };
  SampledChain out;
  out.lo = probe(true);
  out.hi = probe(false);
  return out;
}

bool chain_contains(const Polygon& poly, const BoundaryChain& outer, const BoundaryChain& inner) {
  Coord period{Rat(poly.n())};
  // Lift inner.u into [outer.u, outer.u + n).
  Coord iu = inner.u;
  while (iu < outer.u) iu += period;
  while (iu - period >= outer.u) iu -= period;
  Coord iv = iu + (inner.v - inner.u);
  return iu >= outer.u && iv <= outer.v;
}

BruteGuards brute_reduced_dominators(const PolygonStructure& ps) {
  const Polygon& poly = ps.polygon();
  const int n = poly.n();
  BruteGuards out;
  std::vector<Guard> all_good, all_bad;
  for (int i = 2; i <= n + 1; ++i) {
    SlidingCore sc(poly, i, std::max(i, 2));
    for (int j = std::max(i, 2); j <= 2 * n && j <= i + n - 1; ++j) {
      while (sc.j() < j) sc.advance_j();
      if (auto dom = good_dominator(ps, sc.core(), i, j)) all_good.push_back(dom->guard);
      for (const RegionVertex& rv : sc.core().vertices()) {
        long a = std::min(rv.src_in, rv.src_out);
        long b = std::max(rv.src_in, rv.src_out);
        Coord anchor{Rat(a + 1)};
        // Maximal weakly-left run around the defining edges.
        long lo = a;
        while (lo - 1 >= b - n + 1 && edge_halfplane(poly, lo - 1).eval(rv.p).sign() >= 0) --lo;
        long hi = b;
        while (hi + 1 <= lo + n - 1 && edge_halfplane(poly, hi + 1).eval(rv.p).sign() >= 0) ++hi;
        try {
          auto span = max_visible_span(ps, rv.p, Coord(Rat(lo)), anchor, Coord(Rat(hi + 1)));
          if (span && span->first <= Coord(Rat(a)) && span->second >= Coord(Rat(b + 1)))
            all_bad.push_back(Guard{rv.p, make_chain(poly, span->first, span->second)});
        } catch (const std::exception&) {
        }
      }
    }
  }
  auto strictly_contains = [&](const Guard& big, const Guard& small) {
    return chain_contains(poly, big.chain, small.chain) &&
           !(big.chain.v - big.chain.u == small.chain.v - small.chain.u);
  };
  for (const Guard& g : all_good) {
    bool dominated = false;
    for (const Guard& h : all_good) {
      if (strictly_contains(h, g)) dominated = true;
    }
    if (!dominated) out.good.push_back(g);
  }
  for (const Guard& g : all_bad) {
    bool dominated = false;
    for (const Guard& h : all_bad) {
      if (strictly_contains(h, g)) dominated = true;
    }
    for (const Guard& h : all_good) {
      if (strictly_contains(h, g)) dominated = true;
    }
    if (!dominated) out.bad.push_back(g);
  }
  return out;
}

}  // namespace contigal::test
