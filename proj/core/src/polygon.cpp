#include "contigal/polygon.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace contigal {

Point2 Polygon::boundary_point(const Coord& t) const {
  if (t < Coord(1) || t >= Coord(Rat(2 * n() + 1)))
    throw std::out_of_range("boundary_point: parameter outside [1, 2n+1)");
  long m = t.floor_long();
  Coord frac = t - Coord(Rat(m));
  const Point2& a = vertex(m);
  if (frac.sign() == 0) return a;
  const Point2& b = vertex(m + 1);
  return a + frac * (b - a);
}

Coord Polygon::normalize_param(const Coord& t) const {
  Coord r = t;
  Coord lo{1};
  Coord hi{Rat(n() + 1)};
  Coord period{Rat(n())};
  while (r >= hi) r -= period;
  while (r < lo) r += period;
  return r;
}

Rat Polygon::signed_area2() const {
  Rat area = 0;
  for (int i = 1; i <= n(); ++i) {
    const Point2& a = vertex(i);
    const Point2& b = vertex(i + 1);
    area += (a.x.as_rat() * b.y.as_rat() - b.x.as_rat() * a.y.as_rat());
  }
  return area;
}

bool Polygon::is_convex() const {
  for (int i = 1; i <= n(); ++i)
    if (orient(vertex(i), vertex(i + 1), vertex(i + 2)) <= 0) return false;
  return true;
}

bool Polygon::is_reflex(long i) const {
  return orient(vertex(i - 1), vertex(i), vertex(i + 1)) < 0;
}

BoundaryChain make_chain(const Polygon& poly, const Coord& u, const Coord& v) {
  BoundaryChain c;
  c.u = poly.normalize_param(u);
  Coord delta = v - u;
  if (delta.sign() < 0) throw std::invalid_argument("make_chain: v < u");
  Coord period(Rat(poly.n()));
  if (delta >= period) {
    c.v = c.u + period;
    c.full = true;
  } else {
    c.v = c.u + delta;
    c.full = false;
  }
  return c;
}

namespace {

// Proper or improper intersection of closed segments [a,b] and [c,d],
// excluding shared-endpoint contact between adjacent edges (handled by the
// caller). Exact.
bool segments_intersect(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  auto on_segment = [](const Point2& p, const Point2& q, const Point2& r) {
    // r collinear with pq assumed; true iff r within the closed bounding box.
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
           std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
  };
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

std::string point_str(const Point2& p) {
  return "(" + p.x.to_string() + ", " + p.y.to_string() + ")";
}

}  // namespace

std::string ValidationReport::summary() const {
  if (issues.empty()) return "ok";
  std::ostringstream out;
  out << issues.size() << " issue(s):";
  for (const auto& i : issues) out << " [" << i.detail << "]";
  return out.str();
}

ValidationReport validate_polygon(const Polygon& poly) {
  ValidationReport report;
  int n = poly.n();
  if (n < 3) {
    report.issues.push_back({ValidationIssue::TooFewVertices, "fewer than 3 vertices"});
    return report;
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n && j <= i + 1; ++j) {
      if (poly.vertex(i) == poly.vertex(j)) {
        report.issues.push_back(
            {ValidationIssue::DuplicateVertex, "duplicate consecutive vertex at index " + std::to_string(i)});
      }
    }
  }
  if (sgn(poly.signed_area2()) <= 0) {
    report.issues.push_back({ValidationIssue::NotCounterClockwise, "orientation: vertices are not counter-clockwise"});
  }

  // Simplicity: sort edges by min x, test pairs whose x-ranges overlap.
  // Worst-case quadratic, near-linear on typical inputs.
  struct EdgeRec {
    Coord xmin, xmax;
    int idx;
  };
  std::vector<EdgeRec> edges;
  edges.reserve(n);
  for (int i = 1; i <= n; ++i) {
    const Point2& a = poly.vertex(i);
    const Point2& b = poly.vertex(i + 1);
    edges.push_back({std::min(a.x, b.x), std::max(a.x, b.x), i});
  }
  std::sort(edges.begin(), edges.end(),
            [](const EdgeRec& l, const EdgeRec& r) { return l.xmin < r.xmin; });
  for (size_t s = 0; s < edges.size() && report.issues.size() < 16; ++s) {
    for (size_t t = s + 1; t < edges.size(); ++t) {
      if (edges[t].xmin > edges[s].xmax) break;
      int i = edges[s].idx, j = edges[t].idx;
      if (i == j) continue;
      bool adjacent = poly.mod_index(i + 1) == poly.mod_index(j) || poly.mod_index(j + 1) == poly.mod_index(i);
      if (adjacent) continue;
      if (segments_intersect(poly.vertex(i), poly.vertex(i + 1), poly.vertex(j), poly.vertex(j + 1))) {
        report.issues.push_back({ValidationIssue::SelfIntersection,
                                 "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect"});
      }
    }
  }
  // Adjacent edges may only share their common endpoint: a fold-back
  // (collinear overlap) shows up as a collinear consecutive triple below.

  // General position: no three collinear vertices.
  bool convex = report.ok() && poly.is_convex();
  auto check_triple = [&](int i, int j, int k) {
    if (report.issues.size() >= 16) return;
    if (orient(poly.vertex(i), poly.vertex(j), poly.vertex(k)) == 0) {
      report.issues.push_back({ValidationIssue::CollinearTriple,
                               "collinear vertices " + std::to_string(i) + "," + std::to_string(j) + "," +
                                   std::to_string(k) + " at " + point_str(poly.vertex(i)) + " " +
                                   point_str(poly.vertex(j)) + " " + point_str(poly.vertex(k))});
    }
  };
  if (convex) {
    // For a polygon verified convex, any collinear triple must be consecutive.
    for (int i = 1; i <= n; ++i) check_triple(i, i + 1, i + 2);
  } else if (n <= 600) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) check_triple(i, j, k);
  } else {
    // Exhaustive scan is cubic; above the threshold only consecutive triples
    // are certified and the report says so.
    for (int i = 1; i <= n; ++i) check_triple(i, i + 1, i + 2);
    report.collinearity_exhaustive = false;
  }
  return report;
}

void require_valid(const Polygon& poly) {
  ValidationReport r = validate_polygon(poly);
  if (!r.ok()) throw std::invalid_argument("polygon rejected: " + r.summary() + "; consider perturb()");
}

Polygon perturb(const Polygon& poly, std::uint64_t seed, const Rat& magnitude, int max_attempts) {
  if (sgn(magnitude) == 0) return poly;
  if (sgn(magnitude) < 0) throw std::invalid_argument("perturb: negative magnitude");
  const long kGrain = 1L << 30;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(attempt));
    std::uniform_int_distribution<long> dist(-(kGrain - 1), kGrain - 1);
    std::vector<Point2> pts;
    pts.reserve(poly.n());
    for (const Point2& p : poly.vertices()) {
      Rat dx = Rat(dist(rng), kGrain) * magnitude;
      Rat dy = Rat(dist(rng), kGrain) * magnitude;
      dx.canonicalize();
      dy.canonicalize();
      pts.emplace_back(p.x + Coord(dx), p.y + Coord(dy));
    }
    Polygon out(std::move(pts));
    if (validate_polygon(out).ok()) return out;
  }
  throw std::runtime_error("perturb: retry budget exhausted");
}

}  // namespace contigal
