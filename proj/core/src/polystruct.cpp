#include "contigal/polystruct.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace contigal {

namespace {

// Ear-clipping triangulation of a CCW simple polygon in general position.
// Containment tests only scan reflex vertices. Convex polygons fan out.
std::vector<std::array<int, 3>> triangulate(const Polygon& poly) {
  const int n = poly.n();
  std::vector<std::array<int, 3>> out;
  out.reserve(n - 2);
  auto P = [&](int k) -> const Point2& { return poly.vertices()[static_cast<size_t>(k)]; };

  if (poly.is_convex()) {
    for (int k = 1; k + 1 < n; ++k) out.push_back({0, k, k + 1});
    return out;
  }

  std::vector<int> next(n), prev(n);
  for (int k = 0; k < n; ++k) {
    next[k] = (k + 1) % n;
    prev[k] = (k + n - 1) % n;
  }
  std::vector<bool> reflex(n), alive(n, true);
  auto update_reflex = [&](int k) { reflex[k] = orient(P(prev[k]), P(k), P(next[k])) < 0; };
  for (int k = 0; k < n; ++k) update_reflex(k);

  auto is_ear = [&](int k) {
    if (reflex[k]) return false;
    const Point2 &a = P(prev[k]), &b = P(k), &c = P(next[k]);
    for (int r = 0; r < n; ++r) {
      if (!alive[r] || !reflex[r] || r == prev[k] || r == k || r == next[k]) continue;
      const Point2& p = P(r);
      if (orient(a, b, p) > 0 && orient(b, c, p) > 0 && orient(c, a, p) > 0) return false;
    }
    return true;
  };

  int remaining = n;
  int cur = 0;
  int scanned = 0;
  while (remaining > 3) {
    if (is_ear(cur)) {
      out.push_back({prev[cur], cur, next[cur]});
      alive[cur] = false;
      int a = prev[cur], b = next[cur];
      next[a] = b;
      prev[b] = a;
      update_reflex(a);
      update_reflex(b);
      --remaining;
      cur = b;
      scanned = 0;
    } else {
      cur = next[cur];
      if (++scanned > remaining) throw std::runtime_error("triangulate: no ear found (degenerate polygon?)");
    }
  }
  out.push_back({prev[cur], cur, next[cur]});
  return out;
}

}  // namespace

PolygonStructure::PolygonStructure(const Polygon& poly) : poly_(poly) {
  const int n = poly.n();
  auto raw = triangulate(poly);
  tris_.resize(raw.size());
  for (size_t t = 0; t < raw.size(); ++t) {
    for (int k = 0; k < 3; ++k) {
      tris_[t].v[k] = raw[t][static_cast<size_t>(k)];
      tris_[t].nb[k] = -1;
    }
  }
  // Adjacency via shared edges.
  std::map<std::pair<int, int>, std::pair<int, int>> open_edges;  // (lo,hi) -> (tri, slot)
  for (size_t t = 0; t < tris_.size(); ++t) {
    for (int k = 0; k < 3; ++k) {
      int a = tris_[t].v[k], b = tris_[t].v[(k + 1) % 3];
      auto key = std::minmax(a, b);
      auto it = open_edges.find(key);
      if (it == open_edges.end()) {
        open_edges[key] = {static_cast<int>(t), k};
      } else {
        tris_[t].nb[k] = it->second.first;
        tris_[static_cast<size_t>(it->second.first)].nb[it->second.second] = static_cast<int>(t);
        open_edges.erase(it);
      }
    }
  }
  vert_tri_.assign(n, -1);
  vert_tris_.assign(n, {});
  edge_tri_.assign(n, -1);
  for (size_t t = 0; t < tris_.size(); ++t) {
    for (int k = 0; k < 3; ++k) {
      int a = tris_[t].v[k];
      vert_tri_[static_cast<size_t>(a)] = static_cast<int>(t);
      vert_tris_[static_cast<size_t>(a)].push_back(static_cast<int>(t));
      int b = tris_[t].v[(k + 1) % 3];
      if ((a + 1) % n == b) edge_tri_[static_cast<size_t>(a)] = static_cast<int>(t);
    }
  }
  // Dual tree (it is a tree for a simple polygon triangulation).
  parent_.assign(tris_.size(), -1);
  depth_.assign(tris_.size(), 0);
  std::vector<bool> seen(tris_.size(), false);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = true;
  while (!bfs.empty()) {
    int t = bfs.front();
    bfs.pop();
    for (int k = 0; k < 3; ++k) {
      int u = tris_[static_cast<size_t>(t)].nb[k];
      if (u >= 0 && !seen[static_cast<size_t>(u)]) {
        seen[static_cast<size_t>(u)] = true;
        parent_[static_cast<size_t>(u)] = t;
        depth_[static_cast<size_t>(u)] = depth_[static_cast<size_t>(t)] + 1;
        bfs.push(u);
      }
    }
  }
}

int PolygonStructure::triangle_at_param(const Coord& t) const {
  Coord c = poly_.normalize_param(t);
  long m = c.floor_long();
  if (Coord(Rat(m)) == c) {
    long v0 = poly_.mod_index(m);
    return vert_tri_[static_cast<size_t>(v0)];
  }
  return edge_tri_[static_cast<size_t>(poly_.mod_index(m))];
}

bool PolygonStructure::contains(const Point2& p) const {
  const int n = poly_.n();
  int crossings = 0;
  for (int m = 1; m <= n; ++m) {
    const Point2& a = poly_.vertex(m);
    const Point2& b = poly_.vertex(m + 1);
    int o = orient(a, b, p);
    if (o == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
        std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y))
      return true;  // on the boundary
    bool a_below = a.y <= p.y, b_below = b.y <= p.y;
    if (a_below == b_below) continue;
    // Edge crosses the horizontal line through p; count crossings right of p.
    if (a_below) {  // upward edge
      if (o > 0) ++crossings;
    } else {  // downward
      if (o < 0) ++crossings;
    }
  }
  return (crossings % 2) == 1;
}

int PolygonStructure::locate(const Point2& p) const {
  if (!contains(p)) return -1;
  for (size_t t = 0; t < tris_.size(); ++t) {
    const Point2& a = poly_.vertices()[static_cast<size_t>(tris_[t].v[0])];
    const Point2& b = poly_.vertices()[static_cast<size_t>(tris_[t].v[1])];
    const Point2& c = poly_.vertices()[static_cast<size_t>(tris_[t].v[2])];
    if (orient(a, b, p) >= 0 && orient(b, c, p) >= 0 && orient(c, a, p) >= 0)
      return static_cast<int>(t);
  }
  return -1;  // unreachable for contained points
}

PolygonStructure::WalkStop PolygonStructure::walk(int tri, Point2 cur, const Point2& dir,
                                                  const Point2* target) const {
  const int n = poly_.n();
  auto V = [&](int k) -> const Point2& { return poly_.vertices()[static_cast<size_t>(k)]; };
  Point2 d = dir;
  if (d.x.sign() == 0 && d.y.sign() == 0) throw std::invalid_argument("walk: zero direction");

  // Current position is either strictly inside `tri`, on its boundary, or at
  // a polygon vertex (`at_vertex` >= 0 takes precedence over `tri`).
  int at_vertex = -1;
  for (int iter = 0;; ++iter) {
    if (iter > 8 * static_cast<int>(tris_.size()) + 64)
      throw std::runtime_error("walk: failed to terminate");
    if (at_vertex >= 0) {
      // Rotate around the vertex to find where the ray continues.
      if (target && *target == V(at_vertex))
        return {true, vert_tri_[static_cast<size_t>(at_vertex)], 0, 0, *target};
      bool advanced = false;
      for (int t : vert_tris_[static_cast<size_t>(at_vertex)]) {
        const Tri& T = tris_[static_cast<size_t>(t)];
        int k = 0;
        while (T.v[k] != at_vertex) ++k;
        const Point2& a = V(T.v[(k + 1) % 3]);
        const Point2& b = V(T.v[(k + 2) % 3]);
        Point2 va = a - cur, vb = b - cur;
        int ca = cross(va, d).sign();
        int cb = cross(d, vb).sign();
        if (ca == 0 && dot(va, d).sign() > 0) {
          // Slide along the edge (cur -> a).
          if (target) {
            Point2 ta = *target - cur;
            if (cross(ta, d).sign() == 0 && dot(ta, d).sign() > 0 &&
                dot(ta, ta) <= dot(va, va)) {
              return {true, t, 0, 0, *target};
            }
          }
          cur = a;
          at_vertex = T.v[(k + 1) % 3];
          advanced = true;
          break;
        }
        if (cb == 0 && dot(vb, d).sign() > 0) {
          if (target) {
            Point2 ta = *target - cur;
            if (cross(ta, d).sign() == 0 && dot(ta, d).sign() > 0 &&
                dot(ta, ta) <= dot(vb, vb)) {
              return {true, t, 0, 0, *target};
            }
          }
          cur = b;
          at_vertex = T.v[(k + 2) % 3];
          advanced = true;
          break;
        }
        if (ca > 0 && cb > 0) {
          tri = t;
          at_vertex = -1;
          advanced = true;
          break;
        }
      }
      if (advanced) continue;
      return {false, -1, 0, at_vertex + 1, cur};  // ray exits the polygon here
    }

    const Tri& T = tris_[static_cast<size_t>(tri)];
    const Point2& a = V(T.v[0]);
    const Point2& b = V(T.v[1]);
    const Point2& c = V(T.v[2]);
    if (target && orient(a, b, *target) >= 0 && orient(b, c, *target) >= 0 &&
        orient(c, a, *target) >= 0) {
      return {true, tri, 0, 0, *target};
    }
    // Find the exit of the ray cur + t*d.
    int exit_slot = -1;
    Coord exit_t;
    bool have_exit = false;
    for (int k = 0; k < 3; ++k) {
      const Point2& p = V(T.v[k]);
      const Point2& q = V(T.v[(k + 1) % 3]);
      Coord denom = cross(q - p, d);
      if (denom.sign() >= 0) continue;  // not pointing out of this edge
      Coord te = cross(q - p, p - cur) / denom;
      if (te.sign() < 0) continue;
      if (!have_exit || te < exit_t) {
        exit_t = te;
        exit_slot = k;
        have_exit = true;
      }
    }
    if (!have_exit) {
      // d points along an edge from the current position; handle via the
      // nearest vertex ahead on that edge.
      int best = -1;
      Coord best_d2;
      for (int k = 0; k < 3; ++k) {
        Point2 vv = V(T.v[k]) - cur;
        if (cross(vv, d).sign() == 0 && dot(vv, d).sign() > 0) {
          Coord d2 = dot(vv, vv);
          if (best < 0 || d2 < best_d2) {
            best = T.v[k];
            best_d2 = d2;
          }
        }
      }
      if (best < 0) throw std::runtime_error("walk: no exit from triangle");
      Point2 vv = V(best) - cur;
      if (target) {
        Point2 ta = *target - cur;
        if (cross(ta, d).sign() == 0 && dot(ta, d).sign() >= 0 && dot(ta, ta) <= dot(vv, vv))
          return {true, tri, 0, 0, *target};
      }
      cur = V(best);
      at_vertex = best;
      continue;
    }
    Point2 x(cur.x + exit_t * d.x, cur.y + exit_t * d.y);
    if (target) {
      Point2 tx = *target - cur;
      // Target on the ray before the exit (handles targets on the exit edge).
      if (cross(tx, d).sign() == 0 && dot(tx, d).sign() >= 0 && dot(tx, tx) <= dot(x - cur, x - cur))
        return {true, tri, 0, 0, *target};
    }
    const Point2& ep = V(T.v[exit_slot]);
    const Point2& eq = V(T.v[(exit_slot + 1) % 3]);
    if (x == ep) {
      cur = x;
      at_vertex = T.v[exit_slot];
      continue;
    }
    if (x == eq) {
      cur = x;
      at_vertex = T.v[(exit_slot + 1) % 3];
      continue;
    }
    int nb = T.nb[exit_slot];
    if (nb < 0) {
      long edge1 = T.v[exit_slot] + 1;  // boundary edge, 1-based
      (void)n;
      return {false, -1, edge1, 0, x};
    }
    cur = x;
    tri = nb;
  }
}

std::optional<int> PolygonStructure::walk_visible(int from_tri, const Point2& from,
                                                  const Point2& to) const {
  if (from == to) return from_tri;
  WalkStop s = walk(from_tri, from, to - from, &to);
  if (s.reached) return s.tri;
  return std::nullopt;
}

std::vector<int> PolygonStructure::tri_path(int a, int b) const {
  std::vector<int> up_a{a}, up_b{b};
  int x = a, y = b;
  while (depth_[static_cast<size_t>(x)] > depth_[static_cast<size_t>(y)]) {
    x = parent_[static_cast<size_t>(x)];
    up_a.push_back(x);
  }
  while (depth_[static_cast<size_t>(y)] > depth_[static_cast<size_t>(x)]) {
    y = parent_[static_cast<size_t>(y)];
    up_b.push_back(y);
  }
  while (x != y) {
    x = parent_[static_cast<size_t>(x)];
    up_a.push_back(x);
    y = parent_[static_cast<size_t>(y)];
    up_b.push_back(y);
  }
  up_a.insert(up_a.end(), up_b.rbegin() + 1, up_b.rend());
  return up_a;
}

GeodesicPath PolygonStructure::shortest_path(const Point2& s, const Point2& t) const {
  int st = locate(s), tt = locate(t);
  if (st < 0 || tt < 0) throw std::invalid_argument("shortest_path: point outside polygon");
  return shortest_path_hint(st, s, tt, t);
}

GeodesicPath PolygonStructure::shortest_path_hint(int s_tri, const Point2& s, int t_tri,
                                                  const Point2& t) const {
  GeodesicPath out;
  if (s == t) {
    out.pts = {s};
    return out;
  }
  auto path = tri_path(s_tri, t_tri);
  // Portals (left, right) looking along the walk direction. Exiting a CCW
  // triangle through its directed edge (p -> q) puts q on the left.
  std::vector<std::pair<Point2, Point2>> portals;
  portals.reserve(path.size() + 1);
  portals.emplace_back(s, s);
  auto V = [&](int k) -> const Point2& { return poly_.vertices()[static_cast<size_t>(k)]; };
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    const Tri& T = tris_[static_cast<size_t>(path[i])];
    int k = 0;
    while (T.nb[k] != path[i + 1]) ++k;
    portals.emplace_back(V(T.v[(k + 1) % 3]), V(T.v[k]));
  }
  portals.emplace_back(t, t);

  std::vector<Point2> pts;
  pts.push_back(s);
  Point2 apex = s, left = s, right = s;
  size_t apex_i = 0, left_i = 0, right_i = 0;
  for (size_t i = 1; i < portals.size(); ++i) {
    const Point2& pl = portals[i].first;
    const Point2& pr = portals[i].second;
    if (right == apex || orient(apex, right, pr) >= 0) {
      if (apex == right || orient(apex, left, pr) < 0) {
        right = pr;
        right_i = i;
      } else {
        pts.push_back(left);
        apex = left;
        apex_i = left_i;
        left = right = apex;
        left_i = right_i = apex_i;
        i = apex_i;
        continue;
      }
    }
    if (left == apex || orient(apex, left, pl) <= 0) {
      if (apex == left || orient(apex, right, pl) > 0) {
        left = pl;
        left_i = i;
      } else {
        pts.push_back(right);
        apex = right;
        apex_i = right_i;
        left = right = apex;
        left_i = right_i = apex_i;
        i = apex_i;
        continue;
      }
    }
  }
  pts.push_back(t);
  out.pts.clear();
  for (const Point2& p : pts) {
    if (out.pts.empty() || !(out.pts.back() == p)) out.pts.push_back(p);
  }
  if (out.pts.size() == 1 && !(out.pts.front() == t)) out.pts.push_back(t);
  return out;
}

std::pair<Point2, Point2> PolygonStructure::first_edge(const Point2& s, const Point2& t) const {
  if (s == t) throw std::invalid_argument("first_edge: s == t");
  GeodesicPath p = shortest_path(s, t);
  return {p.pts[0], p.pts[1]};
}

TurnInfo PolygonStructure::turn_profile(const GeodesicPath& path) {
  const auto& p = path.pts;
  bool has_left = false, has_right = false;
  std::vector<int> turns;  // per interior vertex
  for (size_t k = 1; k + 1 < p.size(); ++k) {
    int o = orient(p[k - 1], p[k], p[k + 1]);
    turns.push_back(o);
    if (o > 0) has_left = true;
    if (o < 0) has_right = true;
  }
  if (!has_right) return {TurnKind::AllLeft, -1};
  if (!has_left) return {TurnKind::AllRight, -1};
  for (size_t e = 0; e + 1 < turns.size(); ++e) {
    if (turns[e] >= 0 && turns[e + 1] <= 0) return {TurnKind::Mixed, static_cast<int>(e) + 1};
  }
  return {TurnKind::Mixed, -1};
}

Coord PolygonStructure::param_on_edge(long lifted_edge, const Point2& p) const {
  const Point2& a = poly_.vertex(lifted_edge);
  const Point2& b = poly_.vertex(lifted_edge + 1);
  Point2 d = b - a;
  Coord frac;
  if (rat_abs(d.x.is_rational() ? d.x.as_rat() : Rat(1)) != 0 && d.x.sign() != 0) {
    frac = (p.x - a.x) / d.x;
  } else {
    frac = (p.y - a.y) / d.y;
  }
  long m = poly_.mod_index(lifted_edge) + 1;  // canonical 1-based edge
  return poly_.normalize_param(Coord(Rat(m)) + frac);
}

PolygonStructure::RayHit PolygonStructure::ray_shoot(const Point2& origin, const Point2& dir) const {
  int t = locate(origin);
  if (t < 0) throw std::invalid_argument("ray_shoot: origin outside polygon");
  return ray_shoot_hint(t, origin, dir);
}

PolygonStructure::RayHit PolygonStructure::ray_shoot_hint(int origin_tri, const Point2& origin,
                                                          const Point2& dir) const {
  WalkStop s = walk(origin_tri, origin, dir, nullptr);
  RayHit hit;
  hit.point = s.hit;
  if (s.hit_vertex > 0) {
    hit.param = poly_.normalize_param(Coord(Rat(s.hit_vertex)));
  } else {
    hit.param = param_on_edge(s.hit_edge, s.hit);
  }
  return hit;
}

}  // namespace contigal
