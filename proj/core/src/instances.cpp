#include "contigal/instances.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace contigal {

namespace {

Rat small_rat(double v, long denom = 1L << 20) {
  return Rat(static_cast<long>(std::llround(v * static_cast<double>(denom))), denom);
}

}  // namespace

Polygon gen_convex(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("gen_convex: n >= 3");
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::mt19937_64 rng(seed * 7919ULL + static_cast<std::uint64_t>(attempt));
    std::uniform_real_distribution<double> jitter(0.05, 0.95);
    std::vector<Rat> ts;
    ts.reserve(n);
    for (int k = 0; k < n; ++k) {
      // Half-angle parameters over (-pi, pi), jittered per slot.
      double theta = -3.1 + 6.2 * ((k + jitter(rng)) / n);
      ts.push_back(small_rat(std::tan(theta / 2)));
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    if (static_cast<int>(ts.size()) != n) continue;
    std::vector<Point2> pts;
    pts.reserve(n);
    for (const Rat& t : ts) {
      Rat den = 1 + t * t;
      pts.emplace_back(Coord(Rat((1 - t * t) / den)), Coord(Rat(2 * t / den)));
    }
    Polygon poly(std::move(pts));
    if (validate_polygon(poly).ok()) return poly;
  }
  throw std::runtime_error("gen_convex: retry budget exhausted");
}

Polygon gen_random_simple(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("gen_random_simple: n >= 3");
  const long grid = 8L * n;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::mt19937_64 rng(seed * 104729ULL + static_cast<std::uint64_t>(attempt));
    std::uniform_int_distribution<long> coord(0, grid);
    std::vector<Point2> pts;
    while (static_cast<int>(pts.size()) < n) {
      Point2 p(Coord(Rat(coord(rng))), Coord(Rat(coord(rng))));
      bool dup = false;
      for (const Point2& q : pts) dup = dup || q == p;
      if (!dup) pts.push_back(p);
    }
    Polygon poly(std::move(pts));
    // Uncross by 2-opt: reverse between crossing edges until simple.
    auto crossing = [&](const Polygon& pl, int& ci, int& cj) {
      int m = pl.n();
      for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
          if (pl.mod_index(i + 1) == pl.mod_index(j) || pl.mod_index(j + 1) == pl.mod_index(i))
            continue;
          const Point2 &a = pl.vertex(i), &b = pl.vertex(i + 1);
          const Point2 &c = pl.vertex(j), &d = pl.vertex(j + 1);
          int o1 = orient(a, b, c), o2 = orient(a, b, d);
          int o3 = orient(c, d, a), o4 = orient(c, d, b);
          bool cross = (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) ||
                       o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0;
          if (cross) {
            ci = i;
            cj = j;
            return true;
          }
        }
      }
      return false;
    };
    bool ok = true;
    std::vector<Point2> work = poly.vertices();
    long budget = 64L * n * n;
    while (true) {
      Polygon cur(work);
      int ci, cj;
      if (!crossing(cur, ci, cj)) break;
      if (--budget < 0) {
        ok = false;
        break;
      }
      // Reverse the chain between the two edges (2-opt move).
      std::reverse(work.begin() + ci, work.begin() + cj);
    }
    if (!ok) continue;
    Polygon out(work);
    if (sgn(out.signed_area2()) < 0) {
      std::reverse(work.begin(), work.end());
      out = Polygon(work);
    }
    if (validate_polygon(out).ok()) return out;
    // Nearly simple but degenerate: nudge and revalidate.
    try {
      Polygon nudged = perturb(out, seed * 31 + attempt, Rat(1, 1L << 16));
      if (validate_polygon(nudged).ok()) return nudged;
    } catch (const std::exception&) {
    }
  }
  throw std::runtime_error("gen_random_simple: retry budget exhausted");
}

Polygon gen_comb(int m, std::uint64_t seed, int pad_vertices) {
  if (m < 1) throw std::invalid_argument("gen_comb: m >= 1");
  // Teeth of width 1, gap 2, height 3 over a base strip of height 1; the
  // view cone of each tooth's top edge meets y=0 in an interval of width 1
  // under the tooth, so cones are pairwise disjoint and each tooth needs its
  // own guard, while the guard under a tooth sees the whole base strip.
  const long W = 3L * m + 2;
  std::vector<Point2> pts;
  auto P = [&](const Rat& x, const Rat& y) { pts.emplace_back(Coord(x), Coord(y)); };

  // Base, left to right, optionally subdivided into a shallow convex sag.
  int segs = std::max(1, pad_vertices);
  P(Rat(0), Rat(0));
  if (segs > 1) {
    for (int k = 1; k < segs; ++k) {
      Rat x(static_cast<long>(k) * W, segs);
      x.canonicalize();
      // sag = -x(W-x) * eps, strictly convex downward bow
      Rat sag = x * (Rat(W) - x) * Rat(-1, 2L * W * W);
      sag.canonicalize();
      P(x, sag);
    }
  }
  P(Rat(W), Rat(0));
  P(Rat(W), Rat(1));
  // Ceiling right-to-left with teeth m .. 1 pointing up.
  for (int tooth = m; tooth >= 1; --tooth) {
    Rat x0(3L * (tooth - 1) + 2);  // left edge of the tooth
    Rat x1 = x0 + 1;
    P(x1, Rat(1));
    P(x1, Rat(3));
    P(x0, Rat(3));
    P(x0, Rat(1));
  }
  P(Rat(0), Rat(1));
  Polygon raw(std::move(pts));
  return perturb(raw, seed * 65537ULL + 11, Rat(1, 1L << 18));
}

Polygon gen_setdisjointness(const std::vector<long>& A, const std::vector<long>& B) {
  const long nn = static_cast<long>(A.size());
  if (nn == 0 || A.size() != B.size())
    throw std::invalid_argument("gen_setdisjointness: need |A| == |B| >= 1");
  const long M = nn * nn * nn < 8 ? 8 : nn * nn * nn;  // base length, >= 8 keeps gadgets apart
  for (size_t k = 0; k < A.size(); ++k) {
    if (A[k] < 1 || A[k] >= M || 2 * A[k] == M || B[k] < 1 || B[k] >= M || 2 * B[k] == M)
      throw std::invalid_argument("gen_setdisjointness: values must lie in [1, M-1], not M/2");
    if (k + 1 < A.size() && A[k] >= A[k + 1])
      throw std::invalid_argument("gen_setdisjointness: A must be sorted strictly ascending");
  }

  const Rat h(2, 5);       // blocker mouth half-width
  const Rat G0x(M, 2);     // dents aim at the base midpoint
  std::vector<Point2> pts;  // clockwise emission, reversed at the end
  auto P = [&](const Rat& x, const Rat& y) { pts.emplace_back(Coord(x), Coord(y)); };

  auto blocker = [&](long a) {
    // Target on the upper boundary; dent apex pulled toward the midpoint.
    bool on_t1 = 2 * a < M;
    Rat tx(a), ty(on_t1 ? a : M - a);
    Rat s(1, 4 * M);
    Rat vx = tx + (G0x - tx) * s;
    Rat vy = ty + (Rat(0) - ty) * s;
    if (on_t1) {
      P(tx - h, ty - h);
      P(vx, vy);
      P(tx + h, ty + h);
    } else {
      P(tx - h, ty + h);
      P(vx, vy);
      P(tx + h, ty - h);
    }
  };

  P(Rat(0), Rat(0));
  for (long a : A) {
    if (2 * a < M) blocker(a);
  }
  P(Rat(M, 2), Rat(M, 2));  // apex
  for (long a : A) {
    if (2 * a > M) blocker(a);
  }
  P(Rat(M), Rat(0));

  // Base gadgets inside the unit interval at the midpoint: slots for
  // |B|+1 separators interleaved with |B| lasers, emitted right to left.
  const long slots = 2 * nn + 1;
  const Rat slot_w(1, slots);
  auto slot_center = [&](long idx) {  // idx in [0, slots), left to right
    Rat c = Rat(M, 2) - Rat(1, 2) + slot_w * idx + slot_w / 2;
    c.canonicalize();
    return c;
  };
  const Rat w = slot_w / 8;
  const Rat depth = slot_w / 4;

  for (long idx = slots - 1; idx >= 0; --idx) {
    Rat c = slot_center(idx);
    if (idx % 2 == 1) {
      // Laser for b = B[(idx-1)/2], two aimed pockets below the base.
      long b = B[static_cast<size_t>((idx - 1) / 2)];
      Rat tx(b), ty(2 * b < M ? b : M - b);
      auto pocket_side = [&](const Rat& mx) {
        // Point on the line target->(mx, 0) at depth -d.
        Rat px = mx + (mx - tx) * (depth / ty);
        return px;
      };
      Rat m1 = c - 3 * w, m2 = c - 2 * w, m3 = c + 2 * w, m4 = c + 3 * w;
      P(m4, Rat(0));
      P(pocket_side(m4), -depth);
      P(pocket_side(m3), -depth);
      P(m3, Rat(0));
      P(m2, Rat(0));
      P(pocket_side(m2), -depth);
      P(pocket_side(m1), -depth);
      P(m1, Rat(0));
    } else {
      // Separator: a wide pocket under a narrow channel. A guard seeing both
      // inner top corners must stand inside the pocket.
      Rat cw = w, rw = 3 * w, ch = depth / 2, rh = depth;
      P(c + cw, Rat(0));
      P(c + cw, -ch);
      P(c + rw, -ch);
      P(c + rw, -ch - rh);
      P(c - rw, -ch - rh);
      P(c - rw, -ch);
      P(c - cw, -ch);
      P(c - cw, Rat(0));
    }
  }

  std::reverse(pts.begin(), pts.end());  // clockwise -> counter-clockwise
  Polygon raw(std::move(pts));
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  for (long a : A) seed = seed * 131 + static_cast<std::uint64_t>(a);
  for (long b : B) seed = seed * 137 + static_cast<std::uint64_t>(b);
  return perturb(raw, seed, Rat(1, 1L << 24));
}

std::string describe_convex(int n, std::uint64_t seed) {
  std::ostringstream s;
  s << "gen convex n=" << n << " seed=" << seed;
  return s.str();
}
std::string describe_random(int n, std::uint64_t seed) {
  std::ostringstream s;
  s << "gen random n=" << n << " seed=" << seed;
  return s.str();
}
std::string describe_comb(int m, std::uint64_t seed, int pad_vertices) {
  std::ostringstream s;
  s << "gen comb m=" << m << " seed=" << seed << " pad=" << pad_vertices;
  return s.str();
}
std::string describe_setdisjointness(const std::vector<long>& A, const std::vector<long>& B) {
  std::ostringstream s;
  s << "gen setdisj A=";
  for (size_t k = 0; k < A.size(); ++k) s << (k ? "," : "") << A[k];
  s << " B=";
  for (size_t k = 0; k < B.size(); ++k) s << (k ? "," : "") << B[k];
  return s.str();
}

}  // namespace contigal
