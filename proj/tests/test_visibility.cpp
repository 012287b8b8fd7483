#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "contigal/instances.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace contigal;
using namespace contigal::test;

namespace {
Point2 pt(double x, double y) {
  return Point2(Coord(Rat(static_cast<long>(x * 16), 16L)), Coord(Rat(static_cast<long>(y * 16), 16L)));
}
}  // namespace

TEST_CASE("sees basics") {
  Polygon sq = square();
  PolygonStructure ps(sq);
  CHECK(sees(ps, pt(0.1, 0.1), pt(0.9, 0.9)));
  CHECK(sees(ps, pt(0.3, 0.3), pt(0.3, 0.3)));
  Polygon u = ushape();
  PolygonStructure psu(u);
  CHECK(!sees(psu, pt(0.5, 1.5), pt(2.5, 1.5)));
  CHECK(sees(psu, pt(0.5, 1.5), pt(0.5, 0.5)));
  // Grazing along the reflex corner counts as visible.
  CHECK(sees(psu, pt(0.5, 0.5), pt(1, 1)));
}

TEST_CASE("sees agrees with the naive oracle on random polygons") {
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    Polygon poly = gen_random_simple(10, seed);
    PolygonStructure ps(poly);
    std::uniform_int_distribution<int> vi(1, poly.n());
    std::uniform_int_distribution<int> frac(1, 15);
    for (int it = 0; it < 60; ++it) {
      Coord t1 = Coord(Rat(vi(rng))) + Coord(Rat(frac(rng), 16));
      Coord t2 = Coord(Rat(vi(rng))) + Coord(Rat(frac(rng), 16));
      Point2 a = poly.boundary_point(poly.normalize_param(t1));
      Point2 b = poly.boundary_point(poly.normalize_param(t2));
      CHECK(sees(ps, a, b) == naive_sees(poly, a, b));
    }
  }
}

TEST_CASE("sees_chain on fixtures") {
  Polygon sq = square();
  PolygonStructure ps(sq);
  CHECK(sees_chain(ps, pt(0.5, 0.5), make_chain(sq, Coord(1), Coord(5))));

  Polygon L = lshape();
  PolygonStructure psl(L);
  CHECK(sees_chain(psl, pt(0.5, 0.5), make_chain(L, Coord(1), Coord(7))));
  CHECK(!sees_chain(psl, pt(1.5, 0.5), make_chain(L, Coord(1), Coord(7))));

  Polygon u = ushape();
  PolygonStructure psu(u);
  // Chain across the left prong top from a guard in the right half.
  CHECK(!sees_chain(psu, pt(1.5, 0.5), make_chain(u, Coord(Rat(6)), Coord(Rat(8)))));
  // Dense-sampling agreement.
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> vi(1, u.n());
  std::uniform_int_distribution<int> frac(1, 15);
  for (int it = 0; it < 30; ++it) {
    Point2 g = pt(0.25 + 0.125 * (it % 5), 0.25 + 0.125 * ((it / 5) % 5));
    Coord a = Coord(Rat(vi(rng))) + Coord(Rat(frac(rng), 16));
    Coord len{Rat(frac(rng), 8)};
    BoundaryChain chain = make_chain(u, a, a + len);
    bool mine = sees_chain(psu, g, chain);
    bool oracle = true;
    for (int s = 0; s <= 24; ++s) {
      Coord t = chain.u + Coord(Rat(s, 24)) * (chain.v - chain.u);
      oracle = oracle && naive_sees(u, g, u.boundary_point(u.normalize_param(t)));
    }
    CHECK(mine == oracle);
  }
}

TEST_CASE("max_visible_chain sees everything from the square kernel") {
  Polygon sq = square();
  PolygonStructure ps(sq);
  auto span = max_visible_span(ps, pt(0.5, 0.5), Coord(1), Coord(2), Coord(4));
  REQUIRE(span.has_value());
  CHECK(span->first == Coord(1));
  CHECK(span->second == Coord(4));
  // Invisible anchor: empty result.
  Polygon u = ushape();
  PolygonStructure psu(u);
  auto none = max_visible_span(psu, pt(2.5, 1.5), Coord(6), Coord(Rat(13, 2)), Coord(7));
  CHECK(!none.has_value());
}

TEST_CASE("max_visible_chain on the L matches the sampling oracle") {
  Polygon L = lshape();
  PolygonStructure ps(L);
  Point2 g = pt(1.5, 0.5);
  // Chain [1, 4] anchored at m=2; the reflex corner (1,1) truncates both ends.
  auto span = max_visible_span(ps, g, Coord(1), Coord(2), Coord(4));
  REQUIRE(span.has_value());
  auto sampled = sampled_visible_chain(ps, g, Coord(1), Coord(2), Coord(4));
  REQUIRE(sampled.has_value());
  Coord tol{Rat(1), Rat(0), Rat(0)};
  tol = Coord(rat_pow2(-38));
  CHECK(span->first >= sampled->lo - tol);
  CHECK(span->first <= sampled->lo + tol);
  CHECK(span->second >= sampled->hi - tol);
  CHECK(span->second <= sampled->hi + tol);
  // The exact truncation: the sightline through (1,1) from g.
  CHECK(span->first > Coord(1));
}

TEST_CASE("max_visible_chain maximality and uniqueness") {
  Polygon L = lshape_gp();
  PolygonStructure ps(L);
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> vi(1, L.n());
  std::uniform_int_distribution<int> frac(1, 15);
  Coord eps{rat_pow2(-30)};
  int checked = 0;
  for (int it = 0; it < 80 && checked < 25; ++it) {
    Coord m = Coord(Rat(vi(rng))) + Coord(Rat(frac(rng), 16));
    Coord s = m - Coord(Rat(frac(rng), 4));
    Coord t = m + Coord(Rat(frac(rng), 4));
    Point2 g = pt(0.2 + 0.1 * (it % 7), 0.2 + 0.1 * ((it / 7) % 7));
    bool in_core = true;
    for (long e : chain_edges(L, s, t)) {
      in_core = in_core && edge_halfplane(L, e).eval(g).sign() >= 0;
    }
    if (!in_core) continue;
    auto span = max_visible_span(ps, g, s, m, t);
    if (!span) continue;
    ++checked;
    // Maximality: points just outside the span are invisible (when inside [s,t]).
    if (span->first > s) {
      Point2 p = L.boundary_point(L.normalize_param(span->first - eps));
      CHECK(!naive_sees(L, g, p));
    }
    if (span->second < t) {
      Point2 p = L.boundary_point(L.normalize_param(span->second + eps));
      CHECK(!naive_sees(L, g, p));
    }
    // Uniqueness: any anchor inside the span reproduces it.
    Coord m2 = (span->first + span->second) / Coord(2);
    auto span2 = max_visible_span(ps, g, s, m2, t);
    REQUIRE(span2.has_value());
    CHECK(span2->first == span->first);
    CHECK(span2->second == span->second);
  }
  CHECK(checked >= 10);
}

TEST_CASE("guard_exists on fixtures") {
  Polygon sq = square();
  PolygonStructure ps(sq);
  SlidingCore sc(sq, 2, 3);
  auto g = guard_exists(ps, sc.core(), Coord(Rat(3, 2)), Coord(Rat(7, 2)));
  REQUIRE(g.has_value());
  CHECK(certify_guard(ps, *g));

  // s == t degenerate case.
  auto point_guard = guard_exists(ps, sc.core(), Coord(2), Coord(2));
  REQUIRE(point_guard.has_value());

  // U prongs: no single guard covers both prong tops.
  Polygon u = ushape();
  PolygonStructure psu(u);
  VisibilityCore ker = kernel(u);
  CHECK(!guard_exists(psu, ker, Coord(Rat(13, 2)), Coord(Rat(17, 2))).has_value());
}

TEST_CASE("guard_exists matches brute feasibility on random windows") {
  for (std::uint64_t seed = 2; seed <= 4; ++seed) {
    Polygon poly = gen_random_simple(9, seed);
    PolygonStructure ps(poly);
    int n = poly.n();
    for (int i = 2; i <= n; ++i) {
      SlidingCore sc(poly, i, i);
      for (int j = i; j <= std::min(2 * n - 1, i + n - 2); ++j) {
        if (j > sc.j()) sc.advance_j();
        Coord s{Rat(2 * i - 1, 2)};
        Coord t{Rat(2 * j + 1, 2)};
        auto mine = guard_exists(ps, sc.core(), s, t);
        if (mine) {
          CHECK(certify_guard(ps, *mine));
          CHECK(mine->chain.u == poly.normalize_param(s));
        }
        // Brute: dense candidate sampling inside the core.
        bool any = false;
        auto w = sc.core().witness();
        std::vector<Point2> cands;
        if (w) cands.push_back(*w);
        for (const RegionVertex& rv : sc.core().vertices()) cands.push_back(rv.p);
        for (size_t a = 0; a + 1 < cands.size(); ++a) {
          cands.push_back(Point2((cands[a].x + cands[a + 1].x) / Coord(2),
                                 (cands[a].y + cands[a + 1].y) / Coord(2)));
        }
        for (const Point2& c : cands) {
          bool sees_all = true;
          for (int ss = 0; ss <= 12 && sees_all; ++ss) {
            Coord tt = s + Coord(Rat(ss, 12)) * (t - s);
            sees_all = naive_sees(poly, c, poly.boundary_point(poly.normalize_param(tt)));
          }
          any = any || sees_all;
        }
        // Sampling can only prove existence, not absence.
        if (any) CHECK(mine.has_value());
      }
    }
  }
}
