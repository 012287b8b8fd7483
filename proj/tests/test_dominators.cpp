#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "contigal/dominators.hpp"
#include "contigal/instances.hpp"
#include "contigal/next_oracle.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace contigal;
using namespace contigal::test;

TEST_CASE("good dominator for i == j is the vertex guard") {
  Polygon sq = square();
  PolygonStructure ps(sq);
  SlidingCore sc(sq, 2, 2);
  auto dom = good_dominator(ps, sc.core(), 2, 2);
  REQUIRE(dom.has_value());
  CHECK(dom->guard.g == sq.vertex(2));
  CHECK(dom->guard.chain.u == Coord(1));
  CHECK(dom->guard.chain.v == Coord(3));
  CHECK(certify_guard(ps, dom->guard));
}

TEST_CASE("good dominator on the square window (2,3)") {
  Polygon sq = square();
  PolygonStructure ps(sq);
  SlidingCore sc(sq, 2, 3);
  auto dom = good_dominator(ps, sc.core(), 2, 3);
  REQUIRE(dom.has_value());
  CHECK(certify_guard(ps, dom->guard));
  CHECK(dom->lift_u <= Coord(2));
  CHECK(dom->lift_v >= Coord(3));
}

TEST_CASE("no good dominator across the U prongs") {
  Polygon u = ushape_gp();
  PolygonStructure ps(u);
  // Window spanning both prongs: i on the left prong top, j far right.
  SlidingCore sc(u, 6, 6);
  while (sc.j() < 12 && sc.can_advance_j()) sc.advance_j();
  CHECK(sc.core().empty());
  CHECK(!good_dominator(ps, sc.core(), 6, sc.j()).has_value());
}

TEST_CASE("monotone failure of good dominators") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    Polygon poly = gen_random_simple(8, seed);
    PolygonStructure ps(poly);
    int n = poly.n();
    for (int i = 2; i <= n + 1; ++i) {
      SlidingCore sc(poly, i, i);
      bool failed = false;
      for (int j = i; j <= std::min(2 * n, i + n - 1); ++j) {
        while (sc.j() < j) sc.advance_j();
        bool has = good_dominator(ps, sc.core(), i, j).has_value();
        if (failed) CHECK(!has);
        failed = failed || !has;
        if (!sc.can_advance_j()) break;
      }
    }
  }
}

TEST_CASE("compute_Dprime covers the square and certifies") {
  Polygon sq = square();
  PolygonStructure ps(sq);
  DominatorSet dp = compute_Dprime(ps);
  CHECK(!dp.guards.empty());
  for (const TaggedGuard& tg : dp.guards) {
    CHECK(certify_guard(ps, tg.guard));
  }
  // Every vertex window [i-1, i+1] is dominated by some stored guard.
  for (int i = 1; i <= sq.n(); ++i) {
    BoundaryChain want = make_chain(sq, Coord(Rat(i - 1)), Coord(Rat(i + 1)));
    bool covered = false;
    for (const TaggedGuard& tg : dp.guards) {
      covered = covered || chain_contains(sq, tg.guard.chain, want);
    }
    CHECK(covered);
  }
}

TEST_CASE("Dprime superset of brute-force reduced good dominators") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    Polygon poly = gen_random_simple(9, seed);
    PolygonStructure ps(poly);
    DominatorSet dp = compute_Dprime(ps);
    for (const TaggedGuard& tg : dp.guards) CHECK(certify_guard(ps, tg.guard));
    BruteGuards brute = brute_reduced_dominators(ps);
    for (const Guard& g : brute.good) {
      bool found = false;
      for (const TaggedGuard& tg : dp.guards) {
        found = found || (tg.guard.g == g.g && tg.guard.chain.u == g.chain.u &&
                          tg.guard.chain.v == g.chain.v);
      }
      CHECK(found);
    }
  }
}

TEST_CASE("sigma is a sliding sequence and conforms on samples") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    Polygon poly = gen_random_simple(8, seed);
    PolygonStructure ps(poly);
    SlidingSequence sigma = compute_sigma(ps);
    int n = poly.n();
    CHECK(static_cast<long>(sigma.pairs.size()) <= 4L * n);
    for (size_t k = 1; k < sigma.pairs.size(); ++k) {
      int di = sigma.pairs[k].first - sigma.pairs[k - 1].first;
      int dj = sigma.pairs[k].second - sigma.pairs[k - 1].second;
      bool ok = (di == 1 && dj == 0) || (di == 0 && dj == 1);
      CHECK(ok);
    }
    // Conformance sampling against the bisection oracle.
    std::mt19937_64 rng(seed * 99 + 1);
    std::uniform_int_distribution<int> vi(1, n);
    std::uniform_int_distribution<int> frac(1, 31);
    Rat tol = rat_pow2(-30);
    for (int it = 0; it < 25; ++it) {
      Coord u = Coord(Rat(vi(rng))) + Coord(Rat(frac(rng), 32));
      if (u >= Coord(Rat(n + 1))) continue;
      NextValue nv = next_oracle(ps, u, tol);
      if (nv.full) continue;
      // The window (i, j) with u in [i-1, i), next(u) in (j, j+1]. The oracle
      // is tol-accurate: skip samples whose next sits within tol of an
      // integer, where the window is ambiguous.
      long i = u.floor_long() + 1;
      Coord remainder = nv.v - Coord(Rat(nv.v.floor_long()));
      if (remainder < Coord(tol) * Coord(2) || remainder > Coord(1) - Coord(tol) * Coord(2))
        continue;
      long j = nv.v.floor_long();
      bool found = false;
      for (const auto& p : sigma.pairs) {
        found = found || (p.first == i && p.second == j);
      }
      CHECK(found);
    }
  }
}

TEST_CASE("Bsigma on a convex polygon sees everything") {
  Polygon poly = gen_convex(9, 2);
  PolygonStructure ps(poly);
  SlidingSequence sigma = compute_sigma(ps);
  DominatorSet bs = compute_Bsigma(ps, sigma);
  CHECK(!bs.guards.empty());
  for (const TaggedGuard& tg : bs.guards) {
    CHECK(tg.guard.chain.full);
    CHECK(certify_guard(ps, tg.guard));
  }
}

TEST_CASE("Bsigma superset of brute-force reduced bad dominators") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    Polygon poly = gen_random_simple(9, seed);
    PolygonStructure ps(poly);
    SlidingSequence sigma = compute_sigma(ps);
    DominatorSet bs = compute_Bsigma(ps, sigma);
    for (const TaggedGuard& tg : bs.guards) CHECK(certify_guard(ps, tg.guard));
    BruteGuards brute = brute_reduced_dominators(ps);
    for (const Guard& g : brute.bad) {
      bool found = false;
      for (const TaggedGuard& tg : bs.guards) {
        found = found || (tg.guard.g == g.g && tg.guard.chain.u == g.chain.u &&
                          tg.guard.chain.v == g.chain.v);
      }
      CHECK(found);
    }
  }
}

TEST_CASE("ugly dominator on a convex polygon reaches the window end") {
  Polygon poly = gen_convex(8, 5);
  PolygonStructure ps(poly);
  SlidingCore sc(poly, 2, 4);
  Coord u{Rat(3, 2)};
  auto g = ugly_dominator(ps, sc.core(), u, 4);
  REQUIRE(g.has_value());
  CHECK(certify_guard(ps, *g));
  CHECK(g->chain.v - g->chain.u == Coord(Rat(5)) - u);  // v* = j+1
}

TEST_CASE("ugly dominator returns none when the line misses the core") {
  Polygon u = ushape_gp();
  PolygonStructure ps(u);
  // A window whose core is empty: no last intersection exists.
  SlidingCore sc(u, 6, 6);
  while (sc.can_advance_j() && !sc.core().empty()) sc.advance_j();
  if (sc.core().empty()) {
    CHECK(!ugly_dominator(ps, sc.core(), Coord(Rat(11, 2)), sc.j()).has_value());
  }
}
