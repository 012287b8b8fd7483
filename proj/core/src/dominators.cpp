#include "contigal/dominators.hpp"

#include <map>
#include <stdexcept>

namespace contigal {

SigmaReplay::SigmaReplay(const Polygon& poly, const SlidingSequence& sigma)
    : sigma_(sigma), sc_(poly, sigma.pairs.at(0).first, sigma.pairs.at(0).second) {}

void SigmaReplay::step() {
  const auto& cur = sigma_.pairs[pos_];
  const auto& nxt = sigma_.pairs[pos_ + 1];
  int di = nxt.first - cur.first, dj = nxt.second - cur.second;
  if (di == 1 && dj == 0) {
    sc_.advance_i();
  } else if (di == 0 && dj == 1) {
    sc_.advance_j();
  } else {
    throw std::logic_error("SigmaReplay: sequence delta not in {(1,0),(0,1)}");
  }
  ++pos_;
}

std::optional<TaggedGuard> good_dominator(const PolygonStructure& ps, const VisibilityCore& core,
                                          int i, int j) {
  const Polygon& poly = ps.polygon();
  if (i > j) throw std::invalid_argument("good_dominator: i > j");
  if (i == j) {
    TaggedGuard tg;
    tg.guard = Guard{poly.vertex(i), make_chain(poly, Coord(Rat(i - 1)), Coord(Rat(i + 1)))};
    tg.tag = GuardTag::GoodAngle;
    tg.lift_u = Coord(Rat(i - 1));
    tg.lift_v = Coord(Rat(i + 1));
    tg.window_i = i;
    tg.window_j = j;
    return tg;
  }
  if (core.empty()) return std::nullopt;

  Point2 pi = poly.vertex(i);
  Point2 pj = poly.vertex(j);
  Point2 dij = pj - pi;

  std::optional<Point2> g;
  GuardTag tag = GuardTag::GoodSegment;
  // Segment-intersecting case: the core meets the interior of the chord.
  if (auto clip = core.clip_line(pi, dij, Coord(1))) {
    Coord hi = clip->t_exit ? *clip->t_exit : Coord(1);
    if (hi > Coord(1)) hi = Coord(1);
    if (clip->t_enter <= hi && hi.sign() > 0 && clip->t_enter < Coord(1)) {
      g = Point2(pi.x + hi * dij.x, pi.y + hi * dij.y);
    }
  }
  if (!g) {
    // Angle-maximizing case, applicable when the core lies weakly left.
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
    if (!weakly_left) return std::nullopt;
    tag = GuardTag::GoodAngle;
    if (core.contains(pi)) {
      g = pi;
    } else if (core.contains(pj)) {
      g = pj;
    } else {
      g = core.angle_max(pi, pj);
    }
  }

  auto span = max_visible_span(ps, *g, Coord(Rat(i - 1)), Coord(Rat(i)), Coord(Rat(j + 1)));
  if (!span) return std::nullopt;
  if (span->first > Coord(Rat(i)) || span->second < Coord(Rat(j))) return std::nullopt;
  TaggedGuard tg;
  tg.guard = Guard{*g, make_chain(poly, span->first, span->second)};
  tg.tag = tag;
  tg.lift_u = span->first;
  tg.lift_v = span->second;
  tg.window_i = i;
  tg.window_j = j;
  return tg;
}

namespace {

struct GuardKeyLess {
  bool operator()(const std::vector<Coord>& a, const std::vector<Coord>& b) const {
    for (size_t k = 0; k < a.size() && k < b.size(); ++k) {
      int c = Coord::compare(a[k], b[k]);
      if (c != 0) return c < 0;
    }
    return a.size() < b.size();
  }
};

std::vector<Coord> guard_key(const Guard& g) {
  return {g.g.x, g.g.y, g.chain.u, g.chain.v};
}

}  // namespace

DominatorSet compute_Dprime(const PolygonStructure& ps) {
  const Polygon& poly = ps.polygon();
  const int n = poly.n();
  DominatorSet out;
  std::map<std::vector<Coord>, bool, GuardKeyLess> seen;
  auto add = [&](const TaggedGuard& tg) {
    auto key = guard_key(tg.guard);
    if (seen.emplace(key, true).second) out.guards.push_back(tg);
  };

  SlidingCore sc(poly, 2, 2);
  long safety = 0;
  while (true) {
    if (++safety > 6L * n + 16) throw std::logic_error("compute_Dprime: sweep did not terminate");
    int i = sc.i(), j = sc.j();
    auto dom = good_dominator(ps, sc.core(), i, j);
    bool advance_j;
    if (dom) {
      add(*dom);
      if (dom->lift_v == Coord(Rat(j + 1))) {
        advance_j = true;
      } else if (j + 1 <= 2 * n && sc.can_advance_j()) {
        advance_j = good_dominator(ps, sc.lookahead(), i, j + 1).has_value();
      } else {
        advance_j = false;
      }
    } else {
      advance_j = false;
    }
    if (advance_j && sc.can_advance_j() && j + 1 <= 2 * n) {
      sc.advance_j();
    } else {
      if (i >= n + 1) break;
      sc.advance_i();
      if (sc.j() < sc.i()) sc.advance_j();
    }
  }
  return out;
}

SlidingSequence compute_sigma(const PolygonStructure& ps) {
  const Polygon& poly = ps.polygon();
  const int n = poly.n();
  SlidingSequence sigma;
  sigma.pairs.emplace_back(1, 1);
  SlidingCore sc(poly, 1, 2);
  long safety = 0;
  while (true) {
    if (++safety > 6L * n + 16) throw std::logic_error("compute_sigma: walk did not terminate");
    int i = sc.i(), j = sc.j();
    auto guard = guard_exists(ps, sc.core(), Coord(Rat(i)), Coord(Rat(j)));
    if (guard) {
      sigma.pairs.emplace_back(i, j);
      if (sc.can_advance_j()) {
        sc.advance_j();
      } else {
        // Window saturated at one revolution: no conforming pair needs a
        // larger j for this i (next(u) < u + n + 1 for u in [i-1, i)).
        if (i >= n + 1) break;
        sc.advance_i();
      }
    } else {
      if (i >= n + 1) break;
      sigma.pairs.emplace_back(i + 1, j - 1);
      sc.advance_i();
    }
  }
  return sigma;
}

DominatorSet compute_Bsigma(const PolygonStructure& ps, const SlidingSequence& sigma) {
  const Polygon& poly = ps.polygon();
  const int n = poly.n();
  DominatorSet out;

  // Replay once to collect distinct core vertices with their lifetimes and
  // birth windows.
  struct Candidate {
    SlidingCore::Lifetime lt;
    int birth_i, birth_j;
  };
  std::vector<Candidate> cands;
  {
    SigmaReplay replay(poly, sigma);
    size_t logged = 0;
    auto grab = [&]() {
      const auto& lts = replay.window().lifetimes();
      for (; logged < lts.size(); ++logged) {
        cands.push_back({lts[logged], replay.i(), replay.j()});
      }
    };
    grab();
    while (!replay.done()) {
      replay.step();
      grab();
    }
    // Fill exit steps that are still open.
    size_t idx = 0;
    for (const auto& lt : replay.window().lifetimes()) {
      cands[idx].lt.exit_step = lt.exit_step < 0 ? replay.window().step() : lt.exit_step;
      cands[idx].lt.enter_step = lt.enter_step;
      ++idx;
    }
  }

  for (const Candidate& c : cands) {
    // Defining edges [a, a+1] and [b, b+1] with a < b (lifted).
    long a = c.lt.src_in, b = c.lt.src_out;
    const Point2& x = c.lt.p;
    // Maximal run of edges around the defining pair with x weakly left.
    long lo = a;
    while (lo - 1 >= a - n + 1) {
      HalfPlane h = edge_halfplane(poly, lo - 1);
      if (h.eval(x).sign() < 0) break;
      --lo;
    }
    long hi = b;
    while (hi + 1 <= lo + n - 1) {
      HalfPlane h = edge_halfplane(poly, hi + 1);
      if (h.eval(x).sign() < 0) break;
      ++hi;
    }
    Coord s{Rat(lo)};
    Coord t{Rat(hi + 1)};
    if (t - s > Coord(Rat(n))) t = s + Coord(Rat(n));
    Coord anchor{Rat(a + 1)};
    auto span = max_visible_span(ps, x, s, anchor, t);
    if (!span) continue;
    if (span->first > Coord(Rat(a)) || span->second < Coord(Rat(b + 1))) continue;
    TaggedGuard tg;
    tg.guard = Guard{x, make_chain(poly, span->first, span->second)};
    tg.tag = GuardTag::Bad;
    tg.lift_u = span->first;
    tg.lift_v = span->second;
    tg.src_a = static_cast<int>(a);
    tg.src_b = static_cast<int>(b);
    tg.window_i = c.birth_i;
    tg.window_j = c.birth_j;
    tg.t_enter = c.lt.enter_step;
    tg.t_exit = c.lt.exit_step;
    out.guards.push_back(tg);
  }
  return out;
}

std::optional<Guard> ugly_dominator(const PolygonStructure& ps, const VisibilityCore& core,
                                    const Coord& u, int j, int* exit_edge_source) {
  const Polygon& poly = ps.polygon();
  if (core.empty()) return std::nullopt;
  Coord target(Rat(j + 1));
  if (u >= target) return std::nullopt;
  Point2 up = poly.boundary_point(poly.normalize_param(u));
  Point2 tp = poly.boundary_point(poly.normalize_param(target));
  if (up == tp) return std::nullopt;
  GeodesicPath path =
      ps.shortest_path_hint(ps.triangle_at_param(u), up, ps.triangle_at_param(target), tp);
  Point2 dir = path.pts[1] - path.pts[0];
  std::optional<Point2> gstar;
  try {
    gstar = core.ray_last(up, dir, exit_edge_source);
  } catch (const std::domain_error&) {
    return std::nullopt;  // unbounded along the supporting line
  }
  if (!gstar) return std::nullopt;
  std::optional<std::pair<Coord, Coord>> span;
  try {
    span = max_visible_span(ps, *gstar, u, Coord(Rat(j)), target);
  } catch (const std::domain_error&) {
    return std::nullopt;  // g* escapes the chain core (degenerate window)
  }
  if (!span) return std::nullopt;
  if (span->first > u) return std::nullopt;  // does not cover back to u
  return Guard{*gstar, make_chain(poly, u, span->second)};
}

}  // namespace contigal
