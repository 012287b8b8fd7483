#include "contigal/solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace contigal {

Engine::Engine(const Polygon& poly) : poly_(poly), ps_(poly_) { require_valid(poly_); }

void Engine::build_pipeline() {
  if (pipeline_built_) return;
  sigma_ = compute_sigma(ps_);
  dprime_ = compute_Dprime(ps_);
  bsigma_ = compute_Bsigma(ps_, sigma_);

  stored_.clear();
  std::vector<IntervalMaxStab::Entry> entries;
  auto push = [&](const TaggedGuard& tg) {
    stored_.push_back(&tg);
    entries.push_back({tg.guard.chain.u, tg.guard.chain.v, tg.guard.chain.v});
  };
  for (const TaggedGuard& tg : dprime_.guards) push(tg);
  for (const TaggedGuard& tg : bsigma_.guards) push(tg);
  stab_ = std::make_unique<IntervalMaxStab>(std::move(entries));

  std::vector<RectStab::Rect> rects;
  for (size_t k = 0; k < bsigma_.guards.size(); ++k) {
    const TaggedGuard& tg = bsigma_.guards[k];
    rects.push_back({tg.t_enter, tg.t_exit, tg.guard.chain.u, tg.guard.chain.v,
                     tg.guard.chain.v, k});
  }
  rect_stab_ = std::make_unique<RectStab>(std::move(rects));
  pipeline_built_ = true;
}

std::vector<Coord> Engine::starts() {
  build_pipeline();
  std::vector<Coord> xs;
  for (int i = 1; i <= poly_.n(); ++i) xs.emplace_back(Rat(i));
  for (const TaggedGuard& tg : dprime_.guards) xs.push_back(tg.guard.chain.u);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

Engine::Resolution Engine::resolve_window(const Coord& x, int j, const SlidingCore& window,
                                          const Coord& cap) {
  const int n = poly_.n();
  Coord period{Rat(n)};
  // Baseline: a boundary point always sees the rest of its own edge.
  Coord best_v{Rat(x.floor_long() + 1)};
  Guard best_guard{poly_.boundary_point(poly_.normalize_param(x)), make_chain(poly_, x, best_v)};

  auto offer = [&](const Coord& v, const Guard& g) {
    Coord vc = v > cap ? cap : v;
    if (vc > best_v) {
      best_v = vc;
      best_guard = Guard{g.g, make_chain(poly_, x, vc)};
    }
  };
  // Stored good/bad dominators via the stabbing index (both lifts).
  if (auto hit = stab_->query(x)) {
    const TaggedGuard& tg = *stored_[*hit];
    offer(tg.guard.chain.v, tg.guard);
  }
  if (auto hit = stab_->query(x + period)) {
    const TaggedGuard& tg = *stored_[*hit];
    offer(tg.guard.chain.v - period, tg.guard);
  }
  // On-the-fly ugly dominator for this window.
  if (auto ug = ugly_dominator(ps_, window.core(), x, j)) {
    offer(x + (ug->chain.v - ug->chain.u), *ug);
  }
  if (best_v <= Coord(Rat(j)) && best_v < cap) {
    throw std::logic_error("next: no candidate reached the certified window");
  }
  return {best_v, best_guard};
}

std::vector<NextValue> Engine::next_batch(const std::vector<Coord>& xs) {
  build_pipeline();
  const int n = poly_.n();
  Coord period{Rat(n)};
  std::vector<size_t> order(xs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return xs[a] < xs[b]; });
  for (const Coord& x : xs) {
    if (x < Coord(1) || x >= Coord(Rat(n + 1)))
      throw std::invalid_argument("next_batch: parameter outside [1, n+1)");
  }

  std::vector<NextValue> out(xs.size());
  SigmaReplay replay(poly_, sigma_);
  size_t qi = 0;
  while (qi < order.size()) {
    const Coord& x = xs[order[qi]];
    int i = replay.i(), j = replay.j();
    if (x >= Coord(Rat(i))) {
      if (replay.done()) throw std::logic_error("next_batch: sliding sequence exhausted");
      replay.step();
      continue;
    }
    // x in [i-1, i).
    NextValue nv;
    if (Coord(Rat(j + 1)) >= x + period) {
      // Chain would complete a revolution: check full coverage first.
      if (auto g = guard_exists(ps_, replay.window().core(), x, x + period)) {
        nv.v = x + period;
        nv.full = true;
        nv.guard = *g;
        out[order[qi++]] = nv;
        continue;
      }
      Resolution r = resolve_window(x, j, replay.window(), x + period);
      nv.v = r.v;
      nv.full = (r.v == x + period);
      nv.guard = r.guard;
      out[order[qi++]] = nv;
      continue;
    }
    Coord target{Rat(j + 1)};
    if (auto g = guard_exists(ps_, replay.window().lookahead(), x, target)) {
      bool column_continues = !replay.done() &&
                              sigma_.pairs[replay.pos() + 1].first == i;
      if (column_continues) {
        replay.step();
        continue;
      }
      // No later pair in this column: next(x) == j+1 exactly.
      nv.v = target;
      nv.full = false;
      nv.guard = *g;
      out[order[qi++]] = nv;
      continue;
    }
    Resolution r = resolve_window(x, j, replay.window(), target);
    nv.v = r.v;
    nv.full = false;
    nv.guard = r.guard;
    out[order[qi++]] = nv;
  }
  return out;
}

NextValue Engine::next_point(const Coord& x) { return next_batch({x})[0]; }

std::optional<Guard> Engine::kernel_guard() {
  VisibilityCore k = kernel(poly_);
  if (k.empty()) return std::nullopt;
  auto w = k.witness();
  if (!w) return std::nullopt;
  Guard g{*w, make_chain(poly_, Coord(1), Coord(Rat(poly_.n() + 1)))};
  return g;
}

Solution Engine::materialize(const Coord& start, int k) {
  Solution sol;
  sol.k = k;
  sol.start = start;
  Coord period{Rat(poly_.n())};
  Coord cur = start;
  for (int r = 0; r < k; ++r) {
    Coord cn = poly_.normalize_param(cur);
    NextValue nv = next_point(cn);
    Coord len = nv.v - cn;
    Guard g{nv.guard.g, make_chain(poly_, cur, cur + len)};
    sol.guards.push_back(g);
    cur += len;
    if (cur >= start + period) break;
  }
  if (cur < start + period)
    throw std::logic_error("materialize: revolution did not close in k steps");
  return sol;
}

Solution Engine::solve_greedy() {
  if (auto g = kernel_guard()) {
    Solution s;
    s.k = 1;
    s.guards = {*g};
    s.start = Coord(1);
    return s;
  }
  build_pipeline();
  const int n = poly_.n();
  Coord period{Rat(n)};
  std::vector<Coord> start_pts = starts();
  std::vector<Coord> abs = start_pts;
  for (int round = 1; round <= 2 * n + 2; ++round) {
    std::vector<Coord> q;
    q.reserve(abs.size());
    for (const Coord& a : abs) q.push_back(poly_.normalize_param(a));
    std::vector<NextValue> vals = next_batch(q);
    int winner = -1;
    for (size_t idx = 0; idx < abs.size(); ++idx) {
      abs[idx] += vals[idx].v - q[idx];
      if (abs[idx] >= start_pts[idx] + period && winner < 0) winner = static_cast<int>(idx);
    }
    if (winner >= 0) return materialize(start_pts[static_cast<size_t>(winner)], round);
  }
  throw std::logic_error("solve_greedy: no revolution closed");
}

std::optional<Solution> Engine::has_solution_of_size(int K) {
  if (K < 1) throw std::invalid_argument("has_solution_of_size: K must be >= 1");
  if (auto g = kernel_guard()) {
    Solution s;
    s.k = 1;
    s.guards = {*g};
    s.start = Coord(1);
    return s;
  }
  build_pipeline();
  const int n = poly_.n();
  Coord period{Rat(n)};
  std::vector<Coord> start_pts = starts();
  std::vector<Coord> abs = start_pts;
  for (int round = 1; round <= K; ++round) {
    std::vector<Coord> q;
    q.reserve(abs.size());
    for (const Coord& a : abs) q.push_back(poly_.normalize_param(a));
    std::vector<NextValue> vals = next_batch(q);
    int winner = -1;
    for (size_t idx = 0; idx < abs.size(); ++idx) {
      abs[idx] += vals[idx].v - q[idx];
      if (abs[idx] >= start_pts[idx] + period && winner < 0) winner = static_cast<int>(idx);
    }
    if (winner >= 0) return materialize(start_pts[static_cast<size_t>(winner)], round);
  }
  return std::nullopt;
}

const PiecewiseNext& Engine::piecewise() {
  if (!piecewise_) piecewise_ = build_piecewise_next(*this);
  return *piecewise_;
}

Solution Engine::solve() {
  if (!solvable3_.has_value()) {
    sol3_ = has_solution_of_size(3);
    solvable3_ = sol3_.has_value();
  }
  if (*solvable3_) return *sol3_;

  const PiecewiseNext& pw = piecewise();
  const int n = poly_.n();
  Coord period{Rat(n)};
  std::vector<Coord> start_pts = starts();
  int best_k = -1;
  Coord best_start;
  for (const Coord& s : start_pts) {
    Coord cur = s;
    int steps = 0;
    while (cur < s + period) {
      Coord cn = poly_.normalize_param(cur);
      Coord v = pw.eval(cn);
      if (v <= cn) throw std::logic_error("solve: piecewise evaluation did not advance");
      cur += v - cn;
      ++steps;
      if (best_k > 0 && steps >= best_k) break;  // cannot beat the incumbent
      if (steps > 2 * n + 2) throw std::logic_error("solve: revolution did not close");
    }
    if (cur >= s + period && (best_k < 0 || steps < best_k)) {
      best_k = steps;
      best_start = s;
    }
  }
  if (best_k <= 0) throw std::logic_error("solve: no start closed a revolution");
  return materialize(best_start, best_k);
}

}  // namespace contigal
