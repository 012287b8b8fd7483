#include "contigal/stab.hpp"

#include <algorithm>

namespace contigal {

IntervalMaxStab::IntervalMaxStab(std::vector<Entry> entries) : entries_(std::move(entries)) {
  coords_.reserve(entries_.size() * 2);
  for (const Entry& e : entries_) {
    coords_.push_back(e.u);
    coords_.push_back(e.v);
  }
  std::sort(coords_.begin(), coords_.end());
  coords_.erase(std::unique(coords_.begin(), coords_.end()), coords_.end());
  // Elementary pieces: 2m-1 alternating point/open-interval slots.
  leaves_ = coords_.empty() ? 1 : coords_.size() * 2 - 1;
  best_.assign(4 * leaves_ + 4, std::nullopt);
  for (size_t k = 0; k < entries_.size(); ++k) {
    size_t a = static_cast<size_t>(std::lower_bound(coords_.begin(), coords_.end(), entries_[k].u) -
                                   coords_.begin());
    size_t b = static_cast<size_t>(std::lower_bound(coords_.begin(), coords_.end(), entries_[k].v) -
                                   coords_.begin());
    insert(1, 0, leaves_ - 1, 2 * a, 2 * b, k);
  }
}

bool IntervalMaxStab::better(size_t a, size_t b) const {
  int c = Coord::compare(entries_[a].weight, entries_[b].weight);
  if (c != 0) return c > 0;
  return a < b;
}

void IntervalMaxStab::insert(size_t node, size_t lo, size_t hi, size_t a, size_t b, size_t idx) {
  if (b < lo || hi < a) return;
  if (a <= lo && hi <= b) {
    if (!best_[node] || better(idx, *best_[node])) best_[node] = idx;
    return;
  }
  size_t mid = (lo + hi) / 2;
  insert(2 * node, lo, mid, a, b, idx);
  insert(2 * node + 1, mid + 1, hi, a, b, idx);
}

std::optional<size_t> IntervalMaxStab::query(const Coord& x) const {
  if (entries_.empty() || coords_.empty()) return std::nullopt;
  if (x < coords_.front() || x > coords_.back()) return std::nullopt;
  // Slot index: 2k for coords_[k], 2k+1 for the open interval after it.
  size_t k = static_cast<size_t>(std::upper_bound(coords_.begin(), coords_.end(), x) -
                                 coords_.begin());
  size_t slot = (k > 0 && coords_[k - 1] == x) ? 2 * (k - 1) : 2 * (k - 1) + 1;
  std::optional<size_t> best;
  size_t node = 1, lo = 0, hi = leaves_ - 1;
  while (true) {
    if (best_[node] && (!best || better(*best_[node], *best))) best = best_[node];
    if (lo == hi) break;
    size_t mid = (lo + hi) / 2;
    if (slot <= mid) {
      node = 2 * node;
      hi = mid;
    } else {
      node = 2 * node + 1;
      lo = mid + 1;
    }
  }
  return best;
}

std::optional<size_t> IntervalMaxStab::query_brute(const Coord& x) const {
  std::optional<size_t> best;
  for (size_t k = 0; k < entries_.size(); ++k) {
    if (entries_[k].u <= x && x <= entries_[k].v) {
      if (!best || better(k, *best)) best = k;
    }
  }
  return best;
}

RectStab::RectStab(std::vector<Rect> rects) : rects_(std::move(rects)) {
  if (rects_.empty()) {
    node_rects_.assign(2, {});
    return;
  }
  t_lo_ = rects_[0].t1;
  t_hi_ = rects_[0].t2;
  for (const Rect& r : rects_) {
    t_lo_ = std::min(t_lo_, r.t1);
    t_hi_ = std::max(t_hi_, r.t2);
  }
  size_ = 1;
  while (size_ < static_cast<size_t>(t_hi_ - t_lo_ + 1)) size_ *= 2;
  node_rects_.assign(2 * size_, {});
  for (size_t k = 0; k < rects_.size(); ++k) {
    // Cover [t1, t2] with canonical nodes (iterative, bottom-up).
    size_t a = static_cast<size_t>(rects_[k].t1 - t_lo_) + size_;
    size_t b = static_cast<size_t>(rects_[k].t2 - t_lo_) + size_;
    while (a <= b) {
      if (a % 2 == 1) node_rects_[a++].push_back(k);
      if (b % 2 == 0) node_rects_[b--].push_back(k);
      if (a > b) break;
      a /= 2;
      b /= 2;
    }
  }
}

std::optional<size_t> RectStab::query(long t, const Coord& x) const {
  if (rects_.empty() || t < t_lo_ || t > t_hi_) return std::nullopt;
  std::optional<size_t> best;
  auto consider = [&](size_t k) {
    const Rect& r = rects_[k];
    if (r.u <= x && x <= r.v) {
      if (!best || r.weight > rects_[*best].weight ||
          (r.weight == rects_[*best].weight && k < *best)) {
        best = k;
      }
    }
  };
  for (size_t node = static_cast<size_t>(t - t_lo_) + size_; node >= 1; node /= 2) {
    for (size_t k : node_rects_[node]) consider(k);
    if (node == 1) break;
  }
  return best;
}

std::optional<size_t> RectStab::query_brute(long t, const Coord& x) const {
  std::optional<size_t> best;
  for (size_t k = 0; k < rects_.size(); ++k) {
    const Rect& r = rects_[k];
    if (r.t1 <= t && t <= r.t2 && r.u <= x && x <= r.v) {
      if (!best || r.weight > rects_[*best].weight ||
          (r.weight == rects_[*best].weight && k < *best)) {
        best = k;
      }
    }
  }
  return best;
}

}  // namespace contigal
