#include "contigal/corewindow.hpp"

#include <stdexcept>

namespace contigal {

HalfPlane edge_halfplane(const Polygon& poly, long lifted_edge) {
  return HalfPlane::left_of(poly.vertex(lifted_edge), poly.vertex(lifted_edge + 1),
                            static_cast<int>(lifted_edge));
}

std::vector<long> chain_edges(const Polygon& poly, const Coord& u, const Coord& v) {
  // Edge m participates iff the open intervals (m, m+1) and (u, v) overlap:
  // m > u - 1 and m < v.
  std::vector<long> out;
  if (v <= u) return out;
  long m_lo = (u - Coord(1)).floor_long() + 1;
  long m_hi = v.floor_long();
  if (Coord(Rat(m_hi)) == v) --m_hi;
  long span = m_hi - m_lo + 1;
  if (span > poly.n()) m_hi = m_lo + poly.n() - 1;  // one revolution covers everything
  for (long m = m_lo; m <= m_hi; ++m) out.push_back(m);
  return out;
}

VisibilityCore core_of_chain(const Polygon& poly, const Coord& u, const Coord& v) {
  VisibilityCore core;
  for (long m : chain_edges(poly, u, v)) core.clip(edge_halfplane(poly, m));
  return core;
}

VisibilityCore core_of_chain(const Polygon& poly, const BoundaryChain& chain) {
  return core_of_chain(poly, chain.u, chain.v);
}

VisibilityCore kernel(const Polygon& poly) {
  return core_of_chain(poly, Coord(1), Coord(Rat(poly.n() + 1)));
}

SlidingCore::SlidingCore(const Polygon& poly, int i, int j) : poly_(poly), i_(i), j_(j) {
  if (i < 1 || j < i - 1) throw std::invalid_argument("SlidingCore: need 1 <= i <= j+1");
  for (long m = i_ - 1; m <= j_; ++m) planes_.push_back(edge_halfplane(poly_, m));
  rebuild();
  refresh_lookahead();
  log_diff();
}

bool SlidingCore::can_advance_j() const { return j_ < i_ + poly_.n() - 1; }

void SlidingCore::advance_i() {
  if (i_ > j_) throw std::out_of_range("SlidingCore::advance_i: window collapsed");
  planes_.pop_front();
  ++i_;
  ++step_;
  rebuild();
  refresh_lookahead();
  log_diff();
}

void SlidingCore::advance_j() {
  if (!can_advance_j()) throw std::out_of_range("SlidingCore::advance_j: window exceeds one revolution");
  ++j_;
  ++step_;
  planes_.push_back(edge_halfplane(poly_, j_));
  w1_ = std::move(w2_);
  refresh_lookahead();
  log_diff();
}

void SlidingCore::rebuild() {
  w1_ = VisibilityCore();
  for (const HalfPlane& h : planes_) w1_.clip(h);
}

void SlidingCore::refresh_lookahead() {
  w2_ = w1_;
  w2_.clip(edge_halfplane(poly_, j_ + 1));
}

void SlidingCore::log_diff() {
  std::map<std::pair<Rat, Rat>, RegionVertex, RatPairLess> current;
  for (const RegionVertex& v : w1_.vertices()) {
    current.emplace(std::make_pair(v.p.x.as_rat(), v.p.y.as_rat()), v);
  }
  // Exits.
  for (auto it = alive_.begin(); it != alive_.end();) {
    if (current.find(it->first) == current.end()) {
      lifetimes_[static_cast<size_t>(it->second)].exit_step = step_;
      known_[it->first] = true;
      ++events_;
      it = alive_.erase(it);
    } else {
      ++it;
    }
  }
  // Entries.
  for (const auto& [key, v] : current) {
    if (alive_.find(key) != alive_.end()) continue;
    auto k = known_.find(key);
    if (k != known_.end() && k->second) ++readmissions_;
    Lifetime lt;
    lt.p = v.p;
    lt.src_in = std::min(v.src_in, v.src_out);
    lt.src_out = std::max(v.src_in, v.src_out);
    lt.enter_step = step_;
    lt.exit_step = -1;
    alive_[key] = static_cast<long>(lifetimes_.size());
    lifetimes_.push_back(lt);
    ++events_;
  }
}

}  // namespace contigal
