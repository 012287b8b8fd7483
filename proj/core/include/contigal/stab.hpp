#pragma once

#include <optional>
#include <vector>

#include "contigal/coord.hpp"

namespace contigal {

/// Static max-weight interval stabbing: given weighted intervals [u, v]
/// (closed, Coord endpoints), query(x) returns the index of the interval
/// containing x with the largest weight. Segment tree over the compressed
/// endpoint coordinates; ties resolve to the smallest index.
class IntervalMaxStab {
 public:
  struct Entry {
    Coord u, v;
    Coord weight;
  };

  explicit IntervalMaxStab(std::vector<Entry> entries);

  std::optional<size_t> query(const Coord& x) const;
  /// Linear-scan twin for differential testing.
  std::optional<size_t> query_brute(const Coord& x) const;

  const std::vector<Entry>& entries() const { return entries_; }

 private:
  void insert(size_t node, size_t lo, size_t hi, size_t a, size_t b, size_t idx);

  std::vector<Entry> entries_;
  std::vector<Coord> coords_;           // sorted unique endpoints
  std::vector<std::optional<size_t>> best_;  // per segment-tree node
  size_t leaves_ = 0;

  bool better(size_t a, size_t b) const;
};

/// Weighted rectangles [t1, t2] x [u, v] over (step-time, boundary-parameter)
/// space; query(t, x) returns the maximum-weight rectangle containing the
/// point. Interval tree over the integer time axis with per-node lists.
class RectStab {
 public:
  struct Rect {
    long t1, t2;
    Coord u, v;
    Coord weight;
    size_t payload;
  };

  explicit RectStab(std::vector<Rect> rects);

  std::optional<size_t> query(long t, const Coord& x) const;  // returns rect index
  std::optional<size_t> query_brute(long t, const Coord& x) const;

  const std::vector<Rect>& rects() const { return rects_; }

 private:
  std::vector<Rect> rects_;
  long t_lo_ = 0, t_hi_ = 0;
  size_t size_ = 1;
  std::vector<std::vector<size_t>> node_rects_;
};

}  // namespace contigal
