#pragma once

#include "contigal/coord.hpp"

namespace contigal {

struct Point2 {
  Coord x, y;

  Point2() = default;
  Point2(Coord px, Coord py) : x(std::move(px)), y(std::move(py)) {}

  friend Point2 operator+(const Point2& p, const Point2& q) { return {p.x + q.x, p.y + q.y}; }
  friend Point2 operator-(const Point2& p, const Point2& q) { return {p.x - q.x, p.y - q.y}; }
  friend Point2 operator*(const Coord& s, const Point2& p) { return {s * p.x, s * p.y}; }
  friend bool operator==(const Point2& p, const Point2& q) { return p.x == q.x && p.y == q.y; }
  friend bool operator!=(const Point2& p, const Point2& q) { return !(p == q); }
};

inline Coord cross(const Point2& u, const Point2& v) { return u.x * v.y - u.y * v.x; }
inline Coord dot(const Point2& u, const Point2& v) { return u.x * v.x + u.y * v.y; }

/// +1 iff r lies strictly left of the directed line p->q, -1 strictly right,
/// 0 collinear. Exact.
inline int orient(const Point2& p, const Point2& q, const Point2& r) {
  return cross(q - p, r - p).sign();
}

/// Lexicographic (x, then y) comparison, used for deterministic tie-breaking.
inline bool lex_less(const Point2& p, const Point2& q) {
  int c = Coord::compare(p.x, q.x);
  if (c != 0) return c < 0;
  return Coord::compare(p.y, q.y) < 0;
}

}  // namespace contigal
