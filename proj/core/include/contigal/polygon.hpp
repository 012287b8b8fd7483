#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "contigal/point.hpp"

namespace contigal {

/// Simple polygon, vertices in counter-clockwise order, n >= 3.
///
/// The boundary is parametrized by [1, 2n+1): integer t maps to vertex
/// ((t-1) mod n) + 1 (1-based), fractional t interpolates along the edge,
/// and t and t+n name the same point. Edge m (1-based, m in [1, n]) runs
/// from vertex m to vertex m+1.
class Polygon {
 public:
  Polygon() = default;
  explicit Polygon(std::vector<Point2> vertices) : v_(std::move(vertices)) {}

  int n() const { return static_cast<int>(v_.size()); }
  const std::vector<Point2>& vertices() const { return v_; }

  /// 1-based vertex access; indices wrap modulo n (accepts any lift >= 0).
  const Point2& vertex(long i) const { return v_[static_cast<size_t>(mod_index(i))]; }

  /// 0-based wrap of a 1-based (possibly lifted) index.
  long mod_index(long i) const {
    long n_ = n();
    long r = (i - 1) % n_;
    if (r < 0) r += n_;
    return r;
  }

  /// Point at boundary parameter t in [1, 2n+1). Throws std::out_of_range.
  Point2 boundary_point(const Coord& t) const;

  /// Folds any lifted parameter into the canonical range [1, n+1).
  Coord normalize_param(const Coord& t) const;

  /// Twice the signed area (positive iff counter-clockwise).
  Rat signed_area2() const;

  bool is_convex() const;

  /// True iff vertex i (1-based) is reflex (interior angle > pi).
  bool is_reflex(long i) const;

 private:
  std::vector<Point2> v_;
};

/// Chain [u, v] of boundary parameters traversed counter-clockwise.
/// Canonical: u in [1, n+1), u <= v <= u + n. A chain saturates at one full
/// revolution: v == u + n together with `full` set certifies full coverage.
struct BoundaryChain {
  Coord u, v;
  bool full = false;

  Coord length() const { return v - u; }
};

/// Builds a chain from (possibly unnormalized) parameters, saturating at one
/// revolution.
BoundaryChain make_chain(const Polygon& poly, const Coord& u, const Coord& v);

struct ValidationIssue {
  enum Kind { TooFewVertices, DuplicateVertex, NotCounterClockwise, SelfIntersection, CollinearTriple };
  Kind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  /// True when the collinearity scan was exhaustive over all vertex triples
  /// (always the case for convex polygons; for large non-convex inputs only
  /// consecutive triples are checked and this flag is false).
  bool collinearity_exhaustive = true;

  bool ok() const { return issues.empty(); }
  std::string summary() const;
};

/// Accepts iff the polygon is simple, counter-clockwise, and in general
/// position (no three collinear vertices). Report lists each violation.
ValidationReport validate_polygon(const Polygon& poly);

/// Requires a passing validate_polygon report; throws std::invalid_argument
/// with the report summary otherwise.
void require_valid(const Polygon& poly);

/// Shifts every coordinate by a deterministic pseudo-random rational in
/// (-magnitude, magnitude), retrying with derived sub-seeds until the result
/// validates. magnitude == 0 returns the polygon unchanged.
/// Throws std::runtime_error when the retry budget is exhausted.
Polygon perturb(const Polygon& poly, std::uint64_t seed, const Rat& magnitude,
                int max_attempts = 32);

}  // namespace contigal
