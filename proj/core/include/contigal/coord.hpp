#pragma once

#include <iosfwd>
#include <string>

#include "contigal/rat.hpp"

namespace contigal {

/// Exact coordinate value a + b*sqrt(d) with a, b, d rational, d >= 0.
///
/// Rational values are the common case; square roots enter only through
/// angle-maximizing points (circle tangency) and everything derived from
/// them. Values from two different extension fields can always be compared
/// exactly, but field arithmetic (+,-,*,/) between two genuinely irrational
/// values requires the same radicand and throws otherwise.
///
/// Canonical form: b == 0 implies d == 0; if b != 0 then d > 0 and d is not
/// the square of a rational (square radicands are folded into `a`).
class Coord {
 public:
  Coord() : a_(0), b_(0), d_(0) {}
  Coord(const Rat& r) : a_(r), b_(0), d_(0) {}           // NOLINT(implicit)
  Coord(long v) : a_(v), b_(0), d_(0) {}                 // NOLINT(implicit)
  Coord(int v) : a_(v), b_(0), d_(0) {}                  // NOLINT(implicit)
  Coord(const Rat& a, const Rat& b, const Rat& d);

  const Rat& rat_part() const { return a_; }
  const Rat& radical_coeff() const { return b_; }
  const Rat& radicand() const { return d_; }

  bool is_rational() const { return sgn(b_) == 0; }
  /// The exact rational value; throws std::domain_error if irrational.
  const Rat& as_rat() const;

  int sign() const;
  Coord operator-() const { return Coord(-a_, -b_, d_, nullptr); }

  Coord& operator+=(const Coord& o);
  Coord& operator-=(const Coord& o);
  Coord& operator*=(const Coord& o);
  Coord& operator/=(const Coord& o);

  friend Coord operator+(Coord x, const Coord& y) { return x += y; }
  friend Coord operator-(Coord x, const Coord& y) { return x -= y; }
  friend Coord operator*(Coord x, const Coord& y) { return x *= y; }
  friend Coord operator/(Coord x, const Coord& y) { return x /= y; }

  /// Three-way comparison, exact across different extension fields.
  static int compare(const Coord& x, const Coord& y);

  friend bool operator==(const Coord& x, const Coord& y) { return compare(x, y) == 0; }
  friend bool operator!=(const Coord& x, const Coord& y) { return compare(x, y) != 0; }
  friend bool operator<(const Coord& x, const Coord& y) { return compare(x, y) < 0; }
  friend bool operator<=(const Coord& x, const Coord& y) { return compare(x, y) <= 0; }
  friend bool operator>(const Coord& x, const Coord& y) { return compare(x, y) > 0; }
  friend bool operator>=(const Coord& x, const Coord& y) { return compare(x, y) >= 0; }

  double to_double() const;
  /// Largest integer <= value.
  long floor_long() const;

  /// "p/q" when rational, "p/q+r/s*sqrt(d)" otherwise.
  std::string to_string() const;
  /// Decimal approximation, default 12 significant digits.
  std::string to_decimal(int significant_digits = 12) const;

  friend std::ostream& operator<<(std::ostream& os, const Coord& c);

 private:
  // Unchecked fast-path constructor (tag parameter only).
  Coord(Rat a, Rat b, Rat d, std::nullptr_t) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

  // Rewrites o into this value's field. Throws std::logic_error when the
  // two radicands are incommensurable.
  static void unify(Coord& x, Coord& y);

  Rat a_, b_, d_;
};

/// sign of p + q*sqrt(d), d >= 0.
int quad_sign(const Rat& p, const Rat& q, const Rat& d);

}  // namespace contigal
