#include "contigal/coord.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace contigal {

int quad_sign(const Rat& p, const Rat& q, const Rat& d) {
  int sq = sgn(q);
  if (sq == 0 || sgn(d) == 0) return sgn(p);
  int sp = sgn(p);
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: compare p^2 against q^2 d.
  return sp * sgn(Rat(p * p - q * q * d));
}

Coord::Coord(const Rat& a, const Rat& b, const Rat& d) : a_(a), b_(b), d_(d) {
  if (sgn(d_) < 0) throw std::domain_error("Coord: negative radicand");
  if (sgn(b_) == 0 || sgn(d_) == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  Rat root;
  if (rat_perfect_square(d_, &root)) {
    a_ += b_ * root;
    b_ = 0;
    d_ = 0;
  }
}

const Rat& Coord::as_rat() const {
  if (!is_rational()) throw std::domain_error("Coord::as_rat on irrational value");
  return a_;
}

int Coord::sign() const { return quad_sign(a_, b_, d_); }

void Coord::unify(Coord& x, Coord& y) {
  if (y.is_rational()) {
    if (!x.is_rational()) {
      y.d_ = x.d_;
    }
    return;
  }
  if (x.is_rational()) {
    x.d_ = y.d_;
    return;
  }
  if (x.d_ == y.d_) return;
  Rat ratio = y.d_ / x.d_;
  Rat root;
  if (rat_perfect_square(ratio, &root)) {
    y.b_ *= root;
    y.d_ = x.d_;
    return;
  }
  throw std::logic_error("Coord: arithmetic across incommensurable radicands");
}

Coord& Coord::operator+=(const Coord& o) {
  if (o.is_rational()) {
    a_ += o.a_;
    return *this;
  }
  Coord y = o;
  unify(*this, y);
  a_ += y.a_;
  b_ += y.b_;
  if (sgn(b_) == 0) d_ = 0;
  return *this;
}

Coord& Coord::operator-=(const Coord& o) {
  if (o.is_rational()) {
    a_ -= o.a_;
    return *this;
  }
  Coord y = o;
  unify(*this, y);
  a_ -= y.a_;
  b_ -= y.b_;
  if (sgn(b_) == 0) d_ = 0;
  return *this;
}

Coord& Coord::operator*=(const Coord& o) {
  if (o.is_rational()) {
    a_ *= o.a_;
    b_ *= o.a_;
    if (sgn(b_) == 0) d_ = 0;
    return *this;
  }
  if (is_rational()) {
    Rat s = a_;
    a_ = s * o.a_;
    b_ = s * o.b_;
    d_ = o.d_;
    if (sgn(b_) == 0) d_ = 0;
    return *this;
  }
  Coord y = o;
  unify(*this, y);
  Rat na = a_ * y.a_ + b_ * y.b_ * d_;
  Rat nb = a_ * y.b_ + b_ * y.a_;
  a_ = na;
  b_ = nb;
  if (sgn(b_) == 0) d_ = 0;
  return *this;
}

Coord& Coord::operator/=(const Coord& o) {
  if (o.sign() == 0) throw std::domain_error("Coord: division by zero");
  if (o.is_rational()) {
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  // Multiply by the conjugate; the norm a^2 - b^2 d is nonzero because d is
  // not a rational square.
  Coord y = o;
  if (!is_rational()) unify(*this, y);
  Rat norm = y.a_ * y.a_ - y.b_ * y.b_ * y.d_;
  Coord conj(y.a_, -y.b_, y.d_, nullptr);
  if (is_rational()) d_ = y.d_;
  *this *= conj;
  a_ /= norm;
  b_ /= norm;
  if (sgn(b_) == 0) d_ = 0;
  return *this;
}

int Coord::compare(const Coord& x, const Coord& y) {
  // sign of (x.a - y.a) + x.b sqrt(x.d) - y.b sqrt(y.d)
  Rat r0 = x.a_ - y.a_;
  const Rat& r1 = x.b_;
  const Rat& r2 = y.b_;
  if (sgn(r1) == 0) return quad_sign(r0, -r2, y.d_);
  if (sgn(r2) == 0) return quad_sign(r0, r1, x.d_);
  if (x.d_ == y.d_) return quad_sign(r0, Rat(r1 - r2), x.d_);
  // L = r0 + r1 sqrt(d1), M = r2 sqrt(d2); sign(L - M).
  int sL = quad_sign(r0, r1, x.d_);
  int sM = sgn(r2);
  if (sL == 0) return -sM;
  if (sL != sM) return sL;
  // Same nonzero sign: sign(L - M) = sL * sign(L^2 - M^2).
  Rat p = r0 * r0 + r1 * r1 * x.d_ - r2 * r2 * y.d_;
  Rat q = 2 * r0 * r1;
  return sL * quad_sign(p, q, x.d_);
}

double Coord::to_double() const {
  double v = a_.get_d();
  if (!is_rational()) v += b_.get_d() * std::sqrt(d_.get_d());
  return v;
}

long Coord::floor_long() const {
  if (is_rational()) return rat_floor_long(a_);
  long guess = static_cast<long>(std::floor(to_double()));
  // to_double is close; fix up exactly.
  while (Coord(Rat(guess)) > *this) --guess;
  while (Coord(Rat(guess + 1)) <= *this) ++guess;
  return guess;
}

std::string Coord::to_string() const {
  if (is_rational()) return rat_to_string(a_);
  std::ostringstream out;
  out << rat_to_string(a_) << (sgn(b_) < 0 ? "-" : "+") << rat_to_string(rat_abs(b_))
      << "*sqrt(" << rat_to_string(d_) << ")";
  return out.str();
}

std::string Coord::to_decimal(int significant_digits) const {
  int prec = 64 + significant_digits * 4;
  mpf_class v(a_, prec);
  if (!is_rational()) {
    mpf_class rad(d_, prec);
    mpf_class root;
    mpf_sqrt(root.get_mpf_t(), rad.get_mpf_t());
    v += mpf_class(b_, prec) * root;
  }
  mp_exp_t exp;
  std::string mant = v.get_str(exp, 10, significant_digits);
  bool neg = !mant.empty() && mant[0] == '-';
  if (neg) mant = mant.substr(1);
  if (mant.empty()) mant = "0";
  std::ostringstream out;
  if (neg) out << '-';
  out << "0." << mant << "e" << exp;
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const Coord& c) { return os << c.to_string(); }

}  // namespace contigal
