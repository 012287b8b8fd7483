#include "contigal/rat.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace contigal {

Rat rat_floor(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return Rat(q);
}

long rat_floor_long(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  if (!q.fits_slong_p()) throw std::overflow_error("rat_floor_long: out of range");
  return q.get_si();
}

Rat rat_pow2(int e) {
  mpz_class one = 1;
  if (e >= 0) {
    mpz_class n;
    mpz_mul_2exp(n.get_mpz_t(), one.get_mpz_t(), e);
    return Rat(n);
  }
  mpz_class d;
  mpz_mul_2exp(d.get_mpz_t(), one.get_mpz_t(), -e);
  Rat r(1, d);
  r.canonicalize();
  return r;
}

std::optional<Rat> rat_parse(const std::string& s) {
  if (s.empty()) return std::nullopt;
  // p/q form.
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    try {
      mpz_class num(s.substr(0, slash));
      mpz_class den(s.substr(slash + 1));
      if (den == 0) return std::nullopt;
      Rat r(num, den);
      r.canonicalize();
      return r;
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }
  // Decimal literal, optional exponent.
  size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = (s[i] == '-');
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false, seen_digit = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (c == '.') {
      if (seen_dot) return std::nullopt;
      seen_dot = true;
    } else if (c == 'e' || c == 'E') {
      break;
    } else {
      return std::nullopt;
    }
  }
  if (!seen_digit) return std::nullopt;
  long exp10 = 0;
  if (i < s.size()) {  // exponent part
    ++i;
    if (i >= s.size()) return std::nullopt;
    bool eneg = false;
    if (s[i] == '+' || s[i] == '-') {
      eneg = (s[i] == '-');
      ++i;
    }
    if (i >= s.size()) return std::nullopt;
    long v = 0;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
      v = v * 10 + (s[i] - '0');
      if (v > 100000) return std::nullopt;
    }
    exp10 = eneg ? -v : v;
  }
  mpz_class mant(digits.empty() ? "0" : digits);
  if (neg) mant = -mant;
  long net = exp10 - frac_digits;
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(net < 0 ? -net : net));
  Rat r = net >= 0 ? Rat(mant * p10) : Rat(mant, p10);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rat_to_decimal(const Rat& r, int significant_digits) {
  mpf_class f(r, 64 + significant_digits * 4);
  mp_exp_t exp;
  std::string mant = f.get_str(exp, 10, significant_digits);
  bool neg = !mant.empty() && mant[0] == '-';
  if (neg) mant = mant.substr(1);
  if (mant.empty()) mant = "0";
  std::ostringstream out;
  if (neg) out << '-';
  // get_str yields 0.mant * 10^exp
  out << "0." << mant << "e" << exp;
  return out.str();
}

bool rat_perfect_square(const Rat& r, Rat* root) {
  if (r < 0) return false;
  if (!mpz_perfect_square_p(r.get_num().get_mpz_t()) ||
      !mpz_perfect_square_p(r.get_den().get_mpz_t()))
    return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), r.get_num().get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), r.get_den().get_mpz_t());
  if (root) {
    *root = Rat(rn, rd);
    root->canonicalize();
  }
  return true;
}

}  // namespace contigal
