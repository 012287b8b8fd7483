#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace contigal {

/// Exact rational number. Always canonical: gcd(|num|, den) = 1, den > 0.
/// mpq_class maintains the canonical form on every operation.
using Rat = mpq_class;

inline int sign(const Rat& r) { return sgn(r); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

/// Largest integer <= r, as a Rat.
Rat rat_floor(const Rat& r);

/// floor(r) as long. Throws std::overflow_error if it does not fit.
long rat_floor_long(const Rat& r);

/// Exact power of two, exponent may be negative (e.g. 2^-30).
Rat rat_pow2(int e);

/// Parses "p/q", an integer, or a decimal literal ("-12.5", "3e2", ".25").
/// Locale-independent, ASCII only. Returns nullopt on malformed input.
std::optional<Rat> rat_parse(const std::string& s);

/// Canonical "p/q" form ("p" when q == 1).
std::string rat_to_string(const Rat& r);

/// Decimal approximation with the given number of significant digits.
std::string rat_to_decimal(const Rat& r, int significant_digits = 12);

/// True iff r = (p/q)^2 for some rational; if so *root is the nonnegative root.
bool rat_perfect_square(const Rat& r, Rat* root);

}  // namespace contigal
