#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "contigal/coord.hpp"

using namespace contigal;

TEST_CASE("rat parsing accepts decimals and fractions") {
  CHECK(*rat_parse("3/4") == Rat(3, 4));
  CHECK(*rat_parse("-12.5") == Rat(-25, 2));
  CHECK(*rat_parse(".25") == Rat(1, 4));
  CHECK(*rat_parse("3e2") == Rat(300));
  CHECK(*rat_parse("-6/8") == Rat(-3, 4));
  CHECK(!rat_parse("1/0").has_value());
  CHECK(!rat_parse("abc").has_value());
  CHECK(!rat_parse("1.2.3").has_value());
}

TEST_CASE("rat round trip and floor") {
  Rat r(-7, 3);
  CHECK(rat_to_string(r) == "-7/3");
  CHECK(*rat_parse(rat_to_string(r)) == r);
  CHECK(rat_floor_long(r) == -3);
  CHECK(rat_floor_long(Rat(7, 3)) == 2);
  CHECK(rat_floor_long(Rat(4)) == 4);
  CHECK(rat_pow2(-3) == Rat(1, 8));
}

TEST_CASE("coord folds square radicands") {
  Coord c(Rat(1), Rat(2), Rat(9));  // 1 + 2*sqrt(9) = 7
  CHECK(c.is_rational());
  CHECK(c.as_rat() == Rat(7));
  Coord d(Rat(0), Rat(1), Rat(2));
  CHECK(!d.is_rational());
}

TEST_CASE("coord arithmetic in one field") {
  Coord a(Rat(1), Rat(1), Rat(2));   // 1 + sqrt2
  Coord b(Rat(-1), Rat(1), Rat(2));  // -1 + sqrt2
  Coord prod = a * b;                // (sqrt2)^2 - 1 = 1
  CHECK(prod.is_rational());
  CHECK(prod.as_rat() == Rat(1));
  Coord q = a / b;  // (1+s)/(s-1) = (1+s)^2 / 1 = 3 + 2 sqrt2
  CHECK(q == Coord(Rat(3), Rat(2), Rat(2)));
  CHECK((a - a).sign() == 0);
}

TEST_CASE("coord reconciles commensurable radicands") {
  Coord a(Rat(0), Rat(1), Rat(8));  // sqrt8 = 2 sqrt2
  Coord b(Rat(0), Rat(1), Rat(2));
  Coord s = a - b;  // sqrt2
  CHECK(s == Coord(Rat(0), Rat(1), Rat(2)));
  CHECK_THROWS_AS(Coord(Rat(0), Rat(1), Rat(2)) * Coord(Rat(0), Rat(1), Rat(3)),
                  std::logic_error);
}

TEST_CASE("coord cross-field comparisons are exact") {
  Coord s2(Rat(0), Rat(1), Rat(2));
  Coord s3(Rat(0), Rat(1), Rat(3));
  CHECK(s2 < s3);
  CHECK(Coord(Rat(1)) + s2 > s3);                    // 1 + 1.414 > 1.732
  CHECK(Coord(Rat(99, 70)) > s2);                    // classic convergent
  CHECK(Coord(Rat(239, 169)) < s2);
  Coord lhs = Coord(Rat(0), Rat(2), Rat(2));         // 2 sqrt2 = sqrt8
  CHECK(lhs == Coord(Rat(0), Rat(1), Rat(8)));
  CHECK(Coord::compare(s3 - s2, Coord(Rat(0))) > 0);
}

TEST_CASE("coord comparison randomized against doubles") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 12);
  std::uniform_int_distribution<long> rad(0, 30);
  for (int it = 0; it < 3000; ++it) {
    Coord a(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)), Rat(rad(rng)));
    Coord b(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)), Rat(rad(rng)));
    double da = a.to_double(), db = b.to_double();
    int c = Coord::compare(a, b);
    if (std::abs(da - db) > 1e-9) {
      CHECK(c == (da < db ? -1 : 1));
    }
  }
}

TEST_CASE("coord floor") {
  Coord s2(Rat(0), Rat(1), Rat(2));
  CHECK(s2.floor_long() == 1);
  CHECK((-s2).floor_long() == -2);
  CHECK(Coord(Rat(7, 2)).floor_long() == 3);
  CHECK((s2 * Coord(Rat(10))).floor_long() == 14);
}

TEST_CASE("coord printing") {
  Coord s2(Rat(1, 2), Rat(-1), Rat(2));
  CHECK(s2.to_string() == "1/2-1*sqrt(2)");
  CHECK(Coord(Rat(3, 4)).to_string() == "3/4");
  // 12 significant digits of sqrt(2)
  Coord r(Rat(0), Rat(1), Rat(2));
  CHECK(r.to_decimal().substr(0, 8) == "0.141421");
}
