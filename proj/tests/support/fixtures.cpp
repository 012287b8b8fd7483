#include "fixtures.hpp"

namespace contigal::test {

Polygon from_coords(std::initializer_list<std::pair<double, double>> pts) {
  std::vector<Point2> v;
  for (const auto& [x, y] : pts) {
    v.emplace_back(Coord(Rat(static_cast<long>(x * 16), 16L)), Coord(Rat(static_cast<long>(y * 16), 16L)));
  }
  return Polygon(std::move(v));
}

Polygon square() { return from_coords({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

Polygon lshape() { return from_coords({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}); }

Polygon ushape() {
  return from_coords({{0, 0}, {3, 0}, {3, 2}, {2, 2}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
}

Polygon square_gp(std::uint64_t seed) { return perturb(square(), seed, Rat(1, 1L << 20)); }
Polygon lshape_gp(std::uint64_t seed) { return perturb(lshape(), seed, Rat(1, 1L << 20)); }
Polygon ushape_gp(std::uint64_t seed) { return perturb(ushape(), seed, Rat(1, 1L << 20)); }

}  // namespace contigal::test
