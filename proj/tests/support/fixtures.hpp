#pragma once

#include "contigal/polygon.hpp"

namespace contigal::test {

// Unit square (0,0),(1,0),(1,1),(0,1).
Polygon square();
// L-hexagon (0,0),(2,0),(2,1),(1,1),(1,2),(0,2); kernel is [0,1]^2.
Polygon lshape();
// U-octagon (0,0),(3,0),(3,2),(2,2),(2,1),(1,1),(1,2),(0,2); empty kernel,
// and a collinear top row, so strict general position needs a perturbation.
Polygon ushape();

// Fixture run through perturb(magnitude 2^-20) for modules that require
// strict general position.
Polygon square_gp(std::uint64_t seed = 7);
Polygon lshape_gp(std::uint64_t seed = 7);
Polygon ushape_gp(std::uint64_t seed = 7);

Polygon from_coords(std::initializer_list<std::pair<double, double>> pts);

}  // namespace contigal::test
