#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "contigal/polygon.hpp"

namespace contigal {

/// Strictly convex polygon with rational vertices on the unit circle;
/// deterministic in seed. Strict convexity gives general position for free.
Polygon gen_convex(int n, std::uint64_t seed);

/// Random simple polygon from grid points, uncrossed by 2-opt; deterministic.
/// Retries with derived sub-seeds until validation passes.
Polygon gen_random_simple(int n, std::uint64_t seed);

/// Comb with m upward teeth whose view cones are disjoint, so the optimal
/// cover uses exactly m contiguous guards. `pad_vertices` subdivides the
/// base into a shallow convex sag to grow the vertex count without changing
/// the answer. Output is perturbed to general position.
Polygon gen_comb(int m, std::uint64_t seed, int pad_vertices = 0);

/// Set-disjointness reduction instance: a large triangle with blocker dents
/// for each a in A, aimed laser pockets for each b in B on a unit interval
/// at the base midpoint, and |B|+1 separator pockets below the base. The
/// optimal cover has size 2|B|+2 exactly when A and B are disjoint.
/// Preconditions: A sorted ascending, values in [1, |A|^3 - 1] excluding
/// |A|^3/2, |A| == |B|. The emitted polygon is deterministically perturbed
/// into general position; the gadget margins absorb the perturbation.
Polygon gen_setdisjointness(const std::vector<long>& A, const std::vector<long>& B);

/// One-line parameter descriptions for reproducibility headers.
std::string describe_convex(int n, std::uint64_t seed);
std::string describe_random(int n, std::uint64_t seed);
std::string describe_comb(int m, std::uint64_t seed, int pad_vertices);
std::string describe_setdisjointness(const std::vector<long>& A, const std::vector<long>& B);

}  // namespace contigal
