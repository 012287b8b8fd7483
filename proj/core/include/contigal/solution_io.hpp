#pragma once

#include <iosfwd>
#include <string>

#include "contigal/dominators.hpp"
#include "contigal/solver.hpp"

namespace contigal {

/// Machine-readable solution document: a "k" line followed by one guard per
/// line with exact values (rationals, or a+b*sqrt(d) forms when a guard
/// point is algebraic) plus 12-significant-digit decimal approximations.
void write_solution(std::ostream& out, const Polygon& poly, const Solution& sol);
std::string solution_to_string(const Polygon& poly, const Solution& sol);

/// Debug dump of a dominator set: "tag gx gy u v" per line.
void dump_dominators(std::ostream& out, const DominatorSet& doms);

}  // namespace contigal
