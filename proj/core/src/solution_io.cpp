#include "contigal/solution_io.hpp"

#include <ostream>
#include <sstream>

namespace contigal {

void write_solution(std::ostream& out, const Polygon& poly, const Solution& sol) {
  out << "# contiguous boundary cover\n";
  out << "n " << poly.n() << "\n";
  out << "k " << sol.k << "\n";
  out << "start " << sol.start.to_string() << " ~ " << sol.start.to_decimal() << "\n";
  for (const Guard& g : sol.guards) {
    out << "guard " << g.g.x.to_string() << " " << g.g.y.to_string() << " "
        << g.chain.u.to_string() << " " << g.chain.v.to_string() << " ~ "
        << g.g.x.to_decimal() << " " << g.g.y.to_decimal() << " " << g.chain.u.to_decimal()
        << " " << g.chain.v.to_decimal() << (g.chain.full ? " full" : "") << "\n";
  }
}

std::string solution_to_string(const Polygon& poly, const Solution& sol) {
  std::ostringstream out;
  write_solution(out, poly, sol);
  return out.str();
}

void dump_dominators(std::ostream& out, const DominatorSet& doms) {
  for (const TaggedGuard& tg : doms.guards) {
    const char* tag = tg.tag == GuardTag::GoodSegment  ? "good-segment-intersecting"
                      : tg.tag == GuardTag::GoodAngle ? "good-angle-maximizing"
                                                      : "bad";
    out << tag << " " << tg.guard.g.x.to_string() << " " << tg.guard.g.y.to_string() << " "
        << tg.guard.chain.u.to_string() << " " << tg.guard.chain.v.to_string() << "\n";
  }
}

}  // namespace contigal
