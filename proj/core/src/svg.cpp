#include "contigal/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace contigal {

namespace {

const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
                          "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Polygon& poly, const Solution& sol, int size_px) {
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  bool first = true;
  for (const Point2& p : poly.vertices()) {
    double x = p.x.to_double(), y = p.y.to_double();
    if (first) {
      minx = maxx = x;
      miny = maxy = y;
      first = false;
    }
    minx = std::min(minx, x);
    maxx = std::max(maxx, x);
    miny = std::min(miny, y);
    maxy = std::max(maxy, y);
  }
  double span = std::max(maxx - minx, maxy - miny);
  if (span <= 0) span = 1;
  double pad = span * 0.05;
  double scale = size_px / (span + 2 * pad);
  auto X = [&](double x) { return (x - minx + pad) * scale; };
  auto Y = [&](double y) { return size_px - (y - miny + pad) * scale; };  // y up

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size_px << "\" height=\""
      << size_px << "\" viewBox=\"0 0 " << size_px << " " << size_px << "\">\n";
  out << "<path d=\"";
  for (int i = 1; i <= poly.n(); ++i) {
    const Point2& p = poly.vertex(i);
    out << (i == 1 ? "M" : "L") << fmt(X(p.x.to_double())) << " " << fmt(Y(p.y.to_double())) << " ";
  }
  out << "Z\" fill=\"#f4f4f0\" stroke=\"#333\" stroke-width=\"1\"/>\n";

  // Boundary chains, sampled densely enough to follow every edge.
  for (size_t gi = 0; gi < sol.guards.size(); ++gi) {
    const Guard& g = sol.guards[gi];
    const char* color = kPalette[gi % (sizeof(kPalette) / sizeof(kPalette[0]))];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"3\" points=\"";
    Coord u = g.chain.u;
    Coord v = g.chain.v;
    Point2 p0 = poly.boundary_point(poly.normalize_param(u));
    out << fmt(X(p0.x.to_double())) << "," << fmt(Y(p0.y.to_double())) << " ";
    long stop = v.floor_long();
    for (long m = u.floor_long() + 1; m <= stop; ++m) {
      if (Coord(Rat(m)) >= v) break;
      Point2 p = poly.boundary_point(poly.normalize_param(Coord(Rat(m))));
      out << fmt(X(p.x.to_double())) << "," << fmt(Y(p.y.to_double())) << " ";
    }
    Point2 p1 = poly.boundary_point(poly.normalize_param(v));
    out << fmt(X(p1.x.to_double())) << "," << fmt(Y(p1.y.to_double())) << "\"/>\n";
    double gx = X(g.g.x.to_double()), gy = Y(g.g.y.to_double());
    out << "<circle cx=\"" << fmt(gx) << "\" cy=\"" << fmt(gy) << "\" r=\"4\" fill=\"" << color
        << "\" stroke=\"#000\" stroke-width=\"0.5\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void save_svg(const std::string& path, const Polygon& poly, const Solution& sol, int size_px) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write svg file: " + path);
  out << render_svg(poly, sol, size_px);
}

}  // namespace contigal
