#include "contigal/polygon_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace contigal {

namespace {

std::string strip(const std::string& line) {
  std::string s = line;
  auto hash = s.find('#');
  if (hash != std::string::npos) s = s.substr(0, hash);
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Polygon parse_polygon(std::istream& in) {
  std::string line;
  long lineno = 0;
  auto next_content = [&]() -> std::string {
    while (std::getline(in, line)) {
      ++lineno;
      std::string s = strip(line);
      if (!s.empty()) return s;
    }
    throw std::runtime_error("polygon parse: unexpected end of input at line " + std::to_string(lineno));
  };

  std::string head = next_content();
  long n;
  try {
    size_t pos = 0;
    n = std::stol(head, &pos);
    if (pos != head.size()) throw std::invalid_argument("");
  } catch (...) {
    throw std::runtime_error("polygon parse: bad vertex count '" + head + "' at line " + std::to_string(lineno));
  }
  if (n < 3) throw std::runtime_error("polygon parse: n must be >= 3");

  std::vector<Point2> pts;
  pts.reserve(n);
  for (long i = 0; i < n; ++i) {
    std::istringstream ls(next_content());
    std::string xs, ys, extra;
    if (!(ls >> xs >> ys) || (ls >> extra)) {
      throw std::runtime_error("polygon parse: expected 'x y' at line " + std::to_string(lineno));
    }
    auto x = rat_parse(xs);
    auto y = rat_parse(ys);
    if (!x || !y) {
      throw std::runtime_error("polygon parse: bad coordinate at line " + std::to_string(lineno));
    }
    pts.emplace_back(Coord(*x), Coord(*y));
  }
  return Polygon(std::move(pts));
}

Polygon parse_polygon_string(const std::string& text) {
  std::istringstream in(text);
  return parse_polygon(in);
}

Polygon load_polygon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open polygon file: " + path);
  return parse_polygon(in);
}

void emit_polygon(std::ostream& out, const Polygon& poly, const std::vector<std::string>& header_comment) {
  for (const auto& c : header_comment) out << "# " << c << "\n";
  out << poly.n() << "\n";
  for (const Point2& p : poly.vertices()) {
    out << rat_to_string(p.x.as_rat()) << " " << rat_to_string(p.y.as_rat()) << "\n";
  }
}

std::string emit_polygon_string(const Polygon& poly, const std::vector<std::string>& header_comment) {
  std::ostringstream out;
  emit_polygon(out, poly, header_comment);
  return out.str();
}

void save_polygon_file(const std::string& path, const Polygon& poly,
                       const std::vector<std::string>& header_comment) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write polygon file: " + path);
  emit_polygon(out, poly, header_comment);
}

}  // namespace contigal
