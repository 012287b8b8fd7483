// Command-line front end: solve, gen, bench, validate.
#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "contigal/instances.hpp"
#include "contigal/next_oracle.hpp"
#include "contigal/polygon_io.hpp"
#include "contigal/solution_io.hpp"
#include "contigal/solver.hpp"
#include "contigal/svg.hpp"

using namespace contigal;
namespace fs = std::filesystem;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

Solution solve_with_oracle(const Polygon& poly, int max_k) {
  // Greedy revolutions evaluated with the bisection oracle, from every vertex.
  PolygonStructure ps(poly);
  Coord period{Rat(poly.n())};
  Rat tol = rat_pow2(-30);
  int best_k = -1;
  Coord best_start;
  std::vector<Guard> best_guards;
  for (int s = 1; s <= poly.n(); ++s) {
    Coord start{Rat(s)};
    Coord cur = start;
    std::vector<Guard> guards;
    while (cur < start + period) {
      NextValue nv = next_oracle(ps, poly.normalize_param(cur), tol);
      Coord len = nv.v - poly.normalize_param(cur);
      if (len.sign() <= 0) break;
      guards.push_back(Guard{nv.guard.g, make_chain(poly, cur, cur + len)});
      cur += len;
      if (static_cast<int>(guards.size()) > 2 * poly.n() + 2) break;
      if (max_k > 0 && best_k > 0 && static_cast<int>(guards.size()) >= best_k) break;
    }
    if (cur >= start + period && (best_k < 0 || static_cast<int>(guards.size()) < best_k)) {
      best_k = static_cast<int>(guards.size());
      best_start = start;
      best_guards = guards;
    }
  }
  if (best_k < 0) throw std::runtime_error("oracle solve: no revolution closed");
  Solution sol;
  sol.k = best_k;
  sol.start = best_start;
  sol.guards = best_guards;
  return sol;
}

bool check_solution(const Polygon& poly, const Solution& sol, std::string* why) {
  PolygonStructure ps(poly);
  Coord period{Rat(poly.n())};
  Coord covered_to = sol.start;
  for (size_t k = 0; k < sol.guards.size(); ++k) {
    const Guard& g = sol.guards[k];
    if (!certify_guard(ps, g)) {
      *why = "guard " + std::to_string(k + 1) + " does not see its chain";
      return false;
    }
    Coord u = g.chain.u, v = g.chain.v;
    // Lift the chain onto the covered prefix.
    Coord target = poly.normalize_param(covered_to);
    while (u > target) u -= period;
    while (u + period <= target) u += period;
    Coord off = target - u;
    Coord reach = (g.chain.v - g.chain.u) - off;
    if (reach.sign() < 0) {
      *why = "gap before guard " + std::to_string(k + 1);
      return false;
    }
    covered_to += reach;
    if (covered_to >= sol.start + period) return true;
  }
  if (covered_to < sol.start + period) {
    *why = "chains do not close the boundary";
    return false;
  }
  return true;
}

int cmd_solve(const std::string& file, const std::string& algo, const std::string& out_path,
              const std::string& svg_path, bool check, int max_k) {
  Polygon poly;
  try {
    poly = load_polygon_file(file);
  } catch (const std::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }
  ValidationReport rep = validate_polygon(poly);
  if (!rep.ok()) {
    std::cerr << "validation failed: " << rep.summary() << "\n"
              << "hint: regenerate the instance or apply a small perturbation\n";
    return 3;
  }
  Solution sol;
  try {
    if (algo == "oracle") {
      sol = solve_with_oracle(poly, max_k);
    } else {
      Engine engine(poly);
      sol = (algo == "greedy") ? engine.solve_greedy() : engine.solve();
    }
  } catch (const std::exception& e) {
    std::cerr << "solve failed: " << e.what() << "\n";
    return 4;
  }
  if (max_k > 0 && sol.k > max_k) {
    std::cerr << "k-budget exceeded: optimal " << sol.k << " > budget " << max_k << "\n";
    return 5;
  }
  if (check) {
    std::string why;
    if (!check_solution(poly, sol, &why)) {
      std::cerr << "solution check failed: " << why << "\n";
      return 6;
    }
  }
  std::ostringstream doc;
  write_solution(doc, poly, sol);
  if (out_path.empty()) {
    std::cout << doc.str();
  } else {
    std::ofstream out(out_path);
    out << doc.str();
  }
  if (!svg_path.empty()) save_svg(svg_path, poly, sol);
  return 0;
}

std::vector<long> parse_list(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stol(item));
  }
  return out;
}

int cmd_bench(const std::string& dir, const std::string& out_path) {
  std::vector<fs::path> files;
  if (fs::exists(dir)) {
    for (const auto& e : fs::directory_iterator(dir)) {
      if (e.path().extension() == ".poly" || e.path().extension() == ".txt")
        files.push_back(e.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::ostringstream table;
  table << "# file n k_greedy k_full agree time_greedy_s time_full_s\n";
  for (const auto& f : files) {
    Polygon poly = load_polygon_file(f.string());
    if (!validate_polygon(poly).ok()) {
      table << f.filename().string() << " - - - invalid - -\n";
      continue;
    }
    Timer t1;
    Engine e1(poly);
    Solution greedy = e1.solve_greedy();
    double tg = t1.seconds();
    Timer t2;
    Engine e2(poly);
    Solution full = e2.solve();
    double tf = t2.seconds();
    table << f.filename().string() << " " << poly.n() << " " << greedy.k << " " << full.k << " "
          << (greedy.k == full.k ? "yes" : "NO") << " " << tg << " " << tf << "\n";
  }
  if (out_path.empty()) {
    std::cout << table.str();
  } else {
    std::ofstream out(out_path);
    out << table.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for minimum contiguous boundary guarding of simple polygons"};
  app.require_subcommand(1);

  std::string file, algo = "full", out_path, svg_path;
  bool check = false;
  int max_k = 0;
  auto* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("file", file, "polygon file")->required();
  solve->add_option("--algo", algo, "greedy|full|oracle")
      ->check(CLI::IsMember({"greedy", "full", "oracle"}));
  solve->add_option("--out", out_path, "write the solution document here");
  solve->add_option("--svg", svg_path, "render the cover to an SVG file");
  solve->add_flag("--check", check, "re-certify coverage and guard visibility");
  solve->add_option("--max-k", max_k, "fail when the optimum exceeds this budget");

  std::string kind, gen_out, a_list, b_list;
  int gn = 12, gm = 3, pad = 0;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("kind", kind, "convex|random|comb|setdisj")->required();
  gen->add_option("--n", gn, "vertex count (convex, random)");
  gen->add_option("--m", gm, "tooth count (comb)");
  gen->add_option("--pad", pad, "extra base vertices (comb)");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--A", a_list, "comma-separated sorted set A (setdisj)");
  gen->add_option("--B", b_list, "comma-separated set B (setdisj)");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  std::string corpus, bench_out;
  auto* bench = app.add_subcommand("bench", "run all algorithms over a corpus directory");
  bench->add_option("dir", corpus, "directory of .poly/.txt instances")->required();
  bench->add_option("--out", bench_out, "write the report here");

  std::string vfile;
  auto* val = app.add_subcommand("validate", "validate an instance file");
  val->add_option("file", vfile, "polygon file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(file, algo, out_path, svg_path, check, max_k);
    if (gen->parsed()) {
      Polygon poly;
      std::string desc;
      if (kind == "convex") {
        poly = gen_convex(gn, seed);
        desc = describe_convex(gn, seed);
      } else if (kind == "random") {
        poly = gen_random_simple(gn, seed);
        desc = describe_random(gn, seed);
      } else if (kind == "comb") {
        poly = gen_comb(gm, seed, pad);
        desc = describe_comb(gm, seed, pad);
      } else if (kind == "setdisj") {
        poly = gen_setdisjointness(parse_list(a_list), parse_list(b_list));
        desc = describe_setdisjointness(parse_list(a_list), parse_list(b_list));
      } else {
        std::cerr << "unknown generator kind: " << kind << "\n";
        return 2;
      }
      if (gen_out.empty()) {
        emit_polygon(std::cout, poly, {desc});
      } else {
        save_polygon_file(gen_out, poly, {desc});
      }
      return 0;
    }
    if (bench->parsed()) return cmd_bench(corpus, bench_out);
    if (val->parsed()) {
      Polygon poly = load_polygon_file(vfile);
      ValidationReport rep = validate_polygon(poly);
      std::cout << (rep.ok() ? "accept" : "reject") << ": " << rep.summary() << "\n";
      if (!rep.collinearity_exhaustive)
        std::cout << "note: collinearity scan limited to consecutive triples at this size\n";
      return rep.ok() ? 0 : 3;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
