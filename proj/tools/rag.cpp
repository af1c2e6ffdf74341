#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rag/betti.hpp"
#include "rag/quadric.hpp"
#include "rag/topology.hpp"

using json = nlohmann::ordered_json;
using namespace rag;

namespace {

struct RunConfig {
  std::string input;
  std::string format = "json";
  int precision = 15;
  int jobs = 0;
  bool dump_matrices = false;
  bool dump_projection = false;
};

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputRefusal("cannot open input file: " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

// decimal rendering of an exact coordinate at the requested precision
template <class E>
std::string decimal_of(E& v, int digits) {
  Rational eps(1, Integer(1));
  for (int i = 0; i < digits + 10; ++i) eps /= 10;
  Interval iv = field_approx(v, eps);
  if (iv.lo == iv.hi) return to_decimal(iv.lo, digits);
  return to_decimal((iv.lo + iv.hi) / 2, digits);
}

std::string decimal_of_root(AlgebraicNumber& r, int digits) {
  Rational eps(1, Integer(1));
  for (int i = 0; i < digits + 10; ++i) eps /= 10;
  Interval iv = r.approx(eps);
  if (iv.lo == iv.hi) return to_decimal(iv.lo, digits);
  return to_decimal((iv.lo + iv.hi) / 2, digits);
}

// ---------------------------------------------------------------------------
// topology
// ---------------------------------------------------------------------------

int run_topology(const RunConfig& cfg) {
  auto lines = read_lines(cfg.input);
  if (lines.empty() || lines.size() > 2)
    throw InputRefusal("topology expects one or two polynomials");
  MPoly p = parse_poly(lines[0]);
  PlanarTopology t =
      lines.size() == 2 ? top_with_respect_to(p, parse_poly(lines[1])) : top(p);
  PlanarGraph g = planar_graph(t);

  if (cfg.format == "dot") {
    std::ostringstream os;
    os << "graph topology {\n";
    for (size_t i = 0; i < g.vertices.size(); ++i) {
      auto& v = g.vertices[i];
      os << "  v" << i << " [label=\"" << (v.band ? "band " : "fiber ")
         << v.column << ":" << v.index << "\"];\n";
    }
    for (auto& [a, b] : g.edges) os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
    std::cout << os.str();
    return 0;
  }

  json j;
  j["shearT"] = t.shear_t;
  j["abscissas"] = json::array();
  for (auto& x : t.xs)
    j["abscissas"].push_back(decimal_of_root(x, cfg.precision));
  j["bands"] = t.m;
  j["fibers"] = t.n;
  j["critical"] = t.c;
  j["marked"] = json::array();
  for (auto& [fi, pos] : t.marked) j["marked"].push_back({fi, pos});
  json jg;
  jg["vertices"] = json::array();
  for (auto& v : g.vertices)
    jg["vertices"].push_back(
        {{"band", v.band}, {"column", v.column}, {"index", v.index}});
  jg["edges"] = json::array();
  for (auto& [a, b] : g.edges) jg["edges"].push_back({a, b});
  jg["components"] = g.components;
  j["graph"] = jg;
  j["meta"] = {{"shearT", t.shear_t}, {"precision", cfg.precision}};

  if (cfg.format == "text") {
    std::cout << "abscissas: " << j["abscissas"].dump() << "\n"
              << "bands: " << j["bands"].dump() << "\n"
              << "fibers: " << j["fibers"].dump() << "\n"
              << "critical: " << j["critical"].dump() << "\n"
              << "components: " << g.components << "\n";
    return 0;
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// intersect
// ---------------------------------------------------------------------------

json point_json(SpacePoint& p, int digits) {
  return json::array({decimal_of(p.X, digits), decimal_of(p.Y, digits),
                      decimal_of(p.Z, digits)});
}

int run_intersect(const RunConfig& cfg) {
  auto lines = read_lines(cfg.input);
  if (lines.size() != 3)
    throw InputRefusal("intersect expects exactly three polynomials");
  IntersectionResult r = intersect_three_quadrics(
      parse_poly(lines[0]), parse_poly(lines[1]), parse_poly(lines[2]));

  if (cfg.format == "dot") {
    std::ostringstream os;
    os << "graph intersection {\n";
    for (size_t i = 0; i < r.vertices.size(); ++i)
      os << "  v" << i << " [label=\""
         << (r.kinds[i] == VertexKind::critical ? "critical" : "sample")
         << "\"];\n";
    for (auto& [a, b] : r.edges) os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
    std::cout << os.str();
    return 0;
  }

  json j;
  j["isolated"] = json::array();
  for (auto& p : r.isolated) j["isolated"].push_back(point_json(p, cfg.precision));
  json jg;
  jg["vertices"] = json::array();
  for (auto& p : r.vertices) jg["vertices"].push_back(point_json(p, cfg.precision));
  jg["edges"] = json::array();
  for (auto& [a, b] : r.edges) jg["edges"].push_back({a, b});
  jg["components"] = r.components;
  j["graph"] = jg;
  j["empty"] = r.empty;
  j["meta"] = {{"shearA", r.shear_a},
               {"shearB", r.shear_b},
               {"planeShear", r.plane_shear},
               {"precision", cfg.precision}};
  if (cfg.dump_projection) {
    j["projection"] = {{"sil", r.proj.sil.str()},
                       {"cut2", r.proj.cut2.str()},
                       {"cut3", r.proj.cut3.str()},
                       {"G", r.proj.G.str()},
                       {"Gtilde", r.proj.Gtilde.str()},
                       {"silTilde", r.proj.SilTilde.str()},
                       {"H2", r.proj.H2.str()},
                       {"H3", r.proj.H3.str()}};
  }

  if (cfg.format == "text") {
    std::cout << "empty: " << (r.empty ? "yes" : "no") << "\n"
              << "isolated: " << j["isolated"].dump() << "\n"
              << "vertices: " << jg["vertices"].dump() << "\n"
              << "edges: " << jg["edges"].dump() << "\n"
              << "components: " << r.components << "\n";
    return 0;
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// betti
// ---------------------------------------------------------------------------

int run_betti(const RunConfig& cfg) {
  auto lines = read_lines(cfg.input);
  std::vector<ObjectDescriptor> objects;
  for (const std::string& line : lines) {
    std::string body = line;
    Rel rel;
    auto ends_with = [&](const std::string& suf) {
      if (body.size() < suf.size()) return false;
      if (body.compare(body.size() - suf.size(), suf.size(), suf) != 0)
        return false;
      body.resize(body.size() - suf.size());
      return true;
    };
    std::string squeezed;
    for (char c : body)
      if (c != ' ' && c != '\t') squeezed += c;
    body = squeezed;
    if (ends_with("<=0"))
      rel = Rel::le;
    else if (ends_with("=0"))
      rel = Rel::eq;
    else
      throw InputRefusal("object line must end with =0 or <=0: " + line);
    objects.push_back(validate_object(parse_poly(body), rel));
  }
  BettiResult r = betti01(objects);

  json j;
  j["b0"] = r.b0;
  j["b1"] = r.b1;
  j["d0"] = r.d0;
  j["d1"] = r.d1;
  j["rankA"] = r.rank_a;
  j["rankB"] = r.rank_b;
  j["pairComponents"] = r.pair_components;
  j["tripleComponents"] = r.triple_components;
  auto grid = [](const QMatrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (size_t k = 0; k < m.cols(); ++k)
        row.push_back(static_cast<long>(m.at(i, k).get_num().get_si()));
      rows.push_back(row);
    }
    return rows;
  };
  if (cfg.dump_matrices) {
    j["A"] = grid(r.a);
    j["B"] = grid(r.b);
  }

  if (cfg.format == "text") {
    std::cout << "b0 = " << r.b0 << "\nb1 = " << r.b1 << "\nd0 = " << r.d0
              << "\nd1 = " << r.d1 << "\nrank A = " << r.rank_a
              << "\nrank B = " << r.rank_b << "\n";
    if (cfg.dump_matrices) {
      std::cout << "A:\n";
      for (size_t i = 0; i < r.a.rows(); ++i) {
        for (size_t k = 0; k < r.a.cols(); ++k)
          std::cout << (k ? " " : "") << r.a.at(i, k).get_num().get_str();
        std::cout << "\n";
      }
      std::cout << "B:\n";
      for (size_t i = 0; i < r.b.rows(); ++i) {
        for (size_t k = 0; k < r.b.cols(); ++k)
          std::cout << (k ? " " : "") << r.b.at(i, k).get_num().get_str();
        std::cout << "\n";
      }
    }
    return 0;
  }
  if (cfg.format == "dot")
    throw InputRefusal("betti has no dot rendering; use json or text");
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact topology of quadric arrangements"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "input file")->required();
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    sub->add_option("--precision", cfg.precision, "significant digits")
        ->check(CLI::PositiveNumber);
    sub->add_option("--jobs", cfg.jobs, "worker count (0 = auto)");
  };
  CLI::App* stop = app.add_subcommand("topology", "plane curve topology");
  add_common(stop);
  CLI::App* sint = app.add_subcommand("intersect", "three-quadric intersection");
  add_common(sint);
  sint->add_flag("--dump-projection", cfg.dump_projection,
                 "include the plane projection curves");
  CLI::App* sbet = app.add_subcommand("betti", "betti numbers of a union");
  add_common(sbet);
  sbet->add_flag("--dump-matrices", cfg.dump_matrices,
                 "include the incidence matrices");

  CLI11_PARSE(app, argc, argv);
  try {
    if (stop->parsed()) return run_topology(cfg);
    if (sint->parsed()) return run_intersect(cfg);
    return run_betti(cfg);
  } catch (const InputRefusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "refused: parse error at offset " << e.offset << ": "
              << e.message << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
