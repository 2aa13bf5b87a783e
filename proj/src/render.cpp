#include "burnlab/render.hpp"

#include <cmath>
#include <cstdio>

#include "burnlab/burnside.hpp"
#include "burnlab/errors.hpp"

namespace burnlab::render {

CayleyGraph cayley_from_table(const fp::CosetTable& t) {
  if (!t.complete()) throw StateError("Cayley graph needs a complete coset table");
  CayleyGraph g;
  g.nodes = t.nrows();
  g.gen_names = t.gen_names();
  for (std::int32_t r = 0; r < g.nodes; ++r)
    for (int gi = 0; gi < t.ngens(); ++gi)
      g.edges.push_back(CayleyEdge{r, gi, t.entry(r, 2 * gi)});
  return g;
}

std::string emit_dot(const CayleyGraph& g) {
  std::string out = "digraph cayley {\n";
  out += "  rankdir=LR;\n";
  out += "  node [shape=circle];\n";
  for (std::int64_t n = 0; n < g.nodes; ++n) out += "  n" + std::to_string(n + 1) + ";\n";
  for (const CayleyEdge& e : g.edges) {
    out += "  n" + std::to_string(e.src + 1) + " -> n" + std::to_string(e.dst + 1) +
           " [label=\"" + g.gen_names[e.gen] + "\"];\n";
  }
  out += "}\n";
  return out;
}

namespace {

bool point_in_hexagon(int x, int y, int side) {
  return std::abs(x) <= side && std::abs(y) <= side && std::abs(x + y) <= side;
}

}  // namespace

TriangleTiling hexagon_tiling_b23(const fp::CosetTable& t) {
  if (!t.complete()) throw DomainError("hexagon tiling needs a complete coset table");
  if (t.ngens() != 2) throw DomainError("hexagon tiling needs exactly 2 generators");
  if (t.nrows() != 27) throw DomainError("hexagon tiling needs a table of order 27");
  if (!bg::regular_exponent_divides(t, 3))
    throw DomainError("hexagon tiling needs a table of exponent 3");

  // 54 unit triangles of the side-3 hexagon, upward (white) and downward
  // (black) listed in row-major lattice order.
  const int side = 3;
  std::vector<Triangle> white, black;
  for (int y = -side; y < side; ++y) {
    for (int x = -side; x < side; ++x) {
      if (point_in_hexagon(x, y, side) && point_in_hexagon(x + 1, y, side) &&
          point_in_hexagon(x, y + 1, side)) {
        Triangle up;
        up.vertices = {{{x, y}, {x + 1, y}, {x, y + 1}}};
        up.black = false;
        white.push_back(up);
      }
      if (point_in_hexagon(x + 1, y, side) && point_in_hexagon(x, y + 1, side) &&
          point_in_hexagon(x + 1, y + 1, side)) {
        Triangle down;
        down.vertices = {{{x + 1, y}, {x, y + 1}, {x + 1, y + 1}}};
        down.black = true;
        black.push_back(down);
      }
    }
  }
  if (white.size() != 27 || black.size() != 27)
    throw StateError("hexagon subdivision did not produce 27 + 27 triangles");

  // Pair the cosets (in BFS order from coset 0) with triangle pairs.
  std::vector<std::int32_t> bfs;
  std::vector<bool> seen(27, false);
  bfs.push_back(0);
  seen[0] = true;
  for (std::size_t qi = 0; qi < bfs.size(); ++qi)
    for (int c = 0; c < 4; ++c) {
      std::int32_t nxt = t.entry(bfs[qi], c);
      if (!seen[nxt]) {
        seen[nxt] = true;
        bfs.push_back(nxt);
      }
    }
  if (bfs.size() != 27) throw DomainError("table action is not transitive");

  TriangleTiling tiling;
  tiling.group_order = 27;
  for (std::size_t i = 0; i < 27; ++i) {
    white[i].element = bfs[i];
    black[i].element = bfs[i];
    tiling.triangles.push_back(white[i]);
    tiling.triangles.push_back(black[i]);
  }
  return tiling;
}

std::string emit_svg_tiling(const TriangleTiling& tiling, double scale) {
  if (!(scale > 0.0)) throw DomainError("scale must be positive");
  const double rt3h = std::sqrt(3.0) / 2.0;
  auto planar = [&](const std::array<int, 2>& v) {
    return std::array<double, 2>{(v[0] + 0.5 * v[1]) * scale, -v[1] * rt3h * scale};
  };
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  bool first = true;
  for (const Triangle& tr : tiling.triangles) {
    for (const auto& v : tr.vertices) {
      auto p = planar(v);
      if (first || p[0] < minx) minx = p[0];
      if (first || p[0] > maxx) maxx = p[0];
      if (first || p[1] < miny) miny = p[1];
      if (first || p[1] > maxy) maxy = p[1];
      first = false;
    }
  }
  const double margin = 0.1 * scale + 2.0;
  auto fmt = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return std::string(buf);
  };
  const double w = maxx - minx + 2 * margin, h = maxy - miny + 2 * margin;
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w) +
                    "\" height=\"" + fmt(h) + "\" viewBox=\"0 0 " + fmt(w) + " " + fmt(h) +
                    "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + fmt(w) + "\" height=\"" + fmt(h) +
         "\" fill=\"white\"/>\n";
  for (const Triangle& tr : tiling.triangles) {
    out += "<polygon points=\"";
    for (std::size_t i = 0; i < 3; ++i) {
      auto p = planar(tr.vertices[i]);
      if (i > 0) out += ' ';
      out += fmt(p[0] - minx + margin) + "," + fmt(p[1] - miny + margin);
    }
    out += "\" fill=\"";
    out += tr.black ? "black" : "white";
    out += "\" stroke=\"gray\" stroke-width=\"0.5\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace burnlab::render
