#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "burnlab/coset_table.hpp"

namespace burnlab::render {

struct CayleyEdge {
  std::int32_t src;
  int gen;  // generator index, 0-based
  std::int32_t dst;
};

struct CayleyGraph {
  std::int64_t nodes = 0;
  std::vector<std::string> gen_names;
  std::vector<CayleyEdge> edges;  // ordered by (src, gen)
};

// Nodes are cosets, one edge per (coset, generator). StateError when the
// table is incomplete.
CayleyGraph cayley_from_table(const fp::CosetTable& t);

// Graphviz digraph, one labeled edge per triple; byte-stable.
std::string emit_dot(const CayleyGraph& g);

// A unit triangle on the triangular lattice. Lattice point (x, y) sits at
// x*(1,0) + y*(1/2, sqrt(3)/2) in the plane; integer coordinates make
// adjacency and overlap checks exact.
struct Triangle {
  std::array<std::array<int, 2>, 3> vertices;
  bool black = false;
  std::int32_t element = -1;  // group element index
};

struct TriangleTiling {
  std::vector<Triangle> triangles;
  std::int64_t group_order = 0;
};

// The 54-triangle hexagon (side 3) with each group element of a 27-element,
// exponent-3, 2-generator table assigned one white and one black triangle.
// White (upward) and black (downward) triangles are taken in row-major
// lattice order and paired with cosets in breadth-first order from coset 0.
// DomainError unless the table is a complete order-27 exponent-3 table on 2
// generators.
TriangleTiling hexagon_tiling_b23(const fp::CosetTable& t);

// SVG with one polygon per triangle, filled by color; byte-stable.
std::string emit_svg_tiling(const TriangleTiling& tiling, double scale);

}  // namespace burnlab::render
