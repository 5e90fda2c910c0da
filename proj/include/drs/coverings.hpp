#pragma once

#include <string>
#include <vector>

#include "drs/core.hpp"

namespace drs {

// Vertex-level map between two surfaces. quad_map is optional; without it the
// image quad is looked up from the image vertices (ambiguous only on
// multigraph targets).
struct CoveringMap {
  const Surface* source = nullptr;
  const Surface* target = nullptr;
  std::vector<int> vertex_map;
  std::vector<int> quad_map;
};

ValidationReport validate_map(const CoveringMap& f);

// Image of quad q: target quad id, or -1 if f is biconstant on q.
int quad_image(const CoveringMap& f, int q);

// Number of times the star of v wraps around the star of f(v).
int branch_vertex(const CoveringMap& f, int v);

int sheet_count(const CoveringMap& f);

struct BranchReport {
  std::vector<int> wrap;          // k per source vertex
  std::vector<int> quad_branch;   // 1 on biconstant quads
  int total_branching = 0;        // b
  int sheets = 0;                 // N
  int genus = 0, target_genus = 0;
  int residual = 0;               // 2g - (2N(g'-1) + 2 + b)
  bool surjective = false;
  std::string identity;           // "3 = 2*(0-1)+1+8/2"
};

BranchReport check_riemann_hurwitz(const CoveringMap& f);

struct CoverData {
  QuadComplex total, base;
  std::vector<int> vertex_map;
  std::vector<int> quad_map;
  std::vector<int> special;       // ramified vertices of the total space
};

// Two-sheeted cover of the 3x3-subdivided cube branched over its 8 corners.
CoverData gen_cube_double_cover();
// Unsubdivided version (12 quads, 8 vertices); a multigraph with side labels.
CoverData gen_cube_double_cover_coarse();
// Unbranched double cover of gen_torus(4, 4, i) by gen_torus(8, 4, i/2).
CoverData gen_torus_double_cover();

}  // namespace drs
