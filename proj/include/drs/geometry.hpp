#pragma once

#include <array>
#include <string>
#include <vector>

#include "drs/core.hpp"

namespace drs {

struct RhombicRealization {
  enum Status { rhombic, obstructed, undetermined } status = rhombic;
  // For status == rhombic: per quad, corner positions (b-, w-, b+, w+) of a unit
  // rhombus and the angle at the black vertices.
  std::vector<std::array<cplx, 4>> rhombi;
  std::vector<double> black_angle;
  std::vector<int> non_real;  // quads with Im rho != 0
  // For a single non-real quad: a^2 - b^2 + c^2 - d^2 of its chart, which
  // equals -2 cos(phi) e f and cannot vanish.
  double alternating_sum = 0.0;
  std::string reason;
};

RhombicRealization realize_rhombic(const QuadComplex& c, double tol = 1e-12);

struct TriMesh {
  std::vector<std::array<double, 3>> pos;
  std::vector<std::array<int, 3>> tris;
};

TriMesh parse_obj(const std::string& text);
TriMesh regular_tetrahedron();
// Torus of revolution, radii R > r, with nu x nv vertices.
TriMesh torus_mesh(int nu, int nv, double R, double r);

struct DelaunayQuads {
  QuadComplex complex;
  std::vector<std::array<int, 2>> edges;  // mesh edge (i < j) of each quad
};

// Black vertices = mesh vertices, white vertices = circumcenters (ids offset
// by the vertex count), one kite per mesh edge with rho from cotangents.
DelaunayQuads delaunay_voronoi(const TriMesh& mesh);

}  // namespace drs
