#pragma once

#include <cstdint>
#include <vector>

#include "drs/core.hpp"

namespace drs {

// Positions of a generated flat torus; used by the two-pole criterion.
struct TorusGrid {
  int m = 0, n = 0;
  cplx tau;
  std::vector<cplx> z;          // vertex position in the fundamental domain
  std::vector<cplx> black_diag; // z(b+) - z(b-) per quad, unwrapped
};

// m x n grid on C/(Z + Z tau), vertex (j, k) at j/m + (k/n) tau.
QuadComplex gen_torus(int m, int n, cplx tau, TorusGrid* grid = nullptr);

// Surface of the box [0, n]^3 subdivided into unit squares, all rho = 1.
QuadComplex gen_cube(int n = 1);

// Two quads glued along all four sides. Not strongly regular.
QuadComplex gen_pillow();

// Replaces every rho by Re in [re_lo, re_hi], Im in [-im_max, im_max].
void randomize_rho(QuadComplex& c, std::uint64_t seed, double re_lo = 0.2, double re_hi = 3.0,
                   double im_max = 2.0);

}  // namespace drs
