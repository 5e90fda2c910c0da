#pragma once

#include <map>
#include <optional>
#include <string>

#include "drs/calculus.hpp"
#include "drs/differentials.hpp"
#include "drs/generators.hpp"

namespace drs {

struct Divisor {
  std::map<int, int> vertex;  // m in {-1, 0, 1}
  std::map<int, int> quad;    // n in {-2, ..., 2}

  bool valid() const;
  // m in {-1, 0} and n in {-2, 0, 1}
  bool admissible() const;
  int m(int v) const;
  int n(int q) const;
};

int degree(const Divisor& d);
// "v:3=-1,q:7=-2,q:9=1"
Divisor parse_divisor(const std::string& text);
std::string format_divisor(const Divisor& d);

struct FunctionDivisor {
  Divisor divisor;
  bool degenerate = false;  // df vanishes everywhere
};

FunctionDivisor function_divisor(const Surface& s, const VertexFunction& f, double tol = 1e-10);

// Direct kernel dimensions.
int l_dim(const Surface& s, const Divisor& d);
int i_dim(const Surface& s, const Divisor& d);

struct DimensionReport {
  int l = 0, i = 0, deg = 0, genus = 0;
  int residual = 0;  // l - (deg - 2g + 2 + i)
};

DimensionReport check_riemann_roch(const Surface& s, const Divisor& d);

// Independent route through Abelian differentials: i(D) as the nullity of the
// matrix of values of the basis differentials at the quads with n = 1.
struct MMatrixCount {
  int i = 0, l = 0, rank = 0, cols = 0;
};
MMatrixCount m_matrix_dims(const PSolver& ps, const HolomorphicBasis& hb,
                           const std::vector<AbelianDifferential>& second, const Divisor& d);

struct TwoPoleResult {
  int l = 0;
  bool exists = false;                 // l(-(Q + Q')) > 2
  std::optional<bool> parallel;        // black diagonals parallel (flat input only)
};

TwoPoleResult torus_pole_test(const Surface& s, int q1, int q2, const TorusGrid* grid = nullptr);

struct OnePoleSurface {
  QuadComplex complex;
  VertexFunction f;
  int center = -1;
  std::array<int, 4> ring{};  // the four quads around the center
};

OnePoleSurface gen_one_pole_surface(const QuadComplex& base, int q, cplx rho1, cplx rho2);

}  // namespace drs
