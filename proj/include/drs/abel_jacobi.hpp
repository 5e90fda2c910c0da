#pragma once

#include <vector>

#include "drs/differentials.hpp"

namespace drs {

// L = { m + P n : m, n in Z^g }, where column j of P holds the b_j-periods
// of ω_1..ω_g (P = Π, or the transposed black / white period matrix).
struct Lattice {
  la::Mat pi;
  char name = 'L';  // 'L', 'B' or 'W'

  int genus() const { return static_cast<int>(pi.rows()); }
  la::Mat generators() const;  // g x 2g, [I | Π]
};

struct Reduction {
  la::Vec rep;               // v minus the nearest lattice vector
  std::vector<long> m, n;    // subtracted integer coefficients
  double max_frac = 0;       // largest |real coordinate| of rep
};

Reduction reduce(const Lattice& l, const la::Vec& v);
// True if a - b is a lattice vector up to tol.
bool lattice_equal(const Lattice& l, const la::Vec& a, const la::Vec& b, double tol = 1e-8);

struct Jacobians {
  Lattice full, black, white;
};

Jacobians jacobians(const PeriodMatrices& pm);

struct AJValue {
  la::Vec value;
  char lattice = 'L';
};

// Abel-Jacobi maps for the canonical set ω_1..ω_g. Values live on the
// universal cover; each is computed along an explicit path on the surface.
class AbelJacobi {
 public:
  AbelJacobi(const Surface& s, const HomologyBasis& h, std::vector<DiamondForm> canonical,
             const PeriodMatrices& pm);

  int genus() const { return static_cast<int>(w_.size()); }
  const Jacobians& lattices() const { return jac_; }

  // Integral over the half diagonal of q ending at its corner vertex v.
  la::Vec half_diagonal(int q, int v) const;
  // Doubled integral over a chain of black (resp. white) diagonals.
  la::Vec chain_integral(const std::vector<int>& chain, Color color) const;

  // Throws Error("color-mismatch") for a vertex of the wrong color.
  AJValue black(int base_q, int v) const;
  AJValue white(int base_q, int v) const;
  AJValue black_quad(int base_q, int q) const;
  AJValue white_quad(int base_q, int q) const;

  // Medial-path map between quads together with its black and white
  // projections along the same path.
  struct QuadValue {
    la::Vec value, black, white;
    MedialWalk path;
    double splitting_residual = 0;  // |2A - A^B - A^W|
  };
  QuadValue quad(int base_q, int q) const;

  // Largest CR residual over all quads and components of the vertex
  // restriction, with tree-path values lifted back to the cover through the
  // intersection numbers of the closing loops.
  double cr_residual(int base_q) const;

  // Quads where every ω_k vanishes; the map fails to be injective there.
  std::vector<int> common_zeros(double tol = 1e-10) const;

 private:
  const Surface& s_;
  const HomologyBasis& h_;
  std::vector<DiamondForm> w_;
  Jacobians jac_;
};

std::vector<int> graph_path_chain(const Surface& s, const GraphPath& p);

}  // namespace drs
