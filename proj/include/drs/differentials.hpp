#pragma once

#include <vector>

#include "drs/calculus.hpp"
#include "drs/homology.hpp"
#include "drs/linalg.hpp"

namespace drs {

// Homogeneous closedness + co-closedness rows, unknowns (black, white) per quad.
la::Mat harmonic_system(const Surface& s);
// Homogeneous closedness rows for the ansatz black = p, white = i rho p.
la::Mat holomorphic_system(const Surface& s);

// targets ordered (A^B, A^W, B^B, B^W) for k = 1..g.
DiamondForm harmonic_with_periods(const Surface& s, const HomologyBasis& h,
                                  const std::vector<cplx>& targets, double tol = 1e-9);
// targets ordered (A^B, A^W) for k = 1..g.
DiamondForm holomorphic_with_a_periods(const Surface& s, const HomologyBasis& h,
                                       const std::vector<cplx>& targets, double tol = 1e-9);

struct HolomorphicBasis {
  std::vector<DiamondForm> black, white, canonical;  // ω^B_k, ω^W_k, ω_k
};

HolomorphicBasis canonical_bases(const Surface& s, const HomologyBasis& h);

struct PeriodMatrices {
  la::Mat pi, pi_tilde, pi_b, pi_w;
  la::Mat bb, bw, wb, ww;  // Π^{B,B}, Π^{B,W}, Π^{W,B}, Π^{W,W}
};

PeriodMatrices period_matrices(const Surface& s, const HomologyBasis& h,
                               const HolomorphicBasis& hb);
PeriodMatrices period_matrices(const Surface& s, const HomologyBasis& h);

struct MatrixChecks {
  double asym_pi = 0, asym_tilde = 0, bb_vs_ww = 0;
  double min_eig_im_pi = 0, min_eig_im_tilde = 0;
};
MatrixChecks check_period_matrices(const PeriodMatrices& pm);

// Π̃ after the basis change a' = A a + B b, b' = C a + D b.
la::Mat transform_periods(const la::Mat& pi_tilde, const IntMat& A, const IntMat& B,
                          const IntMat& C, const IntMat& D);

// Genus one: change the basis so that Π lies in the standard fundamental
// domain |Re Π| <= 1/2, |Π| >= 1.
HomologyBasis reduce_torus_basis(const Surface& s, const HomologyBasis& h);

cplx residue(const Surface& s, const DiamondForm& w, int v);

struct AbelianDifferential {
  enum Kind { first, second, third } kind = first;
  DiamondForm form;
  int pole_quad = -1;          // second kind
  int plus = -1, minus = -1;   // third kind: residues +1 / -1
};

// Shared factorization of the p-only systems (closedness rows plus the 2g
// black/white a-period rows along the stored basis walks).
class PSolver {
 public:
  PSolver(const Surface& s, const HomologyBasis& h);
  const Surface& surface() const { return s_; }
  const HomologyBasis& basis() const { return h_; }
  HolomorphicBasis canonical() const;
  AbelianDifferential second(int q) const;
  AbelianDifferential third(int v, int v2) const;
  std::vector<AbelianDifferential> third_many(int v, const std::vector<int>& others) const;
  std::vector<AbelianDifferential> second_all() const;
  int rank() const { return ls_.rank(); }

 private:
  la::Mat solve(const la::Mat& rhs, const char* what) const;
  const Surface& s_;
  const HomologyBasis& h_;
  la::Mat a_;
  la::LeastSquares ls_;
};

AbelianDifferential abelian_second(const Surface& s, const HomologyBasis& h, int q);
AbelianDifferential abelian_third(const Surface& s, const HomologyBasis& h, int v, int v2);

struct AbelianBasis {
  std::vector<AbelianDifferential> forms;
  int rank = 0;
};
AbelianBasis abelian_basis(const Surface& s, const HomologyBasis& h, int b0, int w0);

// Stacked (black, white) coefficients, one column per form.
la::Mat form_matrix(const std::vector<DiamondForm>& forms);

}  // namespace drs
