#pragma once

#include <utility>
#include <vector>

#include "drs/core.hpp"

namespace drs {

using VertexFunction = std::vector<cplx>;  // by vertex id
using QuadFunction = std::vector<cplx>;    // by quad id

// One-form of type diamond. On F_Q the medial edges at the white corners are
// parallel to the black diagonal and carry +black (corner 1) / -black
// (corner 3); the edges at the black corners carry +white (corner 2) / -white
// (corner 0). Signs refer to the counterclockwise orientation of F_Q.
struct DiamondForm {
  std::vector<cplx> black, white;

  static DiamondForm zero(int quads) {
    return {std::vector<cplx>(quads), std::vector<cplx>(quads)};
  }
  int size() const { return static_cast<int>(black.size()); }
  DiamondForm& operator+=(const DiamondForm& o);
  DiamondForm& operator*=(cplx a);
  friend DiamondForm operator+(DiamondForm a, const DiamondForm& b) { return a += b; }
  friend DiamondForm operator-(DiamondForm a, const DiamondForm& b) { return a += b * cplx(-1); }
  friend DiamondForm operator*(DiamondForm a, cplx s) { return a *= s; }
  friend DiamondForm operator*(cplx s, DiamondForm a) { return a *= s; }
};

// General one-form on medial edges; edge 4q+c, value for the F_Q ccw direction.
struct OneForm {
  std::vector<cplx> value;
};

struct TwoForm {
  std::vector<cplx> vertex_face;  // by vertex id
  std::vector<cplx> quad_face;    // by quad id
  double max_abs() const;
};

// Value of a diamond form on medial edge (q, corner) in F_Q ccw direction.
inline cplx edge_value(const DiamondForm& w, int q, int corner) {
  switch (corner & 3) {
    case 0: return -w.white[q];
    case 1: return w.black[q];
    case 2: return w.white[q];
    default: return -w.black[q];
  }
}

OneForm expand(const DiamondForm& w);

DiamondForm d_function(const Surface& s, const VertexFunction& f);

struct PQ {
  cplx p, q;
};

// (∂f, ∂̄f) on Q in the normalized chart.
PQ derivatives_quad(const Surface& s, const VertexFunction& f, int q);
// max over quads of |∂̄f|
double is_holomorphic(const Surface& s, const VertexFunction& f);
std::vector<double> cr_residuals(const Surface& s, const VertexFunction& f);

PQ decompose_quad(const Surface& s, const DiamondForm& w, int q);
DiamondForm from_pq(const Surface& s, const std::vector<cplx>& p, const std::vector<cplx>& q);

// Counterclockwise boundary sum around F_v.
cplx vertex_circulation(const Surface& s, const DiamondForm& w, int v);
TwoForm d_one_form(const Surface& s, const OneForm& w);
TwoForm d_diamond(const Surface& s, const DiamondForm& w);

TwoForm wedge(const Surface& s, const DiamondForm& a, const DiamondForm& b);
// (pq' - qp') * (-4i area(F_Q)); must agree with wedge().
TwoForm wedge_coordinates(const Surface& s, const DiamondForm& a, const DiamondForm& b);
cplx integral(const TwoForm& t);

DiamondForm hodge_star(const Surface& s, const DiamondForm& w);
// The same operator written with the intersection angle and edge lengths.
DiamondForm hodge_star_geometric(const Surface& s, const DiamondForm& w);
DiamondForm conj(const DiamondForm& w);

// Volume of F_v under the chosen positive two-form.
enum class VertexArea { unit, vertex_chart };
std::vector<double> vertex_areas(const Surface& s, VertexArea kind);

VertexFunction laplacian(const Surface& s, const VertexFunction& f,
                         VertexArea area = VertexArea::unit);

cplx scalar_product(const Surface& s, const DiamondForm& a, const DiamondForm& b);
double dirichlet_energy(const Surface& s, const VertexFunction& f);

int check_liouville(const Surface& s, double tol = 1e-9);

double derivation_rule_check(const Surface& s, const VertexFunction& f, const DiamondForm& w);

}  // namespace drs
