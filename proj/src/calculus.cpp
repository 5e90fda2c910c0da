#include "drs/calculus.hpp"

#include <algorithm>
#include <cmath>

#include "drs/linalg.hpp"

namespace drs {

namespace {
const cplx I(0, 1);
}

DiamondForm& DiamondForm::operator+=(const DiamondForm& o) {
  for (std::size_t i = 0; i < black.size(); ++i) {
    black[i] += o.black[i];
    white[i] += o.white[i];
  }
  return *this;
}

DiamondForm& DiamondForm::operator*=(cplx a) {
  for (auto& x : black) x *= a;
  for (auto& x : white) x *= a;
  return *this;
}

double TwoForm::max_abs() const {
  double m = 0.0;
  for (auto x : vertex_face) m = std::max(m, std::abs(x));
  for (auto x : quad_face) m = std::max(m, std::abs(x));
  return m;
}

OneForm expand(const DiamondForm& w) {
  OneForm o;
  o.value.resize(4 * w.size());
  for (int q = 0; q < w.size(); ++q)
    for (int c = 0; c < 4; ++c) o.value[4 * q + c] = edge_value(w, q, c);
  return o;
}

DiamondForm d_function(const Surface& s, const VertexFunction& f) {
  const int F = s.num_quads();
  DiamondForm w = DiamondForm::zero(F);
  for (int q = 0; q < F; ++q) {
    w.black[q] = (f[s.vertex(q, kBp)] - f[s.vertex(q, kBm)]) / 2.0;
    w.white[q] = (f[s.vertex(q, kWp)] - f[s.vertex(q, kWm)]) / 2.0;
  }
  return w;
}

PQ decompose_quad(const Surface& s, const DiamondForm& w, int q) {
  // black = p + q, white = i rho p - i conj(rho) q
  const cplx r = s.rho(q);
  cplx p = (w.white[q] + I * std::conj(r) * w.black[q]) / (2.0 * I * r.real());
  return {p, w.black[q] - p};
}

DiamondForm from_pq(const Surface& s, const std::vector<cplx>& p, const std::vector<cplx>& q) {
  DiamondForm w = DiamondForm::zero(s.num_quads());
  for (int k = 0; k < s.num_quads(); ++k) {
    const cplx r = s.rho(k);
    w.black[k] = p[k] + q[k];
    w.white[k] = I * r * p[k] - I * std::conj(r) * q[k];
  }
  return w;
}

PQ derivatives_quad(const Surface& s, const VertexFunction& f, int q) {
  DiamondForm w = DiamondForm::zero(s.num_quads());
  w.black[q] = (f[s.vertex(q, kBp)] - f[s.vertex(q, kBm)]) / 2.0;
  w.white[q] = (f[s.vertex(q, kWp)] - f[s.vertex(q, kWm)]) / 2.0;
  return decompose_quad(s, w, q);
}

std::vector<double> cr_residuals(const Surface& s, const VertexFunction& f) {
  std::vector<double> r(s.num_quads());
  for (int q = 0; q < s.num_quads(); ++q) r[q] = std::abs(derivatives_quad(s, f, q).q);
  return r;
}

double is_holomorphic(const Surface& s, const VertexFunction& f) {
  auto r = cr_residuals(s, f);
  return r.empty() ? 0.0 : *std::max_element(r.begin(), r.end());
}

cplx vertex_circulation(const Surface& s, const DiamondForm& w, int v) {
  // F_v runs against the F_Q orientation on the shared medial edges.
  cplx sum = 0.0;
  for (auto cr : s.star(v)) sum -= edge_value(w, cr.q, cr.c);
  return sum;
}

TwoForm d_one_form(const Surface& s, const OneForm& w) {
  TwoForm t;
  t.vertex_face.assign(s.num_vertices(), 0.0);
  t.quad_face.assign(s.num_quads(), 0.0);
  for (int v = 0; v < s.num_vertices(); ++v)
    for (auto cr : s.star(v)) t.vertex_face[v] -= w.value[4 * cr.q + cr.c];
  for (int q = 0; q < s.num_quads(); ++q)
    for (int c = 0; c < 4; ++c) t.quad_face[q] += w.value[4 * q + c];
  return t;
}

TwoForm d_diamond(const Surface& s, const DiamondForm& w) {
  TwoForm t;
  t.vertex_face.resize(s.num_vertices());
  t.quad_face.assign(s.num_quads(), 0.0);
  for (int v = 0; v < s.num_vertices(); ++v) t.vertex_face[v] = vertex_circulation(s, w, v);
  return t;
}

TwoForm wedge(const Surface& s, const DiamondForm& a, const DiamondForm& b) {
  // e = black medial edge (corner 1), e* = white medial edge (corner 2);
  // Im(z(e*)/z(e)) = Re rho > 0 in the normalized chart.
  TwoForm t;
  t.vertex_face.assign(s.num_vertices(), 0.0);
  t.quad_face.resize(s.num_quads());
  for (int q = 0; q < s.num_quads(); ++q)
    t.quad_face[q] = 2.0 * (a.black[q] * b.white[q] - a.white[q] * b.black[q]);
  return t;
}

TwoForm wedge_coordinates(const Surface& s, const DiamondForm& a, const DiamondForm& b) {
  TwoForm t;
  t.vertex_face.assign(s.num_vertices(), 0.0);
  t.quad_face.resize(s.num_quads());
  for (int q = 0; q < s.num_quads(); ++q) {
    PQ x = decompose_quad(s, a, q), y = decompose_quad(s, b, q);
    double area = s.rho(q).real();  // Varignon parallelogram of the chart
    t.quad_face[q] = (x.p * y.q - x.q * y.p) * (-4.0 * I * area);
  }
  return t;
}

cplx integral(const TwoForm& t) {
  cplx sum = 0.0;
  for (auto x : t.vertex_face) sum += x;
  for (auto x : t.quad_face) sum += x;
  return sum;
}

DiamondForm hodge_star(const Surface& s, const DiamondForm& w) {
  const int F = s.num_quads();
  std::vector<cplx> p(F), q(F);
  for (int k = 0; k < F; ++k) {
    PQ d = decompose_quad(s, w, k);
    p[k] = -I * d.p;
    q[k] = I * d.q;
  }
  return from_pq(s, p, q);
}

DiamondForm hodge_star_geometric(const Surface& s, const DiamondForm& w) {
  DiamondForm out = DiamondForm::zero(s.num_quads());
  for (int q = 0; q < s.num_quads(); ++q) {
    const cplx r = s.rho(q);
    const double phi = intersection_angle(r);
    const double e = 1.0, es = std::abs(r);  // |e|, |e*| in the chart
    const double cot = std::cos(phi) / std::sin(phi), sn = std::sin(phi);
    out.black[q] = cot * w.black[q] - e / (es * sn) * w.white[q];
    out.white[q] = es / (e * sn) * w.black[q] - cot * w.white[q];
  }
  return out;
}

DiamondForm conj(const DiamondForm& w) {
  DiamondForm c = w;
  for (auto& x : c.black) x = std::conj(x);
  for (auto& x : c.white) x = std::conj(x);
  return c;
}

std::vector<double> vertex_areas(const Surface& s, VertexArea kind) {
  std::vector<double> a(s.num_vertices(), 1.0);
  if (kind == VertexArea::unit) return a;
  for (int v = 0; v < s.num_vertices(); ++v) {
    VertexChart vc = vertex_chart(s, v);
    // F_v is the polygon of edge midpoints; i/2 Ω_Λ gives twice its area.
    const int k = static_cast<int>(vc.star.size());
    double area = 0.0;
    for (int i = 0; i < k; ++i) {
      cplx m0 = vc.z[i][(vc.star[i].c + 1) & 3] / 2.0;
      cplx m1 = vc.z[(i + 1) % k][(vc.star[(i + 1) % k].c + 1) & 3] / 2.0;
      area += (std::conj(m0) * m1).imag() / 2.0;
    }
    a[v] = 2.0 * area;
  }
  return a;
}

VertexFunction laplacian(const Surface& s, const VertexFunction& f, VertexArea area) {
  DiamondForm sd = hodge_star(s, d_function(s, f));
  auto omega = vertex_areas(s, area);
  VertexFunction out(s.num_vertices());
  for (int v = 0; v < s.num_vertices(); ++v) out[v] = vertex_circulation(s, sd, v) / omega[v];
  return out;
}

cplx scalar_product(const Surface& s, const DiamondForm& a, const DiamondForm& b) {
  return integral(wedge(s, a, hodge_star(s, conj(b))));
}

double dirichlet_energy(const Surface& s, const VertexFunction& f) {
  DiamondForm df = d_function(s, f);
  return scalar_product(s, df, df).real();
}

int check_liouville(const Surface& s, double tol) {
  const int V = s.num_vertices();
  la::Mat L(V, V);
  VertexFunction e(V, 0.0);
  for (int j = 0; j < V; ++j) {
    e[j] = 1.0;
    VertexFunction col = laplacian(s, e);
    for (int i = 0; i < V; ++i) L(i, j) = col[i];
    e[j] = 0.0;
  }
  return la::nullity(L, tol);
}

double derivation_rule_check(const Surface& s, const VertexFunction& f, const DiamondForm& w) {
  OneForm fw = expand(w);
  for (int q = 0; q < s.num_quads(); ++q)
    for (int c = 0; c < 4; ++c) fw.value[4 * q + c] *= f[s.vertex(q, c)];
  TwoForm lhs = d_one_form(s, fw);
  TwoForm dfw = wedge(s, d_function(s, f), w);
  TwoForm dw = d_diamond(s, w);
  double res = 0.0;
  for (int v = 0; v < s.num_vertices(); ++v)
    res = std::max(res, std::abs(lhs.vertex_face[v] - dfw.vertex_face[v] - f[v] * dw.vertex_face[v]));
  for (int q = 0; q < s.num_quads(); ++q)
    res = std::max(res, std::abs(lhs.quad_face[q] - dfw.quad_face[q] - dw.quad_face[q]));
  return res;
}

}  // namespace drs
