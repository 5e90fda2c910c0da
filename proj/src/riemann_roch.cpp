#include "drs/riemann_roch.hpp"

#include <cmath>
#include <sstream>

#include "drs/linalg.hpp"

namespace drs {

namespace {
const cplx I(0, 1);

void require_admissible(const Surface& s, const Divisor& d) {
  if (!d.admissible()) throw Error("inadmissible", "divisor " + format_divisor(d) + " is not admissible");
  for (auto [v, m] : d.vertex)
    if (v < 0 || v >= s.num_vertices()) throw Error("id", "divisor names unknown vertex " + std::to_string(v));
  for (auto [q, n] : d.quad)
    if (q < 0 || q >= s.num_quads()) throw Error("id", "divisor names unknown quad " + std::to_string(q));
}
}  // namespace

bool Divisor::valid() const {
  for (auto [v, m] : vertex)
    if (m < -1 || m > 1) return false;
  for (auto [q, n] : quad)
    if (n < -2 || n > 2) return false;
  return true;
}

bool Divisor::admissible() const {
  for (auto [v, m] : vertex)
    if (m != -1 && m != 0) return false;
  for (auto [q, n] : quad)
    if (n != -2 && n != 0 && n != 1) return false;
  return true;
}

int Divisor::m(int v) const {
  auto it = vertex.find(v);
  return it == vertex.end() ? 0 : it->second;
}

int Divisor::n(int q) const {
  auto it = quad.find(q);
  return it == quad.end() ? 0 : it->second;
}

int degree(const Divisor& d) {
  int deg = 0;
  for (auto [v, m] : d.vertex) deg += m;
  for (auto [q, n] : d.quad) deg += (n > 0) - (n < 0);
  return deg;
}

Divisor parse_divisor(const std::string& text) {
  Divisor d;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto colon = item.find(':'), eq = item.find('=');
    if (colon == std::string::npos || eq == std::string::npos || colon > eq)
      throw Error("parse", "divisor term '" + item + "' is not kind:id=coef");
    std::string kind = item.substr(0, colon);
    int id = 0, coef = 0;
    try {
      id = std::stoi(item.substr(colon + 1, eq - colon - 1));
      coef = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error("parse", "divisor term '" + item + "' has a bad number");
    }
    if (kind == "v")
      d.vertex[id] += coef;
    else if (kind == "q")
      d.quad[id] += coef;
    else
      throw Error("parse", "divisor term kind must be v or q, got '" + kind + "'");
  }
  if (!d.valid()) throw Error("parse", "divisor coefficients out of range");
  return d;
}

std::string format_divisor(const Divisor& d) {
  std::ostringstream os;
  bool first = true;
  for (auto [v, m] : d.vertex) {
    os << (first ? "" : ",") << "v:" << v << "=" << m;
    first = false;
  }
  for (auto [q, n] : d.quad) {
    os << (first ? "" : ",") << "q:" << q << "=" << n;
    first = false;
  }
  return os.str();
}

FunctionDivisor function_divisor(const Surface& s, const VertexFunction& f, double tol) {
  FunctionDivisor fd;
  for (int v = 0; v < s.num_vertices(); ++v)
    if (std::abs(f[v]) < tol) fd.divisor.vertex[v] = 1;
  int doubles = 0;
  for (int q = 0; q < s.num_quads(); ++q) {
    cplx db = f[s.vertex(q, kBp)] - f[s.vertex(q, kBm)];
    cplx dw = f[s.vertex(q, kWp)] - f[s.vertex(q, kWm)];
    if (std::abs(db) < tol && std::abs(dw) < tol) {
      fd.divisor.quad[q] = 2;
      ++doubles;
    } else if (std::abs(derivatives_quad(s, f, q).q) > tol) {
      fd.divisor.quad[q] = -1;
    }
  }
  fd.degenerate = doubles == s.num_quads();
  return fd;
}

int l_dim(const Surface& s, const Divisor& d) {
  require_admissible(s, d);
  const int V = s.num_vertices(), F = s.num_quads();
  std::vector<Eigen::RowVectorXcd> rows;
  auto row = [&] { return Eigen::RowVectorXcd::Zero(V).eval(); };
  for (auto [v, m] : d.vertex)
    if (m == -1) {
      auto r = row();
      r(v) = 1.0;
      rows.push_back(r);
    }
  for (int q = 0; q < F; ++q) {
    int n = d.n(q);
    if (n == 1) continue;  // simple pole allowed
    if (n == -2) {
      // double value: f(b+) = f(b-) and f(w+) = f(w-)
      for (int lo : {kBm, kWm}) {
        auto r = row();
        r(s.vertex(q, lo + 2)) += 1.0;
        r(s.vertex(q, lo)) -= 1.0;
        rows.push_back(r);
      }
      continue;
    }
    auto r = row();
    const cplx rho = s.rho(q);
    r(s.vertex(q, kWp)) += 1.0;
    r(s.vertex(q, kWm)) -= 1.0;
    r(s.vertex(q, kBp)) -= I * rho;
    r(s.vertex(q, kBm)) += I * rho;
    rows.push_back(r);
  }
  la::Mat a(rows.size(), V);
  for (std::size_t i = 0; i < rows.size(); ++i) a.row(i) = rows[i];
  return la::nullity(a);
}

int i_dim(const Surface& s, const Divisor& d) {
  require_admissible(s, d);
  const int V = s.num_vertices(), F = s.num_quads();
  // Unknowns: p per quad, then q at quads with n = -2.
  std::vector<int> qcol(F, -1);
  int cols = F;
  for (int q = 0; q < F; ++q)
    if (d.n(q) == -2) qcol[q] = cols++;
  la::Mat closed = la::Mat::Zero(V, cols);
  const int kb[4] = {0, -1, 0, +1}, kw[4] = {+1, 0, -1, 0};
  for (int v = 0; v < V; ++v)
    for (auto cr : s.star(v)) {
      const cplx r = s.rho(cr.q);
      // black = p + q, white = i rho p - i conj(rho) q
      closed(v, cr.q) += double(kb[cr.c]) + double(kw[cr.c]) * I * r;
      if (qcol[cr.q] >= 0) closed(v, qcol[cr.q]) += double(kb[cr.c]) - double(kw[cr.c]) * I * std::conj(r);
    }
  std::vector<int> keep;
  for (int v = 0; v < V; ++v)
    if (d.m(v) == 0) keep.push_back(v);
  std::vector<int> zero_quads;
  for (auto [q, n] : d.quad)
    if (n == 1) zero_quads.push_back(q);
  la::Mat a = la::Mat::Zero(keep.size() + zero_quads.size(), cols);
  for (std::size_t i = 0; i < keep.size(); ++i) a.row(i) = closed.row(keep[i]);
  for (std::size_t i = 0; i < zero_quads.size(); ++i) a(keep.size() + i, zero_quads[i]) = 1.0;
  return la::nullity(a);
}

DimensionReport check_riemann_roch(const Surface& s, const Divisor& d) {
  DimensionReport r;
  r.l = l_dim(s, d);
  r.i = i_dim(s, d);
  r.deg = degree(d);
  r.genus = s.genus();
  r.residual = r.l - (r.deg - 2 * r.genus + 2 + r.i);
  return r;
}

MMatrixCount m_matrix_dims(const PSolver& ps, const HolomorphicBasis& hb,
                           const std::vector<AbelianDifferential>& second, const Divisor& d) {
  const Surface& s = ps.surface();
  std::vector<int> v0, poles, B0, W0;
  for (auto [q, n] : d.quad) {
    if (n == 1) v0.push_back(q);
    if (n == -2) poles.push_back(q);
  }
  for (auto [v, m] : d.vertex)
    if (m == -1) (s.is_black(v) ? B0 : W0).push_back(v);
  std::vector<const DiamondForm*> forms;
  for (auto& w : hb.black) forms.push_back(&w);
  for (auto& w : hb.white) forms.push_back(&w);
  for (int P : poles) forms.push_back(&second.at(P).form);
  std::vector<AbelianDifferential> thirds;
  for (auto* set : {&B0, &W0})
    if (set->size() > 1) {
      auto t = ps.third_many(set->front(), std::vector<int>(set->begin() + 1, set->end()));
      thirds.insert(thirds.end(), t.begin(), t.end());
    }
  for (auto& t : thirds) forms.push_back(&t.form);

  MMatrixCount mc;
  mc.cols = static_cast<int>(forms.size());
  la::Mat M = la::Mat::Zero(v0.size(), forms.size());
  for (std::size_t r = 0; r < v0.size(); ++r)
    for (std::size_t c = 0; c < forms.size(); ++c) M(r, c) = decompose_quad(s, *forms[c], v0[r]).p;
  mc.rank = v0.empty() || forms.empty() ? 0 : la::rank(M);
  mc.i = mc.cols - mc.rank;
  mc.l = static_cast<int>(v0.size()) - mc.rank + int(B0.empty()) + int(W0.empty());
  return mc;
}

TwoPoleResult torus_pole_test(const Surface& s, int q1, int q2, const TorusGrid* grid) {
  TwoPoleResult r;
  Divisor d;
  d.quad[q1] = 1;
  d.quad[q2] = 1;
  r.l = l_dim(s, d);
  r.exists = r.l > 2;
  bool real = true;
  for (int q = 0; q < s.num_quads(); ++q) real = real && std::abs(s.rho(q).imag()) < 1e-12;
  if (grid && real && s.genus() == 1) {
    cplx a = grid->black_diag[q1], b = grid->black_diag[q2];
    r.parallel = std::abs((std::conj(a) * b).imag()) < 1e-9 * std::abs(a) * std::abs(b);
  }
  return r;
}

OnePoleSurface gen_one_pole_surface(const QuadComplex& base, int q, cplx rho1, cplx rho2) {
  if (!(rho1.real() > 0) || !(rho2.real() > 0)) throw Error("bad-argument", "Re rho must be positive");
  if (q < 0 || q >= base.num_quads()) throw Error("id", "no quad " + std::to_string(q));
  OnePoleSurface out;
  QuadComplex c = base;
  const auto [bm, wm, bp, wp] = base.quads[q];
  const int V = c.num_vertices();
  const int b_minus = V, w_minus = V + 1, b_plus = V + 2, w_plus = V + 3;
  c.color.insert(c.color.end(), {Color::black, Color::white, Color::black, Color::white});
  c.quads[q] = {bm, w_minus, b_minus, wp};
  c.rho[q] = rho2;
  c.quads.push_back({bm, wm, b_plus, w_minus});
  c.quads.push_back({bp, w_plus, b_plus, wm});
  c.quads.push_back({bp, wp, b_minus, w_plus});
  c.quads.push_back({b_minus, w_minus, b_plus, w_plus});
  c.rho.insert(c.rho.end(), {rho2, rho2, rho2, rho1});
  const int F = base.num_quads();
  if (!c.side_edge.empty()) {
    // Keep the outer labels; inner edges get fresh ones.
    auto outer = base.side_edge[q];
    int next = 0;
    for (auto& a : base.side_edge)
      for (int e : a) next = std::max(next, e + 1);
    const int e_bmw = next, e_bwp = next + 1, e_wmb = next + 2, e_bpw = next + 3;
    const int c0 = next + 4, c1 = next + 5, c2 = next + 6, c3 = next + 7;
    c.side_edge[q] = {e_bmw, c0, e_bwp, outer[3]};
    c.side_edge.push_back({outer[0], e_wmb, c1, e_bmw});
    c.side_edge.push_back({e_bpw, c2, e_wmb, outer[1]});
    c.side_edge.push_back({outer[2], e_bwp, c3, e_bpw});
    c.side_edge.push_back({c0, c1, c2, c3});
  }
  out.center = F + 3;
  out.ring = {q, F, F + 1, F + 2};
  out.f.assign(c.num_vertices(), 0.0);
  out.f[b_minus] = 1.0;
  out.f[b_plus] = -1.0;
  out.f[w_plus] = I * rho2;
  out.f[w_minus] = -I * rho2;
  out.complex = std::move(c);
  return out;
}

}  // namespace drs
