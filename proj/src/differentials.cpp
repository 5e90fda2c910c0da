#include "drs/differentials.hpp"

#include <cmath>
#include <sstream>

namespace drs {

namespace {

const cplx I(0, 1);

// Circulation coefficients of the edge values at corner c around F_v:
// c0 -> +white, c1 -> -black, c2 -> -white, c3 -> +black.
constexpr int kCircBlack[4] = {0, -1, 0, +1};
constexpr int kCircWhite[4] = {+1, 0, -1, 0};

double scale_of(const la::Mat& m) { return std::max(1.0, m.cwiseAbs().maxCoeff()); }

void append_period_rows(la::Mat& a, int row, const HomologyBasis& h, const Surface& s,
                        bool with_b) {
  const int F = s.num_quads(), g = h.genus;
  for (int k = 0; k < g; ++k) {
    const Cycle* cyc[2] = {&h.a[k], &h.b[k]};
    for (int part = 0; part < (with_b ? 2 : 1); ++part) {
      int r = row + (with_b ? 4 * k + 2 * part : 2 * k);
      for (int q = 0; q < F; ++q) {
        a(r, 2 * q) = 2.0 * cyc[part]->chains.black[q];
        a(r + 1, 2 * q + 1) = 2.0 * cyc[part]->chains.white[q];
      }
    }
  }
}

}  // namespace

la::Mat harmonic_system(const Surface& s) {
  const int F = s.num_quads(), V = s.num_vertices();
  la::Mat a = la::Mat::Zero(2 * V, 2 * F);
  for (int v = 0; v < V; ++v) {
    for (auto cr : s.star(v)) {
      const int q = cr.q, c = cr.c;
      const cplx r = s.rho(q);
      const double R = r.real(), Im = r.imag(), n2 = std::norm(r);
      a(v, 2 * q) += kCircBlack[c];
      a(v, 2 * q + 1) += kCircWhite[c];
      // star(black) = (-Im black - white)/R, star(white) = (|rho|^2 black + Im white)/R
      a(V + v, 2 * q) += kCircBlack[c] * (-Im / R) + kCircWhite[c] * (n2 / R);
      a(V + v, 2 * q + 1) += kCircBlack[c] * (-1.0 / R) + kCircWhite[c] * (Im / R);
    }
  }
  return a;
}

la::Mat holomorphic_system(const Surface& s) {
  const int F = s.num_quads(), V = s.num_vertices();
  la::Mat a = la::Mat::Zero(V, F);
  for (int v = 0; v < V; ++v)
    for (auto cr : s.star(v)) a(v, cr.q) += double(kCircBlack[cr.c]) + double(kCircWhite[cr.c]) * I * s.rho(cr.q);
  return a;
}

DiamondForm harmonic_with_periods(const Surface& s, const HomologyBasis& h,
                                  const std::vector<cplx>& targets, double tol) {
  const int F = s.num_quads(), V = s.num_vertices(), g = h.genus;
  if (static_cast<int>(targets.size()) != 4 * g)
    throw Error("bad-argument", "harmonic_with_periods needs 4g targets");
  la::Mat a = la::Mat::Zero(2 * V + 4 * g, 2 * F);
  a.topRows(2 * V) = harmonic_system(s);
  append_period_rows(a, 2 * V, h, s, true);
  la::Vec b = la::Vec::Zero(a.rows());
  for (int i = 0; i < 4 * g; ++i) b(2 * V + i) = targets[i];
  la::Solution sol = la::solve(a, b);
  double sc = std::max(scale_of(a), b.size() ? b.cwiseAbs().maxCoeff() : 1.0);
  if (sol.residual > tol * sc * std::max<double>(1, F)) {
    std::ostringstream os;
    os << "harmonic system residual " << sol.residual;
    throw Error("solver-failure", os.str());
  }
  DiamondForm w = DiamondForm::zero(F);
  for (int q = 0; q < F; ++q) {
    w.black[q] = sol.x(2 * q);
    w.white[q] = sol.x(2 * q + 1);
  }
  return w;
}

PSolver::PSolver(const Surface& s, const HomologyBasis& h)
    : s_(s), h_(h), a_([&] {
        const int F = s.num_quads(), V = s.num_vertices(), g = h.genus;
        la::Mat a = la::Mat::Zero(V + 2 * g, F);
        a.topRows(V) = holomorphic_system(s);
        for (int k = 0; k < g; ++k)
          for (int q = 0; q < F; ++q) {
            a(V + 2 * k, q) = 2.0 * h.a[k].chains.black[q];
            a(V + 2 * k + 1, q) = 2.0 * I * s.rho(q) * double(h.a[k].chains.white[q]);
          }
        return a;
      }()),
      ls_(a_) {}

la::Mat PSolver::solve(const la::Mat& rhs, const char* what) const {
  if (ls_.rank() < s_.num_quads())
    throw Error("ambiguous", std::string(what) + ": normalization system is singular");
  la::Mat x = ls_.solve(rhs);
  double res = ls_.residual(x, rhs);
  double sc = std::max(scale_of(a_), rhs.size() ? rhs.cwiseAbs().maxCoeff() : 1.0);
  if (res > 1e-9 * sc * std::max(1, s_.num_quads())) {
    std::ostringstream os;
    os << what << ": residual " << res;
    throw Error("solver-failure", os.str());
  }
  return x;
}

HolomorphicBasis PSolver::canonical() const {
  const int F = s_.num_quads(), V = s_.num_vertices(), g = h_.genus;
  la::Mat rhs = la::Mat::Zero(V + 2 * g, 2 * g);
  for (int k = 0; k < g; ++k) {
    rhs(V + 2 * k, k) = 1.0;
    rhs(V + 2 * k + 1, g + k) = 1.0;
  }
  la::Mat x = solve(rhs, "canonical basis");
  HolomorphicBasis hb;
  std::vector<cplx> zero(F, 0.0);
  auto col = [&](int j) {
    std::vector<cplx> p(F);
    for (int q = 0; q < F; ++q) p[q] = x(q, j);
    return from_pq(s_, p, zero);
  };
  for (int k = 0; k < g; ++k) {
    hb.black.push_back(col(k));
    hb.white.push_back(col(g + k));
    hb.canonical.push_back(hb.black.back() + hb.white.back());
  }
  return hb;
}

std::vector<AbelianDifferential> PSolver::second_all() const {
  const int F = s_.num_quads(), V = s_.num_vertices(), g = h_.genus;
  la::Mat rhs = la::Mat::Zero(V + 2 * g, F);
  std::vector<cplx> qc(F);
  for (int Q = 0; Q < F; ++Q) {
    const cplx r = s_.rho(Q);
    qc[Q] = -kPi / (2.0 * r.real());
    const cplx blk = qc[Q], wht = -I * std::conj(r) * qc[Q];
    for (int c = 0; c < 4; ++c)
      rhs(s_.vertex(Q, c), Q) -= double(kCircBlack[c]) * blk + double(kCircWhite[c]) * wht;
    for (int k = 0; k < g; ++k) {
      rhs(V + 2 * k, Q) -= 2.0 * double(h_.a[k].chains.black[Q]) * blk;
      rhs(V + 2 * k + 1, Q) -= 2.0 * double(h_.a[k].chains.white[Q]) * wht;
    }
  }
  la::Mat x = solve(rhs, "second kind");
  std::vector<AbelianDifferential> out;
  for (int Q = 0; Q < F; ++Q) {
    std::vector<cplx> p(F), q(F, 0.0);
    for (int j = 0; j < F; ++j) p[j] = x(j, Q);
    q[Q] = qc[Q];
    AbelianDifferential d;
    d.kind = AbelianDifferential::second;
    d.form = from_pq(s_, p, q);
    d.pole_quad = Q;
    out.push_back(std::move(d));
  }
  return out;
}

AbelianDifferential PSolver::second(int Q) const {
  // Cheap enough to share the batched path.
  return second_all().at(Q);
}

std::vector<AbelianDifferential> PSolver::third_many(int v, const std::vector<int>& others) const {
  const int F = s_.num_quads(), V = s_.num_vertices(), g = h_.genus;
  la::Mat rhs = la::Mat::Zero(V + 2 * g, others.size());
  for (std::size_t j = 0; j < others.size(); ++j) {
    int w = others[j];
    if (w == v || s_.is_black(w) != s_.is_black(v))
      throw Error("bad-argument", "third-kind poles must be distinct and of one color");
    rhs(v, j) = 2.0 * kPi * I;
    rhs(w, j) = -2.0 * kPi * I;
  }
  la::Mat x = solve(rhs, "third kind");
  std::vector<AbelianDifferential> out;
  std::vector<cplx> zero(F, 0.0);
  for (std::size_t j = 0; j < others.size(); ++j) {
    std::vector<cplx> p(F);
    for (int q = 0; q < F; ++q) p[q] = x(q, j);
    AbelianDifferential d;
    d.kind = AbelianDifferential::third;
    d.form = from_pq(s_, p, zero);
    d.plus = v;
    d.minus = others[j];
    out.push_back(std::move(d));
  }
  return out;
}

AbelianDifferential PSolver::third(int v, int v2) const { return third_many(v, {v2}).front(); }

DiamondForm holomorphic_with_a_periods(const Surface& s, const HomologyBasis& h,
                                       const std::vector<cplx>& targets, double tol) {
  const int g = h.genus;
  if (static_cast<int>(targets.size()) != 2 * g)
    throw Error("bad-argument", "holomorphic_with_a_periods needs 2g targets");
  HolomorphicBasis hb = canonical_bases(s, h);
  DiamondForm w = DiamondForm::zero(s.num_quads());
  for (int k = 0; k < g; ++k) {
    w += targets[2 * k] * hb.black[k];
    w += targets[2 * k + 1] * hb.white[k];
  }
  double res = 0.0;
  for (int v = 0; v < s.num_vertices(); ++v) res = std::max(res, std::abs(vertex_circulation(s, w, v)));
  if (res > tol * std::max<double>(1, s.num_quads()))
    throw Error("solver-failure", "holomorphic form is not closed");
  return w;
}

HolomorphicBasis canonical_bases(const Surface& s, const HomologyBasis& h) {
  if (h.genus == 0) return {};
  return PSolver(s, h).canonical();
}

PeriodMatrices period_matrices(const Surface&, const HomologyBasis& h,
                               const HolomorphicBasis& hb) {
  const int g = h.genus;
  PeriodMatrices pm;
  pm.bb = pm.bw = pm.wb = pm.ww = la::Mat::Zero(g, g);
  for (int j = 0; j < g; ++j)
    for (int k = 0; k < g; ++k) {
      pm.bb(j, k) = black_integral(hb.black[k], h.b[j].chains.black);
      pm.wb(j, k) = white_integral(hb.black[k], h.b[j].chains.white);
      pm.bw(j, k) = black_integral(hb.white[k], h.b[j].chains.black);
      pm.ww(j, k) = white_integral(hb.white[k], h.b[j].chains.white);
    }
  pm.pi = (pm.bb + pm.bw + pm.wb + pm.ww) / 2.0;
  pm.pi_b = pm.bw + pm.bb;
  pm.pi_w = pm.ww + pm.wb;
  pm.pi_tilde = la::Mat::Zero(2 * g, 2 * g);
  pm.pi_tilde.topLeftCorner(g, g) = pm.bw;
  pm.pi_tilde.topRightCorner(g, g) = pm.bb;
  pm.pi_tilde.bottomLeftCorner(g, g) = pm.ww;
  pm.pi_tilde.bottomRightCorner(g, g) = pm.wb;
  return pm;
}

PeriodMatrices period_matrices(const Surface& s, const HomologyBasis& h) {
  PeriodMatrices pm = period_matrices(s, h, canonical_bases(s, h));
  MatrixChecks mc = check_period_matrices(pm);
  if (mc.asym_pi > 1e-8 || mc.asym_tilde > 1e-8 || mc.bb_vs_ww > 1e-8 ||
      !(mc.min_eig_im_pi > 0) || !(mc.min_eig_im_tilde > 0)) {
    std::ostringstream os;
    os << "period matrix invariants violated (asym " << mc.asym_pi << ", tilde "
       << mc.asym_tilde << ", bb/ww " << mc.bb_vs_ww << ", min eig " << mc.min_eig_im_pi
       << ", " << mc.min_eig_im_tilde << ")";
    throw Error("internal-consistency", os.str());
  }
  return pm;
}

MatrixChecks check_period_matrices(const PeriodMatrices& pm) {
  MatrixChecks mc;
  if (pm.pi.size() == 0) {
    mc.min_eig_im_pi = mc.min_eig_im_tilde = 1.0;
    return mc;
  }
  mc.asym_pi = (pm.pi - pm.pi.transpose()).cwiseAbs().maxCoeff();
  mc.asym_tilde = (pm.pi_tilde - pm.pi_tilde.transpose()).cwiseAbs().maxCoeff();
  mc.bb_vs_ww = (pm.bb.transpose() - pm.ww).cwiseAbs().maxCoeff();
  auto min_eig = [](const la::Mat& m) {
    Eigen::MatrixXd im = m.imag();
    Eigen::MatrixXd sym = (im + im.transpose()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
    return es.eigenvalues().minCoeff();
  };
  mc.min_eig_im_pi = min_eig(pm.pi);
  mc.min_eig_im_tilde = min_eig(pm.pi_tilde);
  return mc;
}

la::Mat transform_periods(const la::Mat& pi_tilde, const IntMat& A, const IntMat& B,
                          const IntMat& C, const IntMat& D) {
  const int g = static_cast<int>(pi_tilde.rows()) / 2;
  auto dbl = [&](const IntMat& X) {
    la::Mat m = la::Mat::Zero(2 * g, 2 * g);
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) m(i, j) = m(g + i, g + j) = double(X[i][j]);
    return m;
  };
  la::Mat S = la::Mat::Zero(2 * g, 2 * g);
  S.topRightCorner(g, g).setIdentity();
  S.bottomLeftCorner(g, g).setIdentity();
  // Rows of Π̃ S are (black b-cycles; white b-cycles), columns (ω^B; ω^W).
  la::Mat hat = pi_tilde * S;
  la::Mat den = dbl(A) + dbl(B) * hat;
  Eigen::FullPivLU<la::Mat> lu(den);
  if (!lu.isInvertible()) throw Error("singular", "A + B Π is singular");
  la::Mat out = (dbl(C) + dbl(D) * hat) * lu.inverse();
  return out * S;
}

HomologyBasis reduce_torus_basis(const Surface& s, const HomologyBasis& h) {
  if (h.genus != 1) return h;
  cplx tau = period_matrices(s, h, canonical_bases(s, h)).pi(0, 0);
  long long M[2][2] = {{1, 0}, {0, 1}};
  auto apply = [&](long long n00, long long n01, long long n10, long long n11) {
    long long r[2][2];
    for (int j = 0; j < 2; ++j) {
      r[0][j] = n00 * M[0][j] + n01 * M[1][j];
      r[1][j] = n10 * M[0][j] + n11 * M[1][j];
    }
    std::copy(&r[0][0], &r[0][0] + 4, &M[0][0]);
  };
  for (int it = 0; it < 200; ++it) {
    long long n = std::llround(tau.real());
    if (n != 0) {
      tau -= double(n);
      apply(1, 0, -n, 1);
    }
    if (std::norm(tau) < 1.0 - 1e-12) {
      tau = -1.0 / tau;
      apply(0, 1, -1, 0);
    } else {
      break;
    }
  }
  if (M[0][0] == 1 && M[0][1] == 0 && M[1][0] == 0 && M[1][1] == 1) return h;
  auto m = [](long long x) { return IntMat{{static_cast<int>(x)}}; };
  return transform_basis(s, h, m(M[0][0]), m(M[0][1]), m(M[1][0]), m(M[1][1]));
}

cplx residue(const Surface& s, const DiamondForm& w, int v) {
  return vertex_circulation(s, w, v) / (2.0 * kPi * I);
}

AbelianDifferential abelian_second(const Surface& s, const HomologyBasis& h, int q) {
  return PSolver(s, h).second(q);
}

AbelianDifferential abelian_third(const Surface& s, const HomologyBasis& h, int v, int v2) {
  return PSolver(s, h).third(v, v2);
}

la::Mat form_matrix(const std::vector<DiamondForm>& forms) {
  if (forms.empty()) return {};
  const int F = forms.front().size();
  la::Mat m(2 * F, forms.size());
  for (std::size_t j = 0; j < forms.size(); ++j)
    for (int q = 0; q < F; ++q) {
      m(2 * q, j) = forms[j].black[q];
      m(2 * q + 1, j) = forms[j].white[q];
    }
  return m;
}

AbelianBasis abelian_basis(const Surface& s, const HomologyBasis& h, int b0, int w0) {
  if (!s.is_black(b0) || s.is_black(w0)) throw Error("bad-argument", "b0 must be black, w0 white");
  PSolver ps(s, h);
  AbelianBasis ab;
  HolomorphicBasis hb = ps.canonical();
  for (int k = 0; k < h.genus; ++k) {
    ab.forms.push_back({AbelianDifferential::first, hb.black[k]});
    ab.forms.push_back({AbelianDifferential::first, hb.white[k]});
  }
  for (auto& d : ps.second_all()) ab.forms.push_back(std::move(d));
  std::vector<int> blacks, whites;
  for (int v = 0; v < s.num_vertices(); ++v) {
    if (v == b0 || v == w0) continue;
    (s.is_black(v) ? blacks : whites).push_back(v);
  }
  for (auto& d : ps.third_many(b0, blacks)) ab.forms.push_back(std::move(d));
  for (auto& d : ps.third_many(w0, whites)) ab.forms.push_back(std::move(d));
  std::vector<DiamondForm> fs;
  for (auto& d : ab.forms) fs.push_back(d.form);
  ab.rank = la::rank(form_matrix(fs));
  if (ab.rank != 2 * s.num_quads())
    throw Error("rank-deficient", "Abelian differentials span rank " + std::to_string(ab.rank));
  return ab;
}

}  // namespace drs
