#include "drs/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "drs/abel_jacobi.hpp"
#include "drs/coverings.hpp"
#include "drs/differentials.hpp"
#include "drs/generators.hpp"
#include "drs/geometry.hpp"
#include "drs/homology.hpp"
#include "drs/linalg.hpp"
#include "drs/riemann_roch.hpp"

namespace drs::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

const cplx I(0, 1);

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Residual check: pass iff value < bound.
Check below(std::string name, double value, double bound) {
  std::ostringstream os;
  os << value << " < " << bound;
  return {std::move(name), value < bound, value, os.str()};
}

Check equal(std::string name, long got, long want) {
  return {std::move(name), got == want, static_cast<double>(got),
          std::to_string(got) + (got == want ? " == " : " != ") + std::to_string(want)};
}

Check truth(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok, ok ? 1.0 : 0.0, std::move(detail)};
}

double max_abs(const std::vector<cplx>& v) {
  double m = 0;
  for (auto z : v) m = std::max(m, std::abs(z));
  return m;
}

double max_abs(const DiamondForm& w) { return std::max(max_abs(w.black), max_abs(w.white)); }

// ---------------------------------------------------------------------------

CriterionResult torus_period(const Options&) {
  CriterionResult r{1, "torus period matrix equals tau", {}, 0};
  struct Case {
    int m, n;
    cplx tau;
  };
  for (Case c : {Case{2, 2, I}, Case{4, 4, I}, Case{4, 6, cplx(0.3, 1.2)}}) {
    auto t0 = Clock::now();
    Surface s(gen_torus(c.m, c.n, c.tau));
    HomologyBasis h = reduce_torus_basis(s, homology_basis(s));
    PeriodMatrices pm = period_matrices(s, h);
    const double dt = seconds_since(t0);
    std::ostringstream name;
    name << "torus(" << c.m << "," << c.n << "," << c.tau.real() << "+" << c.tau.imag() << "i)";
    r.checks.push_back(below(name.str() + " |Pi-tau|", std::abs(pm.pi(0, 0) - c.tau), 1e-9));
    r.checks.push_back(below(name.str() + " seconds", dt, 1.0));
  }
  return r;
}

CriterionResult period_structure(const Options& opt) {
  CriterionResult r{2, "period matrix symmetry and positivity", {}, 0};
  auto t0 = Clock::now();
  double asym = 0, asym_t = 0, bbww = 0, min_eig = 1e300, min_eig_t = 1e300;
  auto run = [&](const QuadComplex& c) {
    Surface s(c);
    MatrixChecks mc = check_period_matrices(period_matrices(s, homology_basis(s)));
    asym = std::max(asym, mc.asym_pi);
    asym_t = std::max(asym_t, mc.asym_tilde);
    bbww = std::max(bbww, mc.bb_vs_ww);
    min_eig = std::min(min_eig, mc.min_eig_im_pi);
    min_eig_t = std::min(min_eig_t, mc.min_eig_im_tilde);
  };
  for (int k = 0; k < 20; ++k) run(random_torus(opt.seed * 1000 + k));
  for (int k = 0; k < 5; ++k) run(random_genus3(opt.seed * 1000 + 100 + k));
  r.checks.push_back(below("max |Pi - Pi^T|", asym, 1e-8));
  r.checks.push_back(below("max |Pi~ - Pi~^T|", asym_t, 1e-8));
  r.checks.push_back(below("max |(Pi^BB)^T - Pi^WW|", bbww, 1e-8));
  r.checks.push_back({"min eig Im Pi > 0", min_eig > 0, min_eig, std::to_string(min_eig)});
  r.checks.push_back({"min eig Im Pi~ > 0", min_eig_t > 0, min_eig_t, std::to_string(min_eig_t)});
  r.checks.push_back(below("seconds", seconds_since(t0), 30.0));
  return r;
}

CriterionResult bilinear_identity(const Options& opt) {
  CriterionResult r{3, "Riemann bilinear identity", {}, 0};
  std::mt19937_64 rng(opt.seed + 3);
  std::vector<NamedSurface> surfaces = {{"random torus", random_torus(opt.seed + 31)},
                                        {"torus(4,6)", gen_torus(4, 6, cplx(0.3, 1.2))},
                                        {"random genus 3", random_genus3(opt.seed + 32)}};
  for (auto& ns : surfaces) {
    Surface s(ns.complex);
    HomologyBasis h = homology_basis(s);
    auto basis = closed_form_basis(s);
    double worst = 0;
    for (int k = 0; k < 50; ++k) {
      DiamondForm a = random_combination(rng, basis), b = random_combination(rng, basis);
      double scale = std::max(1.0, max_abs(a) * max_abs(b) * s.num_quads());
      worst = std::max(worst, verify_rbi(s, a, b, h) / scale);
    }
    r.checks.push_back(below(ns.name + " relative residual", worst, 1e-9));
  }
  return r;
}

CriterionResult dimension_counts(const Options&) {
  CriterionResult r{4, "harmonic and holomorphic dimensions", {}, 0};
  for (auto& ns : shipped_surfaces()) {
    Surface s(ns.complex);
    const int g = s.genus();
    r.checks.push_back(equal(ns.name + " harmonic nullity", la::nullity(harmonic_system(s)), 4 * g));
    r.checks.push_back(equal(ns.name + " holomorphic nullity", la::nullity(holomorphic_system(s)), 2 * g));
  }
  return r;
}

CriterionResult liouville(const Options&) {
  CriterionResult r{5, "Liouville: harmonic functions are biconstant", {}, 0};
  for (auto& ns : shipped_surfaces()) {
    Surface s(ns.complex);
    r.checks.push_back(equal(ns.name + " Laplacian kernel", check_liouville(s), 2));
  }
  return r;
}

CriterionResult calculus_identities(const Options& opt) {
  CriterionResult r{6, "discrete calculus identities", {}, 0};
  std::mt19937_64 rng(opt.seed + 6);
  double ddf = 0, deriv = 0, star2 = 0, res_b = 0, res_w = 0;
  for (int k = 0; k < 100; ++k) {
    Surface s(k % 2 ? random_torus(opt.seed * 7919 + k) : random_genus3(opt.seed * 7919 + k));
    VertexFunction f = random_function(rng, s.num_vertices());
    DiamondForm w = random_form(rng, s.num_quads());
    ddf = std::max(ddf, d_diamond(s, d_function(s, f)).max_abs());
    deriv = std::max(deriv, derivation_rule_check(s, f, w));
    star2 = std::max(star2, max_abs(hodge_star(s, hodge_star(s, w)) + w));
    cplx sb = 0, sw = 0;
    for (int v = 0; v < s.num_vertices(); ++v) (s.is_black(v) ? sb : sw) += residue(s, w, v);
    res_b = std::max(res_b, std::abs(sb));
    res_w = std::max(res_w, std::abs(sw));
  }
  r.checks.push_back(below("ddf = 0", ddf, 1e-10));
  r.checks.push_back(below("d(f w) = df^w + f dw", deriv, 1e-10));
  r.checks.push_back(below("star^2 = -Id", star2, 1e-10));
  r.checks.push_back(below("sum of black residues", res_b, 1e-10));
  r.checks.push_back(below("sum of white residues", res_w, 1e-10));
  return r;
}

CriterionResult riemann_hurwitz(const Options&) {
  CriterionResult r{7, "Riemann-Hurwitz on the cube double cover", {}, 0};
  auto t0 = Clock::now();
  CoverData d = gen_cube_double_cover();
  Surface total(d.total), base(d.base);
  CoveringMap f{&total, &base, d.vertex_map, d.quad_map};
  ValidationReport vr = validate_map(f);
  r.checks.push_back(truth("map is discrete holomorphic", vr.ok(), vr.summary()));
  BranchReport br = check_riemann_hurwitz(f);
  r.checks.push_back(equal("genus", br.genus, 3));
  r.checks.push_back(equal("sheets", br.sheets, 2));
  r.checks.push_back(equal("branching", br.total_branching, 8));
  r.checks.push_back(truth("identity", br.identity == "3 = 2*(0-1)+1+8/2 OK", br.identity));
  r.checks.push_back(below("seconds", seconds_since(t0), 5.0));
  return r;
}

// Admissible divisors with at most two terms on distinct points.
std::vector<Divisor> small_divisors(const Surface& s) {
  struct Term {
    bool vertex;
    int id, coef;
  };
  std::vector<Term> terms;
  for (int v = 0; v < s.num_vertices(); ++v) terms.push_back({true, v, -1});
  for (int q = 0; q < s.num_quads(); ++q) {
    terms.push_back({false, q, -2});
    terms.push_back({false, q, 1});
  }
  auto add = [](Divisor& d, const Term& t) { (t.vertex ? d.vertex : d.quad)[t.id] = t.coef; };
  std::vector<Divisor> out(1);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Divisor d;
    add(d, terms[i]);
    out.push_back(d);
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (terms[i].vertex == terms[j].vertex && terms[i].id == terms[j].id) continue;
      Divisor e = d;
      add(e, terms[j]);
      out.push_back(e);
    }
  }
  return out;
}

Divisor random_divisor(std::mt19937_64& rng, const Surface& s) {
  Divisor d;
  std::uniform_int_distribution<int> nterms(0, 8), pick_v(0, s.num_vertices() - 1),
      pick_q(0, s.num_quads() - 1), coin(0, 2);
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    switch (coin(rng)) {
      case 0: d.vertex[pick_v(rng)] = -1; break;
      case 1: d.quad[pick_q(rng)] = -2; break;
      default: d.quad[pick_q(rng)] = 1; break;
    }
  }
  return d;
}

CriterionResult riemann_roch(const Options& opt) {
  CriterionResult r{8, "Riemann-Roch dimension counts", {}, 0};
  auto t0 = Clock::now();
  {
    Surface s(gen_torus(2, 4, I));
    int bad = 0, total = 0;
    for (const Divisor& d : small_divisors(s)) {
      ++total;
      if (check_riemann_roch(s, d).residual != 0) ++bad;
    }
    r.checks.push_back(equal("torus(2,4): " + std::to_string(total) + " divisors, failures", bad, 0));
  }
  {
    std::mt19937_64 rng(opt.seed + 8);
    Surface s(random_genus3(opt.seed + 81));
    HomologyBasis h = homology_basis(s);
    PSolver ps(s, h);
    HolomorphicBasis hb = ps.canonical();
    auto second = ps.second_all();
    int bad = 0, mismatch = 0;
    std::string first_bad;
    for (int k = 0; k < 50; ++k) {
      Divisor d = random_divisor(rng, s);
      DimensionReport dr = check_riemann_roch(s, d);
      if (dr.residual != 0) {
        ++bad;
        if (first_bad.empty()) first_bad = format_divisor(d);
      }
      if (k < 10) {
        MMatrixCount mc = m_matrix_dims(ps, hb, second, d);
        if (mc.i != dr.i || mc.l != dr.l) ++mismatch;
      }
    }
    Check c = equal("genus 3: 50 random divisors, failures", bad, 0);
    if (!first_bad.empty()) c.detail += " (first: " + first_bad + ")";
    r.checks.push_back(c);
    r.checks.push_back(equal("genus 3: M-matrix cross-check mismatches (10 divisors)", mismatch, 0));
  }
  r.checks.push_back(below("seconds", seconds_since(t0), 60.0));
  return r;
}

CriterionResult abelian_laws(const Options& opt) {
  CriterionResult r{9, "Abelian differentials of the second and third kind", {}, 0};
  std::mt19937_64 rng(opt.seed + 9);
  for (auto& ns : std::vector<NamedSurface>{{"random torus", random_torus(opt.seed + 91)},
                                            {"random genus 3", random_genus3(opt.seed + 92)}}) {
    Surface s(ns.complex);
    HomologyBasis h = homology_basis(s);
    PSolver ps(s, h);
    HolomorphicBasis hb = ps.canonical();
    std::uniform_int_distribution<int> pick(0, s.num_quads() - 1);
    double bper = 0, sym = 0;
    for (int t = 0; t < 6; ++t) {
      int q = pick(rng), q2 = pick(rng);
      AbelianDifferential wq = ps.second(q), wq2 = ps.second(q2);
      PeriodReport pr = periods(s, wq.form, h);
      for (int k = 0; k < h.genus; ++k) {
        cplx alpha = decompose_quad(s, hb.canonical[k], q).p;
        bper = std::max(bper, std::abs(pr.B[k] - 2.0 * kPi * I * alpha));
      }
      if (q != q2)
        sym = std::max(sym, std::abs(decompose_quad(s, wq.form, q2).p - decompose_quad(s, wq2.form, q).p));
    }
    r.checks.push_back(below(ns.name + ": b-periods of w_Q vs 2 pi i alpha_k", bper, 1e-8));
    r.checks.push_back(below(ns.name + ": alpha = beta symmetry", sym, 1e-8));
  }
  {
    Surface s(gen_torus(4, 4, I));
    HomologyBasis h = homology_basis(s);
    PSolver ps(s, h);
    HolomorphicBasis hb = ps.canonical();
    const std::vector<char> blocked[2] = {crossed_quads(s, h, Color::black), crossed_quads(s, h, Color::white)};
    double worst = 0, res = 0;
    int tested = 0;
    for (int v = 0; v < s.num_vertices(); ++v)
      for (int v2 = 0; v2 < s.num_vertices(); ++v2) {
        if (v == v2 || s.is_black(v) != s.is_black(v2)) continue;
        auto path = graph_path(s, v2, v, &blocked[s.is_black(v) ? 0 : 1]);
        if (!path) continue;
        AbelianDifferential w = ps.third(v, v2);
        for (int u = 0; u < s.num_vertices(); ++u) {
          cplx want = u == v ? 1.0 : (u == v2 ? -1.0 : 0.0);
          res = std::max(res, std::abs(residue(s, w.form, u) - want));
        }
        for (int k = 0; k < h.genus; ++k) {
          cplx lhs = walk_integral(w.form, h.b[k].walk);
          cplx rhs = 2.0 * kPi * I * integrate_graph_path(s, hb.canonical[k], *path);
          worst = std::max(worst, std::abs(lhs - rhs));
        }
        ++tested;
      }
    r.checks.push_back(truth("torus(4,4): third-kind pairs with a non-crossing path", tested > 0,
                             std::to_string(tested) + " pairs"));
    r.checks.push_back(below("torus(4,4): third-kind residues", res, 1e-10));
    r.checks.push_back(below("torus(4,4): third-kind b-period law", worst, 1e-8));
  }
  return r;
}

CriterionResult one_pole(const Options&) {
  CriterionResult r{10, "meromorphic function with a single simple pole", {}, 0};
  for (auto& ns : std::vector<NamedSurface>{{"torus(4,4)", gen_torus(4, 4, I)},
                                            {"genus 3", random_genus3(10)}}) {
    OnePoleSurface op = gen_one_pole_surface(ns.complex, 0, cplx(1.0, 0.0), cplx(0.7, 0.3));
    Surface s(op.complex);
    r.checks.push_back(below(ns.name + ": f is holomorphic off the center", [&] {
      double m = 0;
      auto cr = cr_residuals(s, op.f);
      for (int q = 0; q < s.num_quads(); ++q)
        if (q != op.center) m = std::max(m, cr[q]);
      return m;
    }(), 1e-12));
    FunctionDivisor fd = function_divisor(s, op.f);
    int poles = 0, pole_at = -1;
    for (auto [q, n] : fd.divisor.quad)
      if (n == -1) {
        ++poles;
        pole_at = q;
      }
    r.checks.push_back(equal(ns.name + ": number of -1 coefficients", poles, 1));
    r.checks.push_back(equal(ns.name + ": pole quad", pole_at, op.center));
    Divisor d;
    d.quad[op.center] = 1;
    DimensionReport dr = check_riemann_roch(s, d);
    r.checks.push_back(equal(ns.name + ": i(Q) = 2g (all differentials vanish at Q)", dr.i, 2 * s.genus()));
    r.checks.push_back(equal(ns.name + ": l(-Q) = 3", dr.l, 3));
    HolomorphicBasis hb = canonical_bases(s, homology_basis(s));
    double pmax = 0;
    for (auto& w : hb.canonical) pmax = std::max(pmax, std::abs(decompose_quad(s, w, op.center).p));
    r.checks.push_back(below(ns.name + ": canonical differentials at the pole", pmax, 1e-10));
  }
  return r;
}

CriterionResult abel_jacobi(const Options& opt) {
  CriterionResult r{11, "Abel-Jacobi maps", {}, 0};
  std::mt19937_64 rng(opt.seed + 11);
  for (auto& ns : std::vector<NamedSurface>{{"torus(4,4)", gen_torus(4, 4, I)},
                                            {"random torus", random_torus(opt.seed + 111)},
                                            {"random genus 3", random_genus3(opt.seed + 112)}}) {
    Surface s(ns.complex);
    HomologyBasis h = homology_basis(s);
    HolomorphicBasis hb = canonical_bases(s, h);
    PeriodMatrices pm = period_matrices(s, h, hb);
    AbelJacobi aj(s, h, hb.canonical, pm);
    const int g = aj.genus();
    std::uniform_int_distribution<int> pick_q(0, s.num_quads() - 1), pick_v(0, s.num_vertices() - 1), pick_n(-2, 2);
    double cr = 0, split = 0, lattice = 0, base_ind = 0;
    for (int t = 0; t < 5; ++t) {
      int base = pick_q(rng);
      cr = std::max(cr, aj.cr_residual(base));
      for (int u = 0; u < 4; ++u) split = std::max(split, aj.quad(base, pick_q(rng)).splitting_residual);
    }
    for (int t = 0; t < 20; ++t) {
      const int base = pick_q(rng);
      const int v = pick_v(rng);
      const Color col = s.is_black(v) ? Color::black : Color::white;
      const Lattice& L = col == Color::black ? aj.lattices().black : aj.lattices().white;
      AJValue direct = col == Color::black ? aj.black(base, v) : aj.white(base, v);
      // Second path: through a random blocked set when possible, else via
      // added basis cycles.
      const int start = s.vertex(base, col == Color::black ? kBm : kWm);
      std::vector<char> blocked(s.num_quads(), 0);
      for (auto& b : blocked) b = pick_n(rng) == 2;
      auto path = graph_path(s, start, v, &blocked);
      if (!path) path = graph_path(s, start, v);
      std::vector<int> chain = graph_path_chain(s, *path);
      for (int k = 0; k < g; ++k) {
        int na = pick_n(rng), nb = pick_n(rng);
        const auto& ca = col == Color::black ? h.a[k].chains.black : h.a[k].chains.white;
        const auto& cb = col == Color::black ? h.b[k].chains.black : h.b[k].chains.white;
        for (int q = 0; q < s.num_quads(); ++q) chain[q] += na * ca[q] + nb * cb[q];
      }
      la::Vec other = aj.half_diagonal(base, start) + aj.chain_integral(chain, col);
      lattice = std::max(lattice, reduce(L, other - direct.value).rep.norm());
      // Degree-0 divisor v - v2 does not depend on the base quad.
      int v2 = pick_v(rng);
      if (s.is_black(v2) == (col == Color::black)) {
        int base2 = pick_q(rng);
        la::Vec d1 = direct.value - (col == Color::black ? aj.black(base, v2) : aj.white(base, v2)).value;
        la::Vec d2 = (col == Color::black ? aj.black(base2, v) : aj.white(base2, v)).value -
                     (col == Color::black ? aj.black(base2, v2) : aj.white(base2, v2)).value;
        base_ind = std::max(base_ind, reduce(L, d1 - d2).rep.norm());
      }
    }
    r.checks.push_back(below(ns.name + ": component CR residual", cr, 1e-10));
    r.checks.push_back(below(ns.name + ": 2A - A^B - A^W", split, 1e-10));
    r.checks.push_back(below(ns.name + ": path differences reduce into the lattice", lattice, 1e-8));
    r.checks.push_back(below(ns.name + ": degree-0 base-point independence", base_ind, 1e-8));
  }
  return r;
}

CriterionResult realization(const Options&) {
  CriterionResult r{12, "rhombic realization and its obstruction", {}, 0};
  QuadComplex real = gen_torus(4, 6, cplx(0.0, 1.3));
  randomize_rho(real, 12, 0.2, 3.0, 0.0);
  RhombicRealization rr = realize_rhombic(real);
  r.checks.push_back(truth("real rho gives rhombi", rr.status == RhombicRealization::rhombic, rr.reason));
  double side = 0, angle = 0, ratio = 0;
  for (int q = 0; q < real.num_quads() && rr.status == RhombicRealization::rhombic; ++q) {
    const auto& z = rr.rhombi[q];
    for (int k = 0; k < 4; ++k) side = std::max(side, std::abs(std::abs(z[(k + 1) % 4] - z[k]) - 1.0));
    double at_b = std::abs(std::arg((z[3] - z[0]) / (z[1] - z[0])));
    angle = std::max(angle, std::abs(at_b - rr.black_angle[q]));
    angle = std::max(angle, std::abs(rr.black_angle[q] - 2.0 * std::atan(real.rho[q].real())));
    ratio = std::max(ratio, std::abs((z[3] - z[1]) / (z[2] - z[0]) - I * real.rho[q]));
  }
  r.checks.push_back(below("unit side lengths", side, 1e-12));
  r.checks.push_back(below("black angles", angle, 1e-12));
  r.checks.push_back(below("diagonal ratio = i rho", ratio, 1e-12));

  QuadComplex one = gen_torus(4, 4, I);
  one.rho[5] = cplx(1.0, 0.4);
  RhombicRealization ob = realize_rhombic(one);
  r.checks.push_back(truth("single non-real quad is obstructed", ob.status == RhombicRealization::obstructed,
                           ob.reason));
  r.checks.push_back({"alternating squared side sum is nonzero", std::abs(ob.alternating_sum) > 1e-6,
                      ob.alternating_sum, std::to_string(ob.alternating_sum)});
  return r;
}

}  // namespace

bool CriterionResult::pass() const {
  if (checks.empty()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string CriterionResult::line() const {
  std::ostringstream os;
  os << (pass() ? "[PASS] " : "[FAIL] ") << id << " " << title << " (" << checks.size() << " checks, "
     << seconds << " s)";
  for (const auto& c : checks)
    if (!c.pass) os << "\n       failed: " << c.name << ": " << c.detail;
  return os.str();
}

CriterionResult run_criterion(int id, const Options& opt) {
  static const std::function<CriterionResult(const Options&)> table[kNumCriteria] = {
      torus_period, period_structure, bilinear_identity, dimension_counts,
      liouville,    calculus_identities, riemann_hurwitz, riemann_roch,
      abelian_laws, one_pole,            abel_jacobi,     realization};
  if (id < 1 || id > kNumCriteria) throw Error("bad-argument", "no criterion " + std::to_string(id));
  auto t0 = Clock::now();
  CriterionResult r;
  try {
    r = table[id - 1](opt);
  } catch (const Error& e) {
    r.id = id;
    r.title = "criterion " + std::to_string(id);
    r.checks.push_back({"exception", false, 0, e.kind() + ": " + e.what()});
  }
  r.seconds = seconds_since(t0);
  return r;
}

std::vector<CriterionResult> run_all(const Options& opt) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kNumCriteria; ++id) out.push_back(run_criterion(id, opt));
  return out;
}

std::vector<NamedSurface> shipped_surfaces() {
  std::vector<NamedSurface> out;
  out.push_back({"torus-2x2", gen_torus(2, 2, I)});
  out.push_back({"torus-2x4", gen_torus(2, 4, I)});
  out.push_back({"torus-4x4", gen_torus(4, 4, I)});
  out.push_back({"torus-4x6", gen_torus(4, 6, cplx(0.3, 1.2))});
  out.push_back({"torus-8x4", gen_torus(8, 4, cplx(0.0, 0.5))});
  out.push_back({"cube", gen_cube(1)});
  out.push_back({"cube-2", gen_cube(2)});
  out.push_back({"pillow", gen_pillow()});
  CoverData cover = gen_cube_double_cover();
  out.push_back({"cube-cover", cover.total});
  out.push_back({"cube-cover-base", cover.base});
  out.push_back({"one-pole", gen_one_pole_surface(gen_torus(4, 4, I), 0, 1.0, cplx(0.7, 0.3)).complex});
  out.push_back({"tetrahedron-delaunay", delaunay_voronoi(regular_tetrahedron()).complex});
  out.push_back({"random-torus", random_torus(0)});
  out.push_back({"random-genus3", random_genus3(0)});
  return out;
}

cplx random_cplx(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double re = u(rng);
  return {re, u(rng)};
}

VertexFunction random_function(std::mt19937_64& rng, int n) {
  VertexFunction f(n);
  for (auto& z : f) z = random_cplx(rng);
  return f;
}

DiamondForm random_form(std::mt19937_64& rng, int num_quads) {
  DiamondForm w = DiamondForm::zero(num_quads);
  for (int q = 0; q < num_quads; ++q) {
    w.black[q] = random_cplx(rng);
    w.white[q] = random_cplx(rng);
  }
  return w;
}

std::vector<DiamondForm> closed_form_basis(const Surface& s) {
  const int V = s.num_vertices(), F = s.num_quads();
  la::Mat closed = harmonic_system(s).topRows(V);
  la::Mat ker = la::kernel(closed);
  std::vector<DiamondForm> out;
  for (int c = 0; c < ker.cols(); ++c) {
    DiamondForm w = DiamondForm::zero(F);
    for (int q = 0; q < F; ++q) {
      w.black[q] = ker(2 * q, c);
      w.white[q] = ker(2 * q + 1, c);
    }
    out.push_back(std::move(w));
  }
  return out;
}

DiamondForm random_combination(std::mt19937_64& rng, const std::vector<DiamondForm>& basis) {
  DiamondForm w = DiamondForm::zero(basis.empty() ? 0 : basis[0].size());
  for (const auto& b : basis) w += b * random_cplx(rng);
  return w;
}

QuadComplex random_torus(std::uint64_t seed, int m, int n) {
  QuadComplex c = gen_torus(m, n, I);
  randomize_rho(c, seed);
  return c;
}

QuadComplex random_genus3(std::uint64_t seed) {
  QuadComplex c = gen_cube_double_cover().total;
  randomize_rho(c, seed);
  return c;
}

}  // namespace drs::acceptance
