#include <doctest.h>

#include "drs/coverings.hpp"
#include "drs/differentials.hpp"
#include "drs/generators.hpp"

using namespace drs;

namespace {

bool canonical(const HomologyBasis& h) {
  for (int i = 0; i < 2 * h.genus; ++i)
    for (int j = 0; j < 2 * h.genus; ++j) {
      int want = (j == i + h.genus) ? 1 : (i == j + h.genus ? -1 : 0);
      if (h.intersection[i][j] != want) return false;
    }
  return true;
}

cplx torus_pi(const Surface& s) {
  HomologyBasis h = reduce_torus_basis(s, homology_basis(s));
  return period_matrices(s, h).pi(0, 0);
}

}  // namespace

TEST_CASE("homology bases are canonical") {
  Surface torus(gen_torus(4, 6, cplx(0.2, 1)));
  HomologyBasis h = homology_basis(torus);
  CHECK(h.genus == 1);
  CHECK(canonical(h));
  for (int i = 0; i < 2; ++i) CHECK(is_closed_walk(torus, h.cycle(i).walk));

  Surface g3(gen_cube_double_cover().total);
  HomologyBasis h3 = homology_basis(g3);
  CHECK(h3.genus == 3);
  CHECK(canonical(h3));
}

TEST_CASE("holomorphic and harmonic dimensions") {
  Surface s(gen_cube_double_cover().total);
  CHECK(la::nullity(harmonic_system(s)) == 4 * 3);
  CHECK(la::nullity(holomorphic_system(s)) == 2 * 3);
  Surface sphere(gen_cube(2));
  CHECK(la::nullity(harmonic_system(sphere)) == 0);
}

TEST_CASE("flat torus period equals tau in the fundamental domain") {
  for (cplx tau : {cplx(0, 1), cplx(0.5, 0.8660254037844386), cplx(0.3, 1.2), cplx(-0.4, 2.0)}) {
    cplx pi = torus_pi(Surface(gen_torus(4, 4, tau)));
    CHECK(std::abs(pi - tau) < 1e-9);
  }
}

TEST_CASE("torus modulus is reduced into the fundamental domain") {
  // i/2 is equivalent to 2i.
  cplx pi = torus_pi(Surface(gen_torus(8, 4, cplx(0, 0.5))));
  CHECK(std::abs(pi - cplx(0, 2)) < 1e-9);
  // 1.3 + 1.5i is equivalent to 0.3 + 1.5i.
  pi = torus_pi(Surface(gen_torus(4, 4, cplx(1.3, 1.5))));
  CHECK(std::abs(pi - cplx(0.3, 1.5)) < 1e-9);
}

TEST_CASE("transform_periods: identity, S and T") {
  // Pi~ = tau S, with S the block swap, maps to tau' S.
  const cplx tau(0.3, 1.2);
  la::Mat pt = la::Mat::Zero(2, 2);
  pt(0, 1) = pt(1, 0) = tau;
  IntMat one{{1}}, zero{{0}}, minus{{-1}};
  auto image = [&](const IntMat& A, const IntMat& B, const IntMat& C, const IntMat& D) {
    la::Mat out = transform_periods(pt, A, B, C, D);
    CHECK(std::abs(out(0, 0)) < 1e-14);
    CHECK(std::abs(out(1, 1)) < 1e-14);
    CHECK(std::abs(out(0, 1) - out(1, 0)) < 1e-14);
    return out(0, 1);
  };
  CHECK(std::abs(image(one, zero, zero, one) - tau) < 1e-14);
  CHECK(std::abs(image(zero, one, minus, zero) + 1.0 / tau) < 1e-14);
  CHECK(std::abs(image(one, zero, one, one) - (tau + 1.0)) < 1e-14);
}

TEST_CASE("transform_periods agrees with recomputing on the new basis") {
  QuadComplex c = gen_cube_double_cover().total;
  randomize_rho(c, 4);
  Surface s(c);
  HomologyBasis h = homology_basis(s);
  PeriodMatrices pm = period_matrices(s, h);
  // a1' = a1 + b2, a2' = a2 + b1: symmetric B keeps the map symplectic.
  IntMat A{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, B{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}};
  IntMat C{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}, D = A;
  HomologyBasis h2 = transform_basis(s, h, A, B, C, D);
  CHECK(canonical(h2));
  PeriodMatrices pm2 = period_matrices(s, h2);
  CHECK((transform_periods(pm.pi_tilde, A, B, C, D) - pm2.pi_tilde).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("period matrices of random genus 3 weights") {
  QuadComplex c = gen_cube_double_cover().total;
  randomize_rho(c, 9);
  Surface s(c);
  PeriodMatrices pm = period_matrices(s, homology_basis(s));
  MatrixChecks mc = check_period_matrices(pm);
  CHECK(mc.asym_pi < 1e-9);
  CHECK(mc.asym_tilde < 1e-9);
  CHECK(mc.bb_vs_ww < 1e-9);
  CHECK(mc.min_eig_im_pi > 0);
  CHECK(mc.min_eig_im_tilde > 0);
}

TEST_CASE("Riemann bilinear identity for holomorphic pairs") {
  QuadComplex c = gen_torus(4, 6, cplx(0.2, 1.1));
  randomize_rho(c, 5);
  Surface s(c);
  HomologyBasis h = homology_basis(s);
  HolomorphicBasis hb = canonical_bases(s, h);
  const double r = verify_rbi(s, hb.canonical[0], conj(hb.canonical[0]), h);
  CHECK(r < 1e-9);
}

TEST_CASE("residues of Abelian differentials") {
  Surface s(gen_torus(4, 4, cplx(0, 1)));
  HomologyBasis h = homology_basis(s);
  PSolver ps(s, h);
  AbelianDifferential w3 = ps.third(0, 5);
  cplx total = 0;
  for (int v = 0; v < s.num_vertices(); ++v) {
    cplx r = residue(s, w3.form, v);
    total += r;
    cplx want = v == 0 ? 1.0 : (v == 5 ? -1.0 : 0.0);
    CHECK(std::abs(r - want) < 1e-10);
  }
  CHECK(std::abs(total) < 1e-10);

  AbelianDifferential w2 = ps.second(3);
  for (int v = 0; v < s.num_vertices(); ++v) CHECK(std::abs(residue(s, w2.form, v)) < 1e-10);
  CHECK_THROWS_AS(ps.third(0, 1), Error);  // different colors
}
