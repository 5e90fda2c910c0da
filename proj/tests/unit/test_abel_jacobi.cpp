#include <doctest.h>

#include "drs/abel_jacobi.hpp"
#include "drs/coverings.hpp"
#include "drs/generators.hpp"

using namespace drs;

TEST_CASE("lattice reduction is invariant under lattice translations") {
  la::Mat pi(2, 2);
  pi << cplx(0.1, 1.3), cplx(0.2, 0.4), cplx(0.2, 0.4), cplx(-0.3, 1.1);
  Lattice L{pi, 'L'};
  la::Vec v(2);
  v << cplx(0.37, -0.21), cplx(-0.12, 0.44);
  Reduction r0 = reduce(L, v);
  const la::Mat gen = L.generators();
  for (int i = 0; i < 4; ++i)
    for (int k : {-3, 1, 5}) {
      la::Vec w = v + double(k) * gen.col(i);
      Reduction r = reduce(L, w);
      CHECK((r.rep - r0.rep).norm() < 1e-12);
      CHECK(lattice_equal(L, v, w));
    }
  CHECK(r0.max_frac <= 0.5 + 1e-12);
}

TEST_CASE("genus one reduction") {
  la::Mat pi(1, 1);
  pi(0, 0) = cplx(0, 1);
  la::Vec v(1);
  v(0) = cplx(2.3, -1.7);
  Reduction r = reduce(Lattice{pi, 'L'}, v);
  CHECK(std::abs(r.rep(0) - cplx(0.3, 0.3)) < 1e-12);
  CHECK(r.m[0] == 2);
  CHECK(r.n[0] == -2);
}

TEST_CASE("black Abel-Jacobi map on a flat torus is the position") {
  const cplx tau(0.2, 1.1);
  TorusGrid grid;
  Surface s(gen_torus(6, 6, tau, &grid));
  HomologyBasis h = reduce_torus_basis(s, homology_basis(s));
  HolomorphicBasis hb = canonical_bases(s, h);
  PeriodMatrices pm = period_matrices(s, h, hb);
  REQUIRE(std::abs(pm.pi(0, 0) - tau) < 1e-9);
  // omega = dz / l_a, where l_a = +-1 is the a-cycle in the reduced basis.
  const cplx sign = 2.0 * hb.canonical[0].black[0] / grid.black_diag[0];
  CHECK(std::abs(std::abs(sign.real()) - 1.0) < 1e-9);
  CHECK(std::abs(sign.imag()) < 1e-9);
  for (int q = 0; q < s.num_quads(); ++q)
    CHECK(std::abs(2.0 * hb.canonical[0].black[q] - sign * grid.black_diag[q]) < 1e-9);
  AbelJacobi aj(s, h, hb.canonical, pm);
  const int base = 0;
  const auto& bq = s.complex().quads[base];
  // The base point is the center of the black diagonal of the base quad.
  const cplx center = grid.z[bq[kBm]] + grid.black_diag[base] / 2.0;
  la::Mat lat(1, 1);
  lat(0, 0) = tau;
  for (int v = 0; v < s.num_vertices(); ++v) {
    if (!s.is_black(v)) continue;
    la::Vec want(1);
    want(0) = sign * (grid.z[v] - center);
    CHECK(lattice_equal(Lattice{lat, 'L'}, aj.black(base, v).value, want, 1e-9));
  }
  CHECK_THROWS_AS(aj.black(base, bq[kWm]), Error);
}

TEST_CASE("Abel-Jacobi CR residual and splitting on genus 3") {
  QuadComplex c = gen_cube_double_cover().total;
  randomize_rho(c, 6);
  Surface s(c);
  HomologyBasis h = homology_basis(s);
  HolomorphicBasis hb = canonical_bases(s, h);
  PeriodMatrices pm = period_matrices(s, h, hb);
  AbelJacobi aj(s, h, hb.canonical, pm);
  CHECK(aj.cr_residual(0) < 1e-9);
  for (int q : {1, 17, 40, 100}) CHECK(aj.quad(0, q).splitting_residual < 1e-9);
}
