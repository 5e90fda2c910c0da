#include <doctest.h>

#include <cmath>

#include "drs/differentials.hpp"
#include "drs/generators.hpp"
#include "drs/geometry.hpp"

using namespace drs;

TEST_CASE("square torus is rhombic with right angles") {
  RhombicRealization r = realize_rhombic(gen_torus(4, 4, cplx(0, 1)));
  REQUIRE(r.status == RhombicRealization::rhombic);
  for (double a : r.black_angle) CHECK(a == doctest::Approx(kPi / 2));
  for (const auto& q : r.rhombi)
    for (int k = 0; k < 4; ++k) CHECK(std::abs(q[(k + 1) % 4] - q[k]) == doctest::Approx(1.0));
}

TEST_CASE("a single non-real weight obstructs a rhombic embedding") {
  QuadComplex c = gen_torus(4, 4, cplx(0, 1));
  c.rho[2] = cplx(1.0, 0.4);
  RhombicRealization r = realize_rhombic(c);
  CHECK(r.status == RhombicRealization::obstructed);
  CHECK(r.non_real == std::vector<int>{2});
  CHECK(std::abs(r.alternating_sum) > 1e-6);
}

TEST_CASE("Delaunay quadrangulation of the tetrahedron") {
  DelaunayQuads dq = delaunay_voronoi(regular_tetrahedron());
  CHECK(dq.complex.num_quads() == 6);  // one kite per edge
  CHECK(validate(dq.complex).ok());
  for (cplx rho : dq.complex.rho) {
    CHECK(rho.imag() == doctest::Approx(0));
    CHECK(rho.real() > 0);
  }
  CHECK(Surface(dq.complex).genus() == 0);
}

TEST_CASE("Delaunay torus of revolution converges to the conformal modulus") {
  // Torus of revolution with radii R > r is conformal to C / (2 pi Z + i L Z),
  // L = 2 pi r / sqrt(R^2 - r^2); the reduced modulus is i sqrt(R^2 - r^2) / r.
  const double R = 3, r = 1;
  const double exact = std::sqrt(R * R - r * r) / r;
  double prev = 1e9;
  for (auto [nu, nv] : {std::pair{24, 6}, {36, 8}}) {
    Surface s(delaunay_voronoi(torus_mesh(nu, nv, R, r)).complex);
    REQUIRE(s.genus() == 1);
    HomologyBasis h = reduce_torus_basis(s, homology_basis(s));
    cplx pi = period_matrices(s, h).pi(0, 0);
    CHECK(std::abs(pi.real()) < 1e-9);
    const double err = std::abs(pi.imag() - exact);
    CHECK(err < prev);
    CHECK(err / exact < 0.06);
    prev = err;
  }
}

TEST_CASE("OBJ parsing") {
  const std::string obj = "v 0 0 0\nv 1 0 0\nv 0 1 0\nv 0 0 1\nf 1 2 3\nf 1 4 2\nf 2 4 3\nf 1 3 4\n";
  TriMesh m = parse_obj(obj);
  CHECK(m.pos.size() == 4);
  CHECK(m.tris.size() == 4);
  CHECK_THROWS_AS(parse_obj("v 0 0\n"), Error);
}
