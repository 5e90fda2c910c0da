#include <doctest.h>

#include <random>

#include "drs/calculus.hpp"
#include "drs/differentials.hpp"
#include "drs/generators.hpp"

using namespace drs;

namespace {

VertexFunction random_function(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> N;
  VertexFunction f(n);
  for (auto& z : f) z = {N(rng), N(rng)};
  return f;
}

double max_abs(const DiamondForm& w) {
  double m = 0;
  for (int q = 0; q < w.size(); ++q) m = std::max({m, std::abs(w.black[q]), std::abs(w.white[q])});
  return m;
}

}  // namespace

TEST_CASE("dd = 0 and ** = -1 on random weights") {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    QuadComplex c = gen_torus(4, 6, cplx(0.1, 0.9));
    randomize_rho(c, seed);
    Surface s(c);
    VertexFunction f = random_function(s.num_vertices(), rng);
    DiamondForm df = d_function(s, f);
    CHECK(d_diamond(s, df).max_abs() < 1e-12);
    CHECK(max_abs(hodge_star(s, hodge_star(s, df)) + df) < 1e-12);
  }
}

TEST_CASE("holomorphic functions on closed surfaces are biconstant") {
  CHECK(check_liouville(Surface(gen_torus(4, 4, cplx(0, 1)))) == 2);
  CHECK(check_liouville(Surface(gen_cube(2))) == 2);
  QuadComplex c = gen_torus(6, 4, cplx(0.4, 0.8));
  randomize_rho(c, 11);
  CHECK(check_liouville(Surface(c)) == 2);
}

TEST_CASE("biconstant functions are holomorphic and have dirichlet energy zero") {
  Surface s(gen_cube(1));
  VertexFunction f(s.num_vertices());
  for (int v = 0; v < s.num_vertices(); ++v) f[v] = s.is_black(v) ? cplx(2, -1) : cplx(0.5, 3);
  CHECK(is_holomorphic(s, f) < 1e-12);
  CHECK(dirichlet_energy(s, f) == doctest::Approx(0).epsilon(1e-12));
}

TEST_CASE("Dirichlet energy is the L2 norm of df") {
  std::mt19937_64 rng(5);
  QuadComplex c = gen_torus(4, 4, cplx(0.2, 1.3));
  randomize_rho(c, 2, 0.5, 2.0, 0.0);  // real rho: positive definite energy
  Surface s(c);
  VertexFunction f = random_function(s.num_vertices(), rng);
  DiamondForm df = d_function(s, f);
  const double e = dirichlet_energy(s, f);
  CHECK(e > 0);
  CHECK(std::abs(scalar_product(s, df, df).real() - e) < 1e-10 * e);
}

TEST_CASE("generated rho matches the diagonal ratio of the flat grid") {
  const cplx tau(0.3, 1.1);
  TorusGrid grid;
  QuadComplex c = gen_torus(6, 6, tau, &grid);
  // Unwrap a difference to the representative nearest 0 modulo Z + Z tau.
  auto unwrap = [&](cplx d) {
    double n = std::round(d.imag() / tau.imag());
    d -= n * tau;
    return d - std::round(d.real());
  };
  for (int q = 0; q < c.num_quads(); ++q) {
    const auto& v = c.quads[q];
    cplx bd = unwrap(grid.z[v[kBp]] - grid.z[v[kBm]]);
    cplx wd = unwrap(grid.z[v[kWp]] - grid.z[v[kWm]]);
    CHECK(std::abs(bd - grid.black_diag[q]) < 1e-12);
    // z is holomorphic: its white difference is i rho times the black one.
    CHECK(std::abs(wd - cplx(0, 1) * c.rho[q] * bd) < 1e-12);
  }
}

TEST_CASE("norm of dz matches the smooth value 2 * area") {
  // On a flat torus the canonical differential is dz / l_a with |l_a| = 1, and
  // <dz, dz> = integral of dz ^ *conj(dz) = 2 * area = 2 Im tau.
  for (cplx tau : {cplx(0, 1), cplx(0.3, 1.2), cplx(0.5, 0.8660254037844386)}) {
    Surface s(gen_torus(6, 6, tau));
    HomologyBasis h = reduce_torus_basis(s, homology_basis(s));
    DiamondForm w = canonical_bases(s, h).canonical[0];
    cplx n = scalar_product(s, w, w);
    CHECK(std::abs(n - 2.0 * tau.imag()) < 1e-10);
  }
}
