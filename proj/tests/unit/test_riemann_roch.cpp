#include <doctest.h>

#include "drs/coverings.hpp"
#include "drs/generators.hpp"
#include "drs/riemann_roch.hpp"

using namespace drs;

TEST_CASE("divisor parsing and admissibility") {
  Divisor d = parse_divisor("v:3=-1,q:7=-2,q:9=1");
  CHECK(d.m(3) == -1);
  CHECK(d.n(7) == -2);
  CHECK(d.n(9) == 1);
  CHECK(d.n(8) == 0);
  CHECK(degree(d) == -1);  // quad points count once, with sign
  CHECK(d.admissible());
  CHECK(parse_divisor(format_divisor(d)).quad == d.quad);
  CHECK_FALSE(parse_divisor("q:1=-1").admissible());
  CHECK_THROWS_AS(parse_divisor("x:1=1"), Error);
  CHECK_THROWS_AS(parse_divisor("q:1=5"), Error);
}

TEST_CASE("empty divisor: biconstants and holomorphic differentials") {
  Surface torus(gen_torus(4, 4, cplx(0, 1)));
  DimensionReport r = check_riemann_roch(torus, Divisor{});
  CHECK(r.l == 2);
  CHECK(r.i == 2);
  CHECK(r.residual == 0);

  Surface g3(gen_cube_double_cover().total);
  r = check_riemann_roch(g3, Divisor{});
  CHECK(r.l == 2);
  CHECK(r.i == 6);
  CHECK(r.residual == 0);
}

TEST_CASE("single double pole on a torus") {
  // Only biconstants survive: a function with one double pole would need a
  // second-kind differential with vanishing b-periods, which does not exist.
  Surface s(gen_torus(4, 4, cplx(0, 1)));
  Divisor d = parse_divisor("q:5=-2");
  DimensionReport r = check_riemann_roch(s, d);
  CHECK(r.l == 2);
  CHECK(r.residual == 0);
}

TEST_CASE("function divisor of the one-pole function") {
  OnePoleSurface op = gen_one_pole_surface(gen_torus(4, 4, cplx(0, 1)), 0, cplx(1, 0), cplx(0.7, 0.3));
  Surface s(op.complex);
  CHECK(is_holomorphic(s, op.f) > 0);  // not biconstant
  FunctionDivisor fd = function_divisor(s, op.f);
  CHECK_FALSE(fd.degenerate);
  int poles = 0;
  for (auto [q, n] : fd.divisor.quad)
    if (n == -1) {
      ++poles;
      CHECK(q == op.center);
    }
  CHECK(poles == 1);
}
