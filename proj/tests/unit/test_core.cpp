#include <doctest.h>

#include "drs/core.hpp"
#include "drs/generators.hpp"

using namespace drs;

namespace {

bool has_issue(const ValidationReport& r, const std::string& kind) {
  for (const auto& i : r.issues)
    if (i.kind == kind) return true;
  return false;
}

}  // namespace

TEST_CASE("flat tori have genus one and F = V") {
  for (auto [m, n] : {std::pair{4, 4}, {4, 6}, {6, 8}}) {
    QuadComplex c = gen_torus(m, n, cplx(0.2, 1.1));
    CHECK(validate(c).ok());
    CHECK(genus(c) == 1);
    CHECK(c.num_quads() == c.num_vertices());
  }
}

TEST_CASE("cube surfaces are spheres") {
  for (int n : {1, 2, 3}) {
    Surface s(gen_cube(n));
    CHECK(s.genus() == 0);
    CHECK(s.num_vertices() - s.num_edges() + s.num_quads() == 2);
  }
}

TEST_CASE("pillow is valid but not strongly regular") {
  ValidationReport r = validate(gen_pillow());
  CHECK_FALSE(r.fatal());
  CHECK(has_issue(r, "strong-regularity"));
}

TEST_CASE("validation flags bad colors and bad rho") {
  QuadComplex c = gen_torus(4, 4, cplx(0, 1));
  QuadComplex bad_rho = c;
  bad_rho.rho[3] = cplx(-0.5, 0.2);
  ValidationReport r = validate(bad_rho);
  CHECK(r.fatal());
  CHECK(has_issue(r, "rho-positivity"));

  QuadComplex bad_color = c;
  bad_color.color[bad_color.quads[0][0]] = Color::white;
  CHECK(validate(bad_color).fatal());
  CHECK_THROWS_AS(Surface{bad_color}, Error);
}

TEST_CASE("quad chart of a square is the unit square diagonal pair") {
  QuadComplex c = gen_torus(4, 4, cplx(0, 1));
  for (int q = 0; q < c.num_quads(); ++q) {
    CHECK(std::abs(c.rho[q] - cplx(1, 0)) < 1e-12);
    CHECK(intersection_angle(c.rho[q]) == doctest::Approx(kPi / 2));
  }
}
