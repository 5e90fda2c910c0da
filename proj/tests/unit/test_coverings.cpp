#include <doctest.h>

#include "drs/coverings.hpp"
#include "drs/generators.hpp"

using namespace drs;

namespace {

BranchReport run(const CoverData& d) {
  Surface total(d.total), base(d.base);
  CoveringMap f{&total, &base, d.vertex_map, d.quad_map};
  REQUIRE(validate_map(f).ok());
  return check_riemann_hurwitz(f);
}

}  // namespace

TEST_CASE("unbranched double cover of a torus") {
  BranchReport r = run(gen_torus_double_cover());
  CHECK(r.genus == 1);
  CHECK(r.target_genus == 1);
  CHECK(r.sheets == 2);
  CHECK(r.total_branching == 0);
  CHECK(r.residual == 0);
  CHECK(r.surjective);
}

TEST_CASE("cube double cover branched at the eight corners") {
  CoverData d = gen_cube_double_cover();
  BranchReport r = run(d);
  CHECK(r.genus == 3);
  CHECK(r.target_genus == 0);
  CHECK(r.sheets == 2);
  CHECK(r.total_branching == 8);
  CHECK(r.residual == 0);
  CHECK(d.special.size() == 8);
  for (int v : d.special) CHECK(r.wrap[v] == 2);
}

TEST_CASE("coarse cube double cover") {
  BranchReport r = run(gen_cube_double_cover_coarse());
  CHECK(r.genus == 3);
  CHECK(r.residual == 0);
}

TEST_CASE("identity map is a one-sheeted cover") {
  QuadComplex c = gen_cube(2);
  Surface s(c);
  std::vector<int> id(s.num_vertices());
  for (int v = 0; v < s.num_vertices(); ++v) id[v] = v;
  CoveringMap f{&s, &s, id, {}};
  CHECK(validate_map(f).ok());
  BranchReport r = check_riemann_hurwitz(f);
  CHECK(r.sheets == 1);
  CHECK(r.total_branching == 0);
  CHECK(r.residual == 0);
}

TEST_CASE("a map that breaks the colors is rejected") {
  CoverData d = gen_torus_double_cover();
  Surface total(d.total), base(d.base);
  std::vector<int> vm = d.vertex_map;
  std::swap(vm[0], vm[1]);
  CoveringMap f{&total, &base, vm, {}};
  CHECK_FALSE(validate_map(f).ok());
}
