#include <doctest.h>

#include "drs/coverings.hpp"
#include "drs/generators.hpp"
#include "drs/io.hpp"

using namespace drs;

TEST_CASE("DQS round trip is exact") {
  QuadComplex c = gen_torus(4, 6, cplx(0.3, 1.2));
  randomize_rho(c, 7);
  QuadComplex back = io::parse_dqs(io::serialize_dqs(c));
  CHECK(back.color == c.color);
  CHECK(back.quads == c.quads);
  CHECK(back.rho == c.rho);  // bitwise: shortest round-trip output
  CHECK(io::serialize_dqs(back) == io::serialize_dqs(c));
}

TEST_CASE("DQS side labels survive a round trip") {
  QuadComplex c = gen_cube_double_cover_coarse().total;
  REQUIRE_FALSE(c.side_edge.empty());
  CHECK(io::parse_dqs(io::serialize_dqs(c)).side_edge == c.side_edge);
}

TEST_CASE("missing rho names the quad") {
  const std::string text =
      R"({"vertices":[{"id":0,"color":"b"},{"id":1,"color":"w"},{"id":2,"color":"b"},{"id":3,"color":"w"}],
          "quads":[{"id":0,"bm":0,"wm":1,"bp":2,"wp":3}]})";
  try {
    io::parse_dqs(text);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == "parse");
    CHECK(std::string(e.what()).find("quad 0") != std::string::npos);
    CHECK(std::string(e.what()).find("rho") != std::string::npos);
  }
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(io::parse_dqs("{"), Error);
  CHECK_THROWS_AS(io::parse_dqs(R"({"vertices":[]})"), Error);
  CHECK_THROWS_AS(io::parse_dqs(R"({"vertices":[{"id":0,"color":"x"}],"quads":[]})"), Error);
  CHECK_THROWS_AS(io::parse_dqs(R"({"vertices":[{"id":0,"color":"b"},{"id":0,"color":"w"}],"quads":[]})"), Error);
}

TEST_CASE("rho accepts a bare real number") {
  const std::string text =
      R"({"vertices":[{"id":0,"color":"b"},{"id":1,"color":"w"},{"id":2,"color":"b"},{"id":3,"color":"w"}],
          "quads":[{"id":0,"bm":0,"wm":1,"bp":2,"wp":3,"rho":2.5}]})";
  CHECK(io::parse_dqs(text).rho[0] == cplx(2.5, 0));
}

TEST_CASE("forms and functions round trip through JSON") {
  DiamondForm w = DiamondForm::zero(3);
  w.black = {cplx(1, 2), cplx(0, -1), cplx(0.125, 0)};
  w.white = {cplx(-3, 0), cplx(2, 2), cplx(0, 0.5)};
  DiamondForm back = io::form_from_json(io::form_to_json(w), 3);
  CHECK(back.black == w.black);
  CHECK(back.white == w.white);
  CHECK_THROWS_AS(io::form_from_json(io::form_to_json(w), 2), Error);

  VertexFunction f = {cplx(1, 0), cplx(0, 1), cplx(-2, 3)};
  CHECK(io::function_from_json(io::function_to_json(f), 3) == f);
}

TEST_CASE("map files accept paths or inline surfaces") {
  io::MapFile m;
  m.source = "a.dqs";
  m.target_dqs = io::serialize_dqs(gen_cube(1));
  m.vertex_map = {0, 1, 1, 0};
  m.quad_map = {2, 2};
  io::MapFile back = io::parse_map(io::serialize_map(m));
  CHECK(back.source == "a.dqs");
  CHECK(io::parse_dqs(back.target_dqs).quads == gen_cube(1).quads);
  CHECK(back.vertex_map == m.vertex_map);
  CHECK(back.quad_map == m.quad_map);
  CHECK_THROWS_AS(io::parse_map(R"({"source":"a","target":"b","vertex_map":[[1,0]]})"), Error);
}
