#include "dehn/complex2.hpp"
#include "doctest.h"

using namespace dehn;
using namespace dehn::complex2;

TEST_CASE("presentation complexes") {
  auto c3 = presentation_complex(presentation::parse_presentation("gen a\nrel aaa\n"));
  CHECK(c3.vertex_count == 1);
  CHECK(c3.edges.size() == 1);
  REQUIRE(c3.faces.size() == 1);
  CHECK(c3.faces[0] == std::vector<int>{1, 1, 1});

  auto freec = presentation_complex(presentation::parse_presentation("gen a b\n"));
  CHECK(freec.vertex_count == 1);
  CHECK(freec.edges.size() == 2);
  CHECK(freec.faces.empty());

  auto z2 = presentation_complex(presentation::parse_presentation("gen a b\nrel abAB\n"));
  CHECK(z2.vertex_count == 1);
  CHECK(z2.edges.size() == 2);
  REQUIRE(z2.faces.size() == 1);
  CHECK(z2.faces[0].size() == 4);
}

TEST_CASE("triangulation reaches a simplicial complex and is idempotent") {
  SUBCASE("the square relator complex") {
    auto z2 = presentation_complex(presentation::parse_presentation("gen a b\nrel abAB\n"));
    auto t = triangulate(z2);
    CHECK(t.complex.simplicial);
    CHECK(t.complex.simplicial_invariants_hold());
    CHECK(t.face_origin.size() == t.complex.faces.size());
    for (int o : t.face_origin) CHECK(o == 0);
    // coning a square gives 4 triangles before the cleanup passes
    CHECK(t.complex.faces.size() % 4 == 0);
    // the complex is still a disc-like quotient: chi is preserved by subdivision
    CHECK(t.complex.euler_characteristic() == z2.euler_characteristic());
  }
  SUBCASE("already simplicial input comes back unchanged") {
    auto tri = standard_model("single_triangle", 1);
    auto t = triangulate(tri);
    CHECK(t.complex.vertex_count == tri.vertex_count);
    CHECK(t.complex.edges.size() == tri.edges.size());
    CHECK(t.complex.faces == tri.faces);
    auto tt = triangulate(t.complex);
    CHECK(tt.complex.faces == t.complex.faces);
  }
  SUBCASE("the loop-relator complex") {
    auto c3 = presentation_complex(presentation::parse_presentation("gen a\nrel aaa\n"));
    auto t = triangulate(c3);
    CHECK(t.complex.simplicial_invariants_hold());
    CHECK(t.complex.euler_characteristic() == c3.euler_characteristic());
  }
}

TEST_CASE("standard models") {
  SUBCASE("disc grid counts and Euler characteristic") {
    auto g = standard_model("disc_grid", 2);
    CHECK(g.vertex_count == 9);
    CHECK(g.edges.size() == 16);
    CHECK(g.faces.size() == 8);
    CHECK(g.euler_characteristic() == 1);
    CHECK(g.simplicial_invariants_hold());
    auto g3 = standard_model("disc_grid", 3);
    CHECK(g3.euler_characteristic() == 1);
  }
  SUBCASE("single triangle") {
    auto t = standard_model("single_triangle", 1);
    CHECK(t.vertex_count == 3);
    CHECK(t.edges.size() == 3);
    CHECK(t.faces.size() == 1);
  }
  SUBCASE("annulus has Euler characteristic zero") {
    CHECK(standard_model("annulus", 1).euler_characteristic() == 0);
    CHECK(standard_model("annulus", 2).euler_characteristic() == 0);
    CHECK(standard_model("annulus", 1).simplicial_invariants_hold());
  }
  CHECK_THROWS(standard_model("dodecahedron", 1));
}

TEST_CASE("complex files round-trip") {
  auto g = standard_model("disc_grid", 2);
  std::string text = serialize_complex(g);
  auto back = parse_complex(text);
  CHECK(serialize_complex(back) == text);
  CHECK(back.vertex_count == g.vertex_count);
  CHECK(back.faces == g.faces);
  CHECK(back.simplicial);

  auto z2 = presentation_complex(presentation::parse_presentation("gen a b\nrel abAB\n"));
  CHECK(serialize_complex(parse_complex(serialize_complex(z2))) == serialize_complex(z2));

  CHECK_THROWS(parse_complex("E 0 1\n"));          // missing V
  CHECK_THROWS(parse_complex("V 2\nE 0 5\n"));     // endpoint out of range
  CHECK_THROWS(parse_complex("V 2\nE 0 1\nF 1 1\n"));  // cycle not closed
}

TEST_CASE("the validator enforces the simplicial invariants") {
  Complex2 c;
  c.vertex_count = 3;
  c.edges = {{0, 1}, {1, 2}, {2, 0}, {0, 1}};  // parallel edge
  c.faces = {{1, 2, 3}};
  c.simplicial = true;
  CHECK_THROWS(c.validate());
  c.simplicial = false;
  CHECK_NOTHROW(c.validate());
}
