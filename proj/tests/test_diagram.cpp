#include <set>

#include "dehn/diagram.hpp"
#include "dehn/presentation.hpp"
#include "doctest.h"

using namespace dehn;
using namespace dehn::diagram;

namespace {

// two triangles over the single standard triangle: one homeomorphic, one
// squashed onto an edge (five cells by hand)
VanKampenDiagram two_triangle_example() {
  VanKampenDiagram d;
  d.target = complex2::standard_model("single_triangle", 1);
  planar::PlanarComplex& dom = d.domain;
  dom.vertex_count = 4;  // p=0 q=1 c=2 x=3
  dom.edges = {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 0}};
  dom.faces = {{1, 2, 3}, {-1, 4, 5}};
  // rotations (ccw): interior edge 1 = (p,q)
  dom.rotation.resize(4);
  dom.rotation[0] = {1, -3, -5};
  dom.rotation[1] = {2, -1, 4};
  dom.rotation[2] = {3, -2};
  dom.rotation[3] = {5, -4};
  dom.outer = {-2, -3, -4, -5};
  dom.basepoint = 2;
  d.vertex_image = {0, 1, 2, 0};  // x maps onto the image of p
  d.edge_image.resize(5);
  d.edge_image[0] = {false, 0, false};  // (0,1)
  d.edge_image[1] = {false, 1, false};  // (1,2)
  d.edge_image[2] = {false, 2, false};  // (2,0)
  d.edge_image[3] = {false, 0, true};   // (1,3) -> edge 0 reversed
  d.edge_image[4] = {true, 0, false};   // (3,0) -> vertex 0
  d.face_image.resize(2);
  d.face_image[0] = {VanKampenDiagram::FaceImage::Kind::Face, 0};
  d.face_image[1] = {VanKampenDiagram::FaceImage::Kind::Edge, 0};
  d.degenerate = true;
  d.validate();
  return d;
}

}  // namespace

TEST_CASE("Definition 5.1 lengths and areas") {
  MappedLoop loop;
  loop.items = {{false, 1}, {false, 2}, {true, 0}, {false, -1}, {true, 3}, {false, -2}};
  CHECK(degenerate_length(loop) == 4);
  CHECK(collapse_boundary_loop(loop) == std::vector<int>{1, 2, -1, -2});

  MappedLoop all_deg;
  all_deg.items = {{true, 0}, {true, 0}};
  CHECK(degenerate_length(all_deg) == 0);
  CHECK(collapse_boundary_loop(all_deg).empty());

  MappedLoop untouched;
  untouched.items = {{false, 1}, {false, 2}};
  CHECK(collapse_boundary_loop(untouched) == std::vector<int>{1, 2});

  VanKampenDiagram d = two_triangle_example();
  CHECK(d.degenerate_area() == 1);
  CHECK(d.boundary_length() == 3);  // one boundary edge is squashed
}

TEST_CASE("identity and folded grids validate as combinatorial diagrams") {
  auto ident = identity_grid_diagram(2);
  CHECK(ident.degenerate_area() == 8);
  CHECK(ident.boundary_word().size() == 8);
  auto folded = folded_grid_diagram(3);
  CHECK(folded.degenerate_area() == 18);
  folded.validate();
}

TEST_CASE("collapse leaves combinatorial diagrams alone") {
  auto ident = identity_grid_diagram(2);
  auto rep = collapse(ident);
  CHECK(rep.excised_sphere_count == 0);
  CHECK(rep.area_before == rep.area_after);
  CHECK(rep.output.boundary_word() == ident.boundary_word());
}

TEST_CASE("collapse of the five-cell example") {
  VanKampenDiagram d = two_triangle_example();
  auto before = d.boundary_word();
  auto rep = collapse(d);
  CHECK(rep.area_before == 1);
  CHECK(rep.area_after == 1);
  CHECK(rep.excised_sphere_count == 0);
  CHECK_FALSE(rep.output.degenerate);
  CHECK(rep.output.boundary_word() == before);
  CHECK(rep.output.domain.faces.size() == 1);
}

TEST_CASE("random degenerate diagrams collapse soundly") {
  Rng rng(2026);
  int sphere_runs = 0;
  for (int trial = 0; trial < 60; ++trial) {
    VanKampenDiagram seed =
        trial % 2 ? folded_grid_diagram(2 + trial % 2) : identity_grid_diagram(2);
    Rng local = rng.fork(static_cast<std::uint64_t>(trial));
    VanKampenDiagram deg = make_degenerate(seed, 1 + static_cast<int>(local.below(5)), local);
    CHECK(deg.boundary_word() == seed.boundary_word());
    CHECK(deg.degenerate_area() >= seed.degenerate_area());

    auto rep = collapse(deg);
    CHECK(rep.output.boundary_word() == seed.boundary_word());
    CHECK(rep.area_after <= rep.area_before);
    CHECK(rep.output.domain.euler_characteristic() == 1);
    if (rep.excised_sphere_count > 0) {
      ++sphere_runs;
      CHECK(rep.area_after < rep.area_before);
    }
    // collapsing the collapsed diagram changes nothing further
    auto rep2 = collapse(rep.output);
    CHECK(rep2.area_after == rep.area_after);
  }
  CHECK(sphere_runs > 0);  // the collar move fired and was excised
}

TEST_CASE("diagram JSON round-trips canonically") {
  Rng rng(5);
  VanKampenDiagram deg = make_degenerate(identity_grid_diagram(2), 3, rng);
  std::string j = diagram_to_json(deg);
  VanKampenDiagram back = diagram_from_json(j);
  CHECK(diagram_to_json(back) == j);
  CHECK(back.degenerate_area() == deg.degenerate_area());
  CHECK(back.boundary_word() == deg.boundary_word());
}

TEST_CASE("enumeration oracle on small instances") {
  namespace pres = dehn::presentation;
  auto letters_to_darts = [](const pres::Word& w) {
    std::vector<int> darts;
    for (auto l : w.letters) darts.push_back(l);
    return darts;
  };

  SUBCASE("cyclic group") {
    auto p = pres::parse_presentation("gen a\nrel aaa\n");
    auto k = complex2::presentation_complex(p);
    CHECK(enumerate_area_oracle(letters_to_darts(pres::parse_word("aaa", p)), k, 2) == 1);
    CHECK(enumerate_area_oracle(letters_to_darts(pres::parse_word("aaaaaa", p)), k, 4) == 2);
    CHECK_FALSE(enumerate_area_oracle(letters_to_darts(pres::parse_word("a", p)), k, 4).has_value());
  }
  SUBCASE("conjugated relator needs an arc") {
    auto p = pres::parse_presentation("gen a b\nrel aaa\n");
    auto k = complex2::presentation_complex(p);
    CHECK(enumerate_area_oracle(letters_to_darts(pres::parse_word("baaaB", p)), k, 2) == 1);
  }
  SUBCASE("commutator fillings agree with the word search") {
    auto p = pres::parse_presentation("gen a b\nrel abAB\n");
    auto k = complex2::presentation_complex(p);
    CHECK(enumerate_area_oracle(letters_to_darts(pres::parse_word("abAB", p)), k, 3) == 1);
    auto oracle = enumerate_area_oracle(letters_to_darts(pres::parse_word("aabbAABB", p)), k, 6);
    REQUIRE(oracle.has_value());
    auto search = pres::combinatorial_area(pres::parse_word("aabbAABB", p), p);
    CHECK(*oracle == search.area);
    CHECK(*oracle == 4);
  }
  SUBCASE("free reduction only, no cells") {
    auto p = pres::parse_presentation("gen a b\n");
    auto k = complex2::presentation_complex(p);
    CHECK(enumerate_area_oracle(letters_to_darts(pres::parse_word("abBA", p)), k, 0) == 0);
    CHECK_FALSE(enumerate_area_oracle(letters_to_darts(pres::parse_word("ab", p)), k, 2).has_value());
  }
}

TEST_CASE("degenerate diagrams never beat the combinatorial area (Theorem 5.2 at desk scale)") {
  // over the folded grid target: the boundary word of the fold has
  // combinatorial area at most the number of homeomorphic triangles, and
  // every generated degenerate diagram for it collapses to a diagram at
  // least as small
  Rng rng(99);
  auto seed = folded_grid_diagram(2);
  std::vector<int> w = seed.boundary_word();
  auto oracle = enumerate_area_oracle(w, seed.target, seed.degenerate_area());
  REQUIRE(oracle.has_value());
  CHECK(*oracle <= seed.degenerate_area());
  for (int trial = 0; trial < 10; ++trial) {
    Rng local = rng.fork(static_cast<std::uint64_t>(trial));
    VanKampenDiagram deg = make_degenerate(seed, 3, local);
    auto rep = collapse(deg);
    // collapse witnesses delta_K < delta_K^deg; the oracle bounds from below
    CHECK(rep.area_after >= *oracle);
    CHECK(deg.degenerate_area() >= *oracle);
  }
}
