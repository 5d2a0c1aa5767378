#ifndef DEHN_COMPLEX2_HPP
#define DEHN_COMPLEX2_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dehn/presentation.hpp"

namespace dehn::complex2 {

// A combinatorial 2-complex: oriented edges between vertices and faces
// attached along closed edge paths.  Signed 1-based edge indices act as
// darts: +e runs tail->head, -e runs head->tail.
struct Complex2 {
  int vertex_count = 0;
  struct Edge {
    int tail = 0;
    int head = 0;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> faces;  // attaching cycles of darts
  bool simplicial = false;

  int dart_tail(int dart) const { return dart > 0 ? edges[size_t(dart - 1)].tail : edges[size_t(-dart - 1)].head; }
  int dart_head(int dart) const { return dart > 0 ? edges[size_t(dart - 1)].head : edges[size_t(-dart - 1)].tail; }

  // corner vertices of a face, in cycle order
  std::vector<int> face_corners(int f) const;

  std::int64_t euler_characteristic() const;
  void validate() const;           // structural checks + simplicial checks if flagged
  bool simplicial_invariants_hold() const;
};

// Standard metric constants shared by everything downstream: each 2-simplex
// carries its own copy of the standard simplex (vertices e1,e2,e3 of R^3),
// side sqrt(2), area sqrt(3)/2, inradius 1/sqrt(6).
inline constexpr double kSimplexSide = 1.4142135623730951;
inline constexpr double kSimplexArea = 0.8660254037844386;
inline constexpr double kSimplexInradius = 0.4082482904638630;

// One vertex, a loop edge per generator, a face per relator spelled by it.
Complex2 presentation_complex(const presentation::Presentation& p);

struct TriangulateResult {
  Complex2 complex;
  std::vector<int> face_origin;  // new face -> face of the input complex
};

// Cone each non-triangular or degenerate face from a fresh center vertex,
// then run barycentric subdivision passes until the simplicial invariants
// hold.  Simplicial input comes back unchanged.
TriangulateResult triangulate(const Complex2& c);

// name in {disc_grid, single_triangle, annulus}
Complex2 standard_model(const std::string& name, int size);

// Text format: "V n" then "E tail head" lines then "F d d d" lines with
// signed 1-based edge indices; serialization is canonical.
std::string serialize_complex(const Complex2& c);
Complex2 parse_complex(const std::string& text);

}  // namespace dehn::complex2

#endif
