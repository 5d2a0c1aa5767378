#ifndef DEHN_CHAIN_HPP
#define DEHN_CHAIN_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dehn/complex2.hpp"
#include "dehn/geometry.hpp"

namespace dehn::chain {

using geometry::Vec2;

// Canonical location of a point of a simplicial complex: a vertex, a point
// of an edge at parameter t (measured tail -> head), or a face-interior
// point in the face's standard frame.  Edge points give exact junction
// matching for pieces meeting across a shared edge.
struct PointRef {
  enum class Kind { Vertex, EdgePoint, Interior };
  Kind kind = Kind::Interior;
  int id = 0;  // vertex / edge / face
  double t = 0;
  Vec2 local{};
};

// Classify a point given in the frame of face f.
PointRef classify_point(const complex2::Complex2& c, int face, Vec2 p, double tol = 1e-9);

// A PL 1-chain: weighted segments plus circular arcs, each inside one closed
// 2-simplex carrying the standard frame.
struct SegPiece {
  int face = 0;
  Vec2 a{}, b{};
  int mult = 1;
};
struct ArcPiece {
  int face = 0;
  Vec2 center{};
  double radius = 0;
  double a0 = 0, a1 = 0;  // signed sweep from a0 to a1, |a1-a0| <= pi here
  int mult = 1;
};
struct Chain1 {
  std::vector<SegPiece> segs;
  std::vector<ArcPiece> arcs;

  double volume() const;  // sum of |mult| * length
  bool empty() const { return segs.empty() && arcs.empty(); }
  Chain1 operator-(const Chain1& o) const;  // formal difference
};

// A PL 2-chain of affine triangles.
struct TriPiece {
  int face = 0;
  Vec2 a{}, b{}, c{};
  int mult = 1;
};
struct Chain2 {
  std::vector<TriPiece> tris;
  double volume() const;  // sum of |mult| * area
  Chain1 boundary() const;
};

// Signed boundary of a 1-chain as multiplicities on canonical points;
// entries with zero net multiplicity are dropped.  Arc endpoints count like
// segment endpoints.
struct BoundaryPoint {
  PointRef at;
  int mult = 0;
};
std::vector<BoundaryPoint> boundary0(const complex2::Complex2& c, const Chain1& chain,
                                     double tol = 1e-9);

// True when every boundary point is a vertex; fills the per-vertex signed
// multiset if asked.
bool boundary_on_vertices(const complex2::Complex2& c, const Chain1& chain,
                          std::map<int, int>* out = nullptr, double tol = 1e-9);

// Equality of segment-only 1-chains up to common refinement: segments are
// grouped by carrier line per face, split at every endpoint, and the net
// multiplicities compared.  Arcs must be flattened first.
bool chains_equal(const Chain1& a, const Chain1& b, double tol = 1e-9);

// Largest distance from any piece of the chain to the 1-skeleton of its
// carrier simplex (0 for a chain supported on the skeleton).
double max_skeleton_distance(const Chain1& chain);

// Replace arcs by chords short enough that the sagitta is below tol;
// accumulates the flattening error bound.
Chain1 flatten_arcs(const Chain1& chain, double tol, double* error_bound = nullptr);

// An oriented closed PL loop; consecutive pieces share endpoints (possibly
// across faces, through the shared edge).
struct LoopPiece {
  int face = 0;
  Vec2 a{}, b{};
};
struct PLLoop {
  std::vector<LoopPiece> pieces;
  double length() const;
  Chain1 as_chain() const;
};

// JSON: {"kind": "chain1"|"chain2"|"loop", "pieces": [...]} with barycentric
// coordinates; the serializer is canonical.
std::string chain1_to_json(const Chain1& c);
std::string chain2_to_json(const Chain2& c);
std::string loop_to_json(const PLLoop& l);
Chain1 chain1_from_json(const std::string& text);
Chain2 chain2_from_json(const std::string& text);
PLLoop loop_from_json(const std::string& text);
std::string chain_kind_of_json(const std::string& text);

}  // namespace dehn::chain

#endif
