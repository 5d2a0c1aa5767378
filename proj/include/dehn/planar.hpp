#ifndef DEHN_PLANAR_HPP
#define DEHN_PLANAR_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dehn::planar {

// A 2-complex with a planar embedding given by a rotation system.  Darts are
// signed 1-based edge indices: +e starts at the tail, -e at the head.
// Rotations list the darts leaving each vertex in counterclockwise order.
// Faces are attaching cycles walked with the interior on the left; the outer
// walk goes around the complement, also with its "interior" (the unbounded
// face) on the left.
//
// Tracing rule: the dart following d inside a face is the rotation
// predecessor of -d at the head of d.  A rotation system is a planar
// embedding of a disc exactly when the traced orbits are the declared faces
// plus the outer walk and chi = V - E + F = 1.
struct PlanarComplex {
  int vertex_count = 0;
  struct Edge {
    int tail = 0;
    int head = 0;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> faces;
  std::vector<std::vector<int>> rotation;  // per vertex
  std::vector<int> outer;                  // outer boundary walk (may be empty)
  int basepoint = 0;                       // start vertex of the outer walk

  int dart_tail(int d) const { return d > 0 ? edges[size_t(d - 1)].tail : edges[size_t(-d - 1)].head; }
  int dart_head(int d) const { return d > 0 ? edges[size_t(d - 1)].head : edges[size_t(-d - 1)].tail; }

  std::int64_t euler_characteristic() const;
  bool connected() const;

  // Follow the rotation system: dart after d within its face.
  int face_successor(int d) const;

  // Throws std::invalid_argument describing the first violated condition.
  void validate() const;

  std::vector<int> face_corners(int f) const;
};

// cyclic equality of dart sequences
bool cyclically_equal(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace dehn::planar

#endif
