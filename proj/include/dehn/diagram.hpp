#ifndef DEHN_DIAGRAM_HPP
#define DEHN_DIAGRAM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dehn/complex2.hpp"
#include "dehn/planar.hpp"
#include "dehn/rng.hpp"

namespace dehn::diagram {

// A van Kampen diagram: a planar contractible complex with a cellular map to
// a target complex.  Combinatorial diagrams map every open cell
// homeomorphically onto a cell of the same dimension; degenerate diagrams
// are simplicial maps that may squash cells down a dimension or two.
struct VanKampenDiagram {
  planar::PlanarComplex domain;
  complex2::Complex2 target;

  std::vector<int> vertex_image;  // domain vertex -> target vertex
  struct EdgeImage {
    bool to_vertex = false;
    int id = 0;  // target edge (1-based sign handled by reversed) or target vertex
    bool reversed = false;
  };
  std::vector<EdgeImage> edge_image;
  struct FaceImage {
    enum class Kind { Face, Edge, Vertex };
    Kind kind = Kind::Face;
    int id = 0;
  };
  std::vector<FaceImage> face_image;
  bool degenerate = false;

  // Signed target-edge image of a domain dart (edge must not be degenerate).
  int image_dart(int dart) const;

  // Counterclockwise boundary walk (reverse of the stored outer orbit).
  std::vector<int> boundary_darts() const;
  // Boundary word in signed target edges, degenerate boundary edges skipped.
  std::vector<int> boundary_word() const;

  std::int64_t degenerate_area() const;    // faces mapped homeomorphically
  std::int64_t boundary_length() const;    // boundary 1-simplices mapped homeomorphically

  void validate() const;  // dispatches on the degenerate flag
};

// Boundary loops as standalone objects (Definition-5.1 style): a circular
// sequence of 1-simplices each mapped to a target edge or squashed to a
// vertex.
struct MappedLoop {
  struct Item {
    bool to_vertex = false;
    int id = 0;       // signed target edge when !to_vertex, else target vertex
  };
  std::vector<Item> items;
};

std::int64_t degenerate_length(const MappedLoop& loop);
// Drop the vertex-mapped 1-simplices; length in the Def-5.1 sense is
// preserved by construction.
std::vector<int> collapse_boundary_loop(const MappedLoop& loop);

struct CollapseReport {
  VanKampenDiagram output;
  std::int64_t excised_sphere_count = 0;
  std::int64_t area_before = 0;
  std::int64_t area_after = 0;
};

// Turn a degenerate diagram into a combinatorial one: for every target
// vertex, collapse each preimage component to a point, squash the triangles
// leaning on it to edges, and excise the 2-spheres this pinches off (each
// certified by an Euler-characteristic count).  The combinatorialized
// boundary word is preserved and the area cannot increase.
CollapseReport collapse(const VanKampenDiagram& d);

// Exhaustive small-instance search for the minimal number of cells of a
// combinatorial diagram with the given boundary word, by growing diagrams
// cell by cell (states are cyclic boundary words; moves attach a face along
// a shared boundary path or contract a spur).  Returns nullopt when no
// diagram with at most max_cells cells exists.
std::optional<std::int64_t> enumerate_area_oracle(const std::vector<int>& boundary_word,
                                                  const complex2::Complex2& target,
                                                  std::int64_t max_cells);

// JSON round-trip; the serializer is canonical (sorted keys, fixed layout)
// so equal diagrams produce identical bytes.
std::string diagram_to_json(const VanKampenDiagram& d);
VanKampenDiagram diagram_from_json(const std::string& json_text);

// --- test-support generators (deterministic per seed) ---------------------

// Planar version of complex2::standard_model("disc_grid", n) with identical
// cell indexing.
planar::PlanarComplex planar_disc_grid(int n);

// The identity diagram of disc_grid(n) over itself.
VanKampenDiagram identity_grid_diagram(int n);

// disc_grid(n) folded onto the single standard triangle by 3-coloring; a
// combinatorial diagram in which every face is homeomorphic.
VanKampenDiagram folded_grid_diagram(int n);

// Apply `depth` random inverse-collapse moves (interior edge splits, face
// blow-ups, degenerate collars that pinch off spheres under collapse) to a
// combinatorial diagram.  The result is a valid degenerate diagram with the
// same Def-5.1 area and combinatorialized boundary word.
VanKampenDiagram make_degenerate(const VanKampenDiagram& seed, int depth, Rng& rng);

}  // namespace dehn::diagram

#endif
