#ifndef DEHN_PLMAPS_HPP
#define DEHN_PLMAPS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dehn/chain.hpp"
#include "dehn/diagram.hpp"
#include "dehn/planar.hpp"
#include "dehn/rng.hpp"

namespace dehn::plmaps {

// A loop in the 1-skeleton, reparametrized as directed runs along edges.
struct EdgeRun {
  int edge = 0;       // 0-based
  double t0 = 0, t1 = 0;  // parameters along tail->head, t0 != t1
};
struct SkeletonLoop {
  std::vector<EdgeRun> runs;
};

// Interpret a PL loop whose pieces all hug the 1-skeleton as edge runs.
SkeletonLoop to_skeleton_loop(const chain::PLLoop& loop, const complex2::Complex2& c,
                              double tol = 1e-9);

// For each edge, a generic interior point avoiding the loop's finitely many
// run endpoints; sampled in the middle third, then nudged off the exclusion
// set.  Returned as parameters along each edge.
std::map<int, double> generic_edge_points(const complex2::Complex2& c, const SkeletonLoop& loop,
                                          std::uint64_t seed);

// Number of loop parameters mapping to the point of edge e at parameter t.
int preimage_count(const SkeletonLoop& loop, int edge, double t);

struct CombinatorialLoop {
  std::vector<int> darts;  // signed 1-based edge ids, consecutive sharing vertices
  bool empty() const { return darts.empty(); }
};

void validate_combinatorial_loop(const CombinatorialLoop& l, const complex2::Complex2& c);

struct StraightenCertificate {
  double input_length = 0;
  double straightened_length = 0;  // never exceeds input_length
  double ell_min = 0;              // min distance from any p_e to the ends of e
  std::int64_t combinatorial_length = 0;
  std::map<int, double> edge_points;
};

struct StraightenResult {
  CombinatorialLoop loop;
  StraightenCertificate certificate;
};

// The loop-combinatorialization pipeline: cut the loop at its crossings of
// the generic edge points, collapse arcs with equal endpoints, straighten
// the rest through the shared star vertices, and contract the loops that
// stay inside single edges.
StraightenResult combinatorialize(const chain::PLLoop& eta, const complex2::Complex2& c,
                                  std::uint64_t seed);

std::string straighten_certificate_to_json(const StraightenCertificate& cert);

// ---------------------------------------------------------------------------
// PL disc maps and the degree analysis

// Per-domain-vertex image; every domain face must land inside the closure of
// its assigned target face.
struct PLDiscMap {
  planar::PlanarComplex domain;
  complex2::Complex2 target;
  std::vector<chain::PointRef> vertex_image;
  std::vector<int> face_assignment;  // target face per domain face

  void validate() const;
  // image of a domain vertex in the frame of the given target face; throws
  // if the point does not lie in that face's closure
  geometry::Vec2 image_in_face(int domain_vertex, int target_face) const;
};

struct ComponentReport {
  int target_face = 0;
  int component = 0;
  std::vector<int> domain_faces;
  std::int64_t degree = 0;
  double area = 0;
  bool bound_ok = false;  // area >= (sqrt(3)/2)|degree| - 1e-9
};

struct DegreeReport {
  std::vector<ComponentReport> components;
  std::int64_t total_abs_degree = 0;
  double total_area = 0;
  int generic_samples = 5;
};

// Components of the preimages of open target faces, each with its signed
// degree (checked at independent generic points) and area.
DegreeReport component_degrees(const PLDiscMap& f, std::uint64_t seed);

std::string degree_report_to_json(const DegreeReport& rep);

struct AlignedConversion {
  diagram::VanKampenDiagram diagram;
  std::int64_t def51_area = 0;
  std::int64_t sum_abs_degree = 0;
  double geometric_area = 0;
  double area_over_bound = 0;  // def51_area vs (2/sqrt 3) * geometric_area
};

// For aligned maps (every vertex image a target vertex) the induced
// simplicial map is a degenerate diagram whose area is the number of
// homeomorphic triangles.
AlignedConversion disc_to_degenerate_diagram(const PLDiscMap& f, std::uint64_t seed);

std::string discmap_to_json(const PLDiscMap& f);
PLDiscMap discmap_from_json(const std::string& text);

}  // namespace dehn::plmaps

#endif
