#ifndef DEHN_TESTS_GENERATORS_HPP
#define DEHN_TESTS_GENERATORS_HPP

#include "dehn/chain.hpp"
#include "dehn/complex2.hpp"
#include "dehn/plmaps.hpp"
#include "dehn/rng.hpp"

namespace dehn::testsupport {

// Adjacency helper: faces sharing each edge of a triangulated complex.
std::vector<std::vector<int>> faces_by_edge(const complex2::Complex2& c);

// A random 1-chain threading through adjacent faces of a triangulated disc;
// either a closed loop or an open chain between two vertices, so its
// boundary always sits in the 0-skeleton.
chain::Chain1 random_chain(const complex2::Complex2& c, Rng& rng);

// A random closed PL loop through face interiors (ordered pieces).
chain::PLLoop random_loop(const complex2::Complex2& c, Rng& rng);

// A random disc map from a grid onto the single standard triangle: boundary
// vertices go to corners combinatorially, interior vertices anywhere in the
// closed triangle.
plmaps::PLDiscMap random_single_face_discmap(int grid_n, Rng& rng);

// The 3-colored fold of a grid onto the standard triangle as a PLDiscMap
// (aligned, every triangle homeomorphic).
plmaps::PLDiscMap folded_discmap(int grid_n);

// The identity disc map of disc_grid(n) (aligned, uniform orientation).
plmaps::PLDiscMap identity_discmap(int grid_n);

}  // namespace dehn::testsupport

#endif
