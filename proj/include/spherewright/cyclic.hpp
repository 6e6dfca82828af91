#pragma once

#include <vector>

#include "spherewright/complex.hpp"

namespace spherewright {

/// Gale's evenness condition for one 4-element candidate on ground set [m]:
/// true iff for every x, y outside the candidate, an even number of its
/// elements lies strictly between x and y.
bool is_gale_facet(const Simplex& candidate, int m);

/// All facets of the cyclic 4-polytope boundary on [m], by filtering every
/// 4-subset through is_gale_facet. Exactly m(m-3)/2 facets, lexicographic.
/// Throws GroundSetTooSmallError when m < 5.
std::vector<Simplex> cyclic_facets(int m);         // OpenMP over candidate blocks
std::vector<Simplex> cyclic_facets_serial(int m);  // reference kept for testing

/// Direct generator: unions of two disjoint cyclically-adjacent label pairs.
/// Validated against the brute-force filter in tests.
std::vector<Simplex> cyclic_facets_adjacent_pairs(int m);

/// The boundary 3-sphere of the cyclic 4-polytope on [m].
SimplicialComplex cyclic_sphere(int m);

/// cyclic_sphere(4n+4); throws InvalidNError when n < 1.
SimplicialComplex build_base_sphere(int n);

}  // namespace spherewright
