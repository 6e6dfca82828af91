#pragma once

#include <map>
#include <utility>
#include <vector>

#include "spherewright/complex.hpp"

namespace spherewright {

inline constexpr int kCanonicalVertexLimit = 20;

/// Relabeling-invariant normal form: the vertex relabeling onto 1..k that
/// lexicographically minimizes the sorted facet list, found by backtracking
/// over invariant-refined color classes. Two complexes are combinatorially
/// isomorphic exactly when their forms have equal facet lists.
struct CanonicalForm {
  std::vector<Simplex> facets;
  std::vector<std::pair<VertexId, VertexId>> relabeling;  // original -> canonical

  friend bool operator==(const CanonicalForm& x, const CanonicalForm& y) {
    return x.facets == y.facets;
  }
};

/// Throws TooLargeError beyond max_vertices.
CanonicalForm canonical_form(const SimplicialComplex& x,
                             int max_vertices = kCanonicalVertexLimit);

bool are_isomorphic(const SimplicialComplex& x, const SimplicialComplex& y,
                    int max_vertices = kCanonicalVertexLimit);

/// Applies a vertex bijection; every vertex of x must be mapped, images must
/// be distinct.
SimplicialComplex relabel_complex(const SimplicialComplex& x,
                                  const std::map<VertexId, VertexId>& perm);

}  // namespace spherewright
