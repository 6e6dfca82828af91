#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "spherewright/simplex.hpp"

namespace spherewright {

/// Face counts f_0..f_d. Empty for the empty complex.
struct FVector {
  std::vector<long> counts;

  long euler() const;
  std::string str() const;  // "(8,28,40,20)"
  friend bool operator==(const FVector&, const FVector&) = default;
};

enum class SurfaceClass { Sphere2, Ball2, Circle1, Other };

std::string to_string(SurfaceClass c);

/// A pure simplicial complex stored by its facets. Faces are enumerated on
/// demand and memoized per dimension. Instances are immutable after
/// construction; all queries are const and safe to run concurrently.
class SimplicialComplex {
 public:
  SimplicialComplex();  // the empty complex, dimension -1

  /// Deduplicates and validates purity; throws MixedDimensionsError when the
  /// facets do not all share one dimension.
  static SimplicialComplex from_facets(std::vector<Simplex> facets);

  int dimension() const;  // -1 for the empty complex
  bool empty() const { return facets_.empty(); }
  const std::vector<Simplex>& facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }

  /// All k-faces, sorted; empty vector outside [0, dimension()].
  const std::vector<Simplex>& faces(int k) const;
  /// All nonempty faces, by dimension then lexicographic.
  std::vector<Simplex> all_faces() const;
  std::vector<VertexId> vertex_set() const;
  /// Closure membership: f is a subset of some facet (the empty simplex is a
  /// face of every nonempty complex).
  bool contains(const Simplex& f) const;

  FVector f_vector() const;

  /// {T : T disjoint from f, T union f a face}; throws FaceNotInComplexError.
  SimplicialComplex link(const Simplex& f) const;
  /// Subcomplex of (d-1)-faces lying in exactly one facet; empty when closed.
  SimplicialComplex boundary() const;

  bool is_connected() const;  // 1-skeleton connectivity
  /// Connected, every triangle in exactly two facets, every edge and vertex
  /// link connected. False for non-3-dimensional input.
  bool is_closed_pseudomanifold3() const;
  /// Classification for 1- and 2-complexes; throws WrongDimensionError
  /// otherwise.
  SurfaceClass classify_surface() const;
  /// Mod-2 Betti numbers b_0..b_d from boundary-matrix ranks over GF(2).
  std::vector<int> betti_mod2() const;

  SimplicialComplex(const SimplicialComplex& other);
  SimplicialComplex& operator=(const SimplicialComplex& other);
  SimplicialComplex(SimplicialComplex&&) noexcept = default;
  SimplicialComplex& operator=(SimplicialComplex&&) noexcept = default;

  friend bool operator==(const SimplicialComplex& x, const SimplicialComplex& y) {
    return x.facets_ == y.facets_;
  }

 private:
  struct FaceCache;
  explicit SimplicialComplex(std::vector<Simplex> facets);

  std::vector<Simplex> facets_;  // sorted, deduplicated, equal dimension
  std::shared_ptr<FaceCache> cache_;
};

/// Builds the complex whose faces are all subsets of the given facets.
/// Duplicate facets merge silently; mixed dimensions throw
/// MixedDimensionsError.
SimplicialComplex build_complex(std::vector<Simplex> facets);

/// classify_surface of every vertex link, in vertex_set() order.
std::vector<SurfaceClass> vertex_link_classes_serial(const SimplicialComplex& x);
std::vector<SurfaceClass> vertex_link_classes(const SimplicialComplex& x);

}  // namespace spherewright
