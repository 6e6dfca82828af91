#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spherewright/canonical.hpp"
#include "spherewright/sphere.hpp"

namespace spherewright {

/// Two: insert the equator triangle, 2 tetrahedra. Three: insert the apex
/// pair edge, 3 tetrahedra.
enum class SplitMode { Two, Three };

/// One split choice per bipyramid, in lexicographic site order.
struct TriangulationMask {
  std::vector<SplitMode> bits;

  static TriangulationMask all_two(std::size_t count);
  /// Bit i of index selects the split of site i (1 = Three).
  static TriangulationMask from_index(std::uint64_t index, std::size_t count);
  /// '0' = Two, '1' = Three; throws ParseError on other characters.
  static TriangulationMask from_string(const std::string& s);

  std::string str() const;  // "0101"
  std::size_t three_count() const;

  friend bool operator==(const TriangulationMask&, const TriangulationMask&) = default;
};

std::vector<Simplex> split_bipyramid(const BipyramidCell& cell, SplitMode mode);

/// The simplicial sphere obtained by splitting every bipyramid per the mask.
/// Throws MaskLengthMismatchError.
SimplicialComplex realize(const PolyhedralSphere& q, const TriangulationMask& mask);

struct MaskClass {
  std::vector<TriangulationMask> masks;  // ascending mask index
  FVector f;
  std::vector<Simplex> canonical_facets;
};

struct ClassTable {
  std::vector<MaskClass> classes;  // ordered by smallest member mask

  std::size_t class_count() const { return classes.size(); }
  std::vector<std::size_t> class_sizes() const;  // descending
};

/// Realizes every mask, buckets by canonical form. Throws LimitExceededError
/// when the mask count 2^(site count) exceeds the limit.
ClassTable count_distinct_classes(const PolyhedralSphere& q, std::uint64_t limit);
ClassTable count_distinct_classes(int n, Variant variant, std::uint64_t limit);

/// ceil(mask_count / vertex_count!), the guaranteed floor on the class count
/// (reported next to the exact count, never asserted as the truth).
std::uint64_t distinct_floor_bound(std::uint64_t mask_count, std::size_t vertex_count);

/// Mask fan-out kernels (canonicalization is per-complex independent).
std::vector<CanonicalForm> canonical_forms_serial(const std::vector<SimplicialComplex>& xs,
                                                  int max_vertices = kCanonicalVertexLimit);
std::vector<CanonicalForm> canonical_forms(const std::vector<SimplicialComplex>& xs,
                                           int max_vertices = kCanonicalVertexLimit);

}  // namespace spherewright
