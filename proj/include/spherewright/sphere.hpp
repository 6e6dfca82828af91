#pragma once

#include <compare>
#include <map>
#include <vector>

#include "spherewright/ball.hpp"

namespace spherewright {

struct Site {
  int a = 0;
  int u = 0;

  friend auto operator<=>(const Site&, const Site&) = default;
  std::string str() const {
    return "(" + std::to_string(a) + "," + std::to_string(u) + ")";
  }
};

/// One non-simplex cell: two apexes over a triangular equator. The apex pair
/// and the equator triangle are the cell's two missing faces.
struct BipyramidCell {
  Simplex apexes;   // 2 vertices
  Simplex equator;  // 3 vertices
  Site site;

  Simplex vertex_set() const { return apexes.union_with(equator); }
  /// 5 vertices, 9 edges, 6 triangles; excludes the apex pair and the equator.
  std::vector<Simplex> faces() const;
  bool has_face(const Simplex& f) const;

  friend bool operator==(const BipyramidCell& x, const BipyramidCell& y) {
    return x.apexes == y.apexes && x.equator == y.equator;
  }
  friend auto operator<=>(const BipyramidCell& x, const BipyramidCell& y) {
    if (auto c = x.apexes <=> y.apexes; c != 0) return c;
    return x.equator <=> y.equator;
  }
};

struct SiteSelection {
  enum class Mode { Auto, All, Explicit };
  Mode mode = Mode::Auto;
  std::vector<Site> sites;  // Explicit only

  static SiteSelection auto_sites() { return {}; }
  static SiteSelection all_sites() { return {Mode::All, {}}; }
  static SiteSelection explicit_sites(std::vector<Site> s) {
    return {Mode::Explicit, std::move(s)};
  }
};

/// A 3-sphere with tetrahedron cells and bipyramid cells.
struct PolyhedralSphere {
  int n = 0;
  Variant variant = Variant::Extended;
  std::vector<Simplex> tetrahedra;        // sorted
  std::vector<BipyramidCell> bipyramids;  // sorted by (apexes, equator)
  std::vector<Site> sites;                // accepted sites, lexicographic
  std::map<int, VertexId> apex_of;        // ball center -> apex label

  std::vector<VertexId> vertex_set() const;
  std::size_t cell_count() const { return tetrahedra.size() + bipyramids.size(); }

  friend bool operator==(const PolyhedralSphere&, const PolyhedralSphere&) = default;
};

/// Apex label for the ball at a: 4n+4 plus the 1-based rank of a among the
/// ball centers.
VertexId apex_vertex(int a, int n);

/// One tetrahedron {apex} union T per triangle T of the pure 2-complex s.
/// Throws ApexCollisionError when the apex is a vertex of s.
SimplicialComplex cone_over_boundary(VertexId apex, const SimplicialComplex& s);

/// The base sphere with every ball interior replaced by the cone over the
/// ball boundary from a fresh apex.
SimplicialComplex build_coned_sphere(int n, Variant variant);

/// Whether the site's missing edge is interior to the ball under the variant
/// (recomputed from the ball, never assumed).
bool site_edge_is_interior(int a, int u, int n, Variant variant);

/// Replaces, per accepted site, the two cone tetrahedra over the site's disk
/// by one bipyramid cell. Auto keeps every site that passes the interior-edge
/// check; All and Explicit throw SiteRejectedError on the first failing site.
PolyhedralSphere build_bipyramid_sphere(int n, Variant variant,
                                        const SiteSelection& selection = {});

}  // namespace spherewright
