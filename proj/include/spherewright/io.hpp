#pragma once

#include <map>
#include <string>
#include <vector>

#include "spherewright/sphere.hpp"
#include "spherewright/verify.hpp"

namespace spherewright {

enum class DocFormat { Json, Facets };

std::string to_string(DocFormat f);

/// Serializable view of a built sphere or triangulation: construction
/// metadata plus the cell list (simplex cells, then bipyramid cells).
struct SphereDocument {
  int n = 0;
  Variant variant = Variant::Extended;
  std::vector<VertexId> vertices;
  std::map<int, VertexId> apexes;              // ball center -> apex label
  std::vector<Simplex> simplex_cells;          // sorted
  std::vector<BipyramidCell> bipyramid_cells;  // sorted by (apexes, equator)

  friend bool operator==(const SphereDocument& x, const SphereDocument& y) {
    return x.n == y.n && x.variant == y.variant && x.vertices == y.vertices &&
           x.apexes == y.apexes && x.simplex_cells == y.simplex_cells &&
           x.bipyramid_cells == y.bipyramid_cells;
  }
};

SphereDocument to_document(const PolyhedralSphere& q);
SphereDocument to_document(const SimplicialComplex& x, int n, Variant variant,
                           std::map<int, VertexId> apexes);

/// Deterministic: keys sorted, cells sorted lexicographically.
std::string serialize(const SphereDocument& doc, DocFormat format);
/// Inverse of serialize; throws ParseError with line/column position.
SphereDocument deserialize(const std::string& text, DocFormat format);

std::string report_to_json(const LemmaReport& report);
std::string reports_to_json(const std::vector<LemmaReport>& reports);

}  // namespace spherewright
