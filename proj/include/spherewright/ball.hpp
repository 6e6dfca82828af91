#pragma once

#include <string>
#include <vector>

#include "spherewright/complex.hpp"

namespace spherewright {

/// Literal: the 3n ball facets only. Extended: plus the contiguous filler
/// facet {a-1, a, a+1, a+2}, which closes the link of the width-1 interior
/// edge (see the interior-edge checks).
enum class Variant { Literal, Extended };

std::string to_string(Variant v);

/// Exact fraction, normalized with positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational of(long long num, long long den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// The even labels carrying a ball: even m in [n+2, 3n+1]; exactly n of them.
/// Throws InvalidNError when n < 1.
std::vector<int> ball_centers(int n);

/// The ball facet at center a, width u, layer 1..3. Width 0 is only legal at
/// layer 2 (the extended filler facet). Throws OutOfRangeError on any other
/// combination or when a is not a ball center for n.
Simplex ball_facet(int a, int u, int layer, int n);

/// Arithmetic mean of the vertex labels.
Rational label_average(const Simplex& f);

/// The named faces at one site: the three ball facets of width u, the edge
/// they share that the construction later removes, the two boundary triangles
/// flanking it, the disk they span, and its fold edge.
struct SiteFaces {
  int center = 0;  // a
  int width = 0;   // u
  Simplex facet1, facet2, facet3;
  Simplex missing_edge;          // shared by all three facets; the disk's non-edge
  Simplex tri_minus, tri_plus;   // the disk triangles
  SimplicialComplex disk;        // closure of {tri_minus, tri_plus}
  Simplex hinge;                 // tri_minus intersect tri_plus, interior to the disk
};

SiteFaces site_faces(int a, int u, int n);

/// The ball at center a: 3n facets (literal) or 3n+1 (extended).
SimplicialComplex build_ball(int a, int n, Variant variant);

struct ShellingStep {
  Simplex facet;
  /// Triangles shared with the union of the prior facets; empty on the first
  /// step.
  std::vector<Simplex> gluing;
};

struct ShellingCertificate {
  int center = 0;
  int n = 0;
  Variant variant = Variant::Literal;
  std::vector<ShellingStep> steps;

  std::vector<Simplex> ordered_facets() const;
};

/// The layered facet order (width-major, layer-minor), prefixed by the filler
/// facet for the extended variant, with the actual gluing triangles of every
/// step recorded.
ShellingCertificate shelling_order(int a, int n, Variant variant);

}  // namespace spherewright
