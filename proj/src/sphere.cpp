#include "spherewright/sphere.hpp"

#include <algorithm>
#include <set>

#include "spherewright/cyclic.hpp"
#include "spherewright/errors.hpp"

namespace spherewright {

std::vector<Simplex> BipyramidCell::faces() const {
  std::vector<Simplex> out;
  for (VertexId v : apexes.vertices()) out.push_back(Simplex{v});
  for (VertexId v : equator.vertices()) out.push_back(Simplex{v});
  for (const Simplex& e : equator.faces_of_dim(1)) {
    out.push_back(e);  // equatorial edge
    for (VertexId p : apexes.vertices()) out.push_back(e.with(p));
  }
  for (VertexId p : apexes.vertices()) {
    for (VertexId q : equator.vertices()) out.push_back(Simplex{p, q});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool BipyramidCell::has_face(const Simplex& f) const {
  if (f.empty()) return true;
  if (!vertex_set().contains(f)) return false;
  // Excluded: the apex pair, the equator, and anything containing them.
  if (f.contains(apexes)) return false;
  const Simplex eq_part = f.intersection(equator);
  if (eq_part == equator) return false;
  return f.size() <= 3;
}

std::vector<VertexId> PolyhedralSphere::vertex_set() const {
  std::set<VertexId> vs;
  for (const Simplex& t : tetrahedra) vs.insert(t.vertices().begin(), t.vertices().end());
  for (const BipyramidCell& b : bipyramids) {
    const Simplex v = b.vertex_set();
    vs.insert(v.vertices().begin(), v.vertices().end());
  }
  return {vs.begin(), vs.end()};
}

VertexId apex_vertex(int a, int n) {
  const auto centers = ball_centers(n);
  const auto it = std::find(centers.begin(), centers.end(), a);
  if (it == centers.end()) {
    throw OutOfRangeError("a=" + std::to_string(a) + " is not a ball center for n=" +
                          std::to_string(n));
  }
  return 4 * n + 4 + static_cast<int>(it - centers.begin()) + 1;
}

SimplicialComplex cone_over_boundary(VertexId apex, const SimplicialComplex& s) {
  if (s.dimension() != 2) {
    throw WrongDimensionError("cone base must be a pure 2-complex");
  }
  for (VertexId v : s.vertex_set()) {
    if (v == apex) throw ApexCollisionError("apex " + std::to_string(apex) + " lies in the base");
  }
  std::vector<Simplex> facets;
  facets.reserve(s.facet_count());
  for (const Simplex& t : s.facets()) facets.push_back(t.with(apex));
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex build_coned_sphere(int n, Variant variant) {
  const SimplicialComplex base = build_base_sphere(n);
  std::set<Simplex> facets(base.facets().begin(), base.facets().end());
  for (int a : ball_centers(n)) {
    const SimplicialComplex ball = build_ball(a, n, variant);
    for (const Simplex& f : ball.facets()) facets.erase(f);
    const SimplicialComplex cone = cone_over_boundary(apex_vertex(a, n), ball.boundary());
    facets.insert(cone.facets().begin(), cone.facets().end());
  }
  return SimplicialComplex::from_facets({facets.begin(), facets.end()});
}

bool site_edge_is_interior(int a, int u, int n, Variant variant) {
  const SiteFaces site = site_faces(a, u, n);
  const SimplicialComplex ball = build_ball(a, n, variant);
  return !ball.boundary().contains(site.missing_edge);
}

PolyhedralSphere build_bipyramid_sphere(int n, Variant variant, const SiteSelection& selection) {
  std::vector<Site> wanted;
  switch (selection.mode) {
    case SiteSelection::Mode::Auto:
    case SiteSelection::Mode::All:
      for (int a : ball_centers(n)) {
        for (int u = 1; u <= n; ++u) wanted.push_back({a, u});
      }
      break;
    case SiteSelection::Mode::Explicit:
      wanted = selection.sites;
      std::sort(wanted.begin(), wanted.end());
      wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
      break;
  }

  const auto centers = ball_centers(n);
  for (const Site& s : wanted) {
    if (std::find(centers.begin(), centers.end(), s.a) == centers.end() || s.u < 1 || s.u > n) {
      throw InvalidSiteError("site " + s.str() + " out of range for n=" + std::to_string(n));
    }
  }

  std::vector<Site> accepted;
  for (const Site& s : wanted) {
    if (site_edge_is_interior(s.a, s.u, n, variant)) {
      accepted.push_back(s);
    } else if (selection.mode != SiteSelection::Mode::Auto) {
      throw SiteRejectedError(s.a, s.u, "its edge is not interior to the " +
                                            to_string(variant) + " ball");
    }
  }

  PolyhedralSphere q;
  q.n = n;
  q.variant = variant;
  q.sites = accepted;
  for (int a : centers) q.apex_of[a] = apex_vertex(a, n);

  const SimplicialComplex coned = build_coned_sphere(n, variant);
  std::set<Simplex> tets(coned.facets().begin(), coned.facets().end());
  for (const Site& s : accepted) {
    const SiteFaces site = site_faces(s.a, s.u, n);
    const VertexId apex = q.apex_of.at(s.a);
    const Simplex lower = site.tri_minus.with(apex);
    const Simplex upper = site.tri_plus.with(apex);
    if (!tets.erase(lower) || !tets.erase(upper)) {
      throw SiteRejectedError(s.a, s.u, "its disk cone tetrahedra are missing");
    }
    BipyramidCell cell;
    cell.apexes = site.missing_edge;
    cell.equator = site.hinge.with(apex);
    cell.site = s;
    q.bipyramids.push_back(std::move(cell));
  }
  q.tetrahedra.assign(tets.begin(), tets.end());
  // Bipyramids stay in lexicographic site order; masks index them this way.
  std::sort(q.bipyramids.begin(), q.bipyramids.end(),
            [](const BipyramidCell& x, const BipyramidCell& y) { return x.site < y.site; });
  return q;
}

}  // namespace spherewright
