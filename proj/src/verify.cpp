#include "spherewright/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>

#include "spherewright/cyclic.hpp"
#include "spherewright/errors.hpp"
#include "spherewright/parallel.hpp"

namespace spherewright {

std::string to_string(LemmaId id) {
  switch (id) {
    case LemmaId::L2_VERTICES: return "L2_VERTICES";
    case LemmaId::L3_SHELLING: return "L3_SHELLING";
    case LemmaId::L4_NO_SHARED_TRIANGLE: return "L4_NO_SHARED_TRIANGLE";
    case LemmaId::L5_BOUNDARY_ONLY: return "L5_BOUNDARY_ONLY";
    case LemmaId::L6_BOUNDARY_TRIANGLES: return "L6_BOUNDARY_TRIANGLES";
    case LemmaId::L7_INTERIOR_EDGES: return "L7_INTERIOR_EDGES";
    case LemmaId::L8_DISK_INTERSECTIONS: return "L8_DISK_INTERSECTIONS";
    case LemmaId::POLYHEDRALITY: return "POLYHEDRALITY";
    case LemmaId::SPHERE: return "SPHERE";
    case LemmaId::THEOREM1: return "THEOREM1";
  }
  return "?";
}

std::optional<LemmaId> lemma_from_string(const std::string& s) {
  static const std::map<std::string, LemmaId> table = {
      {"L2_VERTICES", LemmaId::L2_VERTICES},
      {"L3_SHELLING", LemmaId::L3_SHELLING},
      {"L4_NO_SHARED_TRIANGLE", LemmaId::L4_NO_SHARED_TRIANGLE},
      {"L5_BOUNDARY_ONLY", LemmaId::L5_BOUNDARY_ONLY},
      {"L6_BOUNDARY_TRIANGLES", LemmaId::L6_BOUNDARY_TRIANGLES},
      {"L7_INTERIOR_EDGES", LemmaId::L7_INTERIOR_EDGES},
      {"L8_DISK_INTERSECTIONS", LemmaId::L8_DISK_INTERSECTIONS},
      {"POLYHEDRALITY", LemmaId::POLYHEDRALITY},
      {"SPHERE", LemmaId::SPHERE},
      {"THEOREM1", LemmaId::THEOREM1},
  };
  const auto it = table.find(s);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::string LemmaReport::str() const {
  std::ostringstream os;
  os << (pass ? "PASS " : "FAIL ") << to_string(id) << " n=" << n << ' ' << to_string(variant);
  if (!params.empty()) os << ' ' << params;
  if (!notes.empty()) os << " — " << notes.front();
  return os.str();
}

namespace {

std::vector<Simplex> maximal_faces(const std::vector<Simplex>& faces) {
  std::vector<Simplex> out;
  for (const Simplex& f : faces) {
    bool dominated = false;
    for (const Simplex& g : faces) {
      if (g.size() > f.size() && g.contains(f)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string face_list(const std::vector<Simplex>& fs, std::size_t cap = 6) {
  std::ostringstream os;
  for (std::size_t i = 0; i < fs.size() && i < cap; ++i) {
    if (i) os << ' ';
    os << fs[i].str();
  }
  if (fs.size() > cap) os << " …(" << fs.size() << " total)";
  return os.str();
}

std::vector<Simplex> sorted_difference(std::vector<Simplex> lhs, std::vector<Simplex> rhs) {
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  std::vector<Simplex> out;
  std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(out));
  return out;
}

/// The stated boundary family: per width and layer, the two extreme label
/// pairs of the facet joined with the opposite flank label.
std::vector<Simplex> claimed_boundary_family(int a, int n) {
  std::vector<Simplex> out;
  for (int u = 1; u <= n; ++u) {
    for (int layer = 1; layer <= 3; ++layer) {
      const Simplex f = ball_facet(a, u, layer, n);
      const Simplex lo{f[0], f[1]};
      const Simplex hi{f[2], f[3]};
      const int flank_lo = layer == 3 ? a - u + 1 : a - u - 1;
      const int flank_hi = layer == 1 ? a + u : a + u + 2;
      out.push_back(lo.with(flank_hi));
      out.push_back(hi.with(flank_lo));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimplicialComplex two_split_subdivision(const PolyhedralSphere& q) {
  std::vector<Simplex> facets = q.tetrahedra;
  for (const BipyramidCell& b : q.bipyramids) {
    for (VertexId apex : b.apexes.vertices()) facets.push_back(b.equator.with(apex));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

}  // namespace

LemmaReport check_lemma_vertices(int n) {
  LemmaReport r;
  r.id = LemmaId::L2_VERTICES;
  r.n = n;
  r.params = "all centers, u' < u";
  for (int a : ball_centers(n)) {
    for (int u = 2; u <= n; ++u) {
      Simplex cap_by_layer[4] = {
          {},
          Simplex{a - u, a + u, a + u + 1},
          Simplex{a - u, a + u + 1},
          Simplex{a - u, a - u + 1, a + u + 1},
      };
      for (int up = 1; up < u; ++up) {
        for (int i = 1; i <= 3; ++i) {
          for (int j = 1; j <= 3; ++j) {
            const Simplex inter =
                ball_facet(a, u, i, n).intersection(ball_facet(a, up, j, n));
            if (!cap_by_layer[i].contains(inter)) {
              r.pass = false;
              r.construction_sound = false;
              r.witnesses.push_back(inter);
              r.notes.push_back("a=" + std::to_string(a) + " (u=" + std::to_string(u) +
                                ",i=" + std::to_string(i) + ") vs (u'=" + std::to_string(up) +
                                ",j=" + std::to_string(j) + "): intersection " + inter.str() +
                                " escapes " + cap_by_layer[i].str());
            }
          }
        }
      }
    }
  }
  if (r.pass) r.notes.push_back("every cross-width intersection stays in its layer 3-set");
  return r;
}

LemmaReport check_shelling(const ShellingCertificate& cert) {
  LemmaReport r;
  r.id = LemmaId::L3_SHELLING;
  r.n = cert.n;
  r.variant = cert.variant;
  r.params = "a=" + std::to_string(cert.center);

  const std::vector<Simplex> facets = cert.ordered_facets();
  {
    std::vector<Simplex> sorted = facets;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      r.pass = false;
      r.notes.push_back("duplicate facet in the order");
      return r;
    }
  }
  for (const Simplex& f : facets) {
    if (f.dimension() != 3) {
      r.pass = false;
      r.notes.push_back("non-tetrahedron facet " + f.str());
      return r;
    }
  }

  std::vector<Simplex> prefix;
  for (std::size_t k = 0; k < facets.size(); ++k) {
    const Simplex& f = facets[k];
    if (k > 0) {
      const SimplicialComplex partial = SimplicialComplex::from_facets(prefix);
      std::vector<Simplex> common;
      for (int d = 0; d <= 2; ++d) {
        for (const Simplex& sub : f.faces_of_dim(d)) {
          if (partial.contains(sub)) common.push_back(sub);
        }
      }
      const std::vector<Simplex> maxi = maximal_faces(common);
      const std::string where = "step " + std::to_string(k + 1) + " (" + f.str() + ")";
      if (maxi.empty()) {
        r.pass = false;
        r.witnesses.push_back(f);
        r.notes.push_back(where + ": no contact with the prior union");
        return r;
      }
      bool pure2 = true;
      for (const Simplex& m : maxi) {
        if (m.dimension() != 2) pure2 = false;
      }
      if (!pure2 || maxi.size() > 3) {
        r.pass = false;
        r.witnesses.insert(r.witnesses.end(), maxi.begin(), maxi.end());
        r.notes.push_back(where + ": intersection " + face_list(maxi) +
                          (pure2 ? " has too many triangles" : " is not pure 2-dimensional"));
        return r;
      }
      const SimplicialComplex glue = SimplicialComplex::from_facets(maxi);
      if (glue.classify_surface() != SurfaceClass::Ball2) {
        r.pass = false;
        r.witnesses.insert(r.witnesses.end(), maxi.begin(), maxi.end());
        r.notes.push_back(where + ": gluing " + face_list(maxi) + " is not a 2-ball");
        return r;
      }
      const SimplicialComplex bd = partial.boundary();
      for (const Simplex& t : maxi) {
        if (!bd.contains(t)) {
          r.pass = false;
          r.witnesses.push_back(t);
          r.notes.push_back(where + ": gluing triangle " + t.str() +
                            " is not on the boundary of the prior union");
          return r;
        }
      }
      if (k < cert.steps.size() && cert.steps[k].gluing != maxi) {
        r.pass = false;
        r.notes.push_back(where + ": recorded gluing disagrees with the recomputation");
        return r;
      }
    }
    prefix.push_back(f);
  }

  const SimplicialComplex full = SimplicialComplex::from_facets(prefix);
  if (full.betti_mod2() != std::vector<int>{1, 0, 0, 0}) {
    r.pass = false;
    r.notes.push_back("final complex does not have ball homology");
    return r;
  }
  if (full.boundary().classify_surface() != SurfaceClass::Sphere2) {
    r.pass = false;
    r.notes.push_back("final boundary is not a 2-sphere");
    return r;
  }
  r.notes.push_back(std::to_string(facets.size()) + " facets glue along boundary disks");
  return r;
}

LemmaReport check_ball_intersections(int n, Variant variant, LemmaId which) {
  if (which != LemmaId::L4_NO_SHARED_TRIANGLE && which != LemmaId::L5_BOUNDARY_ONLY) {
    throw std::invalid_argument("check_ball_intersections handles L4 or L5 only");
  }
  LemmaReport r;
  r.id = which;
  r.n = n;
  r.variant = variant;
  r.params = "all center pairs";
  const auto centers = ball_centers(n);
  if (centers.size() < 2) {
    r.notes.push_back("single ball, vacuous");
    return r;
  }
  std::map<int, SimplicialComplex> balls, boundaries;
  for (int a : centers) {
    balls.emplace(a, build_ball(a, n, variant));
    boundaries.emplace(a, balls.at(a).boundary());
  }
  for (std::size_t i = 0; i < centers.size(); ++i) {
    for (std::size_t j = i + 1; j < centers.size(); ++j) {
      const int a = centers[i], ap = centers[j];
      for (int d = 0; d <= 3; ++d) {
        std::vector<Simplex> common;
        std::set_intersection(balls.at(a).faces(d).begin(), balls.at(a).faces(d).end(),
                              balls.at(ap).faces(d).begin(), balls.at(ap).faces(d).end(),
                              std::back_inserter(common));
        for (const Simplex& f : common) {
          if (which == LemmaId::L4_NO_SHARED_TRIANGLE) {
            if (d >= 2) {
              r.pass = false;
              r.construction_sound = false;
              r.witnesses.push_back(f);
              r.notes.push_back("balls at " + std::to_string(a) + " and " + std::to_string(ap) +
                                " share the 2-face " + f.str());
            }
          } else {
            if (!boundaries.at(a).contains(f) || !boundaries.at(ap).contains(f)) {
              r.pass = false;
              r.construction_sound = false;
              r.witnesses.push_back(f);
              r.notes.push_back("common face " + f.str() + " of balls " + std::to_string(a) +
                                "," + std::to_string(ap) + " is interior to one of them");
            }
          }
        }
      }
    }
  }
  if (r.pass) {
    r.notes.push_back(which == LemmaId::L4_NO_SHARED_TRIANGLE
                          ? "no two balls share a triangle"
                          : "all pairwise intersections lie in both boundaries");
  }
  return r;
}

LemmaReport check_boundary_classification(int a, int n, Variant variant) {
  LemmaReport r;
  r.id = LemmaId::L6_BOUNDARY_TRIANGLES;
  r.n = n;
  r.variant = variant;
  r.params = "a=" + std::to_string(a);

  const SimplicialComplex ball = build_ball(a, n, variant);
  r.computed_truth = ball.boundary().facets();
  r.claimed = claimed_boundary_family(a, n);

  const auto extra = sorted_difference(r.computed_truth, r.claimed);
  const auto missing = sorted_difference(r.claimed, r.computed_truth);
  r.pass = extra.empty() && missing.empty();
  r.witnesses.insert(r.witnesses.end(), extra.begin(), extra.end());
  r.witnesses.insert(r.witnesses.end(), missing.begin(), missing.end());

  // What the sphere assembly consumes: both disk triangles of every site stay
  // on the ball boundary.
  for (int u = 1; u <= n; ++u) {
    const SiteFaces site = site_faces(a, u, n);
    for (const Simplex& t : {site.tri_minus, site.tri_plus}) {
      if (std::find(r.computed_truth.begin(), r.computed_truth.end(), t) ==
          r.computed_truth.end()) {
        r.construction_sound = false;
        r.witnesses.push_back(t);
        r.notes.push_back("disk triangle " + t.str() + " of site (" + std::to_string(a) + "," +
                          std::to_string(u) + ") is not on the ball boundary");
      }
    }
  }

  r.notes.push_back("computed " + std::to_string(r.computed_truth.size()) + " triangles, claimed " +
                    std::to_string(r.claimed.size()) +
                    "; computed∖claimed: " + (extra.empty() ? "∅" : face_list(extra)) +
                    "; claimed∖computed: " + (missing.empty() ? "∅" : face_list(missing)));
  return r;
}

LemmaReport check_interior_edges(int a, int n, Variant variant) {
  LemmaReport r;
  r.id = LemmaId::L7_INTERIOR_EDGES;
  r.n = n;
  r.variant = variant;
  r.params = "a=" + std::to_string(a);

  const SimplicialComplex ball = build_ball(a, n, variant);
  const SimplicialComplex bd = ball.boundary();
  for (const Simplex& e : ball.faces(1)) {
    if (!bd.contains(e)) r.computed_truth.push_back(e);
  }
  for (int u = 1; u <= n; ++u) {
    r.claimed.push_back(site_faces(a, u, n).missing_edge);
  }
  std::sort(r.claimed.begin(), r.claimed.end());

  const auto extra = sorted_difference(r.computed_truth, r.claimed);
  const auto missing = sorted_difference(r.claimed, r.computed_truth);
  r.pass = extra.empty() && missing.empty();
  // Interior edges outside the claimed family would undermine the assembly.
  r.construction_sound = extra.empty();
  r.witnesses.insert(r.witnesses.end(), extra.begin(), extra.end());
  r.witnesses.insert(r.witnesses.end(), missing.begin(), missing.end());

  // Each interior claimed edge must have the asserted 4-cycle link.
  for (int u = 1; u <= n; ++u) {
    const Simplex e = site_faces(a, u, n).missing_edge;
    if (!std::binary_search(r.computed_truth.begin(), r.computed_truth.end(), e)) continue;
    std::vector<Simplex> cycle = {Simplex{a - u - 1, a + u}, Simplex{a + u, a - u + 1},
                                  Simplex{a - u + 1, a + u + 2}, Simplex{a + u + 2, a - u - 1}};
    std::sort(cycle.begin(), cycle.end());
    const SimplicialComplex lk = ball.link(e);
    if (lk.facets() != cycle || lk.classify_surface() != SurfaceClass::Circle1) {
      r.pass = false;
      r.construction_sound = false;
      r.witnesses.push_back(e);
      r.notes.push_back("link of " + e.str() + " is not the expected 4-cycle");
    }
  }

  std::ostringstream note;
  note << "interior edges: " << (r.computed_truth.empty() ? "∅" : face_list(r.computed_truth))
       << "; claimed: " << face_list(r.claimed);
  if (!missing.empty()) {
    note << "; boundary instead of interior: " << face_list(missing);
  }
  if (!extra.empty()) {
    note << "; unexpected interior: " << face_list(extra);
  }
  r.notes.insert(r.notes.begin(), note.str());
  return r;
}

LemmaReport check_disk_intersections(int n, Variant variant) {
  LemmaReport r;
  r.id = LemmaId::L8_DISK_INTERSECTIONS;
  r.n = n;
  r.variant = variant;
  r.params = "all site pairs";

  std::vector<SiteFaces> sites;
  for (int a : ball_centers(n)) {
    for (int u = 1; u <= n; ++u) sites.push_back(site_faces(a, u, n));
  }
  if (sites.size() < 2) {
    r.notes.push_back("single site, vacuous");
    return r;
  }

  auto fail = [&r](const SiteFaces& s1, const SiteFaces& s2, const std::string& why,
                   const std::vector<Simplex>& ws) {
    r.pass = false;
    r.construction_sound = false;
    r.witnesses.insert(r.witnesses.end(), ws.begin(), ws.end());
    r.notes.push_back("disks (" + std::to_string(s1.center) + "," + std::to_string(s1.width) +
                      ") and (" + std::to_string(s2.center) + "," + std::to_string(s2.width) +
                      "): " + why);
  };

  // Ingredient of the cross-ball argument: each disk misses exactly one
  // vertex pair, and that pair is the site's missing edge.
  for (const SiteFaces& s : sites) {
    const auto verts = s.disk.vertex_set();
    for (std::size_t p = 0; p < verts.size(); ++p) {
      for (std::size_t q2 = p + 1; q2 < verts.size(); ++q2) {
        const Simplex e{verts[p], verts[q2]};
        const bool is_edge = s.disk.contains(e);
        const bool is_missing = e == s.missing_edge;
        if (is_edge == is_missing) {
          fail(s, s, "the disk's missing edges are not exactly " + s.missing_edge.str(), {e});
        }
      }
    }
  }

  for (std::size_t i = 0; i < sites.size(); ++i) {
    for (std::size_t j = i + 1; j < sites.size(); ++j) {
      const SiteFaces& s1 = sites[i];
      const SiteFaces& s2 = sites[j];
      std::vector<Simplex> common;
      for (int d = 0; d <= 2; ++d) {
        std::set_intersection(s1.disk.faces(d).begin(), s1.disk.faces(d).end(),
                              s2.disk.faces(d).begin(), s2.disk.faces(d).end(),
                              std::back_inserter(common));
      }
      if (common.empty()) continue;
      const std::vector<Simplex> maxi = maximal_faces(common);
      if (maxi.size() != 1) {
        fail(s1, s2, "intersection has several maximal faces " + face_list(maxi), maxi);
        continue;
      }
      if (maxi.front().dimension() > 1) {
        fail(s1, s2, "intersection contains the triangle " + maxi.front().str(), maxi);
        continue;
      }
      if (s1.center == s2.center) {
        const SimplicialComplex bd1 = s1.disk.boundary();
        const SimplicialComplex bd2 = s2.disk.boundary();
        if (!bd1.contains(maxi.front()) || !bd2.contains(maxi.front())) {
          fail(s1, s2, "same-ball intersection " + maxi.front().str() +
                           " leaves a disk boundary",
               maxi);
        }
      } else if (s1.missing_edge == s2.missing_edge) {
        fail(s1, s2, "equal missing edges " + s1.missing_edge.str(), {s1.missing_edge});
      }
    }
  }
  if (r.pass) r.notes.push_back("all disk pairs meet in at most a single face");
  return r;
}

namespace {

struct BipyramidView {
  const BipyramidCell* cell;
  Simplex vertices;
  std::vector<Simplex> faces;  // built once per cell, not per pair
};

std::vector<BipyramidView> bipyramid_views(const PolyhedralSphere& q) {
  std::vector<BipyramidView> out;
  out.reserve(q.bipyramids.size());
  for (const BipyramidCell& b : q.bipyramids) {
    out.push_back({&b, b.vertex_set(), b.faces()});
  }
  return out;
}

std::optional<PolyViolation> improper_pair(const BipyramidView& b, const Simplex& tetra) {
  std::vector<Simplex> common;
  for (const Simplex& f : b.faces) {
    if (tetra.contains(f)) common.push_back(f);
  }
  const Simplex shared = b.vertices.intersection(tetra);
  const std::vector<Simplex> maxi = maximal_faces(common);
  if (common.empty() ? shared.empty() : (maxi.size() == 1 && maxi.front() == shared)) {
    return std::nullopt;
  }
  return PolyViolation{b.vertices, tetra, maxi};
}

std::optional<PolyViolation> improper_pair(const BipyramidView& b1, const BipyramidView& b2) {
  std::vector<Simplex> common;
  for (const Simplex& f : b1.faces) {
    if (b2.cell->has_face(f)) common.push_back(f);
  }
  const Simplex shared = b1.vertices.intersection(b2.vertices);
  const std::vector<Simplex> maxi = maximal_faces(common);
  if (common.empty() ? shared.empty() : (maxi.size() == 1 && maxi.front() == shared)) {
    return std::nullopt;
  }
  return PolyViolation{b1.vertices, b2.vertices, maxi};
}

}  // namespace

std::vector<PolyViolation> polyhedrality_violations_serial(const PolyhedralSphere& q) {
  const auto views = bipyramid_views(q);
  std::vector<PolyViolation> out;
  for (std::size_t i = 0; i < views.size(); ++i) {
    for (const Simplex& t : q.tetrahedra) {
      if (auto v = improper_pair(views[i], t)) out.push_back(std::move(*v));
    }
    for (std::size_t j = i + 1; j < views.size(); ++j) {
      if (auto v = improper_pair(views[i], views[j])) out.push_back(std::move(*v));
    }
  }
  return out;
}

std::vector<PolyViolation> polyhedrality_violations(const PolyhedralSphere& q) {
  const auto views = bipyramid_views(q);
  const auto nb = static_cast<std::int64_t>(views.size());
  std::vector<std::vector<PolyViolation>> slots(static_cast<std::size_t>(nb));
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
  for (std::int64_t i = 0; i < nb; ++i) {
    auto& slot = slots[static_cast<std::size_t>(i)];
    for (const Simplex& t : q.tetrahedra) {
      if (auto v = improper_pair(views[static_cast<std::size_t>(i)], t)) {
        slot.push_back(std::move(*v));
      }
    }
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < views.size(); ++j) {
      if (auto v = improper_pair(views[static_cast<std::size_t>(i)], views[j])) {
        slot.push_back(std::move(*v));
      }
    }
  }
  std::vector<PolyViolation> out;
  for (auto& slot : slots) {
    out.insert(out.end(), std::make_move_iterator(slot.begin()),
               std::make_move_iterator(slot.end()));
  }
  return out;
}

LemmaReport check_polyhedrality(const PolyhedralSphere& q) {
  LemmaReport r;
  r.id = LemmaId::POLYHEDRALITY;
  r.n = q.n;
  r.variant = q.variant;
  r.params = std::to_string(q.cell_count()) + " cells";
  const auto violations = polyhedrality_violations(q);
  for (const PolyViolation& v : violations) {
    r.pass = false;
    r.construction_sound = false;
    r.witnesses.push_back(v.cell1);
    r.witnesses.push_back(v.cell2);
    r.notes.push_back("cells " + v.cell1.str() + " and " + v.cell2.str() +
                      " meet improperly; maximal common faces: " +
                      (v.maximal_common_faces.empty() ? "none"
                                                      : face_list(v.maximal_common_faces)));
  }
  if (r.pass) r.notes.push_back("every cell pair meets in a single common face");
  return r;
}

LemmaReport check_sphere_3(const SimplicialComplex& x) {
  LemmaReport r;
  r.id = LemmaId::SPHERE;
  r.n = 0;
  r.params = x.f_vector().str();
  if (!x.is_closed_pseudomanifold3()) {
    r.pass = false;
    r.construction_sound = false;
    r.notes.push_back("not a closed 3-pseudomanifold");
  }
  if (x.dimension() == 3) {
    const auto verts = x.faces(0);
    const auto classes = vertex_link_classes(x);
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (classes[i] != SurfaceClass::Sphere2) {
        r.pass = false;
        r.construction_sound = false;
        r.witnesses.push_back(verts[i]);
        r.notes.push_back("link of vertex " + verts[i].str() + " classified " +
                          to_string(classes[i]));
      }
    }
  }
  if (x.f_vector().euler() != 0) {
    r.pass = false;
    r.construction_sound = false;
    r.notes.push_back("Euler characteristic " + std::to_string(x.f_vector().euler()));
  }
  if (x.betti_mod2() != std::vector<int>{1, 0, 0, 1}) {
    r.pass = false;
    r.construction_sound = false;
    r.notes.push_back("mod-2 Betti numbers differ from (1,0,0,1)");
  }
  if (r.pass) r.notes.push_back("closed, all links 2-spheres, Euler 0, Betti (1,0,0,1)");
  return r;
}

LemmaReport check_sphere_3(const PolyhedralSphere& q) {
  LemmaReport r = check_sphere_3(two_split_subdivision(q));
  r.n = q.n;
  r.variant = q.variant;
  r.params = "two-split of Q, " + r.params;
  return r;
}

LemmaReport verify_theorem(int n, Variant variant) {
  LemmaReport r;
  r.id = LemmaId::THEOREM1;
  r.n = n;
  r.variant = variant;
  const PolyhedralSphere q = build_bipyramid_sphere(n, variant, SiteSelection::auto_sites());
  const auto verts = q.vertex_set();
  r.params = std::to_string(verts.size()) + " vertices, " + std::to_string(q.bipyramids.size()) +
             " bipyramids";
  if (static_cast<int>(verts.size()) != 5 * n + 4) {
    r.pass = false;
    r.notes.push_back("expected " + std::to_string(5 * n + 4) + " vertices, found " +
                      std::to_string(verts.size()));
  }
  const std::size_t expected =
      variant == Variant::Extended ? static_cast<std::size_t>(n) * static_cast<std::size_t>(n)
                                   : q.sites.size();
  if (q.bipyramids.size() != expected) {
    r.pass = false;
    r.notes.push_back("expected " + std::to_string(expected) + " bipyramids, found " +
                      std::to_string(q.bipyramids.size()));
  }
  const LemmaReport poly = check_polyhedrality(q);
  if (!poly.pass) {
    r.pass = false;
    r.witnesses = poly.witnesses;
    r.notes.push_back("polyhedrality fails: " + (poly.notes.empty() ? "" : poly.notes.front()));
  }
  const LemmaReport sphere = check_sphere_3(q);
  if (!sphere.pass) {
    r.pass = false;
    r.notes.push_back("sphere check fails: " + (sphere.notes.empty() ? "" : sphere.notes.front()));
  }
  r.construction_sound = r.pass;
  if (r.pass) {
    r.notes.push_back(std::to_string(verts.size()) + " vertices, " +
                      std::to_string(q.bipyramids.size()) + " bipyramid cells, " +
                      std::to_string(q.tetrahedra.size()) + " tetrahedra");
  }
  return r;
}

std::vector<LemmaReport> run_suite(int n, Variant variant, const std::set<LemmaId>& filter) {
  const auto wanted = [&filter](LemmaId id) { return filter.empty() || filter.count(id) > 0; };
  std::vector<LemmaReport> out;
  const auto centers = ball_centers(n);

  if (wanted(LemmaId::SPHERE)) {
    LemmaReport base = check_sphere_3(build_base_sphere(n));
    base.n = n;
    base.variant = variant;
    base.params = "base sphere, " + base.params;
    out.push_back(std::move(base));

    LemmaReport coned = check_sphere_3(build_coned_sphere(n, variant));
    coned.n = n;
    coned.variant = variant;
    coned.params = "coned sphere, " + coned.params;
    out.push_back(std::move(coned));
  }
  if (wanted(LemmaId::L2_VERTICES)) {
    LemmaReport r = check_lemma_vertices(n);
    r.variant = variant;
    out.push_back(std::move(r));
  }
  if (wanted(LemmaId::L3_SHELLING)) {
    for (int a : centers) out.push_back(check_shelling(shelling_order(a, n, variant)));
  }
  if (wanted(LemmaId::L4_NO_SHARED_TRIANGLE)) {
    out.push_back(check_ball_intersections(n, variant, LemmaId::L4_NO_SHARED_TRIANGLE));
  }
  if (wanted(LemmaId::L5_BOUNDARY_ONLY)) {
    out.push_back(check_ball_intersections(n, variant, LemmaId::L5_BOUNDARY_ONLY));
  }
  if (wanted(LemmaId::L6_BOUNDARY_TRIANGLES)) {
    for (int a : centers) out.push_back(check_boundary_classification(a, n, variant));
  }
  if (wanted(LemmaId::L7_INTERIOR_EDGES)) {
    for (int a : centers) out.push_back(check_interior_edges(a, n, variant));
  }
  if (wanted(LemmaId::L8_DISK_INTERSECTIONS)) {
    out.push_back(check_disk_intersections(n, variant));
  }
  if (wanted(LemmaId::POLYHEDRALITY) || wanted(LemmaId::SPHERE)) {
    const PolyhedralSphere q = build_bipyramid_sphere(n, variant, SiteSelection::auto_sites());
    if (wanted(LemmaId::POLYHEDRALITY)) out.push_back(check_polyhedrality(q));
    if (wanted(LemmaId::SPHERE)) out.push_back(check_sphere_3(q));
  }
  if (wanted(LemmaId::THEOREM1)) {
    out.push_back(verify_theorem(n, variant));
  }
  return out;
}

}  // namespace spherewright
