#pragma once

// Independent oracles and generators shared by the test binaries. Everything
// here recomputes from first principles; nothing reuses the library's own
// enumeration paths.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "spherewright/complex.hpp"

namespace spherewright::testing {

/// Literal evenness statement: every outside pair x < y straddles an even
/// number of candidate elements.
inline bool brute_gale(const std::vector<int>& candidate, int m) {
  std::set<int> inside(candidate.begin(), candidate.end());
  for (int x = 1; x <= m; ++x) {
    if (inside.count(x)) continue;
    for (int y = x + 1; y <= m; ++y) {
      if (inside.count(y)) continue;
      int between = 0;
      for (int z : candidate) {
        if (x < z && z < y) ++between;
      }
      if (between % 2 != 0) return false;
    }
  }
  return true;
}

/// All k-subsets of the given sorted labels.
inline std::vector<std::vector<int>> k_subsets(const std::vector<int>& labels, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(pick.size()) == k) {
      out.push_back(pick);
      return;
    }
    for (std::size_t i = start; i < labels.size(); ++i) {
      pick.push_back(labels[i]);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Brute face count: k-subsets of the vertex union contained in some facet.
inline long brute_face_count(const std::vector<Simplex>& facets, int k) {
  std::set<int> labels;
  for (const Simplex& f : facets) labels.insert(f.vertices().begin(), f.vertices().end());
  long count = 0;
  for (const auto& sub : k_subsets({labels.begin(), labels.end()}, k + 1)) {
    for (const Simplex& f : facets) {
      if (std::includes(f.vertices().begin(), f.vertices().end(), sub.begin(), sub.end())) {
        ++count;
        break;
      }
    }
  }
  return count;
}

/// Exhaustive isomorphism test over every vertex bijection. Usable up to
/// 9 vertices or so.
inline bool brute_isomorphic(const SimplicialComplex& x, const SimplicialComplex& y) {
  const auto vx = x.vertex_set();
  const auto vy = y.vertex_set();
  if (vx.size() != vy.size() || x.facet_count() != y.facet_count()) return false;
  std::vector<std::vector<int>> target;
  for (const Simplex& f : y.facets()) target.push_back(f.vertices());
  std::sort(target.begin(), target.end());
  // facets of x as indices into vx
  std::vector<std::vector<int>> source;
  for (const Simplex& f : x.facets()) {
    std::vector<int> idx;
    for (int v : f.vertices()) {
      idx.push_back(static_cast<int>(
          std::lower_bound(vx.begin(), vx.end(), v) - vx.begin()));
    }
    source.push_back(std::move(idx));
  }
  std::vector<int> image = vy;
  std::sort(image.begin(), image.end());
  std::vector<int> mapped(4);
  do {
    bool all = true;
    for (const auto& f : source) {
      mapped.clear();
      for (int i : f) mapped.push_back(image[static_cast<std::size_t>(i)]);
      std::sort(mapped.begin(), mapped.end());
      if (!std::binary_search(target.begin(), target.end(), mapped)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  } while (std::next_permutation(image.begin(), image.end()));
  return false;
}

/// Complete isomorphism decision for connected closed 3-pseudomanifolds,
/// independent of the canonical-form machinery: a candidate map is seeded by
/// sending one ordered facet of x onto each ordered facet of y and then
/// propagates uniquely across triangle gluings (every triangle lies in
/// exactly two facets), so it suffices to test all 24 * facet-count seeds.
inline bool propagation_isomorphic(const SimplicialComplex& x, const SimplicialComplex& y) {
  if (x.facet_count() != y.facet_count()) return false;
  auto facet_across = [](const SimplicialComplex& z, const Simplex& tri, const Simplex& from) {
    for (const Simplex& f : z.facets()) {
      if (f != from && f.contains(tri)) return f;
    }
    return Simplex{};
  };
  const std::set<Simplex> target(y.facets().begin(), y.facets().end());
  const Simplex seed = x.facets().front();
  for (const Simplex& g : y.facets()) {
    std::vector<VertexId> image = g.vertices();
    do {
      std::map<VertexId, VertexId> phi;
      for (std::size_t i = 0; i < seed.size(); ++i) phi[seed[i]] = image[i];
      bool ok = true;
      std::vector<std::pair<Simplex, Simplex>> frontier{{seed, g}};
      std::set<Simplex> visited{seed};
      while (ok && !frontier.empty()) {
        const auto [fx, fy] = frontier.back();
        frontier.pop_back();
        for (const Simplex& tri : fx.faces_of_dim(2)) {
          const Simplex nx = facet_across(x, tri, fx);
          if (nx.empty() || visited.count(nx)) continue;
          std::vector<VertexId> tv;
          for (VertexId v : tri.vertices()) tv.push_back(phi.at(v));
          const Simplex tri_y{std::move(tv)};
          const Simplex ny = facet_across(y, tri_y, fy);
          if (ny.empty()) {
            ok = false;
            break;
          }
          VertexId vx = 0, vy = 0;
          for (VertexId v : nx.vertices()) {
            if (!tri.has_vertex(v)) vx = v;
          }
          for (VertexId v : ny.vertices()) {
            if (!tri_y.has_vertex(v)) vy = v;
          }
          const auto it = phi.find(vx);
          if (it != phi.end()) {
            if (it->second != vy) {
              ok = false;
              break;
            }
          } else {
            phi[vx] = vy;
          }
          visited.insert(nx);
          frontier.emplace_back(nx, ny);
        }
      }
      if (ok && visited.size() == x.facet_count()) {
        std::set<VertexId> images;
        for (const auto& [from, to] : phi) images.insert(to);
        bool bijective_onto_facets = images.size() == phi.size();
        for (const Simplex& f : x.facets()) {
          if (!bijective_onto_facets) break;
          std::vector<VertexId> mapped;
          for (VertexId v : f.vertices()) mapped.push_back(phi.at(v));
          bijective_onto_facets = target.count(Simplex{std::move(mapped)}) > 0;
        }
        if (bijective_onto_facets) return true;
      }
    } while (std::next_permutation(image.begin(), image.end()));
  }
  return false;
}

/// Random bijection of the complex's vertex set onto 1..k (offset shifts the
/// target labels).
inline std::map<int, int> random_relabeling(const SimplicialComplex& x, std::mt19937_64& rng,
                                            int offset = 0) {
  const auto verts = x.vertex_set();
  std::vector<int> image(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) image[i] = static_cast<int>(i) + 1 + offset;
  std::shuffle(image.begin(), image.end(), rng);
  std::map<int, int> perm;
  for (std::size_t i = 0; i < verts.size(); ++i) perm[verts[i]] = image[i];
  return perm;
}

}  // namespace spherewright::testing
