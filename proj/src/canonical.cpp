#include "spherewright/canonical.hpp"

#include <algorithm>
#include <stdexcept>

#include "spherewright/errors.hpp"

namespace spherewright {

namespace {

/// Search state shared across the individualization-refinement tree. Vertices
/// are 0-based indices into a sorted id list; colors are dense 0-based ranks.
struct Canonicalizer {
  std::vector<VertexId> ids;                  // index -> original label
  std::vector<std::vector<int>> facets;       // vertex indices, sorted
  std::vector<std::vector<int>> at_vertex;    // vertex index -> facet indices
  std::vector<Simplex> best;
  std::vector<int> best_color;
  bool have_best = false;

  /// Replaces colors by dense ranks of per-vertex keys and iterates until the
  /// partition stops splitting. Keys depend only on the current coloring and
  /// the facet structure, so the refinement commutes with isomorphisms.
  std::vector<int> refine(std::vector<int> color) const {
    const std::size_t k = ids.size();
    while (true) {
      std::vector<std::vector<int>> keys(k);
      for (std::size_t v = 0; v < k; ++v) {
        std::vector<std::vector<int>> tuples;
        tuples.reserve(at_vertex[v].size());
        for (int fi : at_vertex[v]) {
          std::vector<int> t;
          for (int w : facets[static_cast<std::size_t>(fi)]) {
            if (static_cast<std::size_t>(w) != v) t.push_back(color[static_cast<std::size_t>(w)]);
          }
          std::sort(t.begin(), t.end());
          tuples.push_back(std::move(t));
        }
        std::sort(tuples.begin(), tuples.end());
        std::vector<int>& key = keys[v];
        key.push_back(color[v]);
        for (const auto& t : tuples) {
          key.push_back(-1);
          key.insert(key.end(), t.begin(), t.end());
        }
      }
      std::vector<std::vector<int>> uniq = keys;
      std::sort(uniq.begin(), uniq.end());
      uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
      std::vector<int> seen = color;
      std::sort(seen.begin(), seen.end());
      seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
      for (std::size_t v = 0; v < k; ++v) {
        color[v] = static_cast<int>(
            std::lower_bound(uniq.begin(), uniq.end(), keys[v]) - uniq.begin());
      }
      if (uniq.size() == seen.size()) return color;
    }
  }

  void visit(std::vector<int> color) {
    color = refine(std::move(color));
    const std::size_t k = ids.size();
    // first class with two or more members
    int branch_color = -1;
    {
      std::vector<int> class_size(k, 0);
      for (int c : color) ++class_size[static_cast<std::size_t>(c)];
      for (std::size_t c = 0; c < k; ++c) {
        if (class_size[c] > 1) {
          branch_color = static_cast<int>(c);
          break;
        }
      }
    }
    if (branch_color < 0) {
      std::vector<Simplex> image;
      image.reserve(facets.size());
      for (const auto& f : facets) {
        std::vector<VertexId> labels;
        labels.reserve(f.size());
        for (int w : f) labels.push_back(color[static_cast<std::size_t>(w)] + 1);
        image.emplace_back(std::move(labels));
      }
      std::sort(image.begin(), image.end());
      if (!have_best || image < best) {
        best = std::move(image);
        best_color = std::move(color);
        have_best = true;
      }
      return;
    }
    for (std::size_t v = 0; v < k; ++v) {
      if (color[v] != branch_color) continue;
      std::vector<int> split(k);
      for (std::size_t w = 0; w < k; ++w) {
        split[w] = 2 * color[w] + (w == v ? 0 : 1);
      }
      visit(std::move(split));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const SimplicialComplex& x, int max_vertices) {
  CanonicalForm form;
  if (x.empty()) return form;
  Canonicalizer cz;
  cz.ids = x.vertex_set();
  if (static_cast<int>(cz.ids.size()) > max_vertices) {
    throw TooLargeError("canonical form limited to " + std::to_string(max_vertices) +
                        " vertices, got " + std::to_string(cz.ids.size()));
  }
  const std::size_t k = cz.ids.size();
  cz.at_vertex.resize(k);
  for (const Simplex& f : x.facets()) {
    std::vector<int> idx;
    idx.reserve(f.size());
    for (VertexId v : f.vertices()) {
      const auto it = std::lower_bound(cz.ids.begin(), cz.ids.end(), v);
      idx.push_back(static_cast<int>(it - cz.ids.begin()));
    }
    const int fi = static_cast<int>(cz.facets.size());
    for (int w : idx) cz.at_vertex[static_cast<std::size_t>(w)].push_back(fi);
    cz.facets.push_back(std::move(idx));
  }
  cz.visit(std::vector<int>(k, 0));

  form.facets = cz.best;
  for (std::size_t v = 0; v < k; ++v) {
    form.relabeling.emplace_back(cz.ids[v], cz.best_color[v] + 1);
  }
  return form;
}

bool are_isomorphic(const SimplicialComplex& x, const SimplicialComplex& y, int max_vertices) {
  if (x.facet_count() != y.facet_count() || x.dimension() != y.dimension()) return false;
  if (x.f_vector() != y.f_vector()) return false;
  return canonical_form(x, max_vertices) == canonical_form(y, max_vertices);
}

SimplicialComplex relabel_complex(const SimplicialComplex& x,
                                  const std::map<VertexId, VertexId>& perm) {
  std::vector<Simplex> out;
  out.reserve(x.facet_count());
  for (const Simplex& f : x.facets()) {
    std::vector<VertexId> labels;
    labels.reserve(f.size());
    for (VertexId v : f.vertices()) {
      const auto it = perm.find(v);
      if (it == perm.end()) {
        throw std::invalid_argument("relabeling misses vertex " + std::to_string(v));
      }
      labels.push_back(it->second);
    }
    out.emplace_back(std::move(labels));  // throws on collisions
  }
  return SimplicialComplex::from_facets(std::move(out));
}

}  // namespace spherewright
