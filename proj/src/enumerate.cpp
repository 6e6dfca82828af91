#include "spherewright/enumerate.hpp"

#include <algorithm>
#include <map>

#include "spherewright/errors.hpp"
#include "spherewright/parallel.hpp"

namespace spherewright {

TriangulationMask TriangulationMask::all_two(std::size_t count) {
  return TriangulationMask{std::vector<SplitMode>(count, SplitMode::Two)};
}

TriangulationMask TriangulationMask::from_index(std::uint64_t index, std::size_t count) {
  TriangulationMask m;
  m.bits.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    m.bits.push_back((index >> i) & 1u ? SplitMode::Three : SplitMode::Two);
  }
  return m;
}

TriangulationMask TriangulationMask::from_string(const std::string& s) {
  TriangulationMask m;
  m.bits.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '0') {
      m.bits.push_back(SplitMode::Two);
    } else if (s[i] == '1') {
      m.bits.push_back(SplitMode::Three);
    } else {
      throw ParseError("mask characters must be 0 or 1", 1, static_cast<int>(i) + 1);
    }
  }
  return m;
}

std::string TriangulationMask::str() const {
  std::string s;
  s.reserve(bits.size());
  for (SplitMode b : bits) s.push_back(b == SplitMode::Two ? '0' : '1');
  return s;
}

std::size_t TriangulationMask::three_count() const {
  return static_cast<std::size_t>(
      std::count(bits.begin(), bits.end(), SplitMode::Three));
}

std::vector<Simplex> split_bipyramid(const BipyramidCell& cell, SplitMode mode) {
  std::vector<Simplex> out;
  if (mode == SplitMode::Two) {
    for (VertexId apex : cell.apexes.vertices()) out.push_back(cell.equator.with(apex));
  } else {
    for (const Simplex& e : cell.equator.faces_of_dim(1)) {
      out.push_back(cell.apexes.union_with(e));
    }
  }
  return out;
}

SimplicialComplex realize(const PolyhedralSphere& q, const TriangulationMask& mask) {
  if (mask.bits.size() != q.bipyramids.size()) {
    throw MaskLengthMismatchError("mask has " + std::to_string(mask.bits.size()) +
                                  " bits for " + std::to_string(q.bipyramids.size()) + " sites");
  }
  std::vector<Simplex> facets = q.tetrahedra;
  for (std::size_t i = 0; i < q.bipyramids.size(); ++i) {
    const auto tets = split_bipyramid(q.bipyramids[i], mask.bits[i]);
    facets.insert(facets.end(), tets.begin(), tets.end());
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

std::vector<std::size_t> ClassTable::class_sizes() const {
  std::vector<std::size_t> out;
  out.reserve(classes.size());
  for (const MaskClass& c : classes) out.push_back(c.masks.size());
  std::sort(out.rbegin(), out.rend());
  return out;
}

ClassTable count_distinct_classes(const PolyhedralSphere& q, std::uint64_t limit) {
  const std::size_t m = q.bipyramids.size();
  if (m >= 63 || (std::uint64_t{1} << m) > limit) {
    throw LimitExceededError("2^" + std::to_string(m) + " masks exceed the limit of " +
                             std::to_string(limit));
  }
  const std::uint64_t total = std::uint64_t{1} << m;
  std::vector<SimplicialComplex> realized;
  realized.reserve(total);
  for (std::uint64_t j = 0; j < total; ++j) {
    realized.push_back(realize(q, TriangulationMask::from_index(j, m)));
  }
  const std::vector<CanonicalForm> forms = canonical_forms(realized);

  std::map<std::vector<Simplex>, std::size_t> bucket_of;
  ClassTable table;
  for (std::uint64_t j = 0; j < total; ++j) {
    const auto [it, fresh] = bucket_of.try_emplace(forms[j].facets, table.classes.size());
    if (fresh) {
      MaskClass c;
      c.f = realized[j].f_vector();
      c.canonical_facets = forms[j].facets;
      table.classes.push_back(std::move(c));
    }
    table.classes[it->second].masks.push_back(TriangulationMask::from_index(j, m));
  }
  return table;
}

ClassTable count_distinct_classes(int n, Variant variant, std::uint64_t limit) {
  return count_distinct_classes(build_bipyramid_sphere(n, variant), limit);
}

std::uint64_t distinct_floor_bound(std::uint64_t mask_count, std::size_t vertex_count) {
  if (mask_count == 0) return 0;
  std::uint64_t factorial = 1;
  for (std::size_t v = 2; v <= vertex_count; ++v) {
    if (factorial >= mask_count) return 1;  // further factors only shrink the quotient
    factorial *= v;
  }
  return (mask_count + factorial - 1) / factorial;
}

std::vector<CanonicalForm> canonical_forms_serial(const std::vector<SimplicialComplex>& xs,
                                                  int max_vertices) {
  std::vector<CanonicalForm> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = canonical_form(xs[i], max_vertices);
  return out;
}

std::vector<CanonicalForm> canonical_forms(const std::vector<SimplicialComplex>& xs,
                                           int max_vertices) {
  // Size errors must not escape the parallel region.
  for (const SimplicialComplex& x : xs) {
    if (static_cast<int>(x.vertex_set().size()) > max_vertices) {
      throw TooLargeError("canonical form limited to " + std::to_string(max_vertices) +
                          " vertices, got " + std::to_string(x.vertex_set().size()));
    }
  }
  std::vector<CanonicalForm> out(xs.size());
  const auto count = static_cast<std::int64_t>(xs.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
  for (std::int64_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] =
        canonical_form(xs[static_cast<std::size_t>(i)], max_vertices);
  }
  return out;
}

}  // namespace spherewright
