#include "spherewright/cyclic.hpp"

#include <algorithm>

#include "spherewright/errors.hpp"
#include "spherewright/parallel.hpp"

namespace spherewright {

bool is_gale_facet(const Simplex& candidate, int m) {
  if (m < 5) throw GroundSetTooSmallError("ground set [" + std::to_string(m) + "] too small");
  const auto& in = candidate.vertices();
  if (in.size() != 4 || in.back() > m) {
    throw OutOfRangeError("gale candidate must be a 4-subset of [" + std::to_string(m) + "]");
  }
  // Between two consecutive outside elements the count of candidate elements
  // is fixed, so checking consecutive outside pairs covers every x < y pair.
  int prev_outside = 0;  // sentinel before label 1
  bool first = true;
  for (int x = 1; x <= m; ++x) {
    if (candidate.has_vertex(x)) continue;
    if (!first) {
      int between = 0;
      for (VertexId z : in) {
        if (prev_outside < z && z < x) ++between;
      }
      if (between % 2 != 0) return false;
    }
    first = false;
    prev_outside = x;
  }
  return true;
}

std::vector<Simplex> cyclic_facets_serial(int m) {
  if (m < 5) throw GroundSetTooSmallError("ground set [" + std::to_string(m) + "] too small");
  std::vector<Simplex> out;
  for (int a = 1; a <= m - 3; ++a) {
    for (int b = a + 1; b <= m - 2; ++b) {
      for (int c = b + 1; c <= m - 1; ++c) {
        for (int d = c + 1; d <= m; ++d) {
          Simplex s{a, b, c, d};
          if (is_gale_facet(s, m)) out.push_back(std::move(s));
        }
      }
    }
  }
  return out;
}

std::vector<Simplex> cyclic_facets(int m) {
  if (m < 5) throw GroundSetTooSmallError("ground set [" + std::to_string(m) + "] too small");
  std::vector<std::vector<Simplex>> per_a(static_cast<std::size_t>(m));
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
  for (int a = 1; a <= m - 3; ++a) {
    std::vector<Simplex>& slot = per_a[static_cast<std::size_t>(a - 1)];
    for (int b = a + 1; b <= m - 2; ++b) {
      for (int c = b + 1; c <= m - 1; ++c) {
        for (int d = c + 1; d <= m; ++d) {
          Simplex s{a, b, c, d};
          if (is_gale_facet(s, m)) slot.push_back(std::move(s));
        }
      }
    }
  }
  std::vector<Simplex> out;
  for (auto& slot : per_a) {
    out.insert(out.end(), std::make_move_iterator(slot.begin()),
               std::make_move_iterator(slot.end()));
  }
  return out;
}

std::vector<Simplex> cyclic_facets_adjacent_pairs(int m) {
  if (m < 5) throw GroundSetTooSmallError("ground set [" + std::to_string(m) + "] too small");
  // Pair i is {i, i+1} for i < m, and {m, 1} for i = m.
  auto pair_lo = [&](int i) { return i == m ? 1 : i; };
  auto pair_hi = [&](int i) { return i == m ? m : i + 1; };
  std::vector<Simplex> out;
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      const int il = pair_lo(i), ih = pair_hi(i), jl = pair_lo(j), jh = pair_hi(j);
      if (il == jl || il == jh || ih == jl || ih == jh) continue;
      out.push_back(Simplex{il, ih, jl, jh});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex cyclic_sphere(int m) {
  return SimplicialComplex::from_facets(cyclic_facets(m));
}

SimplicialComplex build_base_sphere(int n) {
  if (n < 1) throw InvalidNError("n must be at least 1, got " + std::to_string(n));
  return cyclic_sphere(4 * n + 4);
}

}  // namespace spherewright
