#include "spherewright/complex.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "spherewright/errors.hpp"
#include "spherewright/parallel.hpp"

namespace spherewright {

long FVector::euler() const {
  long e = 0;
  int sign = 1;
  for (long c : counts) {
    e += sign * c;
    sign = -sign;
  }
  return e;
}

std::string FVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) os << ',';
    os << counts[i];
  }
  os << ')';
  return os.str();
}

std::string to_string(SurfaceClass c) {
  switch (c) {
    case SurfaceClass::Sphere2: return "SPHERE_2";
    case SurfaceClass::Ball2: return "BALL_2";
    case SurfaceClass::Circle1: return "CIRCLE_1";
    case SurfaceClass::Other: return "OTHER";
  }
  return "OTHER";
}

struct SimplicialComplex::FaceCache {
  std::array<std::once_flag, 4> flags;
  std::array<std::vector<Simplex>, 4> faces;
};

SimplicialComplex::SimplicialComplex() : cache_(std::make_shared<FaceCache>()) {}

SimplicialComplex::SimplicialComplex(std::vector<Simplex> facets)
    : facets_(std::move(facets)), cache_(std::make_shared<FaceCache>()) {}

SimplicialComplex::SimplicialComplex(const SimplicialComplex& other)
    : facets_(other.facets_), cache_(std::make_shared<FaceCache>()) {}

SimplicialComplex& SimplicialComplex::operator=(const SimplicialComplex& other) {
  if (this != &other) {
    facets_ = other.facets_;
    cache_ = std::make_shared<FaceCache>();
  }
  return *this;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Simplex> facets) {
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  if (!facets.empty()) {
    const int d = facets.front().dimension();
    for (const Simplex& f : facets) {
      if (f.dimension() != d) {
        throw MixedDimensionsError("facets of dimension " + std::to_string(d) + " and " +
                                   std::to_string(f.dimension()) + " mixed");
      }
    }
    if (d < 0) throw MixedDimensionsError("the empty simplex is not a facet");
  }
  return SimplicialComplex(std::move(facets));
}

SimplicialComplex build_complex(std::vector<Simplex> facets) {
  return SimplicialComplex::from_facets(std::move(facets));
}

int SimplicialComplex::dimension() const {
  return facets_.empty() ? -1 : facets_.front().dimension();
}

const std::vector<Simplex>& SimplicialComplex::faces(int k) const {
  static const std::vector<Simplex> kEmpty;
  if (k < 0 || k > 3 || k > dimension()) return kEmpty;
  std::call_once(cache_->flags[k], [&] {
    std::vector<Simplex> out;
    if (k == dimension()) {
      out = facets_;
    } else {
      for (const Simplex& f : facets_) {
        auto sub = f.faces_of_dim(k);
        out.insert(out.end(), sub.begin(), sub.end());
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    cache_->faces[k] = std::move(out);
  });
  return cache_->faces[k];
}

std::vector<Simplex> SimplicialComplex::all_faces() const {
  std::vector<Simplex> out;
  for (int k = 0; k <= dimension(); ++k) {
    const auto& fk = faces(k);
    out.insert(out.end(), fk.begin(), fk.end());
  }
  return out;
}

std::vector<VertexId> SimplicialComplex::vertex_set() const {
  std::vector<VertexId> out;
  for (const Simplex& v : faces(0)) out.push_back(v[0]);
  return out;
}

bool SimplicialComplex::contains(const Simplex& f) const {
  if (f.empty()) return !facets_.empty();
  for (const Simplex& g : facets_) {
    if (g.contains(f)) return true;
  }
  return false;
}

FVector SimplicialComplex::f_vector() const {
  FVector fv;
  for (int k = 0; k <= dimension(); ++k) {
    fv.counts.push_back(static_cast<long>(faces(k).size()));
  }
  return fv;
}

SimplicialComplex SimplicialComplex::link(const Simplex& f) const {
  if (!contains(f)) {
    throw FaceNotInComplexError("link of " + f.str() + ": not a face");
  }
  std::vector<Simplex> out;
  for (const Simplex& g : facets_) {
    if (g.contains(f)) {
      Simplex rest = g;
      for (VertexId v : f.vertices()) rest = rest.without(v);
      if (!rest.empty()) out.push_back(std::move(rest));
    }
  }
  return from_facets(std::move(out));  // empty when f is a facet
}

SimplicialComplex SimplicialComplex::boundary() const {
  const int d = dimension();
  if (d < 1) return SimplicialComplex();
  const auto& ridges = faces(d - 1);
  std::vector<int> count(ridges.size(), 0);
  for (const Simplex& g : facets_) {
    for (const Simplex& r : g.boundary_faces()) {
      auto it = std::lower_bound(ridges.begin(), ridges.end(), r);
      ++count[static_cast<std::size_t>(it - ridges.begin())];
    }
  }
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < ridges.size(); ++i) {
    if (count[i] == 1) out.push_back(ridges[i]);
  }
  return from_facets(std::move(out));
}

bool SimplicialComplex::is_connected() const {
  if (facets_.empty()) return false;
  const auto verts = vertex_set();
  if (verts.size() == 1) return true;
  std::map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;
  std::vector<std::vector<std::size_t>> adj(verts.size());
  for (const Simplex& e : faces(1)) {
    const std::size_t a = index[e[0]], b = index[e[1]];
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(verts.size(), 0);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!q.empty()) {
    const std::size_t v = q.front();
    q.pop();
    for (std::size_t w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  return reached == verts.size();
}

bool SimplicialComplex::is_closed_pseudomanifold3() const {
  if (dimension() != 3) return false;
  if (!is_connected()) return false;
  const auto& tris = faces(2);
  std::vector<int> count(tris.size(), 0);
  for (const Simplex& g : facets_) {
    for (const Simplex& t : g.boundary_faces()) {
      auto it = std::lower_bound(tris.begin(), tris.end(), t);
      ++count[static_cast<std::size_t>(it - tris.begin())];
    }
  }
  for (int c : count) {
    if (c != 2) return false;
  }
  for (const Simplex& e : faces(1)) {
    if (!link(e).is_connected()) return false;
  }
  for (const Simplex& v : faces(0)) {
    if (!link(v).is_connected()) return false;
  }
  return true;
}

SurfaceClass SimplicialComplex::classify_surface() const {
  const int d = dimension();
  if (d != 1 && d != 2) {
    throw WrongDimensionError("classify_surface needs a 1- or 2-complex, got dimension " +
                              std::to_string(d));
  }
  if (d == 1) {
    if (!is_connected()) return SurfaceClass::Other;
    std::map<VertexId, int> degree;
    for (const Simplex& e : facets_) {
      ++degree[e[0]];
      ++degree[e[1]];
    }
    for (const auto& [v, deg] : degree) {
      if (deg != 2) return SurfaceClass::Other;
    }
    return SurfaceClass::Circle1;
  }
  // d == 2
  const auto& edges = faces(1);
  std::vector<int> count(edges.size(), 0);
  for (const Simplex& t : facets_) {
    for (const Simplex& e : t.boundary_faces()) {
      auto it = std::lower_bound(edges.begin(), edges.end(), e);
      ++count[static_cast<std::size_t>(it - edges.begin())];
    }
  }
  const bool connected = is_connected();
  const long euler = f_vector().euler();
  bool closed = true, at_most_two = true;
  for (int c : count) {
    if (c != 2) closed = false;
    if (c > 2) at_most_two = false;
  }
  if (connected && closed && euler == 2) {
    bool links_ok = true;
    for (const Simplex& v : faces(0)) {
      if (link(v).classify_surface() != SurfaceClass::Circle1) {
        links_ok = false;
        break;
      }
    }
    if (links_ok) return SurfaceClass::Sphere2;
  }
  if (connected && at_most_two && euler == 1) {
    const SimplicialComplex bd = boundary();
    if (!bd.empty() && bd.classify_surface() == SurfaceClass::Circle1) {
      return SurfaceClass::Ball2;
    }
  }
  return SurfaceClass::Other;
}

namespace {

// Rank of a GF(2) matrix given as bitset rows.
int gf2_rank(std::vector<std::vector<std::uint64_t>> rows, std::size_t ncols) {
  int rank = 0;
  std::vector<std::size_t> pivot_col;
  std::vector<std::vector<std::uint64_t>*> pivots;
  for (auto& row : rows) {
    for (std::size_t p = 0; p < pivots.size(); ++p) {
      const std::size_t c = pivot_col[p];
      if (row[c >> 6] >> (c & 63) & 1u) {
        const auto& pr = *pivots[p];
        for (std::size_t w = 0; w < row.size(); ++w) row[w] ^= pr[w];
      }
    }
    std::size_t lead = ncols;
    for (std::size_t w = 0; w < row.size() && lead == ncols; ++w) {
      if (row[w]) lead = (w << 6) + static_cast<std::size_t>(std::countr_zero(row[w]));
    }
    if (lead < ncols) {
      pivot_col.push_back(lead);
      pivots.push_back(&row);
      ++rank;
    }
  }
  return rank;
}

}  // namespace

std::vector<int> SimplicialComplex::betti_mod2() const {
  const int d = dimension();
  if (d < 0) return {};
  std::vector<int> rank_bd(static_cast<std::size_t>(d) + 2, 0);  // rank of d_k, k = 0..d+1
  for (int k = 1; k <= d; ++k) {
    const auto& rows_faces = faces(k);
    const auto& cols_faces = faces(k - 1);
    const std::size_t words = (cols_faces.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(rows_faces.size());
    for (const Simplex& f : rows_faces) {
      std::vector<std::uint64_t> row(words, 0);
      for (const Simplex& sub : f.boundary_faces()) {
        auto it = std::lower_bound(cols_faces.begin(), cols_faces.end(), sub);
        const std::size_t j = static_cast<std::size_t>(it - cols_faces.begin());
        row[j >> 6] ^= (std::uint64_t{1} << (j & 63));
      }
      rows.push_back(std::move(row));
    }
    rank_bd[static_cast<std::size_t>(k)] = gf2_rank(std::move(rows), cols_faces.size());
  }
  std::vector<int> betti(static_cast<std::size_t>(d) + 1, 0);
  for (int k = 0; k <= d; ++k) {
    const int fk = static_cast<int>(faces(k).size());
    betti[static_cast<std::size_t>(k)] =
        fk - rank_bd[static_cast<std::size_t>(k)] - rank_bd[static_cast<std::size_t>(k) + 1];
  }
  return betti;
}

std::vector<SurfaceClass> vertex_link_classes_serial(const SimplicialComplex& x) {
  const auto verts = x.faces(0);
  std::vector<SurfaceClass> out(verts.size(), SurfaceClass::Other);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    out[i] = x.link(verts[i]).classify_surface();
  }
  return out;
}

std::vector<SurfaceClass> vertex_link_classes(const SimplicialComplex& x) {
  const auto verts = x.faces(0);
  std::vector<SurfaceClass> out(verts.size(), SurfaceClass::Other);
  const auto n = static_cast<std::int64_t>(verts.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
  for (std::int64_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] =
        x.link(verts[static_cast<std::size_t>(i)]).classify_surface();
  }
  return out;
}

}  // namespace spherewright
