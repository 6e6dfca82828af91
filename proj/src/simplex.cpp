#include "spherewright/simplex.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace spherewright {

namespace {

std::vector<VertexId> normalized(std::vector<VertexId> vs) {
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) {
    throw std::invalid_argument("duplicate vertex in simplex");
  }
  if (!vs.empty() && vs.front() < 1) {
    throw std::invalid_argument("vertex labels are 1-based");
  }
  return vs;
}

}  // namespace

Simplex::Simplex(std::initializer_list<VertexId> vs)
    : v_(normalized(std::vector<VertexId>(vs))) {}

Simplex::Simplex(std::vector<VertexId> vs) : v_(normalized(std::move(vs))) {}

bool Simplex::has_vertex(VertexId v) const {
  return std::binary_search(v_.begin(), v_.end(), v);
}

bool Simplex::contains(const Simplex& other) const {
  return std::includes(v_.begin(), v_.end(), other.v_.begin(), other.v_.end());
}

Simplex Simplex::intersection(const Simplex& other) const {
  std::vector<VertexId> out;
  std::set_intersection(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                        std::back_inserter(out));
  Simplex s;
  s.v_ = std::move(out);
  return s;
}

Simplex Simplex::union_with(const Simplex& other) const {
  std::vector<VertexId> out;
  std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                 std::back_inserter(out));
  Simplex s;
  s.v_ = std::move(out);
  return s;
}

Simplex Simplex::without(VertexId v) const {
  Simplex s;
  s.v_.reserve(v_.size());
  for (VertexId w : v_) {
    if (w != v) s.v_.push_back(w);
  }
  return s;
}

Simplex Simplex::with(VertexId v) const {
  return union_with(Simplex{v});
}

std::vector<Simplex> Simplex::faces_of_dim(int k) const {
  std::vector<Simplex> out;
  if (k < -1 || k + 1 > static_cast<int>(v_.size())) return out;
  if (k == -1) {
    out.emplace_back();
    return out;
  }
  const std::size_t pick = static_cast<std::size_t>(k) + 1;
  std::vector<std::size_t> idx(pick);
  for (std::size_t i = 0; i < pick; ++i) idx[i] = i;
  while (true) {
    Simplex f;
    f.v_.reserve(pick);
    for (std::size_t i : idx) f.v_.push_back(v_[i]);
    out.push_back(std::move(f));
    // next combination
    std::size_t i = pick;
    while (i > 0 && idx[i - 1] == v_.size() - pick + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < pick; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<Simplex> Simplex::boundary_faces() const {
  return faces_of_dim(dimension() - 1);
}

std::string Simplex::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Simplex& s) {
  os << '{';
  for (std::size_t i = 0; i < s.v_.size(); ++i) {
    if (i) os << ',';
    os << s.v_[i];
  }
  os << '}';
  return os;
}

}  // namespace spherewright
