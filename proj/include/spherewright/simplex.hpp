#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace spherewright {

/// 1-based vertex label.
using VertexId = int;

/// A face given by its strictly increasing vertex labels. The empty simplex
/// (dimension -1) is a valid value and is a face of every nonempty complex.
class Simplex {
 public:
  Simplex() = default;
  Simplex(std::initializer_list<VertexId> vs);
  /// Sorts the input; throws std::invalid_argument on duplicates or labels < 1.
  explicit Simplex(std::vector<VertexId> vs);

  int dimension() const { return static_cast<int>(v_.size()) - 1; }
  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  const std::vector<VertexId>& vertices() const { return v_; }
  VertexId operator[](std::size_t i) const { return v_[i]; }

  bool has_vertex(VertexId v) const;
  /// other is a subset of this.
  bool contains(const Simplex& other) const;
  Simplex intersection(const Simplex& other) const;
  Simplex union_with(const Simplex& other) const;
  Simplex without(VertexId v) const;
  Simplex with(VertexId v) const;

  /// All k-dimensional subfaces, in lexicographic order.
  std::vector<Simplex> faces_of_dim(int k) const;
  /// Codimension-1 subfaces.
  std::vector<Simplex> boundary_faces() const;

  std::string str() const;  // "{2,3,5,6}"

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Simplex& s);

 private:
  std::vector<VertexId> v_;
};

}  // namespace spherewright
