#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace kcat::complex {

/// Vertex labels in increasing order; orientation follows that order.
using Simplex = std::vector<std::uint32_t>;

/// Finite abstract simplicial complex, closed under faces. Simplices of
/// each dimension are kept in lexicographic order, which fixes the basis
/// of every cochain group.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Closure of the given simplices under taking faces. Vertex order inside
  /// a simplex is ignored; repeated vertices are a StructuralError.
  static SimplicialComplex from_facets(const std::vector<Simplex>& facets);

  /// The simplices exactly as listed. Throws StructuralError on repeated
  /// vertices, duplicate simplices or a missing face.
  static SimplicialComplex from_simplices(const std::vector<Simplex>& simplices);

  bool empty() const { return by_dim_.empty(); }
  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }

  const std::vector<Simplex>& simplices(std::size_t dim) const;
  std::size_t count(std::size_t dim) const { return dim < by_dim_.size() ? by_dim_[dim].size() : 0; }
  std::size_t total_count() const;
  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  /// Alternating sum of simplex counts.
  std::int64_t euler_characteristic() const;
  std::uint32_t max_vertex() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) { return a.by_dim_ == b.by_dim_; }

 private:
  void index();

  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, std::size_t>> index_;
};

/// Barycentric subdivision. Vertex k of the result is the k-th simplex of
/// the input in (dimension, lexicographic) order; simplices are the strict
/// chains of faces.
SimplicialComplex barycentric_refine(const SimplicialComplex& k);

/// Cone on `sub` glued to `whole` along `sub`, with a fresh apex vertex:
/// the simplicial model of the pushout whole ← sub → point, i.e. of the
/// quotient whole/sub. Throws StructuralError unless sub ⊆ whole.
SimplicialComplex collapse_subcomplex(const SimplicialComplex& whole, const SimplicialComplex& sub);

/// Boundary of the standard n-simplex on vertices 0..n.
SimplicialComplex simplex_boundary(std::size_t n);
/// The full standard n-simplex on vertices 0..n.
SimplicialComplex solid_simplex(std::size_t n);
/// Minimal 7-vertex triangulation of the torus.
SimplicialComplex minimal_torus();

}  // namespace kcat::complex
