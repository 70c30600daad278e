#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kcat/report.hpp"

namespace kcat::pndp {

/// Dimension data of a point-like PNDP manifold with base B = B_1 x B_2 and
/// Kuranishi fiber over I_3 x I_4.
struct PNDPSpec {
  std::string id;
  std::int64_t dim_b1 = 0;
  std::int64_t dim_b2 = 0;
  std::int64_t fiber_dims = 2;
  std::int64_t rank_e = 0;

  std::int64_t dim_b() const { return dim_b1 + dim_b2; }
};

struct VirtualDimension {
  std::int64_t dim_f = 0;
  std::int64_t dim_m = 0;
  friend bool operator==(const VirtualDimension&, const VirtualDimension&) = default;
};

/// dim F = fiber dims - rank E, dim M = dim B + dim F. Throws StructuralError
/// on negative inputs.
VirtualDimension virtual_dimension(const PNDPSpec& s);

/// Points 0..n-1 (n <= 64) with open sets as bitmasks.
struct FiniteTopSpace {
  std::vector<std::string> points;
  std::vector<std::uint64_t> opens;

  std::uint64_t whole() const;
  /// Contains the empty set and the whole set, closed under pairwise
  /// union and intersection, no bits outside the point set.
  ValidationReport check_axioms() const;
  /// All subsets open. Throws OverflowError beyond kMaxDiscretePoints.
  static FiniteTopSpace discrete(std::vector<std::string> points);
};

inline constexpr std::size_t kMaxDiscretePoints = 16;

/// Every singleton is open. Throws StructuralError when the axioms fail.
bool is_discrete_space(const FiniteTopSpace& t);

struct PointWitness {
  std::string point;
  /// Smallest open set containing the point.
  std::uint64_t neighborhood = 0;
  bool singleton = false;
};

struct ZeroManifoldReport {
  bool locally_point = false;
  bool discrete = false;
  bool agree = false;
  std::vector<PointWitness> witnesses;
};

/// Compares "every point has an open neighborhood homeomorphic to a point"
/// with discreteness. Throws StructuralError when the axioms fail.
ZeroManifoldReport zero_manifold_equiv(const FiniteTopSpace& t);

/// One point per spec, discrete topology. Throws NonPointlikeError naming
/// the first spec with dim M != 0.
FiniteTopSpace emerge_brane_points(const std::vector<PNDPSpec>& specs);

}  // namespace kcat::pndp
