#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kcat/cat/diagram.hpp"
#include "kcat/complex/simplicial_complex.hpp"
#include "kcat/kth/abelian_group.hpp"
#include "kcat/matrix.hpp"
#include "kcat/report.hpp"

namespace kcat::brane {

using complex::SimplicialComplex;

struct Brane {
  std::string id;
  std::size_t stack = 1;
  SimplicialComplex region;
};

/// Branes living on subcomplexes of a host complex. Two branes intersect
/// when their regions share a simplex (equivalently a vertex).
struct BraneConfig {
  SimplicialComplex host;
  std::vector<Brane> branes;

  /// Unique ids, stacks >= 1, regions nonempty subcomplexes of the host.
  ValidationReport validate() const;
  /// Index of a brane id; StructuralError when absent.
  std::size_t index_of(const std::string& id) const;
  bool intersects(std::size_t a, std::size_t b) const;
  /// Symmetric matrix of the relation, diagonal included.
  std::vector<std::vector<bool>> intersection_relation() const;
};

/// U(n_1) x ... x U(n_k) with n_1 >= ... >= n_k >= 1.
struct GaugeGroupExpr {
  std::vector<std::size_t> factors;

  std::size_t total_rank() const;
  /// "U(2) x U(1)"; "1" for the empty product.
  std::string to_string() const;
  friend bool operator==(const GaugeGroupExpr&, const GaugeGroupExpr&) = default;
};

/// One U(sum of stacks) per connected component of the intersection
/// relation. Throws StructuralError on an invalid config.
GaugeGroupExpr gauge_group(const BraneConfig& cfg);

struct StringConfig {
  std::string start;
  std::string end;
};

/// Same brane at both ends, or ends on intersecting branes. Throws
/// StructuralError for a dangling endpoint.
bool loop_nontrivial(const StringConfig& s, const BraneConfig& cfg);

/// Integer 3-cochain on the host, one value per 3-simplex in the
/// complex's order.
struct TwistAssignment {
  SimplicialComplex host;
  std::vector<Int> cochain;
};

struct TwistClass {
  kth::GroupNormalForm group;  // H^3(X, Z)
  std::vector<Int> coordinates;
  bool trivial = true;
};

/// Class of the twist in H^3. Throws InvariantViolation when the cochain is
/// not a cocycle and StructuralError when its length is wrong.
TwistClass twist_class(const TwistAssignment& t);

/// Vertex map of a simplicial map Q → Q'.
using SimplicialMap = std::map<std::uint32_t, std::uint32_t>;

/// Pullback of a degree-n cochain on the target along the map. Throws
/// StructuralError when the map is not simplicial.
std::vector<Int> pullback(const SimplicialMap& m, const SimplicialComplex& source, const SimplicialComplex& target,
                          std::size_t degree, const std::vector<Int>& cochain);

/// m^* t' is cohomologous to t. Throws StructuralError for a non-simplicial
/// map and InvariantViolation when either twist is not a cocycle.
bool morphism_preserves_twist(const SimplicialMap& m, const TwistAssignment& t, const TwistAssignment& t_prime);

struct StaircaseCheck {
  cat::Diagram diagram;
  cat::CommutativityReport commutes;
};

/// Assembles the level-n staircase over the Π_ij generators and checks that
/// it commutes. Level 0 is the empty diagram. Throws StructuralError naming
/// the first missing generator.
StaircaseCheck brane_staircase(const cat::CategoryPtr& host, const cat::StaircaseData& generators, std::size_t n);

struct ExtensionRankReport {
  std::size_t n = 1;
  std::size_t dim_u_n = 1;
  std::size_t dim_u1 = 1;
  std::size_t dim_pu_n = 0;
  bool additive = false;
  /// "4 = 1 + 3".
  std::string to_string() const;
};

/// Dimension bookkeeping of U(1) → U(N) → PU(N). Throws StructuralError
/// for N = 0.
ExtensionRankReport extension_rank_check(std::size_t n);

}  // namespace kcat::brane
