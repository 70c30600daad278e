#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kcat/complex/simplicial_complex.hpp"
#include "kcat/kth/abelian_group.hpp"
#include "kcat/matrix.hpp"
#include "kcat/report.hpp"
#include "kcat/ring.hpp"

namespace kcat::complex {

/// C^0 → C^1 → ... with C^n free over the ring of rank ranks[n] and
/// differentials[n]: C^n → C^{n+1} of shape ranks[n+1] × ranks[n].
struct CochainComplex {
  Ring ring = Ring::integers();
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> differentials;

  std::size_t top_degree() const { return ranks.empty() ? 0 : ranks.size() - 1; }
  /// d ∘ d = 0 in every degree (modulo p over Z/p).
  ValidationReport check_d_squared() const;
  /// Applies d_n, reducing modulo p over Z/p.
  std::vector<Int> apply(std::size_t degree, std::span<const Int> cochain) const;
};

struct Cochain {
  std::size_t degree = 0;
  std::vector<Int> values;
};

/// Coboundary of the oriented simplicial chain complex: (dφ)(τ) =
/// Σ_i (-1)^i φ(d_i τ).
CochainComplex cochain_from_simplicial(const SimplicialComplex& k, const Ring& ring);

/// H^n with the data needed to name classes.
struct CohomologyDegree {
  std::size_t degree = 0;
  kth::AbelianGroupPresentation group;
  /// Columns span the cocycles.
  IntMatrix cocycles;
  /// Relations among the cocycle coordinates (rows).
  IntMatrix relations;
};

/// H^n = ker d_n / im d_{n-1} for n = 0..top. Throws InvariantViolation
/// when d ∘ d ≠ 0.
std::vector<CohomologyDegree> cohomology_detailed(const CochainComplex& c);
std::vector<kth::AbelianGroupPresentation> cohomology(const CochainComplex& c);

/// Coordinates of the class of a cocycle in the normal form of H^n: free
/// coordinates first, then one coordinate per torsion factor reduced modulo
/// it. The free part is oriented so that the first cocycle basis vector
/// with a nonzero coordinate has a positive one. nullopt when the cochain
/// is not a cocycle.
std::optional<std::vector<Int>> class_coordinates(const CochainComplex& c, const CohomologyDegree& h,
                                                  std::span<const Int> cochain);

struct PotentialReport {
  std::size_t degree = 0;
  bool closed = false;  // dφ = 0
  bool solvable = false;
  std::optional<Cochain> potential;
  Cochain d_phi;
  /// d(φ + dχ) = dφ for every basis cochain χ of C^{n-1}.
  bool gauge_invariant = false;
  std::size_t gauge_checks = 0;
  /// Class of φ in H^n when φ is closed but not exact.
  std::optional<std::vector<Int>> obstruction;
  std::vector<std::string> notes;
};

/// Solves dψ = φ exactly. Throws NoPotentialDegree for degree 0 and
/// StructuralError for a degree or length that does not fit the complex.
PotentialReport potential_sequence(const CochainComplex& c, const Cochain& phi);

}  // namespace kcat::complex
