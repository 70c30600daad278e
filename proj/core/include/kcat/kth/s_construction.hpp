#pragma once

#include <cstdint>
#include <vector>

#include "kcat/cat/category.hpp"
#include "kcat/cat/diagram.hpp"
#include "kcat/exact/waldhausen.hpp"
#include "kcat/kth/simplicial_set.hpp"

namespace kcat::kth {

/// A levelwise map between two staircases; components are indexed like the
/// staircase nodes (see cat::staircase_node).
struct StaircaseMap {
  std::uint32_t source = 0;
  std::uint32_t target = 0;
  std::vector<cat::MorId> components;
  bool weak = false;
};

enum class MapScope {
  /// Every levelwise map commuting with the staircases.
  All,
  /// Only maps whose components are all weak equivalences.
  WeakOnly,
};

struct SConstructionLevel {
  std::size_t level = 0;
  exact::WaldhausenStructure host;
  MapScope scope = MapScope::All;
  std::vector<cat::StaircaseData> staircases;
  std::vector<StaircaseMap> maps;
  /// Objects are the staircases, morphisms are `maps` (same order).
  cat::CategoryPtr category;
};

/// Maximum level accepted by s_construct.
inline constexpr std::size_t kMaxSLevel = 3;

/// All staircases 0 = A(0,0) ↣ A(0,1) ↣ ... ↣ A(0,n) of cofibrations, with
/// A(i,j) the chosen pushout of A(0,j) ← A(0,i) → 0 and A(j,j) the zero
/// object. Throws EnumerationIncomplete when a quotient is missing from the
/// host and StructuralError for n > kMaxSLevel.
SConstructionLevel s_construct(const exact::WaldhausenStructure& w, std::size_t n, MapScope scope = MapScope::All);

/// Same objects as S, morphisms restricted to levelwise weak equivalences.
cat::FinCategory weak_equiv_subcat(const exact::WaldhausenStructure& w, const SConstructionLevel& s);

/// Nerve of the weak-equivalence category of S_m, truncated at T.
SimplicialSet k_spectrum_level(const exact::WaldhausenStructure& w, std::size_t m, std::size_t truncation);

}  // namespace kcat::kth
