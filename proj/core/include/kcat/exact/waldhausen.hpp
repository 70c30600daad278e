#pragma once

#include <vector>

#include "kcat/cat/category.hpp"
#include "kcat/exact/exact_structure.hpp"
#include "kcat/report.hpp"

namespace kcat::exact {

enum class PushoutPolicy {
  /// Every cofibration span must have a pushout in the host.
  Required,
  /// Spans whose pushout would leave the declared objects are skipped and
  /// listed in the report notes.
  WithinDeclaredObjects,
};

struct WaldhausenStructure {
  cat::CategoryPtr host;
  std::vector<cat::MorId> cofibrations;
  std::vector<cat::MorId> weak_equivalences;
  cat::ObjId zero;
  PushoutPolicy policy = PushoutPolicy::Required;

  /// Sorts and deduplicates both classes.
  void normalize();
  bool is_cofibration(cat::MorId m) const;
  bool is_weak_equivalence(cat::MorId m) const;
};

/// Zero object; isomorphisms in co and we; both classes closed under
/// composition; 0 → A a cofibration for every A; for every cofibration
/// A ↣ B and morphism A → C a pushout exists and C → B ∪_A C is a
/// cofibration.
ValidationReport check_waldhausen_axioms(const WaldhausenStructure& w);

/// co = monomorphisms occurring in Σ plus isomorphisms, we = isomorphisms,
/// zero = first zero object. Throws ConversionRefused when the exact axioms
/// fail or the host has no zero object.
WaldhausenStructure exact_to_waldhausen(const ExactStructure& e);

}  // namespace kcat::exact
