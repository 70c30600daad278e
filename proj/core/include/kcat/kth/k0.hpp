#pragma once

#include <vector>

#include "kcat/exact/exact_structure.hpp"
#include "kcat/kth/abelian_group.hpp"

namespace kcat::kth {

struct K0Result {
  /// Isomorphism classes of objects; class k is generator k.
  std::vector<std::vector<cat::ObjId>> classes;
  /// One row [L] - [L'] - [L''] per distinct relation coming from Σ.
  AbelianGroupPresentation group;
};

/// Isomorphism classes of a finite category, in order of first object.
std::vector<std::vector<cat::ObjId>> isomorphism_classes(const cat::FinCategory& c);

K0Result k0_detailed(const exact::ExactStructure& e);

/// Grothendieck group of the exact structure, reduced to normal form.
AbelianGroupPresentation k0(const exact::ExactStructure& e);

}  // namespace kcat::kth
