#pragma once

#include <memory>
#include <vector>

#include "kcat/exact/module_category.hpp"
#include "kcat/exact/sequence.hpp"
#include "kcat/report.hpp"

namespace kcat::exact {

/// A member of Σ, expressed through the host's objects and morphisms.
struct SigmaSequence {
  cat::ObjId left;
  cat::ObjId middle;
  cat::ObjId right;
  cat::MorId mono;
  cat::MorId epi;

  friend auto operator<=>(const SigmaSequence&, const SigmaSequence&) = default;
};

/// A host module category together with its declared class Σ of short exact
/// sequences.
struct ExactStructure {
  ModuleCategoryPtr host;
  std::vector<SigmaSequence> sigma;
};

ShortExactSeq to_short_exact_seq(const ModuleCategory& host, const SigmaSequence& s);

/// Every short exact sequence whose three terms are declared objects, in
/// canonical order.
std::vector<SigmaSequence> all_exact_sequences(const ModuleCategory& host);

/// The exact structure whose Σ is every exact sequence among the declared
/// objects.
ExactStructure full_exact_structure(ModuleCategoryPtr host);

/// The split sequence L' → L → L'' realised inside the host: L is the first
/// declared object isomorphic to L' ⊕ L''. Throws StructuralError when the
/// host has no such object.
SigmaSequence split_seq(const ModuleCategory& host, cat::ObjId left, cat::ObjId right);

/// Σ members exact, split sequences present, closure under isomorphisms of
/// sequences, and closure under extensions among the declared objects.
ValidationReport check_exact_axioms(const ExactStructure& e);

/// Σ of the product is the set of pairs of Σ members.
ExactStructure product(const ExactStructure& a, const ExactStructure& b);

}  // namespace kcat::exact
