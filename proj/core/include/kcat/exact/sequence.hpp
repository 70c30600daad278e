#pragma once

#include "kcat/exact/module.hpp"

namespace kcat::exact {

/// 0 → left --mono--> middle --epi--> right → 0
struct ShortExactSeq {
  FGModule left;
  FGModule middle;
  FGModule right;
  IntMatrix mono;
  IntMatrix epi;
};

struct ExactnessDetail {
  bool injective = false;
  bool surjective = false;
  bool image_in_kernel = false;
  bool kernel_in_image = false;

  bool exact() const { return injective && surjective && image_in_kernel && kernel_in_image; }
};

/// Exact linear algebra over Z (Smith normal form); vector spaces over Z/p
/// are handled as Z-modules with relations p·I. Throws StructuralError when
/// shapes are incompatible or a matrix is not a homomorphism.
ExactnessDetail exactness(const ShortExactSeq& s);
bool is_exact_sequence(const ShortExactSeq& s);

/// 0 → L' → L' ⊕ L'' → L'' → 0 with the canonical inclusion and projection.
ShortExactSeq split_sequence(const FGModule& left, const FGModule& right);

}  // namespace kcat::exact
