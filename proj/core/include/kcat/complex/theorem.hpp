#pragma once

#include <string>
#include <vector>

#include "kcat/cat/functor.hpp"
#include "kcat/complex/cochain.hpp"
#include "kcat/exact/exact_structure.hpp"
#include "kcat/kth/abelian_group.hpp"

namespace kcat::complex {

struct GroupComparison {
  std::string name;
  kth::GroupNormalForm left;
  kth::GroupNormalForm right;
  bool match = false;
};

/// An element of a group both sides share, such as the class [C] in K₀.
struct ClassComparison {
  std::string name;
  Int left = 0;
  Int right = 0;
  bool match = false;
};

struct PreservationReport {
  bool preserved = true;
  std::vector<GroupComparison> comparisons;
  std::vector<ClassComparison> classes;
  std::vector<std::string> notes;
};

/// K₀ proxy of a cochain complex: the Grothendieck group of finitely
/// generated free modules over the ring (Z) and the class Σ(-1)^n [C^n]
/// in it, which is the Euler characteristic.
struct K0Proxy {
  kth::GroupNormalForm group;
  Int euler_class = 0;
};
K0Proxy k0_proxy(const CochainComplex& c);

/// Compares H^n for every degree of either complex (absent degrees count as
/// 0) and the K₀ proxies. Preserved iff every pair is isomorphic.
PreservationReport theorem_check(const SimplicialComplex& a, const SimplicialComplex& b,
                                 const Ring& ring = Ring::integers());

/// F sends Σ into Σ', isomorphisms to isomorphisms, and K₀ of the source
/// matches K₀ of the image structure (iso classes of image objects modulo
/// the image sequences).
ValidationReport functor_m_check(const cat::Functor& f, const exact::ExactStructure& source,
                                 const exact::ExactStructure& target);

}  // namespace kcat::complex
