#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kcat/cat/category.hpp"
#include "kcat/exact/module.hpp"
#include "kcat/ring.hpp"

namespace kcat::exact {

/// Largest hom-set total accepted by ModuleCategory::enumerate.
inline constexpr std::size_t kMaxHostMorphisms = 4096;

struct NamedModule {
  std::string name;
  FGModule module;
};

/// Concrete additive host: a finite category whose objects are finite
/// modules and whose morphisms are all module homomorphisms between them,
/// each carrying its matrix. Composition is the matrix product.
class ModuleCategory {
 public:
  /// Enumerates every hom set. Modules must be finite and in cyclic form.
  static ModuleCategory enumerate(const Ring& ring, std::vector<NamedModule> objects);

  /// Objects and morphisms are pairs; modules and matrices are direct sums.
  static ModuleCategory product(const ModuleCategory& a, const ModuleCategory& b);

  const Ring& ring() const { return ring_; }
  const cat::CategoryPtr& category() const { return category_; }
  const FGModule& module(cat::ObjId o) const { return modules_.at(o.value); }
  const IntMatrix& matrix(cat::MorId m) const { return matrices_.at(m.value); }

  /// The morphism a → b represented by the matrix, if it is a homomorphism.
  std::optional<cat::MorId> find(cat::ObjId a, cat::ObjId b, const IntMatrix& matrix) const;
  cat::MorId zero_morphism(cat::ObjId a, cat::ObjId b) const;

  bool is_injective(cat::MorId m) const { return injective_.at(m.value); }
  bool is_surjective(cat::MorId m) const { return surjective_.at(m.value); }

  /// Factor modules of an object: one for enumerated hosts, one per factor
  /// category for products. Objects are isomorphic iff factors are.
  const std::vector<FGModule>& components(cat::ObjId o) const { return components_.at(o.value); }
  /// Declared objects isomorphic to a ⊕ b, factor by factor.
  std::vector<cat::ObjId> objects_isomorphic_to_sum(cat::ObjId a, cat::ObjId b) const;
  bool is_sum_of(cat::ObjId x, cat::ObjId a, cat::ObjId b) const;

 private:
  void index_morphisms();

  Ring ring_;
  cat::CategoryPtr category_;
  std::vector<FGModule> modules_;
  std::vector<std::vector<FGModule>> components_;
  std::vector<IntMatrix> matrices_;
  std::map<std::tuple<std::uint32_t, std::uint32_t, IntMatrix>, cat::MorId> lookup_;
  std::vector<bool> injective_;
  std::vector<bool> surjective_;
};

using ModuleCategoryPtr = std::shared_ptr<const ModuleCategory>;

/// Human-readable morphism label used for enumerated hom sets.
std::string morphism_label(const std::string& source, const std::string& target, const IntMatrix& m);

}  // namespace kcat::exact
