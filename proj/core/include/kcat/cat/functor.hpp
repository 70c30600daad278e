#pragma once

#include <vector>

#include "kcat/cat/category.hpp"

namespace kcat::cat {

struct Functor {
  CategoryPtr source;
  CategoryPtr target;
  std::vector<ObjId> object_map;    // indexed by source ObjId
  std::vector<MorId> morphism_map;  // indexed by source MorId

  ObjId operator()(ObjId o) const { return object_map.at(o.value); }
  MorId operator()(MorId m) const { return morphism_map.at(m.value); }
};

/// Preservation of endpoints, identities and composition. Throws
/// StructuralError when the maps have the wrong size or point outside the
/// target.
ValidationReport check_functor(const Functor& f);

Functor identity_functor(const CategoryPtr& c);

}  // namespace kcat::cat
