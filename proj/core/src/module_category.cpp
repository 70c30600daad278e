#include "kcat/exact/module_category.hpp"

#include <sstream>

#include "kcat/error.hpp"

namespace kcat::exact {

using cat::MorId;
using cat::ObjId;

std::string morphism_label(const std::string& source, const std::string& target, const IntMatrix& m) {
  return source + "->" + target + m.to_string();
}

ModuleCategory ModuleCategory::enumerate(const Ring& ring, std::vector<NamedModule> objects) {
  ModuleCategory mc;
  mc.ring_ = ring;
  std::vector<std::string> names;
  for (auto& o : objects) {
    if (!o.module.cyclic_orders()) throw StructuralError("object '" + o.name + "' is not in cyclic form");
    if (!o.module.is_finite()) throw StructuralError("object '" + o.name + "' is infinite; hom sets must be finite");
    names.push_back(o.name);
    mc.components_.push_back({o.module});
    mc.modules_.push_back(std::move(o.module));
  }

  Int total = 0;
  for (const auto& a : mc.modules_)
    for (const auto& b : mc.modules_) total = checked_add(total, hom_count(a, b));
  if (total > static_cast<Int>(kMaxHostMorphisms))
    throw StructuralError("host would have " + std::to_string(total) + " morphisms; the limit is " +
                          std::to_string(kMaxHostMorphisms));

  std::vector<cat::Morphism> morphisms;
  std::vector<MorId> identities(names.size());
  for (std::uint32_t a = 0; a < names.size(); ++a)
    for (std::uint32_t b = 0; b < names.size(); ++b)
      for (auto& m : enumerate_homs(mc.modules_[a], mc.modules_[b])) {
        const MorId id{static_cast<std::uint32_t>(morphisms.size())};
        if (a == b && m == canonical_map(IntMatrix::identity(mc.modules_[a].generators()), mc.modules_[b]))
          identities[a] = id;
        morphisms.push_back({morphism_label(names[a], names[b], m), ObjId{a}, ObjId{b}});
        mc.lookup_.emplace(std::tuple{a, b, m}, id);
        mc.matrices_.push_back(std::move(m));
      }

  std::vector<std::pair<ObjId, ObjId>> ends;
  for (const auto& m : morphisms) ends.emplace_back(m.source, m.target);
  const auto& mods = mc.modules_;
  const auto& mats = mc.matrices_;
  const auto& lookup = mc.lookup_;
  auto compose_fn = [&](MorId g, MorId f) {
    const ObjId a = ends[f.value].first;
    const ObjId c = ends[g.value].second;
    const IntMatrix h = canonical_map(mats[g.value] * mats[f.value], mods[c.value]);
    return lookup.at(std::tuple{a.value, c.value, h});
  };
  mc.category_ = std::make_shared<const cat::FinCategory>(
      cat::make_category(std::move(names), std::move(morphisms), std::move(identities), compose_fn));
  mc.index_morphisms();
  return mc;
}

ModuleCategory ModuleCategory::product(const ModuleCategory& a, const ModuleCategory& b) {
  ModuleCategory mc;
  mc.ring_ = a.ring_;
  mc.category_ = std::make_shared<const cat::FinCategory>(cat::product(*a.category_, *b.category_));
  for (ObjId x : a.category_->objects())
    for (ObjId y : b.category_->objects()) {
      mc.modules_.push_back(a.module(x).direct_sum(b.module(y)));
      auto parts = a.components(x);
      parts.insert(parts.end(), b.components(y).begin(), b.components(y).end());
      mc.components_.push_back(std::move(parts));
    }
  for (MorId f : a.category_->morphisms())
    for (MorId g : b.category_->morphisms()) {
      const MorId id{static_cast<std::uint32_t>(mc.matrices_.size())};
      const auto& info = mc.category_->morphism(id);
      IntMatrix m = a.matrix(f).block_diagonal(b.matrix(g));
      mc.lookup_.emplace(std::tuple{info.source.value, info.target.value, m}, id);
      mc.matrices_.push_back(std::move(m));
    }
  mc.index_morphisms();
  return mc;
}

void ModuleCategory::index_morphisms() {
  const auto& c = *category_;
  injective_.assign(c.morphism_count(), false);
  surjective_.assign(c.morphism_count(), false);
  for (MorId m : c.morphisms()) {
    const auto& src = modules_[c.source(m).value];
    const auto& tgt = modules_[c.target(m).value];
    injective_[m.value] = exact::is_injective(matrices_[m.value], src, tgt);
    surjective_[m.value] = exact::is_surjective(matrices_[m.value], tgt);
  }
}

std::optional<MorId> ModuleCategory::find(ObjId a, ObjId b, const IntMatrix& matrix) const {
  if (!is_homomorphism(matrix, module(a), module(b))) return std::nullopt;
  if (module(b).cyclic_orders()) {
    auto it = lookup_.find(std::tuple{a.value, b.value, canonical_map(matrix, module(b))});
    if (it != lookup_.end()) return it->second;
  }
  for (MorId m : category_->hom(a, b))
    if (same_map(matrices_[m.value], matrix, module(b))) return m;
  return std::nullopt;
}

MorId ModuleCategory::zero_morphism(ObjId a, ObjId b) const {
  auto m = find(a, b, IntMatrix(module(b).generators(), module(a).generators()));
  if (!m) throw StructuralError("host has no zero morphism " + category_->object_name(a) + " → " +
                                category_->object_name(b));
  return *m;
}

bool ModuleCategory::is_sum_of(ObjId x, ObjId a, ObjId b) const {
  const auto& cx = components(x);
  const auto& ca = components(a);
  const auto& cb = components(b);
  for (std::size_t k = 0; k < cx.size(); ++k)
    if (!cx[k].isomorphic(ca[k].direct_sum(cb[k]))) return false;
  return true;
}

std::vector<ObjId> ModuleCategory::objects_isomorphic_to_sum(ObjId a, ObjId b) const {
  std::vector<ObjId> out;
  for (ObjId o : category_->objects())
    if (is_sum_of(o, a, b)) out.push_back(o);
  return out;
}

}  // namespace kcat::exact
