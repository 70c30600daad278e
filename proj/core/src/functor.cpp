#include "kcat/cat/functor.hpp"

#include "kcat/error.hpp"

namespace kcat::cat {

ValidationReport check_functor(const Functor& f) {
  if (!f.source || !f.target) throw StructuralError("functor without source or target category");
  const auto& s = *f.source;
  const auto& t = *f.target;
  if (f.object_map.size() != s.object_count() || f.morphism_map.size() != s.morphism_count())
    throw StructuralError("functor maps do not cover the source category");
  for (ObjId o : f.object_map)
    if (o.value >= t.object_count()) throw StructuralError("functor sends an object outside the target");
  for (MorId m : f.morphism_map)
    if (m.value >= t.morphism_count()) throw StructuralError("functor sends a morphism outside the target");

  ValidationReport report;
  for (MorId m : s.morphisms()) {
    const MorId fm = f(m);
    if (t.source(fm) != f(s.source(m)) || t.target(fm) != f(s.target(m)))
      report.add("preserves-endpoints", s.morphism_name(m) + " ↦ " + t.morphism_name(fm));
  }
  for (ObjId o : s.objects())
    if (f(s.identity(o)) != t.identity(f(o)))
      report.add("preserves-identities", "id_" + s.object_name(o) + " ↦ " + t.morphism_name(f(s.identity(o))));
  if (!report.ok()) return report;

  for (MorId m : s.morphisms())
    for (ObjId c : s.objects())
      for (MorId g : s.hom(s.target(m), c)) {
        const auto gm = s.composite(g, m);
        if (!gm) continue;
        const auto image = t.composite(f(g), f(m));
        if (image != f(*gm))
          report.add("preserves-composition", "F(" + s.morphism_name(g) + " ∘ " + s.morphism_name(m) + ") ≠ F(" +
                                                  s.morphism_name(g) + ") ∘ F(" + s.morphism_name(m) + ")");
      }
  return report;
}

Functor identity_functor(const CategoryPtr& c) { return {c, c, c->objects(), c->morphisms()}; }

}  // namespace kcat::cat
