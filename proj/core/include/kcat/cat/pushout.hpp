#pragma once

#include <optional>
#include <vector>

#include "kcat/cat/category.hpp"

namespace kcat::cat {

/// f: X → A, g: X → B.
struct Span {
  MorId left;
  MorId right;
};

/// u: A → P, v: B → P with u ∘ f = v ∘ g.
struct Cocone {
  ObjId apex;
  MorId left_leg;
  MorId right_leg;

  friend bool operator==(const Cocone&, const Cocone&) = default;
};

/// Checks the universal property exhaustively: for every object Q the map
/// Hom(P, Q) → {cocones into Q}, m ↦ (m∘u, m∘v), is a bijection.
bool is_pushout(const FinCategory& c, const Span& span, const Cocone& cocone);

/// First pushout in canonical enumeration order (apex, then legs by id).
std::optional<Cocone> find_pushout(const FinCategory& c, const Span& span);

/// As find_pushout, but throws PushoutMissing when no cocone is universal.
/// Throws StructuralError when the legs do not share a source.
Cocone pushout(const FinCategory& c, const Span& span);

/// Every universal cocone; used to confirm uniqueness up to isomorphism.
std::vector<Cocone> all_pushouts(const FinCategory& c, const Span& span);

/// The unique m: P → Q with m∘u = x and m∘v = y for a pushout (P, u, v) and a
/// cocone (Q, x, y); nullopt if none or several exist.
std::optional<MorId> mediating_morphism(const FinCategory& c, const Cocone& pushout, const Cocone& other);

}  // namespace kcat::cat
