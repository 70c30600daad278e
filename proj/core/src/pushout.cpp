#include "kcat/cat/pushout.hpp"

#include <algorithm>
#include <cstdint>

#include "kcat/error.hpp"

namespace kcat::cat {

namespace {

void require_span(const FinCategory& c, const Span& span) {
  if (c.source(span.left) != c.source(span.right))
    throw StructuralError("span legs " + c.morphism_name(span.left) + " and " + c.morphism_name(span.right) +
                          " do not share a source");
}

/// Number of cocones into each object Q.
std::vector<std::size_t> cocone_counts(const FinCategory& c, const Span& span) {
  const ObjId a = c.target(span.left);
  const ObjId b = c.target(span.right);
  std::vector<std::size_t> counts(c.object_count(), 0);
  std::vector<std::uint32_t> tally(c.morphism_count(), 0);
  for (ObjId q : c.objects()) {
    std::vector<MorId> touched;
    for (MorId x : c.hom(a, q)) {
      const MorId key = *c.composite(x, span.left);
      if (tally[key.value]++ == 0) touched.push_back(key);
    }
    std::size_t n = 0;
    for (MorId y : c.hom(b, q)) n += tally[c.composite(y, span.right)->value];
    counts[q.value] = n;
    for (MorId t : touched) tally[t.value] = 0;
  }
  return counts;
}

bool universal(const FinCategory& c, const Cocone& cocone, const std::vector<std::size_t>& counts) {
  std::vector<std::uint64_t> images;
  for (ObjId q : c.objects()) {
    const auto homs = c.hom(cocone.apex, q);
    if (homs.size() != counts[q.value]) return false;
    images.clear();
    for (MorId m : homs) {
      const std::uint64_t mu = c.composite(m, cocone.left_leg)->value;
      const std::uint64_t mv = c.composite(m, cocone.right_leg)->value;
      images.push_back(mu << 32 | mv);
    }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
  }
  return true;
}

bool commutes(const FinCategory& c, const Span& span, const Cocone& k) {
  return c.source(k.left_leg) == c.target(span.left) && c.source(k.right_leg) == c.target(span.right) &&
         c.target(k.left_leg) == k.apex && c.target(k.right_leg) == k.apex &&
         c.composite(k.left_leg, span.left) == c.composite(k.right_leg, span.right);
}

template <class Visit>
void search(const FinCategory& c, const Span& span, Visit&& visit) {
  require_span(c, span);
  const auto counts = cocone_counts(c, span);
  const ObjId a = c.target(span.left);
  const ObjId b = c.target(span.right);
  for (ObjId p : c.objects()) {
    bool feasible = true;
    for (ObjId q : c.objects())
      if (c.hom(p, q).size() != counts[q.value]) {
        feasible = false;
        break;
      }
    if (!feasible) continue;
    // Index right legs by v∘g so matching left legs are found directly.
    std::vector<std::vector<MorId>> by_key(c.morphism_count());
    for (MorId v : c.hom(b, p)) by_key[c.composite(v, span.right)->value].push_back(v);
    for (MorId u : c.hom(a, p))
      for (MorId v : by_key[c.composite(u, span.left)->value]) {
        const Cocone k{p, u, v};
        if (universal(c, k, counts) && !visit(k)) return;
      }
  }
}

}  // namespace

bool is_pushout(const FinCategory& c, const Span& span, const Cocone& cocone) {
  require_span(c, span);
  if (!commutes(c, span, cocone)) return false;
  return universal(c, cocone, cocone_counts(c, span));
}

std::optional<Cocone> find_pushout(const FinCategory& c, const Span& span) {
  require_span(c, span);
  // Along an isomorphism the pushout is known in closed form; it is still
  // verified against the universal property.
  if (auto inv = c.inverse(span.left)) {
    const ObjId b = c.target(span.right);
    const Cocone k{b, *c.composite(span.right, *inv), c.identity(b)};
    if (is_pushout(c, span, k)) return k;
  }
  if (auto inv = c.inverse(span.right)) {
    const ObjId a = c.target(span.left);
    const Cocone k{a, c.identity(a), *c.composite(span.left, *inv)};
    if (is_pushout(c, span, k)) return k;
  }
  std::optional<Cocone> found;
  search(c, span, [&](const Cocone& k) {
    found = k;
    return false;
  });
  return found;
}

Cocone pushout(const FinCategory& c, const Span& span) {
  if (auto k = find_pushout(c, span)) return *k;
  throw PushoutMissing("no pushout of " + c.morphism_name(span.left) + " and " + c.morphism_name(span.right) +
                       " exists among the declared objects");
}

std::vector<Cocone> all_pushouts(const FinCategory& c, const Span& span) {
  std::vector<Cocone> out;
  search(c, span, [&](const Cocone& k) {
    out.push_back(k);
    return true;
  });
  return out;
}

std::optional<MorId> mediating_morphism(const FinCategory& c, const Cocone& pushout, const Cocone& other) {
  std::optional<MorId> found;
  for (MorId m : c.hom(pushout.apex, other.apex)) {
    if (c.composite(m, pushout.left_leg) == other.left_leg && c.composite(m, pushout.right_leg) == other.right_leg) {
      if (found) return std::nullopt;
      found = m;
    }
  }
  return found;
}

}  // namespace kcat::cat
