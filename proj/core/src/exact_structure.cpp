#include "kcat/exact/exact_structure.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "kcat/error.hpp"

namespace kcat::exact {

using cat::MorId;
using cat::ObjId;

namespace {

constexpr std::size_t kWitnessCap = 12;

/// Adds a violation unless `law` already has kWitnessCap witnesses; counts
/// the overflow so it can be reported as a note.
struct CappedReport {
  ValidationReport& report;
  std::map<std::string, std::size_t> counts;

  void add(const std::string& law, std::string witness) {
    if (counts[law]++ < kWitnessCap) report.add(law, std::move(witness));
  }
  void finish() {
    for (const auto& [law, n] : counts)
      if (n > kWitnessCap) report.note(law + ": " + std::to_string(n - kWitnessCap) + " further violations omitted");
  }
};

std::string describe(const cat::FinCategory& c, const SigmaSequence& s) {
  return "0 → " + c.object_name(s.left) + " → " + c.object_name(s.middle) + " → " + c.object_name(s.right) +
         " → 0 via " + c.morphism_name(s.mono) + ", " + c.morphism_name(s.epi);
}

/// Generators of the automorphism group of x: greedy, each new generator
/// enlarges the subgroup generated so far.
std::vector<MorId> automorphism_generators(const cat::FinCategory& c, ObjId x) {
  std::vector<MorId> gens;
  std::set<MorId> group{c.identity(x)};
  for (MorId a : c.hom(x, x)) {
    if (!c.is_isomorphism(a) || group.count(a)) continue;
    gens.push_back(a);
    std::vector<MorId> frontier(group.begin(), group.end());
    while (!frontier.empty()) {
      std::vector<MorId> next;
      for (MorId h : frontier)
        for (MorId g : gens) {
          const MorId p = *c.composite(g, h);
          if (group.insert(p).second) next.push_back(p);
        }
      frontier = std::move(next);
    }
  }
  return gens;
}

/// Isomorphisms from x used to transport sequences: automorphism generators
/// plus one isomorphism x → y for every other object y isomorphic to x.
std::vector<MorId> transport_isos(const cat::FinCategory& c, ObjId x) {
  std::vector<MorId> out = automorphism_generators(c, x);
  for (ObjId y : c.objects()) {
    if (y == x) continue;
    for (MorId m : c.hom(x, y))
      if (c.is_isomorphism(m)) {
        out.push_back(m);
        break;
      }
  }
  return out;
}

}  // namespace

ShortExactSeq to_short_exact_seq(const ModuleCategory& host, const SigmaSequence& s) {
  const auto& c = *host.category();
  if (c.source(s.mono) != s.left || c.target(s.mono) != s.middle || c.source(s.epi) != s.middle ||
      c.target(s.epi) != s.right)
    throw StructuralError("sequence morphisms do not match its objects: " + describe(c, s));
  return {host.module(s.left), host.module(s.middle), host.module(s.right), host.matrix(s.mono),
          host.matrix(s.epi)};
}

std::vector<SigmaSequence> all_exact_sequences(const ModuleCategory& host) {
  const auto& c = *host.category();
  std::vector<SigmaSequence> out;
  for (ObjId a : c.objects())
    for (ObjId b : c.objects())
      for (ObjId d : c.objects()) {
        if (checked_mul(host.module(a).order(), host.module(d).order()) != host.module(b).order()) continue;
        const MorId zero = host.zero_morphism(a, d);
        for (MorId f : c.hom(a, b)) {
          if (!host.is_injective(f)) continue;
          for (MorId g : c.hom(b, d)) {
            if (!host.is_surjective(g) || *c.composite(g, f) != zero) continue;
            const SigmaSequence s{a, b, d, f, g};
            if (is_exact_sequence(to_short_exact_seq(host, s))) out.push_back(s);
          }
        }
      }
  return out;
}

ExactStructure full_exact_structure(ModuleCategoryPtr host) {
  auto sigma = all_exact_sequences(*host);
  return {std::move(host), std::move(sigma)};
}

SigmaSequence split_seq(const ModuleCategory& host, ObjId left, ObjId right) {
  const auto& c = *host.category();
  const ShortExactSeq canonical = split_sequence(host.module(left), host.module(right));
  const auto candidates = host.objects_isomorphic_to_sum(left, right);
  if (candidates.empty())
    throw StructuralError("host is not additive on its declared objects: no object is isomorphic to " +
                          c.object_name(left) + " ⊕ " + c.object_name(right));
  const ObjId middle = candidates.front();
  const FGModule& target = host.module(middle);
  // Transport the canonical sequence along an isomorphism L'⊕L'' → L that
  // the host contains (block-diagonal for products).
  for (const IntMatrix& phi : enumerate_homs(canonical.middle, target)) {
    if (!is_injective(phi, canonical.middle, target)) continue;
    for (const IntMatrix& psi : enumerate_homs(target, canonical.middle)) {
      if (!same_map(psi * phi, IntMatrix::identity(canonical.middle.generators()), canonical.middle)) continue;
      const auto mono = host.find(left, middle, phi * canonical.mono);
      const auto epi = host.find(middle, right, canonical.epi * psi);
      if (mono && epi) return {left, middle, right, *mono, *epi};
    }
  }
  throw StructuralError("no isomorphism onto " + c.object_name(middle) + " found");
}

ValidationReport check_exact_axioms(const ExactStructure& e) {
  if (!e.host) throw StructuralError("exact structure without host");
  const ModuleCategory& host = *e.host;
  const auto& c = *host.category();
  ValidationReport report;
  CappedReport capped{report, {}};

  const std::set<SigmaSequence> members(e.sigma.begin(), e.sigma.end());

  for (const auto& s : e.sigma)
    if (!is_exact_sequence(to_short_exact_seq(host, s))) capped.add("sigma-exact", describe(c, s));

  // Split sequences for every pair whose direct sum is declared.
  for (ObjId l1 : c.objects())
    for (ObjId l2 : c.objects()) {
      if (host.objects_isomorphic_to_sum(l1, l2).empty()) continue;
      bool found = false;
      for (const auto& s : e.sigma) {
        if (s.left != l1 || s.right != l2 || !host.is_sum_of(s.middle, l1, l2)) continue;
        for (MorId section : c.hom(l2, s.middle))
          if (*c.composite(s.epi, section) == c.identity(l2)) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) capped.add("split-sequences", "(" + c.object_name(l1) + ", " + c.object_name(l2) + ")");
    }

  // Closure under isomorphisms of sequences, generator by generator.
  std::vector<std::vector<MorId>> transports(c.object_count());
  for (ObjId o : c.objects()) transports[o.value] = transport_isos(c, o);
  for (const auto& s : e.sigma) {
    auto require = [&](const SigmaSequence& t) {
      if (!members.count(t)) capped.add("iso-closure", describe(c, s) + " has isomorph " + describe(c, t) + " not in Σ");
    };
    for (MorId a : transports[s.left.value]) {
      const MorId inv = *c.inverse(a);
      require({c.target(a), s.middle, s.right, *c.composite(s.mono, inv), s.epi});
    }
    for (MorId b : transports[s.middle.value]) {
      const MorId inv = *c.inverse(b);
      require({s.left, c.target(b), s.right, *c.composite(b, s.mono), *c.composite(s.epi, inv)});
    }
    for (MorId g : transports[s.right.value]) require({s.left, s.middle, c.target(g), s.mono, *c.composite(g, s.epi)});
  }

  // Extensions among declared objects must lie in Σ.
  for (const auto& s : all_exact_sequences(host))
    if (!members.count(s)) capped.add("extension-closure", describe(c, s) + " is exact but not in Σ");

  capped.finish();
  return report;
}

ExactStructure product(const ExactStructure& a, const ExactStructure& b) {
  auto host = std::make_shared<const ModuleCategory>(ModuleCategory::product(*a.host, *b.host));
  const auto nb_obj = static_cast<std::uint32_t>(b.host->category()->object_count());
  const auto nb_mor = static_cast<std::uint32_t>(b.host->category()->morphism_count());
  auto obj = [&](ObjId x, ObjId y) { return ObjId{x.value * nb_obj + y.value}; };
  auto mor = [&](MorId f, MorId g) { return MorId{f.value * nb_mor + g.value}; };
  ExactStructure out{host, {}};
  for (const auto& s : a.sigma)
    for (const auto& t : b.sigma)
      out.sigma.push_back(
          {obj(s.left, t.left), obj(s.middle, t.middle), obj(s.right, t.right), mor(s.mono, t.mono), mor(s.epi, t.epi)});
  std::sort(out.sigma.begin(), out.sigma.end());
  return out;
}

}  // namespace kcat::exact
