#include "kcat/exact/waldhausen.hpp"

#include <algorithm>
#include <map>

#include "kcat/cat/pushout.hpp"
#include "kcat/error.hpp"

namespace kcat::exact {

using cat::MorId;
using cat::ObjId;

namespace {

constexpr std::size_t kWitnessCap = 12;

void sort_unique(std::vector<MorId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool contains(const std::vector<MorId>& sorted, MorId m) { return std::binary_search(sorted.begin(), sorted.end(), m); }

std::string pair_witness(const cat::FinCategory& c, MorId g, MorId f) {
  return c.morphism_name(g) + " ∘ " + c.morphism_name(f);
}

bool is_zero_object(const cat::FinCategory& c, ObjId z) {
  for (ObjId o : c.objects())
    if (c.hom(z, o).size() != 1 || c.hom(o, z).size() != 1) return false;
  return true;
}

}  // namespace

void WaldhausenStructure::normalize() {
  sort_unique(cofibrations);
  sort_unique(weak_equivalences);
}

bool WaldhausenStructure::is_cofibration(MorId m) const { return contains(cofibrations, m); }
bool WaldhausenStructure::is_weak_equivalence(MorId m) const { return contains(weak_equivalences, m); }

ValidationReport check_waldhausen_axioms(const WaldhausenStructure& input) {
  if (!input.host) throw StructuralError("Waldhausen structure without host");
  WaldhausenStructure w = input;
  w.normalize();
  const auto& c = *w.host;
  for (auto m : w.cofibrations)
    if (m.value >= c.morphism_count()) throw StructuralError("cofibration id out of range");
  for (auto m : w.weak_equivalences)
    if (m.value >= c.morphism_count()) throw StructuralError("weak equivalence id out of range");

  ValidationReport report;
  if (const auto axioms = cat::check_category_axioms(c); !axioms.ok()) {
    report.merge(axioms, "host/");
    return report;
  }
  std::map<std::string, std::size_t> counts;
  auto add = [&](const std::string& law, std::string witness) {
    if (counts[law]++ < kWitnessCap) report.add(law, std::move(witness));
  };

  const bool has_zero = w.zero.value < c.object_count() && is_zero_object(c, w.zero);
  if (!has_zero) {
    add("zero-object", w.zero.value < c.object_count() ? c.object_name(w.zero) + " is not a zero object"
                                                       : "zero object id out of range");
  }

  for (MorId m : c.morphisms()) {
    if (!c.is_isomorphism(m)) continue;
    if (!w.is_cofibration(m)) add("isos-in-co", c.morphism_name(m));
    if (!w.is_weak_equivalence(m)) add("isos-in-we", c.morphism_name(m));
  }

  auto closure = [&](const std::vector<MorId>& cls, const char* law) {
    for (MorId f : cls)
      for (MorId g : cls) {
        if (c.source(g) != c.target(f)) continue;
        const auto h = c.composite(g, f);
        if (!h || !contains(cls, *h)) add(law, pair_witness(c, g, f));
      }
  };
  closure(w.cofibrations, "co-composition");
  closure(w.weak_equivalences, "we-composition");

  if (has_zero)
    for (ObjId a : c.objects()) {
      const MorId from_zero = c.hom(w.zero, a).front();
      if (!w.is_cofibration(from_zero)) add("zero-cofibration", c.object_name(a));
    }

  std::size_t skipped = 0;
  for (MorId f : w.cofibrations)
    for (ObjId target : c.objects())
      for (MorId g : c.hom(c.source(f), target)) {
        const auto p = cat::find_pushout(c, {f, g});
        if (!p) {
          if (w.policy == PushoutPolicy::WithinDeclaredObjects) {
            ++skipped;
            continue;
          }
          add("pushout-exists", "(" + c.morphism_name(f) + ", " + c.morphism_name(g) + ")");
          continue;
        }
        if (!w.is_cofibration(p->right_leg))
          add("pushout-cofibration", c.morphism_name(p->right_leg) + " from span (" + c.morphism_name(f) + ", " +
                                         c.morphism_name(g) + ")");
      }
  if (skipped)
    report.note(std::to_string(skipped) + " cofibration spans have no pushout among the declared objects");

  for (const auto& [law, n] : counts)
    if (n > kWitnessCap) report.note(law + ": " + std::to_string(n - kWitnessCap) + " further violations omitted");
  return report;
}

WaldhausenStructure exact_to_waldhausen(const ExactStructure& e) {
  if (!e.host) throw ConversionRefused("exact structure without host");
  const auto exact_report = check_exact_axioms(e);
  if (!exact_report.ok())
    throw ConversionRefused("exact axioms fail (" + exact_report.violations.front().law + ": " +
                            exact_report.violations.front().witness + ")");
  const auto& c = *e.host->category();
  const auto zeros = c.zero_objects();
  if (zeros.empty()) throw ConversionRefused("host has no zero object");

  WaldhausenStructure w;
  w.host = e.host->category();
  w.zero = zeros.front();
  w.policy = PushoutPolicy::WithinDeclaredObjects;
  for (const auto& s : e.sigma) w.cofibrations.push_back(s.mono);
  for (MorId m : c.morphisms())
    if (c.is_isomorphism(m)) {
      w.cofibrations.push_back(m);
      w.weak_equivalences.push_back(m);
    }
  w.normalize();
  return w;
}

}  // namespace kcat::exact
