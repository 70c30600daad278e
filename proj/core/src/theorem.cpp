#include "kcat/complex/theorem.hpp"

#include <algorithm>
#include <set>

#include "kcat/error.hpp"
#include "kcat/kth/k0.hpp"

namespace kcat::complex {

using cat::MorId;
using cat::ObjId;

K0Proxy k0_proxy(const CochainComplex& c) {
  K0Proxy p;
  p.group.free_rank = 1;
  for (std::size_t n = 0; n < c.ranks.size(); ++n)
    p.euler_class += (n % 2 == 0 ? 1 : -1) * static_cast<Int>(c.ranks[n]);
  return p;
}

PreservationReport theorem_check(const SimplicialComplex& a, const SimplicialComplex& b, const Ring& ring) {
  const auto ca = cochain_from_simplicial(a, ring);
  const auto cb = cochain_from_simplicial(b, ring);
  const auto ha = cohomology(ca);
  const auto hb = cohomology(cb);
  PreservationReport r;
  const std::size_t top = std::max(ha.size(), hb.size());
  for (std::size_t n = 0; n < top; ++n) {
    GroupComparison g;
    g.name = "H" + std::to_string(n);
    if (n < ha.size()) g.left = ha[n].normal_form();
    if (n < hb.size()) g.right = hb[n].normal_form();
    g.match = g.left == g.right;
    r.preserved = r.preserved && g.match;
    r.comparisons.push_back(std::move(g));
  }
  const auto ka = k0_proxy(ca);
  const auto kb = k0_proxy(cb);
  GroupComparison k0g{"K0", ka.group, kb.group, ka.group == kb.group};
  r.preserved = r.preserved && k0g.match;
  r.comparisons.push_back(std::move(k0g));
  ClassComparison cls{"K0 class", ka.euler_class, kb.euler_class, ka.euler_class == kb.euler_class};
  r.preserved = r.preserved && cls.match;
  r.classes.push_back(cls);
  r.notes.push_back("necessary condition only: equal invariants do not produce a discretization");
  return r;
}

ValidationReport functor_m_check(const cat::Functor& f, const exact::ExactStructure& source,
                                 const exact::ExactStructure& target) {
  if (!source.host || !target.host) throw StructuralError("exact structure without host");
  const auto& sc = *source.host->category();
  const auto& tc = *target.host->category();
  if (!f.source || !f.target || f.source->object_count() != sc.object_count() ||
      f.source->morphism_count() != sc.morphism_count() || f.target->object_count() != tc.object_count() ||
      f.target->morphism_count() != tc.morphism_count())
    throw StructuralError("functor does not run between the two hosts");

  ValidationReport report;
  const auto functor_report = cat::check_functor(f);
  if (!functor_report.ok()) {
    report.merge(functor_report, "functor/");
    return report;
  }

  const std::set<exact::SigmaSequence> target_sigma(target.sigma.begin(), target.sigma.end());
  std::vector<exact::SigmaSequence> image;
  for (const auto& s : source.sigma) {
    const exact::SigmaSequence t{f(s.left), f(s.middle), f(s.right), f(s.mono), f(s.epi)};
    if (!target_sigma.count(t))
      report.add("preserves-sigma", sc.morphism_name(s.mono) + ", " + sc.morphism_name(s.epi) + " ↦ " +
                                        tc.morphism_name(t.mono) + ", " + tc.morphism_name(t.epi));
    image.push_back(t);
  }
  for (MorId m : sc.morphisms())
    if (sc.is_isomorphism(m) && !tc.is_isomorphism(f(m))) report.add("preserves-weak-equivalences", sc.morphism_name(m));

  // K₀ of the image: generators are target iso classes met by the image.
  const auto classes = kth::isomorphism_classes(tc);
  std::vector<std::size_t> class_of(tc.object_count());
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (ObjId o : classes[k]) class_of[o.value] = k;
  std::set<std::size_t> used;
  for (ObjId o : sc.objects()) used.insert(class_of[f(o).value]);
  std::vector<std::size_t> position(classes.size(), 0);
  std::size_t next = 0;
  for (std::size_t k : used) position[k] = next++;
  std::set<std::vector<Int>> rows;
  for (const auto& t : image) {
    std::vector<Int> row(used.size(), 0);
    row[position[class_of[t.middle.value]]] += 1;
    row[position[class_of[t.left.value]]] -= 1;
    row[position[class_of[t.right.value]]] -= 1;
    rows.insert(row);
  }
  IntMatrix rel(rows.size(), used.size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) rel(r, j) = row[j];
    ++r;
  }
  const kth::AbelianGroupPresentation image_k0(used.size(), rel);
  const auto source_k0 = kth::k0(source);
  if (!kth::groups_isomorphic(source_k0, image_k0))
    report.add("k0-preserved", source_k0.normal_form().to_string() + " vs " + image_k0.normal_form().to_string());
  return report;
}

}  // namespace kcat::complex
