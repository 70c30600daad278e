#include "kcat/kth/k0.hpp"

#include <algorithm>

#include "kcat/error.hpp"

namespace kcat::kth {

using cat::ObjId;

std::vector<std::vector<ObjId>> isomorphism_classes(const cat::FinCategory& c) {
  std::vector<std::vector<ObjId>> classes;
  std::vector<bool> seen(c.object_count(), false);
  for (ObjId a : c.objects()) {
    if (seen[a.value]) continue;
    std::vector<ObjId> cls{a};
    seen[a.value] = true;
    for (ObjId b : c.objects()) {
      if (seen[b.value]) continue;
      const auto hom = c.hom(a, b);
      if (std::any_of(hom.begin(), hom.end(), [&](cat::MorId m) { return c.is_isomorphism(m); })) {
        cls.push_back(b);
        seen[b.value] = true;
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

K0Result k0_detailed(const exact::ExactStructure& e) {
  if (!e.host) throw StructuralError("exact structure without host");
  const auto& c = *e.host->category();
  K0Result out;
  out.classes = isomorphism_classes(c);
  std::vector<std::size_t> class_of(c.object_count());
  for (std::size_t k = 0; k < out.classes.size(); ++k)
    for (ObjId o : out.classes[k]) class_of[o.value] = k;

  std::vector<std::vector<Int>> rows;
  for (const auto& s : e.sigma) {
    std::vector<Int> row(out.classes.size(), 0);
    row[class_of[s.middle.value]] += 1;
    row[class_of[s.left.value]] -= 1;
    row[class_of[s.right.value]] -= 1;
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  IntMatrix relations(rows.size(), out.classes.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t k = 0; k < rows[r].size(); ++k) relations(r, k) = rows[r][k];
  out.group = AbelianGroupPresentation(out.classes.size(), relations);
  return out;
}

AbelianGroupPresentation k0(const exact::ExactStructure& e) { return k0_detailed(e).group; }

}  // namespace kcat::kth
