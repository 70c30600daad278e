#include "kcat/kth/s_construction.hpp"

#include <map>
#include <tuple>

#include "kcat/cat/pushout.hpp"
#include "kcat/error.hpp"

namespace kcat::kth {

using cat::MorId;
using cat::ObjId;
using cat::staircase_node;
using Key = std::pair<std::size_t, std::size_t>;

namespace {

constexpr std::size_t kMaxMaps = 8192;

/// A staircase with the quotient legs u(i,j): A(0,j) → A(i,j) kept for
/// computing induced maps.
struct Built {
  cat::StaircaseData data;
  std::map<Key, MorId> legs;
};

class Enumerator {
 public:
  Enumerator(const exact::WaldhausenStructure& w, std::size_t n) : w_(w), c_(*w.host), n_(n) {}

  std::vector<Built> staircases() {
    std::vector<MorId> row;
    std::vector<Built> out;
    extend(c_.hom(w_.zero, w_.zero).front(), row, out);
    return out;
  }

 private:
  /// Row 0 is the chain built so far; `last` is the most recent horizontal
  /// arrow (or id_0 to start).
  void extend(MorId last, std::vector<MorId>& row, std::vector<Built>& out) {
    if (row.size() == n_) {
      out.push_back(build(row));
      return;
    }
    const ObjId from = row.empty() ? w_.zero : c_.target(last);
    for (ObjId to : c_.objects())
      for (MorId h : c_.hom(from, to)) {
        if (!w_.is_cofibration(h)) continue;
        row.push_back(h);
        extend(h, row, out);
        row.pop_back();
      }
  }

  /// u(0,i,j): the composite A(0,i) → A(0,j) along row 0.
  MorId row_composite(const std::vector<MorId>& row, std::size_t i, std::size_t j) const {
    MorId acc = c_.identity(i == 0 ? w_.zero : c_.target(row[i - 1]));
    for (std::size_t k = i; k < j; ++k) acc = *c_.composite(row[k], acc);
    return acc;
  }

  Built build(const std::vector<MorId>& row) const {
    Built b;
    auto& d = b.data;
    d.level = n_;
    d.objects[{0, 0}] = w_.zero;
    for (std::size_t j = 1; j <= n_; ++j) {
      d.objects[{0, j}] = c_.target(row[j - 1]);
      d.horizontal[{0, j - 1}] = row[j - 1];
      b.legs[{0, j}] = c_.identity(c_.target(row[j - 1]));
    }
    b.legs[{0, 0}] = c_.identity(w_.zero);
    std::map<Key, cat::Cocone> quotient;
    for (std::size_t i = 1; i <= n_; ++i)
      for (std::size_t j = i; j <= n_; ++j) {
        const ObjId a0j = d.objects.at({0, j});
        if (i == j) {
          d.objects[{i, j}] = w_.zero;
          b.legs[{i, j}] = c_.hom(a0j, w_.zero).front();
          quotient[{i, j}] = {w_.zero, b.legs[{i, j}], c_.identity(w_.zero)};
          continue;
        }
        const MorId inc = row_composite(row, i, j);
        const ObjId a0i = c_.source(inc);
        const MorId to_zero = c_.hom(a0i, w_.zero).front();
        const auto p = cat::find_pushout(c_, {inc, to_zero});
        if (!p)
          throw EnumerationIncomplete("cokernel of " + c_.morphism_name(inc) + " (" + c_.object_name(a0i) + " ↣ " +
                                      c_.object_name(a0j) + ") is not among the declared objects");
        d.objects[{i, j}] = p->apex;
        b.legs[{i, j}] = p->left_leg;
        quotient[{i, j}] = *p;
      }
    // Induced arrows via the universal property of each quotient.
    for (std::size_t i = 0; i <= n_; ++i)
      for (std::size_t j = i; j <= n_; ++j) {
        const ObjId here = d.objects.at({i, j});
        if (j < n_ && i > 0) {
          const ObjId there = d.objects.at({i, j + 1});
          if (i == j) {
            d.horizontal[{i, j}] = c_.hom(here, there).front();
          } else {
            const MorId x = *c_.composite(b.legs.at({i, j + 1}), row[j]);
            d.horizontal[{i, j}] = mediate(quotient.at({i, j}), x, there);
          }
        }
        if (i < j) {
          const ObjId there = d.objects.at({i + 1, j});
          if (i == 0) {
            d.vertical[{i, j}] = b.legs.at({1, j});
          } else if (i + 1 == j) {
            d.vertical[{i, j}] = c_.hom(here, there).front();
          } else {
            d.vertical[{i, j}] = mediate(quotient.at({i, j}), b.legs.at({i + 1, j}), there);
          }
        }
      }
    return b;
  }

  /// The arrow out of a quotient determined by x: A(0,j) → target.
  MorId mediate(const cat::Cocone& q, MorId x, ObjId target) const {
    const MorId y = c_.hom(w_.zero, target).front();
    const auto m = cat::mediating_morphism(c_, q, {target, x, y});
    if (!m) throw InvariantViolation("induced staircase arrow does not exist");
    return *m;
  }

  const exact::WaldhausenStructure& w_;
  const cat::FinCategory& c_;
  std::size_t n_;
};

/// Node order used for StaircaseMap::components.
std::vector<Key> node_keys(std::size_t n) {
  std::vector<Key> keys;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) keys.emplace_back(i, j);
  return keys;
}

}  // namespace

SConstructionLevel s_construct(const exact::WaldhausenStructure& input, std::size_t n, MapScope scope) {
  if (!input.host) throw StructuralError("Waldhausen structure without host");
  if (n > kMaxSLevel) throw StructuralError("S-construction level " + std::to_string(n) + " exceeds " +
                                            std::to_string(kMaxSLevel));
  exact::WaldhausenStructure w = input;
  w.normalize();
  const auto& c = *w.host;

  SConstructionLevel out;
  out.level = n;
  out.host = w;
  out.scope = scope;

  std::vector<Built> built = Enumerator(w, n).staircases();
  const auto keys = node_keys(n);
  for (const auto& b : built) {
    const auto diagram = cat::staircase_diagram(w.host, b.data);
    const auto r = cat::check_commutes(diagram);
    if (!r.commutes) throw InvariantViolation("staircase does not commute: " + r.witness);
    for (const auto& [key, h] : b.data.horizontal)
      if (!w.is_cofibration(h))
        throw InvariantViolation("horizontal arrow " + c.morphism_name(h) + " is not a cofibration");
    for (std::size_t j = 0; j <= n; ++j)
      if (b.data.objects.at({j, j}) != w.zero) throw InvariantViolation("diagonal entry is not the zero object");
    out.staircases.push_back(b.data);
  }

  // Levelwise maps: choose the row-0 components, the rest is induced.
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::vector<MorId>>, std::uint32_t> index;
  for (std::uint32_t s = 0; s < built.size(); ++s)
    for (std::uint32_t t = 0; t < built.size(); ++t) {
      const auto& A = built[s];
      const auto& B = built[t];
      std::vector<MorId> row0(n + 1);
      row0[0] = c.identity(w.zero);
      auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j > n) {
          std::map<Key, MorId> comp;
          for (std::size_t k = 0; k <= n; ++k) comp[{0, k}] = row0[k];
          for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t k = i; k <= n; ++k) {
              const ObjId a = A.data.objects.at({i, k});
              const ObjId b = B.data.objects.at({i, k});
              // f(i,k) ∘ u_A(i,k) = u_B(i,k) ∘ f(0,k).
              const MorId want = *c.composite(B.legs.at({i, k}), row0[k]);
              std::optional<MorId> found;
              for (MorId f : c.hom(a, b))
                if (*c.composite(f, A.legs.at({i, k})) == want) {
                  found = f;
                  break;
                }
              if (!found) return;
              comp[{i, k}] = *found;
            }
          StaircaseMap m{s, t, {}, true};
          for (const auto& key : keys) {
            m.components.push_back(comp.at(key));
            m.weak = m.weak && w.is_weak_equivalence(comp.at(key));
          }
          if (scope == MapScope::WeakOnly && !m.weak) return;
          // Commutation with vertical arrows (horizontal ones are forced).
          for (const auto& [key, va] : A.data.vertical) {
            const MorId vb = B.data.vertical.at(key);
            const Key below{key.first + 1, key.second};
            if (*c.composite(comp.at(below), va) != *c.composite(vb, comp.at(key))) return;
          }
          for (const auto& [key, ha] : A.data.horizontal) {
            const MorId hb = B.data.horizontal.at(key);
            const Key right{key.first, key.second + 1};
            if (*c.composite(comp.at(right), ha) != *c.composite(hb, comp.at(key))) return;
          }
          if (out.maps.size() >= kMaxMaps)
            throw EnumerationIncomplete("S-construction level " + std::to_string(n) + " has more than " +
                                        std::to_string(kMaxMaps) + " levelwise maps");
          index.emplace(std::tuple{s, t, m.components}, static_cast<std::uint32_t>(out.maps.size()));
          out.maps.push_back(std::move(m));
          return;
        }
        const ObjId a = A.data.objects.at({0, j});
        const ObjId b = B.data.objects.at({0, j});
        for (MorId f : c.hom(a, b)) {
          if (scope == MapScope::WeakOnly && !w.is_weak_equivalence(f)) continue;
          // Square with the previous horizontal arrows.
          const MorId ha = A.data.horizontal.at({0, j - 1});
          const MorId hb = B.data.horizontal.at({0, j - 1});
          if (*c.composite(f, ha) != *c.composite(hb, row0[j - 1])) continue;
          row0[j] = f;
          self(self, j + 1);
        }
      };
      rec(rec, 1);
    }

  cat::FinCategory::Builder b;
  for (std::uint32_t s = 0; s < built.size(); ++s) b.add_object("S" + std::to_string(s));
  for (std::uint32_t k = 0; k < out.maps.size(); ++k) {
    const auto& m = out.maps[k];
    std::string name;
    for (std::size_t i = 0; i < m.components.size(); ++i) name += (i ? "," : "") + c.morphism_name(m.components[i]);
    b.add_morphism("S" + std::to_string(m.source) + "->S" + std::to_string(m.target) + "{" + name + "}",
                   ObjId{m.source}, ObjId{m.target});
  }
  for (std::uint32_t s = 0; s < built.size(); ++s) {
    std::vector<MorId> ids;
    for (const auto& key : keys) ids.push_back(c.identity(built[s].data.objects.at(key)));
    b.set_identity(ObjId{s}, MorId{index.at(std::tuple{s, s, ids})});
  }
  std::vector<std::vector<std::uint32_t>> by_source(built.size());
  for (std::uint32_t k = 0; k < out.maps.size(); ++k) by_source[out.maps[k].source].push_back(k);
  for (std::uint32_t f = 0; f < out.maps.size(); ++f)
    for (std::uint32_t g : by_source[out.maps[f].target]) {
      std::vector<MorId> comp;
      for (std::size_t i = 0; i < keys.size(); ++i)
        comp.push_back(*c.composite(out.maps[g].components[i], out.maps[f].components[i]));
      const auto it = index.find(std::tuple{out.maps[f].source, out.maps[g].target, comp});
      if (it == index.end()) throw InvariantViolation("levelwise maps are not closed under composition");
      b.set_composite(MorId{g}, MorId{f}, MorId{it->second});
    }
  out.category = std::make_shared<const cat::FinCategory>(std::move(b).build());
  return out;
}

cat::FinCategory weak_equiv_subcat(const exact::WaldhausenStructure& input, const SConstructionLevel& s) {
  exact::WaldhausenStructure w = input;
  w.normalize();
  const auto& sc = *s.category;
  std::vector<std::uint32_t> keep;
  std::map<std::uint32_t, std::uint32_t> renumber;
  for (std::uint32_t k = 0; k < s.maps.size(); ++k) {
    bool weak = true;
    for (MorId m : s.maps[k].components) weak = weak && w.is_weak_equivalence(m);
    if (!weak) continue;
    renumber[k] = static_cast<std::uint32_t>(keep.size());
    keep.push_back(k);
  }
  cat::FinCategory::Builder b;
  for (ObjId o : sc.objects()) b.add_object(sc.object_name(o));
  for (std::uint32_t k : keep) b.add_morphism(sc.morphism_name(MorId{k}), sc.source(MorId{k}), sc.target(MorId{k}));
  for (ObjId o : sc.objects()) {
    const auto it = renumber.find(sc.identity(o).value);
    if (it == renumber.end()) throw InvariantViolation("identity of " + sc.object_name(o) + " is not weak");
    b.set_identity(o, MorId{it->second});
  }
  for (std::uint32_t f : keep)
    for (std::uint32_t g : keep) {
      const auto h = sc.composite(MorId{g}, MorId{f});
      if (!h) continue;
      const auto it = renumber.find(h->value);
      if (it == renumber.end()) throw InvariantViolation("weak equivalences are not closed under composition");
      b.set_composite(MorId{renumber.at(g)}, MorId{renumber.at(f)}, MorId{it->second});
    }
  return std::move(b).build();
}

SimplicialSet k_spectrum_level(const exact::WaldhausenStructure& w, std::size_t m, std::size_t truncation) {
  if (truncation > 3) throw StructuralError("truncation level above 3 is not supported");
  const auto s = s_construct(w, m, MapScope::WeakOnly);
  return nerve(weak_equiv_subcat(w, s), truncation);
}

}  // namespace kcat::kth
