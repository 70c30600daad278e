#include "kcat/cat/category.hpp"

#include <map>
#include <sstream>

#include "kcat/error.hpp"

namespace kcat::cat {

namespace {

constexpr std::size_t kMaxMorphisms = 8192;

}  // namespace

ObjId FinCategory::Builder::add_object(std::string name) {
  objects_.push_back(std::move(name));
  identities_.emplace_back();
  return ObjId{static_cast<std::uint32_t>(objects_.size() - 1)};
}

MorId FinCategory::Builder::add_morphism(std::string name, ObjId source, ObjId target) {
  if (source.value >= objects_.size() || target.value >= objects_.size())
    throw StructuralError("morphism '" + name + "' references an unknown object");
  morphisms_.push_back({std::move(name), source, target});
  return MorId{static_cast<std::uint32_t>(morphisms_.size() - 1)};
}

MorId FinCategory::Builder::add_identity(ObjId object, std::string name) {
  const MorId id = add_morphism(std::move(name), object, object);
  set_identity(object, id);
  return id;
}

void FinCategory::Builder::set_identity(ObjId object, MorId morphism) {
  if (object.value >= objects_.size() || morphism.value >= morphisms_.size())
    throw StructuralError("set_identity: unknown id");
  const auto& m = morphisms_[morphism.value];
  if (m.source != object || m.target != object)
    throw StructuralError("identity '" + m.name + "' is not an endomorphism of '" + objects_[object.value] + "'");
  identities_[object.value] = morphism;
}

void FinCategory::Builder::set_composite(MorId g, MorId f, MorId h) {
  const auto n = morphisms_.size();
  if (g.value >= n || f.value >= n || h.value >= n) throw StructuralError("composition entry references an unknown morphism");
  entries_.push_back({g, f, h});
}

void FinCategory::Builder::fill_identity_composites() {
  std::map<std::pair<std::uint32_t, std::uint32_t>, bool> present;
  for (const auto& e : entries_) present[{e.g.value, e.f.value}] = true;
  for (std::uint32_t i = 0; i < morphisms_.size(); ++i) {
    const MorId m{i};
    const auto& info = morphisms_[i];
    if (auto id = identities_[info.target.value]; id && !present.count({id->value, i})) {
      entries_.push_back({*id, m, m});
      present[{id->value, i}] = true;
    }
    if (auto id = identities_[info.source.value]; id && !present.count({i, id->value})) {
      entries_.push_back({m, *id, m});
      present[{i, id->value}] = true;
    }
  }
}

FinCategory FinCategory::Builder::build() && {
  FinCategory c;
  const std::size_t n_obj = objects_.size();
  const std::size_t n_mor = morphisms_.size();
  if (n_mor > kMaxMorphisms)
    throw StructuralError("category has " + std::to_string(n_mor) + " morphisms; desk-scale limit is " +
                          std::to_string(kMaxMorphisms));

  std::map<std::string, int> seen;
  for (const auto& name : objects_)
    if (seen[name]++) throw StructuralError("duplicate object name '" + name + "'");
  seen.clear();
  for (const auto& m : morphisms_)
    if (seen[m.name]++) throw StructuralError("duplicate morphism name '" + m.name + "'");

  c.objects_ = std::move(objects_);
  c.morphisms_ = std::move(morphisms_);
  for (std::size_t o = 0; o < n_obj; ++o) {
    if (!identities_[o]) throw StructuralError("object '" + c.objects_[o] + "' has no identity morphism");
    c.identities_.push_back(*identities_[o]);
  }

  c.homs_.assign(n_obj * n_obj, {});
  for (std::uint32_t i = 0; i < n_mor; ++i) {
    const auto& m = c.morphisms_[i];
    c.homs_[m.source.value * n_obj + m.target.value].push_back(MorId{i});
  }

  c.table_.assign(n_mor * n_mor, -1);
  for (const auto& e : entries_) {
    const auto& g = c.morphisms_[e.g.value];
    const auto& f = c.morphisms_[e.f.value];
    if (f.target != g.source) {
      c.malformed_.push_back({e.g, e.f, e.h});
      continue;
    }
    auto& slot = c.table_[e.f.value * n_mor + e.g.value];
    if (slot >= 0 && static_cast<std::uint32_t>(slot) != e.h.value)
      throw StructuralError("conflicting composition entries for " + g.name + " ∘ " + f.name);
    slot = static_cast<std::int32_t>(e.h.value);
  }
  for (std::uint32_t f = 0; f < n_mor; ++f) {
    const ObjId b = c.morphisms_[f].target;
    for (std::size_t t = 0; t < n_obj; ++t)
      for (MorId g : c.hom(b, ObjId{static_cast<std::uint32_t>(t)}))
        if (c.table_[f * n_mor + g.value] < 0) ++c.missing_entries_;
  }

  c.inverses_.assign(n_mor, std::nullopt);
  for (std::uint32_t i = 0; i < n_mor; ++i) {
    const auto& m = c.morphisms_[i];
    for (MorId g : c.hom(m.target, m.source)) {
      const auto gf = c.composite(g, MorId{i});
      const auto fg = c.composite(MorId{i}, g);
      if (gf && fg && *gf == c.identities_[m.source.value] && *fg == c.identities_[m.target.value]) {
        c.inverses_[i] = g;
        break;
      }
    }
  }
  return c;
}

std::optional<MorId> FinCategory::composite(MorId g, MorId f) const {
  const auto n = morphisms_.size();
  if (g.value >= n || f.value >= n) throw StructuralError("composite: unknown morphism id");
  const auto h = table_[f.value * n + g.value];
  if (h < 0) return std::nullopt;
  return MorId{static_cast<std::uint32_t>(h)};
}

std::optional<ObjId> FinCategory::find_object(const std::string& name) const {
  for (std::uint32_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return ObjId{i};
  return std::nullopt;
}

std::optional<MorId> FinCategory::find_morphism(const std::string& name) const {
  for (std::uint32_t i = 0; i < morphisms_.size(); ++i)
    if (morphisms_[i].name == name) return MorId{i};
  return std::nullopt;
}

std::vector<ObjId> FinCategory::zero_objects() const {
  std::vector<ObjId> out;
  for (std::uint32_t x = 0; x < objects_.size(); ++x) {
    bool zero = true;
    for (std::uint32_t y = 0; y < objects_.size() && zero; ++y)
      zero = hom(ObjId{x}, ObjId{y}).size() == 1 && hom(ObjId{y}, ObjId{x}).size() == 1;
    if (zero) out.push_back(ObjId{x});
  }
  return out;
}

std::vector<ObjId> FinCategory::objects() const {
  std::vector<ObjId> out;
  for (std::uint32_t i = 0; i < objects_.size(); ++i) out.push_back(ObjId{i});
  return out;
}

std::vector<MorId> FinCategory::morphisms() const {
  std::vector<MorId> out;
  for (std::uint32_t i = 0; i < morphisms_.size(); ++i) out.push_back(MorId{i});
  return out;
}

MorId compose(const FinCategory& c, MorId f, MorId g) {
  if (c.target(f) != c.source(g))
    throw CompositionError("cannot compose " + c.morphism_name(g) + " ∘ " + c.morphism_name(f) + ": target of " +
                           c.morphism_name(f) + " is " + c.object_name(c.target(f)) + ", source of " +
                           c.morphism_name(g) + " is " + c.object_name(c.source(g)));
  auto h = c.composite(g, f);
  if (!h)
    throw CompositionError("composition table has no entry for " + c.morphism_name(g) + " ∘ " + c.morphism_name(f));
  return *h;
}

ValidationReport check_category_axioms(const FinCategory& c) {
  if (!c.malformed_entries().empty()) {
    const auto& e = c.malformed_entries().front();
    throw StructuralError("composition table has an entry for non-composable pair (" + c.morphism_name(e.g) + ", " +
                          c.morphism_name(e.f) + ")");
  }
  ValidationReport report;
  const auto n_obj = c.object_count();

  for (MorId f : c.morphisms()) {
    const auto left = c.composite(c.identity(c.target(f)), f);
    if (left != f)
      report.add("left-identity", "id_" + c.object_name(c.target(f)) + " ∘ " + c.morphism_name(f) +
                                      (left ? " = " + c.morphism_name(*left) : " is undefined"));
    const auto right = c.composite(f, c.identity(c.source(f)));
    if (right != f)
      report.add("right-identity", c.morphism_name(f) + " ∘ id_" + c.object_name(c.source(f)) +
                                       (right ? " = " + c.morphism_name(*right) : " is undefined"));
  }

  for (MorId f : c.morphisms()) {
    const ObjId b = c.target(f);
    for (std::uint32_t ci = 0; ci < n_obj; ++ci)
      for (MorId g : c.hom(b, ObjId{ci})) {
        const auto gf = c.composite(g, f);
        if (!gf) {
          report.add("composition-total", "(" + c.morphism_name(g) + ", " + c.morphism_name(f) + ") has no entry");
          continue;
        }
        if (c.source(*gf) != c.source(f) || c.target(*gf) != c.target(g))
          report.add("composition-closure", c.morphism_name(g) + " ∘ " + c.morphism_name(f) + " = " +
                                                c.morphism_name(*gf) + " has the wrong endpoints");
      }
  }
  if (!report.ok()) return report;

  // Associativity over every composable triple.
  for (MorId f : c.morphisms()) {
    const ObjId b = c.target(f);
    for (std::uint32_t ci = 0; ci < n_obj; ++ci)
      for (MorId g : c.hom(b, ObjId{ci})) {
        const MorId gf = *c.composite(g, f);
        for (std::uint32_t di = 0; di < n_obj; ++di)
          for (MorId h : c.hom(ObjId{ci}, ObjId{di})) {
            const MorId lhs = *c.composite(h, gf);
            const MorId rhs = *c.composite(*c.composite(h, g), f);
            if (lhs != rhs)
              report.add("associativity", "(" + c.morphism_name(f) + ", " + c.morphism_name(g) + ", " +
                                              c.morphism_name(h) + "): h∘(g∘f) = " + c.morphism_name(lhs) +
                                              ", (h∘g)∘f = " + c.morphism_name(rhs));
          }
      }
  }
  return report;
}

FinCategory make_category(std::vector<std::string> object_names, std::vector<Morphism> morphisms,
                          std::vector<MorId> identities,
                          const std::function<MorId(MorId g, MorId f)>& compose_fn) {
  FinCategory::Builder b;
  for (auto& name : object_names) b.add_object(std::move(name));
  for (auto& m : morphisms) b.add_morphism(std::move(m.name), m.source, m.target);
  for (std::uint32_t o = 0; o < identities.size(); ++o) b.set_identity(ObjId{o}, identities[o]);
  // Group morphisms by source so composable pairs are enumerated directly.
  std::vector<std::vector<MorId>> by_source(b.object_count());
  std::vector<ObjId> targets(b.morphism_count());
  std::vector<ObjId> sources(b.morphism_count());
  {
    std::uint32_t i = 0;
    for (const auto& m : morphisms) {
      by_source[m.source.value].push_back(MorId{i});
      sources[i] = m.source;
      targets[i] = m.target;
      ++i;
    }
  }
  for (std::uint32_t f = 0; f < b.morphism_count(); ++f)
    for (MorId g : by_source[targets[f].value]) b.set_composite(g, MorId{f}, compose_fn(g, MorId{f}));
  return std::move(b).build();
}

FinCategory product(const FinCategory& a, const FinCategory& b) {
  FinCategory::Builder out;
  const auto nb = b.object_count();
  for (ObjId x : a.objects())
    for (ObjId y : b.objects()) out.add_object("(" + a.object_name(x) + "," + b.object_name(y) + ")");
  const auto mb = b.morphism_count();
  auto pair_obj = [&](ObjId x, ObjId y) { return ObjId{static_cast<std::uint32_t>(x.value * nb + y.value)}; };
  auto pair_mor = [&](MorId f, MorId g) { return MorId{static_cast<std::uint32_t>(f.value * mb + g.value)}; };
  for (MorId f : a.morphisms())
    for (MorId g : b.morphisms())
      out.add_morphism("(" + a.morphism_name(f) + "," + b.morphism_name(g) + ")", pair_obj(a.source(f), b.source(g)),
                       pair_obj(a.target(f), b.target(g)));
  for (ObjId x : a.objects())
    for (ObjId y : b.objects()) out.set_identity(pair_obj(x, y), pair_mor(a.identity(x), b.identity(y)));
  for (MorId f1 : a.morphisms())
    for (MorId f2 : b.morphisms())
      for (std::uint32_t ca = 0; ca < a.object_count(); ++ca)
        for (MorId g1 : a.hom(a.target(f1), ObjId{ca}))
          for (std::uint32_t cb = 0; cb < b.object_count(); ++cb)
            for (MorId g2 : b.hom(b.target(f2), ObjId{cb})) {
              const auto h1 = a.composite(g1, f1);
              const auto h2 = b.composite(g2, f2);
              if (h1 && h2) out.set_composite(pair_mor(g1, g2), pair_mor(f1, f2), pair_mor(*h1, *h2));
            }
  return std::move(out).build();
}

FinCategory terminal_category() {
  FinCategory::Builder b;
  const ObjId o = b.add_object("*");
  b.add_identity(o, "id_*");
  b.fill_identity_composites();
  return std::move(b).build();
}

FinCategory chain_category(std::size_t n) {
  FinCategory::Builder b;
  for (std::size_t i = 0; i < n; ++i) b.add_object(std::to_string(i));
  // Morphism i→j for every i <= j, identities on the diagonal.
  std::vector<std::vector<MorId>> arrow(n, std::vector<MorId>(n));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i; j < n; ++j) {
      const std::string name = i == j ? "id_" + std::to_string(i) : std::to_string(i) + "->" + std::to_string(j);
      arrow[i][j] = b.add_morphism(name, ObjId{i}, ObjId{j});
      if (i == j) b.set_identity(ObjId{i}, arrow[i][j]);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) b.set_composite(arrow[j][k], arrow[i][j], arrow[i][k]);
  return std::move(b).build();
}

FinCategory cyclic_group_category(std::size_t n) {
  FinCategory::Builder b;
  const ObjId o = b.add_object("*");
  std::vector<MorId> elems;
  for (std::size_t k = 0; k < n; ++k) elems.push_back(b.add_morphism(k == 0 ? "e" : "g" + std::to_string(k), o, o));
  b.set_identity(o, elems[0]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.set_composite(elems[i], elems[j], elems[(i + j) % n]);
  return std::move(b).build();
}

}  // namespace kcat::cat
