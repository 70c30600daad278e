#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kcat/report.hpp"

namespace kcat::cat {

template <class Tag>
struct Id {
  std::uint32_t value = 0;

  friend auto operator<=>(Id, Id) = default;
  friend bool operator==(Id, Id) = default;
};

using ObjId = Id<struct ObjectTag>;
using MorId = Id<struct MorphismTag>;

struct Morphism {
  std::string name;
  ObjId source;
  ObjId target;
};

/// A finite category given by explicit objects, morphisms, identities and a
/// composition table. Immutable once built; share it through
/// std::shared_ptr<const FinCategory>.
///
/// The table is stored as given: entries for non-composable pairs are kept
/// aside (see malformed_entries) so check_category_axioms can reject them,
/// and missing entries for composable pairs surface as violations.
class FinCategory {
 public:
  class Builder {
   public:
    ObjId add_object(std::string name);
    MorId add_morphism(std::string name, ObjId source, ObjId target);
    /// Adds an identity morphism named `name` for `object`.
    MorId add_identity(ObjId object, std::string name);
    void set_identity(ObjId object, MorId morphism);
    /// Records g ∘ f = h.
    void set_composite(MorId g, MorId f, MorId h);
    /// Fills g ∘ id = g and id ∘ f = f wherever the table has no entry.
    void fill_identity_composites();

    std::size_t object_count() const { return objects_.size(); }
    std::size_t morphism_count() const { return morphisms_.size(); }

    /// Throws StructuralError on unknown ids, duplicate names, objects
    /// without identity, or conflicting table entries.
    FinCategory build() &&;

   private:
    struct Entry {
      MorId g, f, h;
    };
    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<std::optional<MorId>> identities_;
    std::vector<Entry> entries_;
  };

  struct MalformedEntry {
    MorId g, f, h;
  };

  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }

  const std::string& object_name(ObjId o) const { return objects_.at(o.value); }
  const Morphism& morphism(MorId m) const { return morphisms_.at(m.value); }
  const std::string& morphism_name(MorId m) const { return morphisms_.at(m.value).name; }
  ObjId source(MorId m) const { return morphisms_.at(m.value).source; }
  ObjId target(MorId m) const { return morphisms_.at(m.value).target; }
  MorId identity(ObjId o) const { return identities_.at(o.value); }
  bool is_identity(MorId m) const { return identity(source(m)) == m; }

  std::span<const MorId> hom(ObjId a, ObjId b) const { return homs_[a.value * objects_.size() + b.value]; }

  /// Table entry g ∘ f; nullopt when the pair is not composable or the entry
  /// is missing.
  std::optional<MorId> composite(MorId g, MorId f) const;

  std::optional<ObjId> find_object(const std::string& name) const;
  std::optional<MorId> find_morphism(const std::string& name) const;

  std::span<const MalformedEntry> malformed_entries() const { return malformed_; }
  std::size_t missing_entry_count() const { return missing_entries_; }

  std::optional<MorId> inverse(MorId m) const { return inverses_.at(m.value); }
  bool is_isomorphism(MorId m) const { return inverses_.at(m.value).has_value(); }

  /// Objects X with exactly one morphism X→Y and Y→X for every Y.
  std::vector<ObjId> zero_objects() const;

  std::vector<ObjId> objects() const;
  std::vector<MorId> morphisms() const;

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<MorId> identities_;
  std::vector<std::vector<MorId>> homs_;
  std::vector<std::int32_t> table_;  // [f * M + g] -> h or -1
  std::vector<MalformedEntry> malformed_;
  std::size_t missing_entries_ = 0;
  std::vector<std::optional<MorId>> inverses_;
};

using CategoryPtr = std::shared_ptr<const FinCategory>;

/// g ∘ f. Throws CompositionError when target(f) != source(g) or the table
/// has no entry for the pair.
MorId compose(const FinCategory& c, MorId f, MorId g);

/// Identity laws, associativity over all composable triples, closure and
/// totality of the table. Throws StructuralError when the table holds entries
/// for non-composable pairs.
ValidationReport check_category_axioms(const FinCategory& c);

/// Builds a category from objects and a generating set of morphisms closed
/// under a user-supplied composition, used for matrix-like hosts.
/// `compose_fn(g, f)` returns the index of g ∘ f in `morphisms`.
FinCategory make_category(std::vector<std::string> object_names, std::vector<Morphism> morphisms,
                          std::vector<MorId> identities,
                          const std::function<MorId(MorId g, MorId f)>& compose_fn);

/// Product category: objects and morphisms are pairs, composition componentwise.
FinCategory product(const FinCategory& a, const FinCategory& b);

/// The category with one object and one morphism.
FinCategory terminal_category();
/// The poset 0 → 1 → ... → (n-1) viewed as a category.
FinCategory chain_category(std::size_t n);
/// A finite cyclic group Z/n as a one-object category.
FinCategory cyclic_group_category(std::size_t n);

}  // namespace kcat::cat
