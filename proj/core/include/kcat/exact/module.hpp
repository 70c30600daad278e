#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kcat/kth/abelian_group.hpp"
#include "kcat/matrix.hpp"
#include "kcat/ring.hpp"

namespace kcat::exact {

/// Finitely generated Z-module Z^generators / (column span of relations).
/// Vector spaces over Z/p are the modules with relation matrix p·I.
class FGModule {
 public:
  FGModule() = default;
  /// `relations` has `generators` rows; each column is one relation.
  FGModule(std::size_t generators, IntMatrix relations);

  static FGModule free(std::size_t rank);
  /// Z/orders[0] + Z/orders[1] + ...; an order of 0 stands for a free Z summand.
  static FGModule cyclic(const std::vector<Int>& orders);
  /// Free module of the given rank over the ring (Z^rank or (Z/p)^rank).
  static FGModule over(const Ring& ring, std::size_t rank);

  std::size_t generators() const { return generators_; }
  const IntMatrix& relations() const { return relations_; }

  const kth::GroupNormalForm& normal_form() const { return normal_form_; }
  bool is_finite() const { return normal_form_.free_rank == 0; }
  bool is_zero() const { return normal_form_.is_trivial(); }
  /// Number of elements; throws StructuralError for infinite modules.
  Int order() const;

  /// Orders of the cyclic summands when the relation matrix is diagonal in
  /// cyclic form (one generator per summand), otherwise nullopt.
  std::optional<std::vector<Int>> cyclic_orders() const;

  FGModule direct_sum(const FGModule& other) const;
  bool isomorphic(const FGModule& other) const { return normal_form_ == other.normal_form_; }

  std::string to_string() const { return normal_form_.to_string(); }

  friend bool operator==(const FGModule& a, const FGModule& b) {
    return a.generators_ == b.generators_ && a.relations_ == b.relations_;
  }

 private:
  std::size_t generators_ = 0;
  IntMatrix relations_;
  kth::GroupNormalForm normal_form_;
};

/// Shapes agree and the matrix sends relations of `source` into the
/// relation lattice of `target`.
bool is_homomorphism(const IntMatrix& f, const FGModule& source, const FGModule& target);
/// Throws StructuralError unless is_homomorphism holds.
void require_homomorphism(const IntMatrix& f, const FGModule& source, const FGModule& target, const std::string& what);

/// f and g induce the same map into `target`.
bool same_map(const IntMatrix& f, const IntMatrix& g, const FGModule& target);
bool is_zero_map(const IntMatrix& f, const FGModule& target);

bool is_injective(const IntMatrix& f, const FGModule& source, const FGModule& target);
bool is_surjective(const IntMatrix& f, const FGModule& target);

/// |Hom(source, target)| for finite modules in cyclic form.
Int hom_count(const FGModule& source, const FGModule& target);

/// Every homomorphism between two finite modules in cyclic form, as
/// canonical matrices (row i reduced modulo the i-th target order), in
/// lexicographic order of entries.
std::vector<IntMatrix> enumerate_homs(const FGModule& source, const FGModule& target);

/// Canonical representative of f as a map into a cyclic-form target.
IntMatrix canonical_map(const IntMatrix& f, const FGModule& target);

}  // namespace kcat::exact
