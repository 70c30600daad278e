#pragma once

#include <string>
#include <vector>

#include "kcat/matrix.hpp"

namespace kcat::kth {

/// Z^free_rank + Z/t_1 + ... + Z/t_k with every t_i > 1 and t_i | t_{i+1}.
struct GroupNormalForm {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// "Z^2 + Z/2", "Z", "0".
  std::string to_string() const;
  /// "free rank 1, no torsion" / "free rank 0, torsion Z/2 + Z/4".
  std::string describe() const;

  friend bool operator==(const GroupNormalForm&, const GroupNormalForm&) = default;
};

/// Finitely presented abelian group: Z^generators modulo the row span of
/// `relations` (one relation per row).
class AbelianGroupPresentation {
 public:
  AbelianGroupPresentation() = default;
  AbelianGroupPresentation(std::size_t generators, IntMatrix relations);

  static AbelianGroupPresentation from_normal_form(const GroupNormalForm& nf);
  static AbelianGroupPresentation free(std::size_t rank);

  std::size_t generators() const { return generators_; }
  const IntMatrix& relations() const { return relations_; }
  const GroupNormalForm& normal_form() const { return normal_form_; }

  /// Direct sum: generators concatenated, relations block-diagonal.
  AbelianGroupPresentation direct_sum(const AbelianGroupPresentation& other) const;

 private:
  std::size_t generators_ = 0;
  IntMatrix relations_;
  GroupNormalForm normal_form_;
};

GroupNormalForm normalize(std::size_t generators, const IntMatrix& relations);

bool groups_isomorphic(const AbelianGroupPresentation& a, const AbelianGroupPresentation& b);

}  // namespace kcat::kth
