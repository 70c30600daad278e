#pragma once

#include <optional>
#include <vector>

#include "kcat/matrix.hpp"

namespace kcat::kth {

/// Smith normal form of an integer matrix M.
///
/// `left * M * right` is the diagonal matrix whose first `rank` entries are
/// `factors` (all positive, each dividing the next) and whose remaining
/// entries are zero. `left` and `right` are unimodular and their inverses are
/// returned as well, so M = left_inverse * D * right_inverse.
struct SmithForm {
  std::vector<Int> factors;
  std::size_t rank = 0;
  IntMatrix left;
  IntMatrix left_inverse;
  IntMatrix right;
  IntMatrix right_inverse;

  /// The diagonal matrix D with the shape of M.
  IntMatrix diagonal(std::size_t rows, std::size_t cols) const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Columns form a Z-basis of {x : m x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

/// An integer solution of m x = b, if one exists.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, std::span<const Int> b);

/// Integer solution X of m X = b (all columns at once), if one exists.
std::optional<IntMatrix> solve_integer(const IntMatrix& m, const IntMatrix& b);

/// True iff every column of `sub` lies in the Z-span of the columns of `span`.
bool column_span_contains(const IntMatrix& span, const IntMatrix& sub);

std::size_t integer_rank(const IntMatrix& m);

/// Rank of m with entries reduced modulo the prime p.
std::size_t rank_mod_p(const IntMatrix& m, Int p);

/// Solution of m x = b over Z/p, if one exists.
std::optional<std::vector<Int>> solve_mod_p(const IntMatrix& m, std::span<const Int> b, Int p);

/// Solution X of m X = b over Z/p, if one exists.
std::optional<IntMatrix> solve_mod_p(const IntMatrix& m, const IntMatrix& b, Int p);

/// Basis (as columns, entries in [0,p)) of the kernel of m over Z/p.
IntMatrix kernel_basis_mod_p(const IntMatrix& m, Int p);

}  // namespace kcat::kth
