#include "kcat/exact/module.hpp"

#include "kcat/error.hpp"
#include "kcat/kth/smith.hpp"

namespace kcat::exact {

FGModule::FGModule(std::size_t generators, IntMatrix relations)
    : generators_(generators), relations_(std::move(relations)) {
  if (relations_.rows() == 0 && relations_.cols() == 0) relations_ = IntMatrix(generators_, 0);
  if (relations_.rows() != generators_)
    throw StructuralError("relation matrix has " + std::to_string(relations_.rows()) + " rows for " +
                          std::to_string(generators_) + " generators");
  normal_form_ = kth::normalize(generators_, relations_.transposed());
}

FGModule FGModule::free(std::size_t rank) { return {rank, IntMatrix(rank, 0)}; }

FGModule FGModule::cyclic(const std::vector<Int>& orders) {
  std::size_t torsion = 0;
  for (Int o : orders) {
    if (o < 0) throw StructuralError("cyclic order must be non-negative");
    if (o != 0) ++torsion;
  }
  IntMatrix rel(orders.size(), torsion);
  std::size_t col = 0;
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i] != 0) rel(i, col++) = orders[i];
  return {orders.size(), std::move(rel)};
}

FGModule FGModule::over(const Ring& ring, std::size_t rank) {
  if (ring.is_integers()) return free(rank);
  return cyclic(std::vector<Int>(rank, ring.modulus));
}

Int FGModule::order() const {
  if (!is_finite()) throw StructuralError("module " + to_string() + " is infinite");
  Int n = 1;
  for (Int t : normal_form_.torsion) n = checked_mul(n, t);
  return n;
}

std::optional<std::vector<Int>> FGModule::cyclic_orders() const {
  std::vector<Int> orders(generators_, 0);
  std::vector<bool> seen(generators_, false);
  for (std::size_t c = 0; c < relations_.cols(); ++c) {
    std::optional<std::size_t> row;
    for (std::size_t r = 0; r < generators_; ++r) {
      if (relations_(r, c) == 0) continue;
      if (row) return std::nullopt;
      row = r;
    }
    if (!row) continue;
    if (seen[*row] || relations_(*row, c) < 0) return std::nullopt;
    seen[*row] = true;
    orders[*row] = relations_(*row, c);
  }
  return orders;
}

FGModule FGModule::direct_sum(const FGModule& other) const {
  return {generators_ + other.generators_, relations_.block_diagonal(other.relations_)};
}

bool is_homomorphism(const IntMatrix& f, const FGModule& source, const FGModule& target) {
  if (f.rows() != target.generators() || f.cols() != source.generators()) return false;
  return kth::column_span_contains(target.relations(), f * source.relations());
}

void require_homomorphism(const IntMatrix& f, const FGModule& source, const FGModule& target, const std::string& what) {
  if (f.rows() != target.generators() || f.cols() != source.generators())
    throw StructuralError(what + " has shape " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                          ", expected " + std::to_string(target.generators()) + "x" +
                          std::to_string(source.generators()));
  if (!kth::column_span_contains(target.relations(), f * source.relations()))
    throw StructuralError(what + " does not respect the module relations");
}

bool same_map(const IntMatrix& f, const IntMatrix& g, const FGModule& target) {
  return kth::column_span_contains(target.relations(), f - g);
}

bool is_zero_map(const IntMatrix& f, const FGModule& target) {
  return kth::column_span_contains(target.relations(), f);
}

bool is_injective(const IntMatrix& f, const FGModule& source, const FGModule& target) {
  // x ↦ f x is injective iff {x : f x ∈ rel(target)} ⊆ rel(source).
  const IntMatrix joint = f.hstack(target.relations());
  const IntMatrix kernel = kth::kernel_basis(joint);
  const IntMatrix preimage = kernel.slice(0, source.generators(), 0, kernel.cols());
  return kth::column_span_contains(source.relations(), preimage);
}

bool is_surjective(const IntMatrix& f, const FGModule& target) {
  return kth::column_span_contains(f.hstack(target.relations()), IntMatrix::identity(target.generators()));
}

IntMatrix canonical_map(const IntMatrix& f, const FGModule& target) {
  const auto orders = target.cyclic_orders();
  if (!orders) throw StructuralError("target module " + target.to_string() + " is not in cyclic form");
  IntMatrix out = f;
  out.reduce_rows(*orders);
  return out;
}

Int hom_count(const FGModule& source, const FGModule& target) {
  const auto src = source.cyclic_orders();
  const auto tgt = target.cyclic_orders();
  if (!src || !tgt) throw StructuralError("hom counting needs modules in cyclic form");
  Int total = 1;
  for (Int n : *tgt)
    for (Int m : *src) {
      if (n == 0 || m == 0) throw StructuralError("hom counting needs finite modules");
      total = checked_mul(total, gcd(m, n));
    }
  return total;
}

std::vector<IntMatrix> enumerate_homs(const FGModule& source, const FGModule& target) {
  const auto src = source.cyclic_orders();
  const auto tgt = target.cyclic_orders();
  if (!src || !tgt) throw StructuralError("hom enumeration needs modules in cyclic form");
  for (Int o : *src)
    if (o == 0) throw StructuralError("hom enumeration needs finite modules");
  for (Int o : *tgt)
    if (o == 0) throw StructuralError("hom enumeration needs finite modules");

  const std::size_t rows = tgt->size(), cols = src->size();
  // Entry (i,j) ranges over multiples of n_i / gcd(m_j, n_i) below n_i.
  std::vector<Int> step(rows * cols), count(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const Int g = gcd((*src)[j], (*tgt)[i]);
      step[i * cols + j] = (*tgt)[i] / g;
      count[i * cols + j] = g;
    }
  std::vector<IntMatrix> out;
  std::vector<Int> digit(rows * cols, 0);
  for (;;) {
    IntMatrix m(rows, cols);
    for (std::size_t k = 0; k < digit.size(); ++k) m(k / cols, k % cols) = digit[k] * step[k];
    out.push_back(std::move(m));
    std::size_t k = digit.size();
    while (k > 0) {
      --k;
      if (++digit[k] < count[k]) break;
      digit[k] = 0;
      if (k == 0) return out;
    }
    if (digit.empty()) return out;
  }
}

}  // namespace kcat::exact
