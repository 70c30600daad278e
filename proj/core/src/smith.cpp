#include "kcat/kth/smith.hpp"

#include <algorithm>
#include <cstdlib>

#include "kcat/error.hpp"

namespace kcat::kth {

namespace {

Int abs_value(Int v) { return v < 0 ? checked_mul(-1, v) : v; }

/// Tracks D = U M V together with U^{-1} and V^{-1} under elementary moves.
struct Reducer {
  IntMatrix d, u, ui, v, vi;

  explicit Reducer(const IntMatrix& m)
      : d(m),
        u(IntMatrix::identity(m.rows())),
        ui(IntMatrix::identity(m.rows())),
        v(IntMatrix::identity(m.cols())),
        vi(IntMatrix::identity(m.cols())) {}

  void row_swap(std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    u.swap_rows(a, b);
    ui.swap_cols(a, b);
  }
  void col_swap(std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    v.swap_cols(a, b);
    vi.swap_rows(a, b);
  }
  // row[target] += q * row[source]
  void row_add(std::size_t target, std::size_t source, Int q) {
    d.add_row_multiple(target, source, q);
    u.add_row_multiple(target, source, q);
    ui.add_col_multiple(source, target, checked_mul(-1, q));
  }
  // col[target] += q * col[source]
  void col_add(std::size_t target, std::size_t source, Int q) {
    d.add_col_multiple(target, source, q);
    v.add_col_multiple(target, source, q);
    vi.add_row_multiple(source, target, checked_mul(-1, q));
  }
  void row_negate(std::size_t r) {
    d.negate_row(r);
    u.negate_row(r);
    ui.negate_col(r);
  }
};

}  // namespace

IntMatrix SmithForm::diagonal(std::size_t rows, std::size_t cols) const {
  IntMatrix out(rows, cols);
  for (std::size_t i = 0; i < factors.size(); ++i) out(i, i) = factors[i];
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Reducer r(m);
  auto& d = r.d;

  std::size_t t = 0;
  while (t < std::min(rows, cols)) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = rows, pj = cols;
    Int best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        const Int a = abs_value(d(i, j));
        if (a != 0 && (best == 0 || a < best)) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    r.row_swap(t, pi);
    r.col_swap(t, pj);

    for (;;) {
      bool remainder = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        r.row_add(i, t, checked_mul(-1, d(i, t) / d(t, t)));
        remainder = remainder || d(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        r.col_add(j, t, checked_mul(-1, d(t, j) / d(t, t)));
        remainder = remainder || d(t, j) != 0;
      }
      if (remainder) {
        // A remainder smaller than the pivot is left in row or column t.
        std::size_t bi = t, bj = t;
        Int small = abs_value(d(t, t));
        for (std::size_t i = t + 1; i < rows; ++i)
          if (d(i, t) != 0 && abs_value(d(i, t)) < small) {
            small = abs_value(d(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(t, j) != 0 && abs_value(d(t, j)) < small) {
            small = abs_value(d(t, j));
            bi = t;
            bj = j;
          }
        r.row_swap(t, bi);
        r.col_swap(t, bj);
        continue;
      }
      // Row and column t are clear; enforce divisibility of the trailing block.
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            r.row_add(t, i, 1);
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (d(t, t) < 0) r.row_negate(t);
    ++t;
  }

  SmithForm out;
  out.rank = t;
  for (std::size_t i = 0; i < t; ++i) out.factors.push_back(d(i, i));
  out.left = std::move(r.u);
  out.left_inverse = std::move(r.ui);
  out.right = std::move(r.v);
  out.right_inverse = std::move(r.vi);
  return out;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  return s.right.slice(0, m.cols(), s.rank, m.cols());
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, std::span<const Int> b) {
  if (b.size() != m.rows()) throw StructuralError("solve_integer: right-hand side has wrong length");
  const SmithForm s = smith_normal_form(m);
  const std::vector<Int> c = s.left * b;
  std::vector<Int> y(m.cols(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < s.rank) {
      if (c[i] % s.factors[i] != 0) return std::nullopt;
      y[i] = c[i] / s.factors[i];
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return s.right * std::span<const Int>(y);
}

std::optional<IntMatrix> solve_integer(const IntMatrix& m, const IntMatrix& b) {
  if (b.rows() != m.rows()) throw StructuralError("solve_integer: right-hand side has wrong row count");
  const SmithForm s = smith_normal_form(m);
  IntMatrix c = s.left * b;
  IntMatrix y(m.cols(), b.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t k = 0; k < b.cols(); ++k) {
      if (i < s.rank) {
        if (c(i, k) % s.factors[i] != 0) return std::nullopt;
        y(i, k) = c(i, k) / s.factors[i];
      } else if (c(i, k) != 0) {
        return std::nullopt;
      }
    }
  return s.right * y;
}

bool column_span_contains(const IntMatrix& span, const IntMatrix& sub) {
  if (span.rows() != sub.rows()) throw StructuralError("column_span_contains: row counts differ");
  if (sub.cols() == 0) return true;
  const SmithForm s = smith_normal_form(span);
  for (std::size_t c = 0; c < sub.cols(); ++c) {
    const std::vector<Int> col = sub.column_vector(c);
    const std::vector<Int> image = s.left * std::span<const Int>(col);
    for (std::size_t i = 0; i < image.size(); ++i) {
      if (i < s.rank ? image[i] % s.factors[i] != 0 : image[i] != 0) return false;
    }
  }
  return true;
}

std::size_t integer_rank(const IntMatrix& m) { return smith_normal_form(m).rank; }

namespace {

Int inverse_mod(Int a, Int p) {
  // p is prime; a is nonzero mod p.
  Int result = 1, base = floor_mod(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

/// Row-reduces `a` in place modulo p; returns pivot columns.
std::vector<std::size_t> row_reduce_mod_p(IntMatrix& a, Int p, std::size_t pivot_cols) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = floor_mod(a(r, c), p);
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    a.swap_rows(row, sel);
    const Int inv = inverse_mod(a(row, col), p);
    for (std::size_t c = 0; c < a.cols(); ++c) a(row, c) = a(row, c) * inv % p;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Int f = a(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = floor_mod(a(r, c) - f * a(row, c), p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank_mod_p(const IntMatrix& m, Int p) {
  IntMatrix a = m;
  return row_reduce_mod_p(a, p, a.cols()).size();
}

std::optional<std::vector<Int>> solve_mod_p(const IntMatrix& m, std::span<const Int> b, Int p) {
  if (b.size() != m.rows()) throw StructuralError("solve_mod_p: right-hand side has wrong length");
  IntMatrix a = m.hstack(IntMatrix::column(b));
  const auto pivots = row_reduce_mod_p(a, p, m.cols());
  for (std::size_t r = pivots.size(); r < a.rows(); ++r)
    if (a(r, m.cols()) != 0) return std::nullopt;
  std::vector<Int> x(m.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a(i, m.cols());
  return x;
}

std::optional<IntMatrix> solve_mod_p(const IntMatrix& m, const IntMatrix& b, Int p) {
  if (b.rows() != m.rows()) throw StructuralError("solve_mod_p: right-hand side has wrong row count");
  IntMatrix a = m.hstack(b);
  const auto pivots = row_reduce_mod_p(a, p, m.cols());
  for (std::size_t r = pivots.size(); r < a.rows(); ++r)
    for (std::size_t k = 0; k < b.cols(); ++k)
      if (a(r, m.cols() + k) != 0) return std::nullopt;
  IntMatrix x(m.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t k = 0; k < b.cols(); ++k) x(pivots[i], k) = a(i, m.cols() + k);
  return x;
}

IntMatrix kernel_basis_mod_p(const IntMatrix& m, Int p) {
  IntMatrix a = m;
  const auto pivots = row_reduce_mod_p(a, p, a.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  IntMatrix basis(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = floor_mod(-a(i, free_cols[k]), p);
  }
  return basis;
}

}  // namespace kcat::kth
