#include "kcat/matrix.hpp"

#include <numeric>
#include <sstream>
#include <utility>

#include "kcat/error.hpp"

namespace kcat {

Int checked_add(Int a, Int b) {
  Int out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

Int checked_sub(Int a, Int b) {
  Int out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in subtraction");
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
  return out;
}

Int floor_mod(Int a, Int modulus) {
  Int r = a % modulus;
  return r < 0 ? r + modulus : r;
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, Int fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw StructuralError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::column(std::span<const Int> values) {
  IntMatrix m(values.size(), 1);
  for (std::size_t i = 0; i < values.size(); ++i) m(i, 0) = values[i];
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Int> values) {
  IntMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

std::vector<Int> IntMatrix::column_vector(std::size_t c) const {
  std::vector<Int> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<Int> IntMatrix::row_vector(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  for (Int v : data_)
    if (v != 0) return false;
  return true;
}

IntMatrix IntMatrix::hstack(const IntMatrix& other) const {
  if (other.rows_ != rows_) throw StructuralError("hstack: row counts differ");
  IntMatrix out(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
  }
  return out;
}

IntMatrix IntMatrix::block_diagonal(const IntMatrix& other) const {
  IntMatrix out(rows_ + other.rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
  for (std::size_t r = 0; r < other.rows_; ++r)
    for (std::size_t c = 0; c < other.cols_; ++c) out(rows_ + r, cols_ + c) = other(r, c);
  return out;
}

IntMatrix IntMatrix::slice(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
  IntMatrix out(r1 - r0, c1 - c0);
  for (std::size_t r = r0; r < r1; ++r)
    for (std::size_t c = c0; c < c1; ++c) out(r - r0, c - c0) = (*this)(r, c);
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, Int factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(target, c) = checked_add((*this)(target, c), checked_mul(factor, (*this)(source, c)));
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, Int factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, target) = checked_add((*this)(r, target), checked_mul(factor, (*this)(r, source)));
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = checked_mul(-1, (*this)(r, c));
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = checked_mul(-1, (*this)(r, c));
}

void IntMatrix::reduce_rows(std::span<const Int> moduli) {
  if (moduli.size() != rows_) throw StructuralError("reduce_rows: modulus count differs from row count");
  for (std::size_t r = 0; r < rows_; ++r) {
    if (moduli[r] == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = floor_mod((*this)(r, c), moduli[r]);
  }
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << (*this)(r, c);
    }
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw StructuralError("matrix product: inner dimensions differ");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = checked_add(out(i, j), checked_mul(aik, b(k, j)));
    }
  return out;
}

std::vector<Int> operator*(const IntMatrix& a, std::span<const Int> v) {
  if (a.cols() != v.size()) throw StructuralError("matrix-vector product: dimensions differ");
  std::vector<Int> out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] = checked_add(out[i], checked_mul(a(i, k), v[k]));
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw StructuralError("matrix sum: shapes differ");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = checked_add(a(r, c), b(r, c));
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw StructuralError("matrix difference: shapes differ");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = checked_sub(a(r, c), b(r, c));
  return out;
}

}  // namespace kcat
