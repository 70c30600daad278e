#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace kcat {

using Int = std::int64_t;

/// Overflow-checked integer arithmetic; throws OverflowError.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Non-negative remainder, modulus > 0.
Int floor_mod(Int a, Int modulus);

Int gcd(Int a, Int b);

/// Dense row-major integer matrix. Zero-sized dimensions are valid and
/// represent maps to or from the zero module.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix column(std::span<const Int> values);
  static IntMatrix diagonal(std::span<const Int> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Int> data() const { return data_; }
  std::vector<Int> column_vector(std::size_t c) const;
  std::vector<Int> row_vector(std::size_t r) const;

  IntMatrix transposed() const;
  bool is_zero() const;

  /// Columns of *this followed by the columns of other (same row count).
  IntMatrix hstack(const IntMatrix& other) const;
  /// Block diagonal [[*this, 0], [0, other]].
  IntMatrix block_diagonal(const IntMatrix& other) const;
  /// Sub-block of rows [r0, r1) and columns [c0, c1).
  IntMatrix slice(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, Int factor);
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, Int factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  /// Reduces every entry of row r modulo moduli[r] into [0, moduli[r]).
  /// A modulus of 0 leaves the row untouched.
  void reduce_rows(std::span<const Int> moduli);

  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> operator*(const IntMatrix& a, std::span<const Int> v);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

}  // namespace kcat
