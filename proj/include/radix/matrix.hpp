#pragma once

#include "radix/integer.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace radix {

/// Dense integer matrix, row-major, exact entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  /// Throws std::invalid_argument when entries.size() != rows * cols.
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const Integer> diag);
  static IntMatrix column(std::span<const Integer> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Integer>& entries() const { return entries_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::vector<Integer> row(std::size_t r) const;
  std::vector<Integer> col(std::size_t c) const;

  IntMatrix transposed() const;
  /// Horizontal concatenation [this | other]; row counts must agree.
  IntMatrix concat_cols(const IntMatrix& other) const;
  /// Submatrix consisting of the given rows.
  IntMatrix select_rows(std::span<const std::size_t> which) const;
  IntMatrix select_cols(std::span<const std::size_t> which) const;

  std::vector<Integer> apply(std::span<const Integer> v) const;

  bool is_zero() const;
  bool is_diagonal() const;

  /// Fraction-free (Bareiss) determinant of a square matrix.
  Integer determinant() const;

  // Elementary operations used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// Smith normal form with transforms: left * input * right == diagonal.
/// `left_inverse` is the exact inverse of `left`.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
  IntMatrix left_inverse;

  /// Diagonal entries d_0 | d_1 | ..., length min(rows, cols).
  std::vector<Integer> invariants() const;
};

/// Deterministic Smith normal form. Pivots on the smallest nonzero absolute
/// value in the active block, ties broken in row-major order.
SmithForm smith_normal_form(const IntMatrix& m);

/// An integer solution x of A x = b, if one exists.
std::optional<std::vector<Integer>> solve_integer_system(const IntMatrix& a,
                                                         std::span<const Integer> b);

}  // namespace radix
