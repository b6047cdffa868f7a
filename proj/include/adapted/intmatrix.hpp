#pragma once

#include <cstddef>
#include <vector>

#include "adapted/errors.hpp"
#include "adapted/invariants.hpp"

namespace adapted {

/// Dense exact-integer matrix. Arithmetic accumulates in 128 bits and throws
/// internal_error instead of overflowing silently.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  i64& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  i64 at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;
  IntMatrix transposed() const;
  IntMatrix pow(i64 exponent) const;
  IntMatrix negated() const;
  bool operator==(const IntMatrix&) const = default;

  bool is_zero() const;
  bool is_skew_symmetric() const;

  /// Fraction-free Bareiss elimination; exact.
  i64 determinant() const;

  /// Exact inverse; throws NotUnimodular unless det = +-1.
  IntMatrix inverse_unimodular() const;

  /// Simultaneous row/column permutation: result[i][j] = this[perm[i]][perm[j]].
  IntMatrix permuted(const std::vector<std::size_t>& perm) const;

  // in-place elementary operations (used by the symplectic reduction)
  void add_col(std::size_t dst, std::size_t src, i64 factor);  // col_dst += factor * col_src
  void add_row(std::size_t dst, std::size_t src, i64 factor);
  void swap_cols(std::size_t a, std::size_t b);
  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<i64> data_;
};

IntMatrix permutation_matrix(const std::vector<std::size_t>& perm);

std::string to_string(const IntMatrix& m);

}  // namespace adapted
