/*
 * Copyright 2026 The braidhopf Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef BRAIDHOPF_MATRIX_HPP
#define BRAIDHOPF_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "braidhopf/scalar.hpp"

namespace braidhopf {

struct Entry {
  std::uint32_t row;
  Scalar value;
};

/// Sparse exact matrix, column-major; each column holds its nonzero
/// entries sorted by row.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept;
  bool is_zero() const noexcept { return nnz() == 0; }

  std::span<const Entry> column(std::size_t c) const { return cols_data_[c]; }
  Scalar at(std::size_t r, std::size_t c) const;

  void set(std::size_t r, std::size_t c, const Scalar& v);
  void add(std::size_t r, std::size_t c, const Scalar& v);

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;

  /// Left factor major: row index = r_a * rows(b) + r_b.
  static Matrix kron(const Matrix& a, const Matrix& b);

  /// Rows/columns picked by index, in the given order.
  Matrix select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  void check_same_shape(const Matrix& o, const char* op) const;

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> cols_data_;
};

/// Row-major dense scratch matrix for elimination on small blocks.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Scalar> data;

  DenseMatrix(Field field, std::size_t r, std::size_t c);
  Scalar& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// In-place reduced row echelon form. Returns the pivot column of each
/// nonzero row, in row order; rows past the pivot count are zero.
std::vector<std::size_t> rref(DenseMatrix& m);

/// Unique solution of A x = b if A has full column rank and the system is
/// consistent; nullopt otherwise.
std::optional<std::vector<Scalar>> solve_unique(DenseMatrix a, std::vector<Scalar> b);

}  // namespace braidhopf

#endif  // BRAIDHOPF_MATRIX_HPP
