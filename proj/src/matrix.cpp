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

#include "braidhopf/matrix.hpp"

#include <algorithm>
#include <string>

namespace braidhopf {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), cols_data_(cols) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  Scalar one = field.one();
  for (std::size_t i = 0; i < n; ++i) m.cols_data_[i].push_back({static_cast<std::uint32_t>(i), one});
  return m;
}

std::size_t Matrix::nnz() const noexcept {
  std::size_t n = 0;
  for (const auto& c : cols_data_) n += c.size();
  return n;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  const auto& col = cols_data_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, std::size_t row) { return e.row < row; });
  if (it != col.end() && it->row == r) return it->value;
  return field_.zero();
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols_) throw Error(ErrorKind::shape, "matrix index out of range");
  auto& col = cols_data_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, std::size_t row) { return e.row < row; });
  bool present = it != col.end() && it->row == r;
  if (v.is_zero()) {
    if (present) col.erase(it);
  } else if (present) {
    it->value = v;
  } else {
    col.insert(it, Entry{static_cast<std::uint32_t>(r), v});
  }
}

void Matrix::add(std::size_t r, std::size_t c, const Scalar& v) { set(r, c, at(r, c) + v); }

void Matrix::check_same_shape(const Matrix& o, const char* op) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_)) {
    throw Error(ErrorKind::shape, std::string("matrix shape mismatch in ") + op);
  }
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_ || !(field_ == rhs.field_)) {
    throw Error(ErrorKind::shape, "matrix product of incompatible shapes " + std::to_string(rows_) + "x" +
                                      std::to_string(cols_) + " * " + std::to_string(rhs.rows_) + "x" +
                                      std::to_string(rhs.cols_));
  }
  Matrix out(field_, rows_, rhs.cols_);
  std::vector<Scalar> acc(rows_, field_.zero());
  std::vector<char> mark(rows_, 0);
  std::vector<std::uint32_t> touched;
  for (std::size_t j = 0; j < rhs.cols_; ++j) {
    touched.clear();
    for (const Entry& b : rhs.cols_data_[j]) {
      for (const Entry& a : cols_data_[b.row]) {
        if (!mark[a.row]) {
          mark[a.row] = 1;
          touched.push_back(a.row);
          acc[a.row] = a.value * b.value;
        } else {
          acc[a.row] += a.value * b.value;
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    auto& col = out.cols_data_[j];
    for (std::uint32_t r : touched) {
      if (!acc[r].is_zero()) col.push_back({r, acc[r]});
      mark[r] = 0;
    }
  }
  return out;
}

namespace {

template <class Op>
Matrix merge(const Matrix& a, const Matrix& b, Op op) {
  Matrix out(a.field(), a.rows(), a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    auto ca = a.column(c), cb = b.column(c);
    std::size_t i = 0, k = 0;
    while (i < ca.size() || k < cb.size()) {
      if (k == cb.size() || (i < ca.size() && ca[i].row < cb[k].row)) {
        out.set(ca[i].row, c, op(ca[i].value, a.field().zero()));
        ++i;
      } else if (i == ca.size() || cb[k].row < ca[i].row) {
        out.set(cb[k].row, c, op(a.field().zero(), cb[k].value));
        ++k;
      } else {
        out.set(ca[i].row, c, op(ca[i].value, cb[k].value));
        ++i;
        ++k;
      }
    }
  }
  return out;
}

}  // namespace

Matrix Matrix::operator+(const Matrix& rhs) const {
  check_same_shape(rhs, "sum");
  return merge(*this, rhs, [](const Scalar& x, const Scalar& y) { return x + y; });
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  check_same_shape(rhs, "difference");
  return merge(*this, rhs, [](const Scalar& x, const Scalar& y) { return x - y; });
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out(field_, rows_, cols_);
  if (s.is_zero()) return out;
  for (std::size_t c = 0; c < cols_; ++c) {
    for (const Entry& e : cols_data_[c]) out.cols_data_[c].push_back({e.row, e.value * s});
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    for (const Entry& e : cols_data_[c]) out.cols_data_[e.row].push_back({static_cast<std::uint32_t>(c), e.value});
  }
  return out;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_)) throw Error(ErrorKind::field, "Kronecker product across fields");
  Matrix out(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t ca = 0; ca < a.cols_; ++ca) {
    for (std::size_t cb = 0; cb < b.cols_; ++cb) {
      auto& col = out.cols_data_[ca * b.cols_ + cb];
      col.reserve(a.cols_data_[ca].size() * b.cols_data_[cb].size());
      for (const Entry& ea : a.cols_data_[ca]) {
        for (const Entry& eb : b.cols_data_[cb]) {
          col.push_back({static_cast<std::uint32_t>(ea.row * b.rows_ + eb.row), ea.value * eb.value});
        }
      }
    }
  }
  return out;
}

Matrix Matrix::select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  std::vector<std::int64_t> row_pos(rows_, -1);
  for (std::size_t i = 0; i < rows.size(); ++i) row_pos.at(rows[i]) = static_cast<std::int64_t>(i);
  Matrix out(field_, rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const Entry& e : cols_data_.at(cols[j])) {
      if (row_pos[e.row] >= 0) out.set(static_cast<std::size_t>(row_pos[e.row]), j, e.value);
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.field_ == b.field_)) return false;
  for (std::size_t c = 0; c < a.cols_; ++c) {
    const auto& x = a.cols_data_[c];
    const auto& y = b.cols_data_[c];
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].row != y[i].row || !(x[i].value == y[i].value)) return false;
    }
  }
  return true;
}

DenseMatrix::DenseMatrix(Field field, std::size_t r, std::size_t c)
    : rows(r), cols(c), data(r * c, field.zero()) {}

std::vector<std::size_t> rref(DenseMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows) continue;
    if (sel != row) {
      for (std::size_t k = 0; k < m.cols; ++k) std::swap(m(sel, k), m(row, k));
    }
    Scalar inv = m(row, col).inverse();
    for (std::size_t k = col; k < m.cols; ++k) m(row, k) *= inv;
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar f = m(r, col);
      for (std::size_t k = col; k < m.cols; ++k) {
        if (!m(row, k).is_zero()) m(r, k) -= f * m(row, k);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::optional<std::vector<Scalar>> solve_unique(DenseMatrix a, std::vector<Scalar> b) {
  if (b.size() != a.rows) throw Error(ErrorKind::shape, "solve_unique: right-hand side length mismatch");
  Field f = b.empty() ? (a.data.empty() ? Field::rationals() : a.data.front().field()) : b.front().field();
  DenseMatrix aug(f, a.rows, a.cols + 1);
  for (std::size_t r = 0; r < a.rows; ++r) {
    for (std::size_t c = 0; c < a.cols; ++c) aug(r, c) = a(r, c);
    aug(r, a.cols) = b[r];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == a.cols) return std::nullopt;  // inconsistent
  if (piv.size() != a.cols) return std::nullopt;                  // not unique
  std::vector<Scalar> x;
  x.reserve(a.cols);
  for (std::size_t r = 0; r < a.cols; ++r) x.push_back(aug(r, a.cols));
  return x;
}

}  // namespace braidhopf
