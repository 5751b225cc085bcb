// Copyright 2026 The lieq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LIEQ_LINALG_HPP_
#define LIEQ_LINALG_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lieq/scalar.hpp"

namespace lieq {

// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_cols(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  Matrix transpose() const;
  Vec apply(const Vec& x) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

struct Echelon {
  Matrix reduced;                   // reduced row echelon form, zero rows last
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(Matrix m);

// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vec> nullspace(const Matrix& m);

// Rank by fraction-free (Bareiss) elimination after clearing denominators.
std::size_t rank(const Matrix& m);

Scalar determinant(const Matrix& m);

// Leading principal minors d_1..d_n.
std::vector<Scalar> leading_minors(const Matrix& m);

// Some solution of m x = b, or nullopt if inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

Matrix inverse(const Matrix& m);

// Incremental fraction-free echelon form over sparse integer rows. Suited
// to the large, very sparse coboundary matrices.
class SparseEchelon {
 public:
  using Row = std::vector<std::pair<std::size_t, mpz_class>>;  // sorted by column

  explicit SparseEchelon(std::size_t cols) : cols_(cols) {}

  // Returns true when the row was independent of those already added.
  bool add_row(const std::vector<std::pair<std::size_t, Scalar>>& row);
  bool add_row(const Vec& dense);

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }

  std::vector<Vec> nullspace() const;

 private:
  std::size_t cols_;
  std::map<std::size_t, Row> pivots_;  // leading column -> primitive row
};

}  // namespace lieq

#endif  // LIEQ_LINALG_HPP_
