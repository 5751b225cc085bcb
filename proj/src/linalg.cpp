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

#include "lieq/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lieq {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols, std::size_t rows) {
  return from_rows(cols, rows).transpose();
}

Vec Matrix::row(std::size_t i) const {
  return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

Vec Matrix::col(std::size_t j) const {
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("apply: size mismatch");
  Vec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0 && sgn(x[j]) != 0) y[i] += (*this)(i, j) * x[j];
  return y;
}

bool Matrix::is_zero() const { return lieq::is_zero(a_); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matmul: size mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("add: size mismatch");
  Matrix c(a);
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("sub: size mismatch");
  Matrix c(a);
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix c(a);
  for (auto& x : c.a_) x *= s;
  return c;
}

Echelon rref(Matrix m) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

std::vector<Vec> nullspace(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec x(m.cols());
    x[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

namespace {

std::vector<std::vector<mpz_class>> integer_rows(const Matrix& m) {
  std::vector<std::vector<mpz_class>> z(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) z[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return z;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  auto a = integer_rows(m);
  const std::size_t rows = m.rows(), cols = m.cols();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  auto a = integer_rows(m);
  Scalar scale_back = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale_back /= l;
  }
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return Scalar(sign * a[n - 1][n - 1]) * scale_back;
}

std::vector<Scalar> leading_minors(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("leading_minors: not square");
  std::vector<Scalar> d;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    Matrix s(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) s(i, j) = m(i, j);
    d.push_back(determinant(s));
  }
  return d;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon e = rref(std::move(aug));
  Vec x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, m.cols());
  }
  return x;
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse: not square");
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

namespace {

void make_primitive(SparseEchelon::Row& r) {
  if (r.empty()) return;
  mpz_class g = 0;
  for (auto& [c, v] : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (r.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// r <- a*r - b*p, dropping zeros.
SparseEchelon::Row combine(const SparseEchelon::Row& r, const mpz_class& a, const SparseEchelon::Row& p,
                           const mpz_class& b) {
  SparseEchelon::Row out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, a * r[i].second);
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -b * p[j].second);
      ++j;
    } else {
      mpz_class v = a * r[i].second - b * p[j].second;
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

bool SparseEchelon::add_row(const std::vector<std::pair<std::size_t, Scalar>>& row) {
  std::vector<std::pair<std::size_t, Scalar>> sorted;
  for (const auto& e : row)
    if (sgn(e.second) != 0) sorted.push_back(e);
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  mpz_class l = 1;
  for (const auto& [c, v] : sorted) {
    if (c >= cols_) throw std::out_of_range("SparseEchelon: column out of range");
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  Row r;
  for (const auto& [c, v] : sorted) {
    if (!r.empty() && r.back().first == c) throw std::invalid_argument("SparseEchelon: duplicate column");
    r.emplace_back(c, v.get_num() * (l / v.get_den()));
  }
  // Only the leading entry must be cleared to keep an echelon form.
  make_primitive(r);
  while (!r.empty()) {
    auto it = pivots_.find(r.front().first);
    if (it == pivots_.end()) break;
    const Row& p = it->second;
    mpz_class g = gcd(p.front().second, r.front().second);
    r = combine(r, p.front().second / g, p, r.front().second / g);
    make_primitive(r);
  }
  if (r.empty()) return false;
  std::size_t lead = r.front().first;
  pivots_.emplace(lead, std::move(r));
  return true;
}

bool SparseEchelon::add_row(const Vec& dense) {
  std::vector<std::pair<std::size_t, Scalar>> row;
  for (std::size_t j = 0; j < dense.size(); ++j)
    if (sgn(dense[j]) != 0) row.emplace_back(j, dense[j]);
  return add_row(row);
}

std::vector<Vec> SparseEchelon::nullspace() const {
  // Back substitution to reduced form, last pivot first.
  std::map<std::size_t, Row> red;
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    Row r = it->second;
    std::size_t k = 1;
    while (k < r.size()) {
      auto jt = red.find(r[k].first);
      if (jt == red.end()) {
        ++k;
        continue;
      }
      const Row& p = jt->second;
      mpz_class g = gcd(p.front().second, r[k].second);
      r = combine(r, p.front().second / g, p, r[k].second / g);
      make_primitive(r);
    }
    red.emplace(r.front().first, std::move(r));
  }
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (red.count(f)) continue;
    Vec x(cols_);
    x[f] = 1;
    for (const auto& [lead, r] : red) {
      for (const auto& [c, v] : r) {
        if (c == f) {
          x[lead] = -Scalar(v, r.front().second);
          break;
        }
      }
    }
    for (auto& q : x) q.canonicalize();
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace lieq
