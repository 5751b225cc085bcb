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

#ifndef LIEQ_SU1N_MODEL_HPP_
#define LIEQ_SU1N_MODEL_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "lieq/check.hpp"
#include "lieq/lie_algebra.hpp"

namespace lieq {

// Square matrix over the Gaussian rationals.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t n) : n_(n), a_(n * n) {}
  static CMatrix unit(std::size_t n, std::size_t i, std::size_t j, GScalar v = 1);

  std::size_t size() const { return n_; }
  GScalar& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const GScalar& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  CMatrix adjoint() const;
  GScalar trace() const;

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator+(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator*(const GScalar& s, const CMatrix& a);
  friend bool operator==(const CMatrix& a, const CMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

 private:
  std::size_t n_ = 0;
  std::vector<GScalar> a_;
};

inline CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

struct RootDatum {
  Scalar value;                    // lambda(H)
  Subspace space;                  // g_lambda
  std::vector<Vec> orthogonal;     // beta_sigma-orthogonal basis of g_lambda
  Vec h_lambda;                    // beta(h_lambda, X) = lambda(X) on a
};

// su(1,N) as (N+1)x(N+1) complex matrices X with X^dag J + J X = 0, tr X = 0,
// J = diag(-1, 1, ..., 1), viewed as a real Lie algebra.
//
// Basis order: H, e_1..e_{N-1}, f_1..f_{N-1}, E (spanning s = a + n), then
// m, then sigma(e_j), sigma(f_j), sigma(E).
class Su1nModel {
 public:
  explicit Su1nModel(int N);

  int N() const { return N_; }
  std::size_t dim() const { return g_.dim(); }
  const LieAlgebra& algebra() const { return g_; }
  const std::vector<CMatrix>& matrices() const { return mats_; }

  CMatrix matrix_of(const Vec& x) const;
  // Throws InputError if m is not in su(1,N).
  Vec coords_of(const CMatrix& m) const;
  // Realification: entrywise (re, im) pairs in row-major order.
  Vec realify(const CMatrix& m) const;
  // Multiplication by i on the realified ambient space.
  Matrix complex_structure() const;

  const Matrix& sigma() const { return sigma_; }
  Vec apply_sigma(const Vec& x) const { return sigma_.apply(x); }
  const Matrix& killing() const { return killing_; }
  Scalar beta(const Vec& x, const Vec& y) const;
  Scalar beta_sigma(const Vec& x, const Vec& y) const;
  Matrix beta_sigma_gram() const;

  const Subspace& k() const { return k_; }
  const Subspace& p() const { return p_; }
  const Subspace& a() const { return a_; }
  const Subspace& n() const { return n_; }
  const Subspace& m() const { return m_; }
  const Subspace& s() const { return s_; }
  const std::vector<RootDatum>& roots() const { return roots_; }  // decreasing value
  const RootDatum& root(const Scalar& value) const;

  std::size_t h_index() const { return 0; }
  std::vector<std::size_t> e_indices() const;
  std::vector<std::size_t> f_indices() const;
  std::size_t E_index() const { return 2 * N_ - 1; }
  std::vector<std::size_t> s_indices() const;
  std::vector<std::size_t> m_indices() const;
  std::optional<std::size_t> z_index() const;  // generator of Z(m), N >= 2
  std::vector<std::size_t> sigma_e_indices() const;
  std::vector<std::size_t> sigma_f_indices() const;
  std::size_t sigma_E_index() const { return dim() - 1; }

  // x = x_s + x_k with x_s in s and x_k in k.
  std::pair<Vec, Vec> iwasawa_project(const Vec& x) const;
  Vec project_s(const Vec& x) const { return iwasawa_project(x).first; }
  LieAlgebra s_algebra() const { return restrict_to_indices(g_, s_indices()); }
  // A basis of k.
  const std::vector<Vec>& k_basis() const { return k_.basis(); }

 private:
  int N_;
  LieAlgebra g_;
  std::vector<CMatrix> mats_;
  Matrix left_inverse_;
  Matrix realified_;
  Matrix sigma_;
  Matrix killing_;
  Subspace k_, p_, a_, n_, m_, s_;
  std::vector<RootDatum> roots_;
  Matrix iwasawa_inverse_;
};

// [X, sigma X] = beta(X, sigma X) h_lambda with beta(X, sigma X) < 0.
std::vector<Check> verify_sigma_brackets(const Su1nModel& model);
// g_lambda = R X + [m, X] with [m, X] the beta_sigma-orthocomplement of X.
std::vector<Check> verify_m_complement(const Su1nModel& model);
// Root dims, positivity of beta_sigma, root-space and Iwasawa invariants.
std::vector<Check> verify_model_structure(const Su1nModel& model);

}  // namespace lieq

#endif  // LIEQ_SU1N_MODEL_HPP_
