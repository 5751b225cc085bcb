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

#ifndef LIEQ_COHOMOLOGY_HPP_
#define LIEQ_COHOMOLOGY_HPP_

#include <string>
#include <vector>

#include "lieq/lie_algebra.hpp"
#include "lieq/psd.hpp"
#include "lieq/su1n_model.hpp"

namespace lieq {

// Chevalley-Eilenberg complex with trivial real coefficients:
//   (d alpha)(X, Y)   = alpha([X, Y])
//   (d c)(X, Y, Z)    = c([X, Y], Z) + c([Y, Z], X) + c([Z, X], Y)
// The zeroth differential is identically zero.

// Antisymmetric bilinear form on a dim-dimensional algebra.
class TwoCochain {
 public:
  TwoCochain() = default;
  explicit TwoCochain(std::size_t dim) : m_(dim, dim) {}
  // Throws InputError unless m is square and antisymmetric.
  explicit TwoCochain(Matrix m);
  // Coordinates over pairs i < j in lexicographic order.
  static TwoCochain from_pairs(std::size_t dim, const Vec& v);

  std::size_t dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  void set(std::size_t i, std::size_t j, const Scalar& v);
  Scalar eval(const Vec& x, const Vec& y) const;
  Vec pairs() const;
  bool is_zero() const { return m_.is_zero(); }

  friend bool operator==(const TwoCochain& a, const TwoCochain& b) { return a.m_ == b.m_; }

 private:
  Matrix m_;
};

std::size_t pair_count(std::size_t dim);
std::size_t pair_index(std::size_t dim, std::size_t i, std::size_t j);  // requires i < j

// Values on triples i < j < k, lexicographic.
struct ThreeCochain {
  std::size_t dim = 0;
  Vec values;
  bool is_zero() const { return lieq::is_zero(values); }
};

Vec delta0(const LieAlgebra& g, const Scalar& c);
TwoCochain delta1(const LieAlgebra& g, const Vec& alpha);
ThreeCochain delta2(const LieAlgebra& g, const TwoCochain& c);

struct H2Report {
  std::size_t dim_c2 = 0;
  std::size_t cocycles = 0;     // dim ker d2
  std::size_t coboundaries = 0; // rank d1
  std::size_t h2 = 0;
};

H2Report h2_dimension(const LieAlgebra& g);

// Basis of {c : d c = 0, w . pairs(c) = 0 for every extra constraint w}.
std::vector<TwoCochain> cocycle_basis(const LieAlgebra& g, const std::vector<Vec>& extra = {});

struct ChcReport {
  bool satisfied = true;
  std::vector<std::string> violations;  // first few, human readable
};

// The block-wise cocycle conditions for a psd algebra, evaluated literally.
ChcReport check_block_cocycle(const PsdAlgebra& psd, const TwoCochain& c);

// Primitive of a cocycle vanishing on every (H_j, H_k):
// alpha(H_j) = 0, alpha(v_j) = c(H_j, v_j), alpha(E_j) = c(H_j, E_j) / 2.
Vec coboundary_primitive_psd(const PsdAlgebra& psd, const TwoCochain& c);

// Primitive of a cocycle on s (in s coordinates) vanishing on a x a:
// alpha(H) = 0, alpha(X) = c(H_lambda, X) / lambda(H_lambda) for X in g_lambda.
Vec coboundary_primitive_roots(const Su1nModel& model, const TwoCochain& c);

// Cocycles c on s with c([[Z, X]]_s, Y) + c(X, [[Z, Y]]_s) = 0 for Z in k.
std::vector<TwoCochain> invariant_cocycle_space(const Su1nModel& model);

}  // namespace lieq

#endif  // LIEQ_COHOMOLOGY_HPP_
