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

#ifndef LIEQ_LIE_ALGEBRA_HPP_
#define LIEQ_LIE_ALGEBRA_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lieq/linalg.hpp"
#include "lieq/scalar.hpp"

namespace lieq {

using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;  // sorted by index

SparseVec to_sparse(const Vec& v);

// Raw, unvalidated structure constants [b_i, b_j] = sum_k c_ij^k b_k.
// Only i < j is stored; the rest follows from antisymmetry.
class StructureTable {
 public:
  StructureTable() = default;
  explicit StructureTable(std::vector<std::string> labels);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  // Sets [b_i, b_j] = v (and [b_j, b_i] = -v). Throws on i == j, bad index.
  void set(std::size_t i, std::size_t j, const Vec& v);
  Vec basis_bracket(std::size_t i, std::size_t j) const;
  Vec bracket(const Vec& x, const Vec& y) const;

  // Nonzero entries, i < j.
  const std::map<std::pair<std::size_t, std::size_t>, SparseVec>& entries() const { return entries_; }

 private:
  std::vector<std::string> labels_;
  std::map<std::pair<std::size_t, std::size_t>, SparseVec> entries_;
};

struct JacobiReport {
  bool ok = true;
  std::size_t violations = 0;
  std::array<std::size_t, 3> worst_triple{};  // largest residual, first in order on ties
  Vec worst_residual;
};

JacobiReport check_jacobi(const StructureTable& t);

class JacobiError : public std::runtime_error {
 public:
  JacobiError(const std::string& what, std::array<std::size_t, 3> triple)
      : std::runtime_error(what), triple_(triple) {}
  std::array<std::size_t, 3> triple() const { return triple_; }

 private:
  std::array<std::size_t, 3> triple_;
};

// A structure table that passed the Jacobi check.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(StructureTable t);

  std::size_t dim() const { return t_.dim(); }
  const std::vector<std::string>& labels() const { return t_.labels(); }
  const std::string& label(std::size_t i) const { return t_.labels().at(i); }
  std::size_t index_of(const std::string& label) const;
  const StructureTable& table() const { return t_; }

  Vec basis_bracket(std::size_t i, std::size_t j) const;
  Vec bracket(const Vec& x, const Vec& y) const { return t_.bracket(x, y); }
  Matrix ad(const Vec& x) const;
  Vec e(std::size_t i) const { return unit_vec(dim(), i); }

 private:
  StructureTable t_;
  std::vector<Matrix> ad_basis_;
};

std::string format_triple(const StructureTable& t, const std::array<std::size_t, 3>& tr);

Scalar killing_form(const LieAlgebra& g, const Vec& x, const Vec& y);
Matrix killing_matrix(const LieAlgebra& g);

// Subspace of a coordinate space, held in reduced row echelon form so that
// equal subspaces have identical bases.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, const std::vector<Vec>& spanning);
  static Subspace whole(std::size_t n);
  static Subspace zero(std::size_t n) { return Subspace(n, {}); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& s) const;
  // Rows spanning the annihilator: w.x == 0 for all x in the subspace.
  std::vector<Vec> annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);
bool is_subalgebra(const LieAlgebra& g, const Subspace& s);
Subspace derived_subalgebra(const LieAlgebra& g);
Subspace center(const LieAlgebra& g);
// {x : [x, s] in s}
Subspace normalizer(const LieAlgebra& g, const Subspace& s);
// {x : [x, s] = 0}
Subspace centralizer(const LieAlgebra& g, const Subspace& s);

// The subalgebra spanned by the given basis indices, as an algebra of its own.
// Throws PreconditionError if the span is not closed.
LieAlgebra restrict_to_indices(const LieAlgebra& g, const std::vector<std::size_t>& idx);

}  // namespace lieq

#endif  // LIEQ_LIE_ALGEBRA_HPP_
