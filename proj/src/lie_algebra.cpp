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

#include "lieq/lie_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lieq {

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) s.emplace_back(i, v[i]);
  return s;
}

StructureTable::StructureTable(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw InputError("empty basis label");
    if (!seen.insert(l).second) throw InputError("duplicate basis label '" + l + "'");
  }
}

void StructureTable::set(std::size_t i, std::size_t j, const Vec& v) {
  if (i >= dim() || j >= dim()) throw InputError("bracket index out of range");
  if (i == j) {
    if (!is_zero(v)) throw InputError("nonzero self-bracket of '" + labels_[i] + "'");
    return;
  }
  if (v.size() != dim()) throw InputError("bracket value has wrong length");
  Vec w = i < j ? v : scale(-1, v);
  auto key = std::minmax(i, j);
  if (is_zero(w)) {
    entries_.erase({key.first, key.second});
  } else {
    entries_[{key.first, key.second}] = to_sparse(w);
  }
}

Vec StructureTable::basis_bracket(std::size_t i, std::size_t j) const {
  Vec r(dim());
  if (i == j) return r;
  auto key = std::minmax(i, j);
  auto it = entries_.find({key.first, key.second});
  if (it == entries_.end()) return r;
  for (const auto& [k, c] : it->second) r[k] = i < j ? c : Scalar(-c);
  return r;
}

Vec StructureTable::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim() || y.size() != dim()) throw std::invalid_argument("bracket: size mismatch");
  Vec r(dim());
  for (const auto& [key, val] : entries_) {
    auto [i, j] = key;
    Scalar c = x[i] * y[j] - x[j] * y[i];
    if (sgn(c) == 0) continue;
    for (const auto& [k, v] : val) r[k] += c * v;
  }
  return r;
}

namespace {

Scalar max_abs(const Vec& v) {
  Scalar m;
  for (const auto& x : v) m = std::max<Scalar>(m, abs(x));
  return m;
}

}  // namespace

JacobiReport check_jacobi(const StructureTable& t) {
  JacobiReport rep;
  const std::size_t n = t.dim();
  std::vector<Vec> basis(n);
  for (std::size_t i = 0; i < n; ++i) basis[i] = unit_vec(n, i);
  Scalar worst;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec bij = t.basis_bracket(i, j);
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec r = t.bracket(bij, basis[k]);
        r = add(r, t.bracket(t.basis_bracket(j, k), basis[i]));
        r = add(r, t.bracket(t.basis_bracket(k, i), basis[j]));
        if (is_zero(r)) continue;
        ++rep.violations;
        Scalar m = max_abs(r);
        if (rep.ok || m > worst) {
          worst = m;
          rep.worst_triple = {i, j, k};
          rep.worst_residual = r;
        }
        rep.ok = false;
      }
    }
  return rep;
}

std::string format_triple(const StructureTable& t, const std::array<std::size_t, 3>& tr) {
  std::ostringstream os;
  os << "(" << t.labels().at(tr[0]) << ", " << t.labels().at(tr[1]) << ", " << t.labels().at(tr[2]) << ")";
  return os.str();
}

LieAlgebra::LieAlgebra(StructureTable t) : t_(std::move(t)) {
  JacobiReport rep = check_jacobi(t_);
  if (!rep.ok) {
    throw JacobiError("Jacobi identity fails on " + format_triple(t_, rep.worst_triple), rep.worst_triple);
  }
  ad_basis_.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      Vec c = t_.basis_bracket(i, j);
      for (std::size_t k = 0; k < dim(); ++k) m(k, j) = c[k];
    }
    ad_basis_.push_back(std::move(m));
  }
}

std::size_t LieAlgebra::index_of(const std::string& label) const {
  const auto& ls = labels();
  auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) throw InputError("unknown basis label '" + label + "'");
  return static_cast<std::size_t>(it - ls.begin());
}

Vec LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const { return t_.basis_bracket(i, j); }

Matrix LieAlgebra::ad(const Vec& x) const {
  Matrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (sgn(x.at(i)) != 0) m = m + x[i] * ad_basis_[i];
  return m;
}

Scalar killing_form(const LieAlgebra& g, const Vec& x, const Vec& y) {
  Matrix p = g.ad(x) * g.ad(y);
  Scalar tr;
  for (std::size_t i = 0; i < g.dim(); ++i) tr += p(i, i);
  return tr;
}

Matrix killing_matrix(const LieAlgebra& g) {
  Matrix k(g.dim(), g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i; j < g.dim(); ++j) {
      k(i, j) = killing_form(g, g.e(i), g.e(j));
      k(j, i) = k(i, j);
    }
  return k;
}

Subspace::Subspace(std::size_t ambient, const std::vector<Vec>& spanning) : ambient_(ambient) {
  if (spanning.empty()) return;
  for (const auto& v : spanning)
    if (v.size() != ambient) throw std::invalid_argument("Subspace: vector length mismatch");
  Echelon e = rref(Matrix::from_rows(spanning, ambient));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) basis_.push_back(e.reduced.row(r));
  pivots_ = e.pivots;
}

Subspace Subspace::whole(std::size_t n) {
  std::vector<Vec> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(unit_vec(n, i));
  return Subspace(n, b);
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::contains: length mismatch");
  Vec r = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    Scalar c = r[pivots_[k]];
    if (sgn(c) != 0) r = sub(r, scale(c, basis_[k]));
  }
  return is_zero(r);
}

bool Subspace::contains(const Subspace& s) const {
  for (const auto& v : s.basis())
    if (!contains(v)) return false;
  return true;
}

std::vector<Vec> Subspace::annihilator() const {
  if (basis_.empty()) return Subspace::whole(ambient_).basis();
  return nullspace(Matrix::from_rows(basis_, ambient_));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  std::vector<Vec> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace(a.ambient_dim(), all);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  const std::size_t n = a.ambient_dim();
  auto q = b.annihilator();
  if (q.empty() || a.dim() == 0) return a;
  // x = sum t_i a_i with q x = 0.
  Matrix qa(q.size(), a.dim());
  for (std::size_t r = 0; r < q.size(); ++r)
    for (std::size_t i = 0; i < a.dim(); ++i) qa(r, i) = dot(q[r], a.basis()[i]);
  std::vector<Vec> out;
  for (const auto& t : nullspace(qa)) {
    Vec x(n);
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (sgn(t[i]) != 0) x = add(x, scale(t[i], a.basis()[i]));
    out.push_back(std::move(x));
  }
  return Subspace(n, out);
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<Vec> out;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) {
      Vec z = g.bracket(x, y);
      if (!is_zero(z)) out.push_back(std::move(z));
    }
  return Subspace(g.dim(), out);
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) { return s.contains(bracket_span(g, s, s)); }

Subspace derived_subalgebra(const LieAlgebra& g) {
  auto w = Subspace::whole(g.dim());
  return bracket_span(g, w, w);
}

Subspace center(const LieAlgebra& g) { return centralizer(g, Subspace::whole(g.dim())); }

namespace {

// Solves for x with rows(q_r . ad(s_j)) x = 0 over all r, j.
Subspace stabilizer(const LieAlgebra& g, const Subspace& s, const std::vector<Vec>& q) {
  std::vector<Vec> rows;
  for (const auto& sj : s.basis()) {
    Matrix m = g.ad(sj);  // [s_j, x] = m x
    for (const auto& qr : q) {
      Vec row(g.dim());
      for (std::size_t c = 0; c < g.dim(); ++c)
        for (std::size_t r = 0; r < g.dim(); ++r)
          if (sgn(qr[r]) != 0) row[c] += qr[r] * m(r, c);
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return Subspace::whole(g.dim());
  return Subspace(g.dim(), nullspace(Matrix::from_rows(rows, g.dim())));
}

}  // namespace

Subspace normalizer(const LieAlgebra& g, const Subspace& s) { return stabilizer(g, s, s.annihilator()); }

Subspace centralizer(const LieAlgebra& g, const Subspace& s) {
  return stabilizer(g, s, Subspace::whole(g.dim()).basis());
}

LieAlgebra restrict_to_indices(const LieAlgebra& g, const std::vector<std::size_t>& idx) {
  std::vector<std::string> labels;
  std::vector<std::size_t> pos(g.dim(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    labels.push_back(g.label(idx[a]));
    pos.at(idx[a]) = a;
  }
  StructureTable t(labels);
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      Vec full = g.basis_bracket(idx[a], idx[b]);
      Vec v(idx.size());
      for (std::size_t k = 0; k < g.dim(); ++k) {
        if (sgn(full[k]) == 0) continue;
        if (pos[k] == idx.size())
          throw PreconditionError("indices do not span a subalgebra: [" + g.label(idx[a]) + ", " +
                                  g.label(idx[b]) + "] leaves the span");
        v[pos[k]] = full[k];
      }
      t.set(a, b, v);
    }
  return LieAlgebra(std::move(t));
}

}  // namespace lieq
