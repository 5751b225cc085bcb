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

#include "lieq/cohomology.hpp"

#include <algorithm>
#include <sstream>

namespace lieq {

TwoCochain::TwoCochain(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw InputError("cochain matrix must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = i; j < m_.cols(); ++j)
      if (m_(i, j) != -m_(j, i)) throw InputError("cochain matrix must be antisymmetric");
}

TwoCochain TwoCochain::from_pairs(std::size_t dim, const Vec& v) {
  if (v.size() != pair_count(dim)) throw InputError("cochain pair vector has wrong length");
  TwoCochain c(dim);
  std::size_t p = 0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) c.set(i, j, v[p++]);
  return c;
}

void TwoCochain::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (i == j) {
    if (sgn(v) != 0) throw InputError("cochain diagonal must vanish");
    return;
  }
  m_(i, j) = v;
  m_(j, i) = -v;
}

Scalar TwoCochain::eval(const Vec& x, const Vec& y) const { return dot(x, m_.apply(y)); }

Vec TwoCochain::pairs() const {
  Vec v;
  v.reserve(pair_count(dim()));
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j) v.push_back(m_(i, j));
  return v;
}

std::size_t pair_count(std::size_t dim) { return dim * (dim - (dim > 0 ? 1 : 0)) / 2; }

std::size_t pair_index(std::size_t dim, std::size_t i, std::size_t j) {
  // Pairs before row i: sum_{r < i} (dim - 1 - r).
  return i * (2 * dim - i - 1) / 2 + (j - i - 1);
}

Vec delta0(const LieAlgebra& g, const Scalar&) { return Vec(g.dim()); }

TwoCochain delta1(const LieAlgebra& g, const Vec& alpha) {
  if (alpha.size() != g.dim()) throw InputError("1-cochain has wrong length");
  TwoCochain c(g.dim());
  for (const auto& [key, val] : g.table().entries()) {
    Scalar s;
    for (const auto& [k, v] : val) s += alpha[k] * v;
    c.set(key.first, key.second, s);
  }
  return c;
}

namespace {

// Row of d2 for the triple (i, j, k), over pair coordinates.
std::vector<std::pair<std::size_t, Scalar>> d2_row(const LieAlgebra& g, std::size_t i, std::size_t j,
                                                   std::size_t k) {
  const std::size_t d = g.dim();
  std::map<std::size_t, Scalar> row;
  auto term = [&](std::size_t a, std::size_t b, std::size_t z) {
    // c([b_a, b_b], b_z)
    Vec br = g.basis_bracket(a, b);
    for (std::size_t l = 0; l < d; ++l) {
      if (sgn(br[l]) == 0 || l == z) continue;
      if (l < z)
        row[pair_index(d, l, z)] += br[l];
      else
        row[pair_index(d, z, l)] -= br[l];
    }
  };
  term(i, j, k);
  term(j, k, i);
  term(k, i, j);
  std::vector<std::pair<std::size_t, Scalar>> out;
  for (auto& [c, v] : row)
    if (sgn(v) != 0) out.emplace_back(c, v);
  return out;
}

}  // namespace

ThreeCochain delta2(const LieAlgebra& g, const TwoCochain& c) {
  if (c.dim() != g.dim()) throw InputError("2-cochain has wrong dimension");
  const std::size_t d = g.dim();
  ThreeCochain out;
  out.dim = d;
  Vec p = c.pairs();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        Scalar s;
        for (const auto& [col, v] : d2_row(g, i, j, k)) s += v * p[col];
        out.values.push_back(s);
      }
  return out;
}

namespace {

SparseEchelon d2_echelon(const LieAlgebra& g) {
  const std::size_t d = g.dim();
  SparseEchelon ech(pair_count(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        auto row = d2_row(g, i, j, k);
        if (!row.empty()) ech.add_row(row);
      }
  return ech;
}

}  // namespace

H2Report h2_dimension(const LieAlgebra& g) {
  const std::size_t d = g.dim();
  H2Report rep;
  rep.dim_c2 = pair_count(d);
  rep.cocycles = rep.dim_c2 - d2_echelon(g).rank();
  // d1 as a map C^1 -> C^2: image spanned by d1(e_k^*).
  SparseEchelon im(rep.dim_c2);
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<std::pair<std::size_t, Scalar>> row;
    for (const auto& [key, val] : g.table().entries())
      for (const auto& [l, v] : val)
        if (l == k) row.emplace_back(pair_index(d, key.first, key.second), v);
    if (!row.empty()) im.add_row(row);
  }
  rep.coboundaries = im.rank();
  rep.h2 = rep.cocycles - rep.coboundaries;
  return rep;
}

std::vector<TwoCochain> cocycle_basis(const LieAlgebra& g, const std::vector<Vec>& extra) {
  SparseEchelon ech = d2_echelon(g);
  for (const auto& w : extra) ech.add_row(w);
  std::vector<TwoCochain> out;
  for (const auto& v : ech.nullspace()) out.push_back(TwoCochain::from_pairs(g.dim(), v));
  return out;
}

namespace {

class ChcCollector {
 public:
  ChcCollector(const LieAlgebra& g, ChcReport& rep) : g_(g), rep_(rep) {}

  void require(bool ok, const std::string& what) {
    if (ok) return;
    rep_.satisfied = false;
    if (rep_.violations.size() < 8) rep_.violations.push_back(what);
  }
  std::string pair(const std::string& cond, std::size_t a, std::size_t b) const {
    return cond + ": (" + g_.label(a) + ", " + g_.label(b) + ")";
  }

 private:
  const LieAlgebra& g_;
  ChcReport& rep_;
};

}  // namespace

ChcReport check_block_cocycle(const PsdAlgebra& psd, const TwoCochain& c) {
  const LieAlgebra& g = psd.algebra;
  if (c.dim() != g.dim()) throw InputError("2-cochain has wrong dimension");
  ChcReport rep;
  ChcCollector col(g, rep);
  const int r = psd.spec.r;
  for (int j = 1; j <= r; ++j) {
    const PsdBlock& b = psd.block(j);
    // (i) c(v, E_j) = 0 and 2 c(v, v') = Omega_j(v, v') c(H_j, E_j).
    for (std::size_t p = 0; p < b.v.size(); ++p) {
      col.require(sgn(c(b.v[p], b.e)) == 0, col.pair("(i) c(v,E)", b.v[p], b.e));
      for (std::size_t q = p + 1; q < b.v.size(); ++q)
        col.require(2 * c(b.v[p], b.v[q]) == b.omega(p, q) * c(b.h, b.e), col.pair("(i) 2c(v,v')", b.v[p], b.v[q]));
    }
    if (j < r) {
      for (auto x : psd.higher(j)) {
        // (ii) c(X, E_j) = 0.
        col.require(sgn(c(x, b.e)) == 0, col.pair("(ii) c(X,E)", x, b.e));
        // (ii') c(X, v_j) = c(H_j, [X, v_j]).
        for (auto v : b.v) {
          Scalar rhs = c.eval(g.e(b.h), g.basis_bracket(x, v));
          col.require(c(x, v) == rhs, col.pair("(ii') c(X,v)", x, v));
        }
      }
    }
    // (iii) c(v_k, H_j) = 0 and c(E_k, H_j) = 0 for k > j.
    for (int k = j + 1; k <= r; ++k) {
      const PsdBlock& bk = psd.block(k);
      for (auto v : bk.v) col.require(sgn(c(v, b.h)) == 0, col.pair("(iii) c(v_k,H_j)", v, b.h));
      col.require(sgn(c(bk.e, b.h)) == 0, col.pair("(iii) c(E_k,H_j)", bk.e, b.h));
    }
  }
  return rep;
}

Vec coboundary_primitive_psd(const PsdAlgebra& psd, const TwoCochain& c) {
  const LieAlgebra& g = psd.algebra;
  if (c.dim() != g.dim()) throw InputError("2-cochain has wrong dimension");
  if (!delta2(g, c).is_zero()) throw PreconditionError("not a cocycle");
  for (int j = 1; j <= psd.spec.r; ++j)
    for (int k = j + 1; k <= psd.spec.r; ++k)
      if (sgn(c(psd.block(j).h, psd.block(k).h)) != 0)
        throw PreconditionError("cocycle does not vanish on (H" + std::to_string(j) + ", H" + std::to_string(k) + ")");
  Vec alpha(g.dim());
  for (const auto& b : psd.blocks) {
    for (auto v : b.v) alpha[v] = c(b.h, v);
    alpha[b.e] = c(b.h, b.e) / 2;
  }
  return alpha;
}

Vec coboundary_primitive_roots(const Su1nModel& model, const TwoCochain& c) {
  const auto s_idx = model.s_indices();
  const std::size_t ds = s_idx.size();
  if (c.dim() != ds) throw InputError("cochain must live on s");
  LieAlgebra s = model.s_algebra();
  if (!delta2(s, c).is_zero()) throw PreconditionError("not a cocycle on s");
  // a x a: a = span{H}, so c(H, H) = 0 holds automatically.
  Vec alpha(ds);
  for (std::size_t b = 1; b < ds; ++b) {
    const Vec x = model.algebra().e(s_idx[b]);
    const RootDatum* root = nullptr;
    for (const auto& r : model.roots())
      if (sgn(r.value) > 0 && r.space.contains(x)) root = &r;
    if (root == nullptr) throw std::logic_error("s basis vector outside the positive root spaces");
    Vec hl(ds);
    for (std::size_t q = 0; q < ds; ++q) hl[q] = root->h_lambda[s_idx[q]];
    const Scalar lambda_hl = root->value * root->h_lambda[model.h_index()];
    alpha[b] = c.eval(hl, unit_vec(ds, b)) / lambda_hl;
  }
  return alpha;
}

std::vector<TwoCochain> invariant_cocycle_space(const Su1nModel& model) {
  const auto s_idx = model.s_indices();
  const std::size_t ds = s_idx.size();
  LieAlgebra s = model.s_algebra();
  const auto& g = model.algebra();
  auto proj = [&](const Vec& x) {
    Vec full = model.project_s(x);
    Vec out(ds);
    for (std::size_t q = 0; q < ds; ++q) out[q] = full[s_idx[q]];
    return out;
  };
  std::vector<Vec> extra;
  const std::size_t np = pair_count(ds);
  for (const auto& z : model.k_basis()) {
    std::vector<Vec> zx(ds);
    for (std::size_t x = 0; x < ds; ++x) zx[x] = proj(g.bracket(z, g.e(s_idx[x])));
    for (std::size_t x = 0; x < ds; ++x)
      for (std::size_t y = x; y < ds; ++y) {
        // c(zx[x], e_y) + c(e_x, zx[y]) as a linear form in the pair coordinates.
        Vec row(np);
        auto add_term = [&](std::size_t a, std::size_t b, const Scalar& coef) {
          if (a == b || sgn(coef) == 0) return;
          if (a < b)
            row[pair_index(ds, a, b)] += coef;
          else
            row[pair_index(ds, b, a)] -= coef;
        };
        for (std::size_t l = 0; l < ds; ++l) {
          add_term(l, y, zx[x][l]);
          add_term(x, l, zx[y][l]);
        }
        if (!is_zero(row)) extra.push_back(std::move(row));
      }
  }
  return cocycle_basis(s, extra);
}

}  // namespace lieq
