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

#include "lieq/su1n_model.hpp"

#include <sstream>
#include <string>

namespace lieq {

CMatrix CMatrix::unit(std::size_t n, std::size_t i, std::size_t j, GScalar v) {
  CMatrix m(n);
  m(i, j) = std::move(v);
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j).conj();
  return t;
}

GScalar CMatrix::trace() const {
  GScalar t;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  CMatrix c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.n_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  CMatrix c(a);
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  CMatrix c(a);
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

CMatrix operator*(const GScalar& s, const CMatrix& a) {
  CMatrix c(a);
  for (auto& x : c.a_) x *= s;
  return c;
}

namespace {

CMatrix j_matrix(std::size_t n) {
  CMatrix j(n);
  j(0, 0) = -1;
  for (std::size_t i = 1; i < n; ++i) j(i, i) = 1;
  return j;
}

// u(E_0c + E_1c) + conj(u)(E_c0 - E_c1): a restricted root vector for c >= 2.
CMatrix root_vector(std::size_t n, std::size_t c, const GScalar& u) {
  CMatrix x(n);
  x(0, c) = u;
  x(1, c) = u;
  x(c, 0) = u.conj();
  x(c, 1) = -u.conj();
  return x;
}

std::string vlabel(const char* stem, std::size_t j) { return stem + std::to_string(j); }

}  // namespace

Su1nModel::Su1nModel(int N) : N_(N) {
  if (N < 1) throw InputError("su(1,N) needs N >= 1");
  const std::size_t n = static_cast<std::size_t>(N) + 1;
  const GScalar i = GScalar::i();
  const GScalar half_i(0, rational(1, 2));
  CMatrix J = j_matrix(n);
  std::vector<std::string> labels;

  auto push = [&](std::string l, CMatrix m) {
    labels.push_back(std::move(l));
    mats_.push_back(std::move(m));
  };

  CMatrix H = CMatrix::unit(n, 0, 1) + CMatrix::unit(n, 1, 0);
  CMatrix E = (-i) * (CMatrix::unit(n, 0, 0) - CMatrix::unit(n, 0, 1) + CMatrix::unit(n, 1, 0) - CMatrix::unit(n, 1, 1));
  push("H", H);
  for (std::size_t c = 2; c < n; ++c) push(vlabel("e", c - 1), root_vector(n, c, 1));
  for (std::size_t c = 2; c < n; ++c) push(vlabel("f", c - 1), root_vector(n, c, half_i));
  push("E", E);
  for (std::size_t j = 2; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      std::string jk = std::to_string(j - 1) + std::to_string(k - 1);
      push("ma" + jk, CMatrix::unit(n, j, k) - CMatrix::unit(n, k, j));
      push("ms" + jk, i * (CMatrix::unit(n, j, k) + CMatrix::unit(n, k, j)));
    }
  for (std::size_t j = 2; j + 1 < n; ++j)
    push(vlabel("md", j - 1), i * (CMatrix::unit(n, j, j) - CMatrix::unit(n, j + 1, j + 1)));
  if (N >= 2) {
    CMatrix z(n);
    z(0, 0) = -i;
    z(1, 1) = -i;
    for (std::size_t c = 2; c < n; ++c) z(c, c) = GScalar(0, rational(2, N - 1));
    push("Z", z);
  }
  const std::size_t s_end = 2 * static_cast<std::size_t>(N);
  for (std::size_t b = 1; b < s_end; ++b) push("s" + labels[b], J * mats_[b] * J);

  // Every basis matrix must lie in su(1,N).
  for (std::size_t b = 0; b < mats_.size(); ++b) {
    CMatrix m = mats_[b];
    if (!(m.adjoint() * J + J * m == CMatrix(n)) || !m.trace().is_zero())
      throw std::logic_error("basis element " + labels[b] + " is not in su(1,N)");
  }

  const std::size_t d = mats_.size();
  if (d != n * n - 1) throw std::logic_error("su(1,N) basis has wrong size");
  realified_ = Matrix(2 * n * n, d);
  for (std::size_t b = 0; b < d; ++b) {
    Vec r = realify(mats_[b]);
    for (std::size_t k = 0; k < r.size(); ++k) realified_(k, b) = r[k];
  }
  Matrix bt = realified_.transpose();
  left_inverse_ = inverse(bt * realified_) * bt;

  StructureTable t(labels);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) t.set(a, b, coords_of(commutator(mats_[a], mats_[b])));
  g_ = LieAlgebra(std::move(t));
  killing_ = killing_matrix(g_);

  sigma_ = Matrix(d, d);
  for (std::size_t b = 0; b < d; ++b) {
    Vec c = coords_of(J * mats_[b] * J);
    for (std::size_t k = 0; k < d; ++k) sigma_(k, b) = c[k];
  }
  Matrix id = Matrix::identity(d);
  k_ = Subspace(d, nullspace(sigma_ - id));
  p_ = Subspace(d, nullspace(sigma_ + id));
  a_ = Subspace(d, {g_.e(h_index())});
  m_ = intersect(centralizer(g_, a_), k_);

  Matrix adh = g_.ad(g_.e(h_index()));
  std::size_t total = 0;
  const int bound = static_cast<int>(d);
  std::vector<Vec> nvecs;
  for (int mu = bound; mu >= -bound; --mu) {
    auto ker = nullspace(adh - Scalar(mu) * id);
    total += ker.size();
    if (mu == 0 || ker.empty()) continue;
    RootDatum r;
    r.value = mu;
    r.space = Subspace(d, ker);
    Scalar hh = killing_(0, 0);
    r.h_lambda = scale(Scalar(mu) / hh, g_.e(h_index()));
    // Gram-Schmidt in beta_sigma.
    for (const auto& v : r.space.basis()) {
      Vec w = v;
      for (const auto& u : r.orthogonal) w = sub(w, scale(beta_sigma(v, u) / beta_sigma(u, u), u));
      r.orthogonal.push_back(std::move(w));
    }
    if (mu > 0) nvecs.insert(nvecs.end(), ker.begin(), ker.end());
    roots_.push_back(std::move(r));
  }
  if (total != d) throw std::logic_error("ad(H) is not diagonalizable over the integers");
  n_ = Subspace(d, nvecs);
  s_ = sum(a_, n_);

  std::vector<Vec> cols;
  for (auto b : s_indices()) cols.push_back(g_.e(b));
  for (const auto& v : k_.basis()) cols.push_back(v);
  if (cols.size() != d) throw std::logic_error("dim s + dim k != dim g");
  iwasawa_inverse_ = inverse(Matrix::from_cols(cols, d));
}

Vec Su1nModel::realify(const CMatrix& m) const {
  Vec r;
  r.reserve(2 * m.size() * m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      r.push_back(m(i, j).re);
      r.push_back(m(i, j).im);
    }
  return r;
}

Matrix Su1nModel::complex_structure() const {
  const std::size_t n = 2 * (N_ + 1) * (N_ + 1);
  Matrix j(n, n);
  for (std::size_t k = 0; k < n; k += 2) {
    j(k, k + 1) = -1;
    j(k + 1, k) = 1;
  }
  return j;
}

CMatrix Su1nModel::matrix_of(const Vec& x) const {
  CMatrix m(static_cast<std::size_t>(N_) + 1);
  for (std::size_t b = 0; b < mats_.size(); ++b)
    if (sgn(x.at(b)) != 0) m = m + GScalar(x[b]) * mats_[b];
  return m;
}

Vec Su1nModel::coords_of(const CMatrix& m) const {
  if (m.size() != static_cast<std::size_t>(N_) + 1) throw InputError("matrix has wrong size");
  Vec r = realify(m);
  Vec x = left_inverse_.apply(r);
  if (realified_.apply(x) != r) throw InputError("matrix is not in su(1,N)");
  return x;
}

Scalar Su1nModel::beta(const Vec& x, const Vec& y) const { return dot(x, killing_.apply(y)); }

Scalar Su1nModel::beta_sigma(const Vec& x, const Vec& y) const { return -beta(x, apply_sigma(y)); }

Matrix Su1nModel::beta_sigma_gram() const { return Scalar(-1) * (killing_ * sigma_); }

const RootDatum& Su1nModel::root(const Scalar& value) const {
  for (const auto& r : roots_)
    if (r.value == value) return r;
  throw InputError("no root with value " + format_scalar(value));
}

std::vector<std::size_t> Su1nModel::e_indices() const {
  std::vector<std::size_t> v;
  for (int j = 0; j < N_ - 1; ++j) v.push_back(1 + j);
  return v;
}

std::vector<std::size_t> Su1nModel::f_indices() const {
  std::vector<std::size_t> v;
  for (int j = 0; j < N_ - 1; ++j) v.push_back(N_ + j);
  return v;
}

std::vector<std::size_t> Su1nModel::s_indices() const {
  std::vector<std::size_t> v;
  for (int b = 0; b < 2 * N_; ++b) v.push_back(b);
  return v;
}

std::vector<std::size_t> Su1nModel::m_indices() const {
  std::vector<std::size_t> v;
  const std::size_t msize = static_cast<std::size_t>((N_ - 1) * (N_ - 1));
  for (std::size_t b = 0; b < msize; ++b) v.push_back(2 * N_ + b);
  return v;
}

std::optional<std::size_t> Su1nModel::z_index() const {
  if (N_ < 2) return std::nullopt;
  return 2 * N_ + (N_ - 1) * (N_ - 1) - 1;
}

std::vector<std::size_t> Su1nModel::sigma_e_indices() const {
  std::vector<std::size_t> v;
  const std::size_t base = 2 * N_ + (N_ - 1) * (N_ - 1);
  for (int j = 0; j < N_ - 1; ++j) v.push_back(base + j);
  return v;
}

std::vector<std::size_t> Su1nModel::sigma_f_indices() const {
  std::vector<std::size_t> v;
  const std::size_t base = 2 * N_ + (N_ - 1) * (N_ - 1) + (N_ - 1);
  for (int j = 0; j < N_ - 1; ++j) v.push_back(base + j);
  return v;
}

std::pair<Vec, Vec> Su1nModel::iwasawa_project(const Vec& x) const {
  if (x.size() != dim()) throw InputError("iwasawa_project: wrong length");
  Vec t = iwasawa_inverse_.apply(x);
  Vec xs(dim()), xk(dim());
  const std::size_t ns = s_indices().size();
  for (std::size_t b = 0; b < ns; ++b) xs[b] = t[b];
  for (std::size_t c = 0; c < k_.dim(); ++c)
    if (sgn(t[ns + c]) != 0) xk = add(xk, scale(t[ns + c], k_.basis()[c]));
  return {xs, xk};
}

namespace {

std::string root_name(const Scalar& v) { return "lambda=" + v.get_str(); }

}  // namespace

std::vector<Check> verify_sigma_brackets(const Su1nModel& model) {
  std::vector<Check> out;
  const auto& g = model.algebra();
  for (const auto& r : model.roots()) {
    for (std::size_t b = 0; b < r.orthogonal.size(); ++b) {
      const Vec& x = r.orthogonal[b];
      Vec sx = model.apply_sigma(x);
      Scalar bx = model.beta(x, sx);
      Vec lhs = g.bracket(x, sx);
      Vec rhs = scale(bx, r.h_lambda);
      bool ok = lhs == rhs && sgn(bx) < 0;
      std::ostringstream os;
      os << "beta(X,sigma X)=" << bx.get_str();
      out.push_back({"sigma bracket " + root_name(r.value) + " #" + std::to_string(b), ok, os.str()});
    }
  }
  return out;
}

std::vector<Check> verify_m_complement(const Su1nModel& model) {
  std::vector<Check> out;
  const auto& g = model.algebra();
  const std::size_t d = model.dim();
  for (const auto& r : model.roots()) {
    for (std::size_t b = 0; b < r.orthogonal.size(); ++b) {
      const Vec& x = r.orthogonal[b];
      std::vector<Vec> mx;
      for (const auto& y : model.m().basis()) mx.push_back(g.bracket(y, x));
      Subspace mxs(d, mx);
      // beta_sigma-orthocomplement of x inside g_lambda.
      Vec bx(d);
      Matrix gram = model.beta_sigma_gram();
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) bx[l] += x[k] * gram(k, l);
      Subspace perp = intersect(r.space, Subspace(d, nullspace(Matrix::from_rows({bx}, d))));
      bool ok = mxs == perp && mxs.dim() + 1 == r.space.dim() && !mxs.contains(x) &&
                sum(mxs, Subspace(d, {x})) == r.space;
      out.push_back({"m complement " + root_name(r.value) + " #" + std::to_string(b), ok,
                     "dim[m,X]=" + std::to_string(mxs.dim())});
    }
  }
  return out;
}

std::vector<Check> verify_model_structure(const Su1nModel& model) {
  std::vector<Check> out;
  const auto& g = model.algebra();
  const std::size_t d = model.dim();
  const int N = model.N();
  auto dim_of = [&](int v) -> std::size_t {
    for (const auto& r : model.roots())
      if (r.value == v) return r.space.dim();
    return 0;
  };
  std::size_t g0 = model.a().dim() + model.m().dim();
  std::vector<std::size_t> dims{dim_of(2), dim_of(1), g0, dim_of(-1), dim_of(-2)};
  std::vector<std::size_t> want{1, static_cast<std::size_t>(2 * (N - 1)), static_cast<std::size_t>(1 + (N - 1) * (N - 1)),
                                static_cast<std::size_t>(2 * (N - 1)), 1};
  std::ostringstream os;
  for (auto x : dims) os << x << " ";
  out.push_back({"root dims", dims == want, os.str()});

  auto minors = leading_minors(model.beta_sigma_gram());
  bool pd = true;
  for (const auto& m : minors) pd = pd && sgn(m) > 0;
  out.push_back({"beta_sigma positive definite", pd, std::to_string(minors.size()) + " minors"});

  bool sigma_ok = true;
  for (const auto& r : model.roots()) {
    std::vector<Vec> img;
    for (const auto& v : r.space.basis()) img.push_back(model.apply_sigma(v));
    sigma_ok = sigma_ok && Subspace(d, img) == model.root(-r.value).space;
  }
  out.push_back({"sigma(g_lambda) = g_-lambda", sigma_ok, ""});

  bool grading = true;
  auto space_of = [&](const Scalar& v) -> Subspace {
    if (v == 0) return sum(model.a(), model.m());
    for (const auto& r : model.roots())
      if (r.value == v) return r.space;
    return Subspace::zero(d);
  };
  std::vector<Scalar> values{0};
  for (const auto& r : model.roots()) values.push_back(r.value);
  for (const auto& u : values)
    for (const auto& v : values) grading = grading && space_of(u + v).contains(bracket_span(g, space_of(u), space_of(v)));
  out.push_back({"[g_lambda, g_mu] in g_lambda+mu", grading, ""});

  bool ortho = true;
  Matrix gram = model.beta_sigma_gram();
  for (const auto& u : values)
    for (const auto& v : values) {
      if (u == v) continue;
      Subspace su = space_of(u), sv = space_of(v);
      for (const auto& x : su.basis())
        for (const auto& y : sv.basis()) ortho = ortho && sgn(model.beta_sigma(x, y)) == 0;
    }
  out.push_back({"root spaces beta_sigma-orthogonal", ortho, ""});

  Subspace cp = intersect(centralizer(g, model.a()), model.p());
  bool abel = bracket_span(g, model.a(), model.a()).dim() == 0;
  out.push_back({"a maximal abelian in p", abel && cp == model.a() && model.p().contains(model.a()), ""});

  std::vector<Vec> proj;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) proj.push_back(model.project_s(g.basis_bracket(i, j)));
  out.push_back({"span [[X,Y]]_s = s", Subspace(d, proj) == model.s(), ""});

  bool split = model.s().dim() + model.k().dim() == d && intersect(model.s(), model.k()).dim() == 0;
  out.push_back({"g = s + k direct", split, ""});
  out.push_back({"normalizer(n) = s + m", normalizer(g, model.n()) == sum(model.s(), model.m()), ""});
  return out;
}

}  // namespace lieq
