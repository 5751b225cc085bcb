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

#include "lieq/ball.hpp"

#include <algorithm>

namespace lieq {

ChartPoint chart_identity(int nv) { return ChartPoint{1, Vec(static_cast<std::size_t>(nv)), 0}; }

Scalar chart_omega(const Vec& v, const Vec& w) {
  if (v.size() != w.size() || v.size() % 2 != 0) throw InputError("chart_omega: bad V vectors");
  const std::size_t m = v.size() / 2;
  Scalar s;
  for (std::size_t i = 0; i < m; ++i) s += v[i] * w[m + i] - v[m + i] * w[i];
  return s;
}

ChartPoint group_law(const ChartPoint& p, const ChartPoint& q) {
  if (sgn(p.exp_a) <= 0 || sgn(q.exp_a) <= 0) throw InputError("exp_a must be positive");
  if (p.v.size() != q.v.size()) throw InputError("group_law: V dimension mismatch");
  ChartPoint r;
  r.exp_a = p.exp_a * q.exp_a;
  r.v = add(scale(1 / q.exp_a, p.v), q.v);
  r.z = p.z / (q.exp_a * q.exp_a) + q.z + chart_omega(p.v, q.v) / (2 * q.exp_a);
  return r;
}

ChartPoint chart_inverse(const ChartPoint& p) {
  if (sgn(p.exp_a) <= 0) throw InputError("exp_a must be positive");
  return ChartPoint{1 / p.exp_a, scale(-p.exp_a, p.v), -p.exp_a * p.exp_a * p.z};
}

namespace {

Scalar power(const Scalar& x, int k) {
  Scalar r = 1;
  Scalar b = k >= 0 ? x : 1 / x;
  for (int i = 0; i < std::abs(k); ++i) r *= b;
  return r;
}

}  // namespace

Scalar evaluate(const CoefFn& f, const ChartPoint& x) {
  if (static_cast<int>(x.v.size()) < f.nv()) throw InputError("evaluate: point has too few V coordinates");
  Scalar s;
  for (const auto& [m, c] : f.terms()) {
    if (m.p > 0) {
      if (x.exp_a != 1) throw PreconditionError("evaluate: powers of a at an irrational a");
      continue;
    }
    Scalar t = c * power(x.exp_a, m.k) * power(x.z, m.q);
    for (int i = 0; i < f.nv(); ++i) t *= power(x.v[static_cast<std::size_t>(i)], m.alpha[static_cast<std::size_t>(i)]);
    s += t;
  }
  return s;
}

VectorField::VectorField(int nv) : nv_(nv), c_(static_cast<std::size_t>(nv + 2), CoefFn(nv)) {}

VectorField::VectorField(std::vector<CoefFn> comps, int nv) : nv_(nv), c_(std::move(comps)) {
  if (c_.size() != static_cast<std::size_t>(nv + 2)) throw InputError("vector field needs nv + 2 components");
}

CoefFn VectorField::apply(const CoefFn& f) const {
  CoefFn out(nv_);
  for (int u = 0; u < nv_ + 2; ++u)
    if (!c_[static_cast<std::size_t>(u)].is_zero()) out += c_[static_cast<std::size_t>(u)] * f.d(u);
  return out;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  VectorField r = a;
  for (std::size_t u = 0; u < r.c_.size(); ++u) r.c_[u] += b.c_.at(u);
  return r;
}

VectorField operator*(const Scalar& s, const VectorField& a) {
  VectorField r = a;
  for (auto& c : r.c_) c = s * c;
  return r;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  std::vector<CoefFn> c;
  for (int w = 0; w < x.nv() + 2; ++w) c.push_back(x.apply(y[w]) - y.apply(x[w]));
  return VectorField(std::move(c), x.nv());
}

std::vector<std::size_t> sm_indices(const Su1nModel& model) {
  auto idx = model.s_indices();
  auto m = model.m_indices();
  idx.insert(idx.end(), m.begin(), m.end());
  return idx;
}

namespace {

std::vector<std::size_t> v_indices(const Su1nModel& model) {
  auto v = model.e_indices();
  auto f = model.f_indices();
  v.insert(v.end(), f.begin(), f.end());
  return v;
}

}  // namespace

VectorField fundamental_field(const Su1nModel& model, const Vec& x) {
  if (x.size() != model.dim()) throw InputError("fundamental_field: wrong length");
  if (!sum(model.s(), model.m()).contains(x)) throw PreconditionError("fundamental_field: X must lie in s + m");
  const auto vi = v_indices(model);
  const int nv = static_cast<int>(vi.size());
  const std::size_t m = vi.size() / 2;
  const auto& g = model.algebra();
  VectorField f(nv);
  std::vector<CoefFn> c(static_cast<std::size_t>(nv + 2), CoefFn(nv));
  c[0] = CoefFn::constant(nv, -x[model.h_index()]);
  // m-part acts linearly on V.
  Vec y(model.dim());
  for (auto b : model.m_indices()) y[b] = x[b];
  for (std::size_t j = 0; j < vi.size(); ++j) {
    Vec col = g.bracket(y, g.e(vi[j]));
    for (std::size_t i = 0; i < vi.size(); ++i)
      if (sgn(col[vi[i]]) != 0) c[1 + i] -= col[vi[i]] * CoefFn::v(nv, static_cast<int>(j));
  }
  CoefFn em = CoefFn::exp_a(nv, -1);
  for (std::size_t i = 0; i < vi.size(); ++i) c[1 + i] -= x[vi[i]] * em;
  CoefFn omega_uv(nv);
  for (std::size_t i = 0; i < m; ++i) {
    omega_uv += x[vi[i]] * CoefFn::v(nv, static_cast<int>(m + i));
    omega_uv -= x[vi[m + i]] * CoefFn::v(nv, static_cast<int>(i));
  }
  c[static_cast<std::size_t>(nv + 1)] = -(x[model.E_index()] * CoefFn::exp_a(nv, -2)) - rational(1, 2) * (em * omega_uv);
  return VectorField(std::move(c), nv);
}

namespace {

CoefFn integrate(const CoefFn& f, int coord) {
  const int nv = f.nv();
  CoefFn out(nv);
  for (const auto& [m, c] : f.terms()) {
    Monomial n = m;
    if (coord == 0) {
      if (m.k == 0) {
        ++n.p;
        out.add_term(n, c / (m.p + 1));
        continue;
      }
      // int a^p e^{ka} da = e^{ka} sum_j (-1)^j p!/(p-j)! a^{p-j} / k^{j+1}
      Scalar fall = 1;
      Scalar kp = m.k;
      for (int j = 0; j <= m.p; ++j) {
        n.p = m.p - j;
        out.add_term(n, c * fall / kp * (j % 2 == 0 ? 1 : -1));
        fall *= (m.p - j);
        kp *= m.k;
      }
    } else if (coord == nv + 1) {
      ++n.q;
      out.add_term(n, c / n.q);
    } else {
      auto i = static_cast<std::size_t>(coord - 1);
      ++n.alpha[i];
      out.add_term(n, c / n.alpha[i]);
    }
  }
  return out;
}

Scalar value_at_origin(const CoefFn& f) {
  Scalar s;
  for (const auto& [m, c] : f.terms())
    if (m.p == 0 && m.q == 0 && m.v_degree() == 0) s += c;
  return s;
}

}  // namespace

CoefFn integrate_gradient(const std::vector<CoefFn>& g) {
  if (g.size() < 2) throw InputError("gradient needs at least the a and z components");
  const int nv = static_cast<int>(g.size()) - 2;
  CoefFn F(nv);
  for (int c = 0; c < nv + 2; ++c) F += integrate(g[static_cast<std::size_t>(c)] - F.d(c), c);
  std::string residual;
  for (int c = 0; c < nv + 2; ++c) {
    CoefFn r = g[static_cast<std::size_t>(c)] - F.d(c);
    if (!r.is_zero()) residual += " d" + std::to_string(c) + ": " + to_string(r);
  }
  if (!residual.empty()) throw PreconditionError("one-form is not exact; residual" + residual);
  return F - CoefFn::constant(nv, value_at_origin(F));
}

ClassicalMomentMap classical_moment_map(const Su1nModel& model, const Scalar& c_omega) {
  if (sgn(c_omega) == 0) throw InputError("c_omega must be nonzero");
  const auto& g = model.algebra();
  const int nv = 2 * (model.N() - 1);
  ClassicalMomentMap cl{c_omega, PoissonStructure::darboux(nv, c_omega), sm_indices(model), {}};
  cl.lambda.assign(model.dim(), CoefFn(nv));
  const Matrix& om = cl.P.symplectic_form();
  for (auto b : cl.indices) {
    VectorField X = fundamental_field(model, g.e(b));
    std::vector<CoefFn> grad(static_cast<std::size_t>(nv + 2), CoefFn(nv));
    for (int w = 0; w < nv + 2; ++w)
      for (int u = 0; u < nv + 2; ++u) {
        const Scalar& o = om(static_cast<std::size_t>(u), static_cast<std::size_t>(w));
        if (sgn(o) != 0) grad[static_cast<std::size_t>(w)] -= o * X[u];
      }
    cl.lambda[b] = integrate_gradient(grad);
  }
  // Constants k_b with sum_k C^k_ij k_k = {l_i, l_j} - sum_k C^k_ij l_k.
  const std::size_t n = cl.indices.size();
  std::vector<std::size_t> pos(model.dim(), n);
  for (std::size_t t = 0; t < n; ++t) pos[cl.indices[t]] = t;
  std::vector<Vec> rows;
  Vec rhs;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = s + 1; t < n; ++t) {
      const std::size_t i = cl.indices[s], j = cl.indices[t];
      Vec c = g.basis_bracket(i, j);
      CoefFn r = poisson(cl.lambda[i], cl.lambda[j], cl.P);
      Vec row(n);
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (sgn(c[k]) == 0) continue;
        if (pos[k] == n) throw std::logic_error("s + m is not closed under brackets");
        r -= c[k] * cl.lambda[k];
        row[pos[k]] = c[k];
      }
      if (!r.is_constant())
        throw PreconditionError("moment map is not equivariant on (" + g.label(i) + ", " + g.label(j) + "): " + to_string(r));
      rows.push_back(row);
      rhs.push_back(r.constant_term());
    }
  auto kappa = solve(Matrix::from_rows(rows, n), rhs);
  if (!kappa) throw PreconditionError("no constants make the moment map equivariant");
  for (std::size_t t = 0; t < n; ++t) cl.lambda[cl.indices[t]] += CoefFn::constant(nv, (*kappa)[t]);
  return cl;
}

void QmmTable::add_nu_shift(std::size_t index, const Scalar& c) {
  mu.at(index) += NuSeries::nu_power(P.nv(), 1, c);
}

Matrix kahler_gram(const Su1nModel& model, const Scalar& inner_scale) {
  const auto vi = v_indices(model);
  const auto& g = model.algebra();
  const Scalar hh = model.beta_sigma(g.e(model.h_index()), g.e(model.h_index()));
  Matrix G(vi.size(), vi.size());
  for (std::size_t i = 0; i < vi.size(); ++i)
    for (std::size_t j = 0; j < vi.size(); ++j) G(i, j) = inner_scale * model.beta_sigma(g.e(vi[i]), g.e(vi[j])) / hh;
  return G;
}

QmmTable build_qmm(const Su1nModel& model, const NuSeries& alpha, const Scalar& c_omega, const Scalar& inner_scale,
                   const QmmOptions& opts) {
  return build_qmm(model, classical_moment_map(model, c_omega), alpha, inner_scale, opts);
}

QmmTable build_qmm(const Su1nModel& model, const ClassicalMomentMap& cl, const NuSeries& alpha,
                   const Scalar& inner_scale, const QmmOptions& opts) {
  const int nv = cl.P.nv();
  QmmTable t;
  t.N = model.N();
  t.alpha = alpha;
  t.c_omega = cl.c_omega;
  t.inner_scale = inner_scale;
  t.P = cl.P;
  t.labels = model.algebra().labels();
  t.mu.assign(model.dim(), NuSeries::constant(nv, 0));
  for (auto b : cl.indices) t.mu[b] = NuSeries::exact_value(cl.lambda[b]);
  if (auto z = model.z_index()) t.mu[*z] += alpha;

  const Matrix G = kahler_gram(model, inner_scale);
  const std::size_t m = static_cast<std::size_t>(nv / 2);
  auto vfun = [&](const Vec& coef) {
    CoefFn f(nv);
    for (std::size_t i = 0; i < coef.size(); ++i)
      if (sgn(coef[i]) != 0) f += coef[i] * CoefFn::v(nv, static_cast<int>(i));
    return f;
  };
  CoefFn Q(nv);
  for (std::size_t i = 0; i < G.rows(); ++i) Q += vfun(G.row(i)) * CoefFn::v(nv, static_cast<int>(i));
  const NuSeries Qa = NuSeries::exact_value(Q) + alpha;
  const CoefFn z = CoefFn::z(nv);
  const CoefFn e1 = CoefFn::exp_a(nv, 1);

  const auto se = model.sigma_e_indices();
  const auto sf = model.sigma_f_indices();
  for (std::size_t j = 0; j < 2 * m; ++j) {
    // (v0 | v) and Omega(v0, v) for v0 the j-th V basis vector.
    CoefFn inner = vfun(G.row(j));
    Vec om(2 * m);
    if (j < m)
      om[m + j] = 1;
    else
      om[j - m] = -1;
    CoefFn omega = vfun(om);
    NuSeries mu = NuSeries::exact_value(Scalar(4) * (e1 * inner * z)) - (e1 * omega) * Qa;
    t.mu[j < m ? se[j] : sf[j - m]] = mu;
  }
  NuSeries sE = NuSeries::exact_value(Scalar(4) * (z * z)) + Qa * Qa;
  if (opts.include_nu2) sE += NuSeries::nu_power(nv, 2, model.N() - 1);
  t.mu[model.sigma_E_index()] = CoefFn::exp_a(nv, 2) * sE;
  return t;
}

namespace {

int poly_degree(const NuSeries& f) {
  int d = 0;
  for (const auto& c : f.coeffs()) d = std::max(d, c.z_degree() + c.v_degree());
  return d;
}

}  // namespace

QmmReport verify_qmm(const QmmTable& table, const Su1nModel& model, QmmScope scope, int max_order) {
  const auto& g = model.algebra();
  std::vector<std::size_t> idx;
  if (scope == QmmScope::kIwasawa) {
    idx = model.s_indices();
  } else {
    for (std::size_t b = 0; b < model.dim(); ++b) idx.push_back(b);
  }
  QmmReport rep;
  rep.scope = scope;
  for (std::size_t s = 0; s < idx.size(); ++s)
    for (std::size_t t = s + 1; t < idx.size(); ++t) {
      const std::size_t i = idx[s], j = idx[t];
      const NuSeries& fi = table.mu[i];
      const NuSeries& fj = table.mu[j];
      int K = max_order;
      if (K < 0) K = fi.exact() && fj.exact() ? fi.order() + fj.order() + poly_degree(fi) + poly_degree(fj) : 6;
      NuSeries lhs = star_commutator(fi, fj, table.P, K);
      Vec c = g.basis_bracket(i, j);
      NuSeries rhs = NuSeries::constant(table.P.nv(), 0);
      for (std::size_t k = 0; k < c.size(); ++k)
        if (sgn(c[k]) != 0) rhs += c[k] * table.mu[k];
      PairResidual pr{i, j, (rhs - lhs).truncated(K), false};
      pr.ok = pr.residual.is_zero();
      if (!pr.ok) {
        rep.ok = false;
        for (int m = 0; m <= pr.residual.order(); ++m)
          if (!pr.residual.coeffs()[static_cast<std::size_t>(m)].is_zero()) {
            if (rep.lowest_failing_order < 0 || m < rep.lowest_failing_order) rep.lowest_failing_order = m;
            break;
          }
      }
      rep.pairs.push_back(std::move(pr));
    }
  return rep;
}

std::vector<Check> verify_qmm_structure(const QmmTable& table, const Su1nModel& model, const ClassicalMomentMap& cl) {
  std::vector<Check> out;
  std::vector<std::size_t> idx{model.h_index()};
  if (auto z = model.z_index()) idx.push_back(*z);
  for (auto b : idx) {
    CoefFn diff = table.mu[b].coeff(0) - cl.lambda[b];
    out.push_back({"mu - lambda constant on " + model.algebra().label(b), diff.is_constant(), to_string(diff)});
  }
  return out;
}

std::vector<Scalar> default_calibration_grid() {
  return {1, -1, 2, -2, rational(1, 2), rational(-1, 2), rational(1, 4), rational(-1, 4)};
}

CalibrationResult calibrate(const Su1nModel& model, const std::vector<Scalar>& grid) {
  CalibrationResult res;
  const NuSeries one = NuSeries::constant(2 * (model.N() - 1), 1);
  for (const auto& c : grid) {
    ClassicalMomentMap cl = classical_moment_map(model, c);
    for (const auto& s : grid) {
      QmmTable t = build_qmm(model, cl, one, s);
      QmmReport rep = verify_qmm(t, model, QmmScope::kFull, 1);
      CalibrationCandidate cand{c, s, rep.ok, 0};
      for (const auto& p : rep.pairs) cand.failing_pairs += p.ok ? 0 : 1;
      if (cand.ok) res.passing.emplace_back(c, s);
      res.candidates.push_back(std::move(cand));
    }
  }
  return res;
}

}  // namespace lieq
