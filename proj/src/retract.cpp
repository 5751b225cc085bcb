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

#include "lieq/retract.hpp"

#include <algorithm>

namespace lieq {

namespace {

// Quadratic form with the given Gram matrix, as a polynomial.
CoefFn quadratic(const Matrix& gram, int nv) {
  CoefFn q(nv);
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j)
      if (sgn(gram(i, j)) != 0) q += gram(i, j) * (CoefFn::v(nv, static_cast<int>(i)) * CoefFn::v(nv, static_cast<int>(j)));
  return q;
}

CoefFn power(const CoefFn& f, int d, int nv) {
  CoefFn r = CoefFn::constant(nv, 1);
  for (int i = 0; i < d; ++i) r = r * f;
  return r;
}

}  // namespace

bool is_radial(const CoefFn& f, const Matrix& gram) {
  const int nv = static_cast<int>(gram.rows());
  if (f.nv() > nv) return false;
  const CoefFn q = quadratic(gram, nv);
  // Group by the (a, e^a, z) part.
  std::map<std::tuple<int, int, int>, CoefFn> groups;
  for (const auto& [m, c] : f.terms()) {
    Monomial vm;
    vm.alpha = m.alpha;
    auto& g = groups.try_emplace({m.p, m.k, m.q}, CoefFn(nv)).first->second;
    g.add_term(vm, c);
  }
  for (auto& [key, p] : groups) {
    CoefFn rest = p;
    while (!rest.is_zero()) {
      const int deg = rest.v_degree();
      if (deg % 2 != 0) return false;
      // Leading monomial of the top-degree part.
      const Monomial* lead = nullptr;
      Scalar lc;
      for (const auto& [m, c] : rest.terms())
        if (m.v_degree() == deg) {
          lead = &m;
          lc = c;
        }
      const CoefFn qd = power(q, deg / 2, nv);
      auto it = qd.terms().find(*lead);
      if (it == qd.terms().end()) return false;
      CoefFn next = rest - (lc / it->second) * qd;
      if (next.v_degree() >= deg && !next.is_zero()) {
        for (const auto& [m, c] : next.terms())
          if (m.v_degree() == deg) return false;
      }
      rest = std::move(next);
    }
  }
  return true;
}

bool is_radial(const NuSeries& f, const Matrix& gram) {
  for (const auto& c : f.coeffs())
    if (!is_radial(c, gram)) return false;
  return true;
}

KernelCandidate make_candidate(const NuSeries& value, bool radial, const Su1nModel& model) {
  if (radial && !is_radial(value, kahler_gram(model, 1))) throw InputError("candidate declared radial but depends on v otherwise");
  return KernelCandidate{value, radial};
}

std::vector<std::string> k_generator_labels(const Su1nModel& model) {
  std::vector<std::string> out;
  const auto& g = model.algebra();
  for (auto b : model.m_indices()) out.push_back(g.label(b));
  for (auto b : model.s_indices())
    if (b != model.h_index()) out.push_back("k_" + g.label(b));
  return out;
}

Vec k_generator(const Su1nModel& model, const std::string& label) {
  const auto& g = model.algebra();
  if (label.rfind("k_", 0) == 0) {
    const std::size_t b = g.index_of(label.substr(2));
    if (!model.n().contains(g.e(b))) throw InputError("'" + label.substr(2) + "' is not in n");
    return add(g.e(b), model.apply_sigma(g.e(b)));
  }
  const std::size_t b = g.index_of(label);
  if (!model.k().contains(g.e(b))) throw InputError("'" + label + "' is not in k");
  return g.e(b);
}

NuSeries moment_of(const QmmTable& table, const Vec& x) {
  if (x.size() != table.mu.size()) throw InputError("moment_of: wrong length");
  NuSeries r = NuSeries::constant(table.P.nv(), 0);
  for (std::size_t b = 0; b < x.size(); ++b)
    if (sgn(x[b]) != 0) r += x[b] * table.mu[b];
  return r;
}

StarDerivation retract_operator(const Vec& x, const QmmTable& table, const Su1nModel& model, int K) {
  if (x.size() != model.dim() || !model.k().contains(x)) throw InputError("retract_operator: X must lie in k");
  return StarDerivation(moment_of(table, x), table.P, K);
}

NuSeries residual(const Vec& x, const KernelCandidate& v, const QmmTable& table, const Su1nModel& model, int K) {
  return retract_operator(x, table, model, K)(v.value);
}

int leading_order(const NuSeries& f) {
  for (int m = 0; m <= f.order(); ++m)
    if (!f.coeffs()[static_cast<std::size_t>(m)].is_zero()) return m;
  return -1;
}

Subspace default_w(const Su1nModel& model) {
  Subspace w = sum(model.s(), model.m());
  for (const auto& r : model.roots())
    if (r.value == -1) w = sum(w, r.space);
  return w;
}

WClosureReport check_w_closure(const Su1nModel& model) {
  if (model.N() < 2) throw PreconditionError("check_w_closure needs N >= 2");
  return check_w_closure(model, default_w(model));
}

WClosureReport check_w_closure(const Su1nModel& model, const Subspace& w) {
  const auto& g = model.algebra();
  WClosureReport rep;
  rep.dim_w = w.dim();
  rep.ad_stable = w.contains(bracket_span(g, model.s(), w));
  Subspace gen = sum(bracket_span(g, w, w), w);
  rep.dim_generated = gen.dim();
  rep.generates = gen.dim() == g.dim();
  return rep;
}

RadialReport radial_reduce(const KernelCandidate& v, const Su1nModel& model) {
  if (model.N() < 2) throw PreconditionError("radial_reduce needs N >= 2");
  RadialReport rep;
  const auto& g = model.algebra();
  for (auto b : model.m_indices()) {
    VectorField y = fundamental_field(model, g.e(b));
    bool zero = true;
    for (const auto& c : v.value.coeffs()) zero = zero && y.apply(c).is_zero();
    if (!zero) {
      rep.is_m_invariant = false;
      rep.failing.push_back(g.label(b));
    }
  }
  return rep;
}

}  // namespace lieq
