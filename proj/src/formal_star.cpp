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

#include "lieq/formal_star.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace lieq {

int Monomial::v_degree() const {
  int s = 0;
  for (int x : alpha) s += x;
  return s;
}

CoefFn::CoefFn(int nv) : nv_(nv) {
  if (nv < 0 || nv > kMaxV) throw InputError("CoefFn: number of v variables must be in [0, " + std::to_string(kMaxV) + "]");
}

CoefFn CoefFn::constant(int nv, const Scalar& c) { return monomial(nv, Monomial{}, c); }

CoefFn CoefFn::monomial(int nv, const Monomial& m, const Scalar& c) {
  CoefFn f(nv);
  for (int i = nv; i < kMaxV; ++i)
    if (m.alpha[static_cast<std::size_t>(i)] != 0) throw InputError("monomial uses a v variable beyond nv");
  f.add_term(m, c);
  return f;
}

CoefFn CoefFn::a(int nv) {
  Monomial m;
  m.p = 1;
  return monomial(nv, m);
}

CoefFn CoefFn::z(int nv) {
  Monomial m;
  m.q = 1;
  return monomial(nv, m);
}

CoefFn CoefFn::v(int nv, int i) {
  if (i < 0 || i >= nv) throw InputError("v index out of range");
  Monomial m;
  m.alpha[static_cast<std::size_t>(i)] = 1;
  return monomial(nv, m);
}

CoefFn CoefFn::exp_a(int nv, int k) {
  Monomial m;
  m.k = k;
  return monomial(nv, m);
}

bool CoefFn::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first == Monomial{});
}

Scalar CoefFn::constant_term() const {
  auto it = t_.find(Monomial{});
  return it == t_.end() ? Scalar(0) : it->second;
}

int CoefFn::z_degree() const {
  int d = 0;
  for (const auto& [m, c] : t_) d = std::max(d, m.q);
  return d;
}

int CoefFn::v_degree() const {
  int d = 0;
  for (const auto& [m, c] : t_) d = std::max(d, m.v_degree());
  return d;
}

int CoefFn::a_degree() const {
  int d = 0;
  for (const auto& [m, c] : t_) d = std::max(d, m.p);
  return d;
}

void CoefFn::add_term(const Monomial& m, const Scalar& c) {
  if (sgn(c) == 0) return;
  if (m.p < 0 || m.q < 0) throw InputError("negative power of a or z");
  for (int x : m.alpha)
    if (x < 0) throw InputError("negative power of v");
  auto [it, inserted] = t_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) t_.erase(it);
  }
}

CoefFn CoefFn::d(int coord) const {
  if (coord < 0 || coord > nv_ + 1) throw InputError("derivative coordinate out of range");
  CoefFn out(nv_);
  for (const auto& [m, c] : t_) {
    if (coord == 0) {
      if (m.k != 0) out.add_term(m, c * m.k);
      if (m.p > 0) {
        Monomial n = m;
        --n.p;
        out.add_term(n, c * m.p);
      }
    } else if (coord == nv_ + 1) {
      if (m.q > 0) {
        Monomial n = m;
        --n.q;
        out.add_term(n, c * m.q);
      }
    } else {
      const auto i = static_cast<std::size_t>(coord - 1);
      if (m.alpha[i] > 0) {
        Monomial n = m;
        --n.alpha[i];
        out.add_term(n, c * m.alpha[i]);
      }
    }
  }
  return out;
}

CoefFn& CoefFn::operator+=(const CoefFn& o) {
  nv_ = std::max(nv_, o.nv_);
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

CoefFn& CoefFn::operator-=(const CoefFn& o) {
  nv_ = std::max(nv_, o.nv_);
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

CoefFn operator*(const CoefFn& a, const CoefFn& b) {
  CoefFn out(std::max(a.nv_, b.nv_));
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) {
      Monomial m;
      m.p = ma.p + mb.p;
      m.k = ma.k + mb.k;
      m.q = ma.q + mb.q;
      for (std::size_t i = 0; i < m.alpha.size(); ++i) m.alpha[i] = ma.alpha[i] + mb.alpha[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

CoefFn operator*(const Scalar& s, const CoefFn& a) {
  CoefFn out(a.nv_);
  if (sgn(s) == 0) return out;
  for (const auto& [m, c] : a.t_) out.t_.emplace(m, c * s);
  return out;
}

std::string to_string(const CoefFn& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    if (m.p) os << "*a^" << m.p;
    if (m.k) os << "*e^(" << m.k << "a)";
    for (int i = 0; i < f.nv(); ++i)
      if (m.alpha[static_cast<std::size_t>(i)]) os << "*v" << i << "^" << m.alpha[static_cast<std::size_t>(i)];
    if (m.q) os << "*z^" << m.q;
  }
  return os.str();
}

NuSeries::NuSeries(std::vector<CoefFn> coeffs, bool exact) : c_(std::move(coeffs)), exact_(exact) {
  if (c_.empty()) c_.emplace_back();
}

NuSeries NuSeries::nu_power(int nv, int m, const Scalar& c) {
  if (m < 0) throw InputError("negative nu power");
  std::vector<CoefFn> cs(static_cast<std::size_t>(m) + 1, CoefFn(nv));
  cs.back() = CoefFn::constant(nv, c);
  return NuSeries(std::move(cs), true);
}

int NuSeries::nv() const {
  int n = 0;
  for (const auto& f : c_) n = std::max(n, f.nv());
  return n;
}

CoefFn NuSeries::coeff(int m) const {
  if (m < 0) throw InputError("negative nu order");
  if (m <= order()) return c_[static_cast<std::size_t>(m)];
  if (!exact_) throw PreconditionError("nu order " + std::to_string(m) + " beyond truncation " + std::to_string(order()));
  return CoefFn(nv());
}

NuSeries NuSeries::truncated(int K) const {
  if (K >= order()) return *this;
  bool exact = exact_;
  for (int m = K + 1; m <= order(); ++m) exact = exact && c_[static_cast<std::size_t>(m)].is_zero();
  return NuSeries(std::vector<CoefFn>(c_.begin(), c_.begin() + K + 1), exact);
}

NuSeries NuSeries::div_nu() const {
  if (!c_[0].is_zero()) throw PreconditionError("div_nu: nonzero nu^0 coefficient");
  if (order() == 0) {
    if (!exact_) throw PreconditionError("div_nu: nothing known past order 0");
    return NuSeries({CoefFn(nv())}, true);
  }
  return NuSeries(std::vector<CoefFn>(c_.begin() + 1, c_.end()), exact_);
}

bool NuSeries::is_zero() const {
  for (const auto& f : c_)
    if (!f.is_zero()) return false;
  return true;
}

bool NuSeries::equals(const NuSeries& o) const { return (*this - o).is_zero(); }

namespace {

// Order up to which a combination of a and b is known.
int combined_order(const NuSeries& a, const NuSeries& b, int both_exact_order) {
  if (a.exact() && b.exact()) return both_exact_order;
  if (a.exact()) return b.order();
  if (b.exact()) return a.order();
  return std::min(a.order(), b.order());
}

}  // namespace

NuSeries& NuSeries::operator+=(const NuSeries& o) {
  const int K = combined_order(*this, o, std::max(order(), o.order()));
  std::vector<CoefFn> out;
  for (int m = 0; m <= K; ++m) out.push_back(coeff(m) + o.coeff(m));
  const bool exact = exact_ && o.exact_;
  *this = NuSeries(std::move(out), exact);
  return *this;
}

NuSeries& NuSeries::operator-=(const NuSeries& o) { return *this += Scalar(-1) * o; }

NuSeries operator*(const NuSeries& a, const NuSeries& b) {
  const int K = combined_order(a, b, a.order() + b.order());
  std::vector<CoefFn> out(static_cast<std::size_t>(K) + 1, CoefFn(std::max(a.nv(), b.nv())));
  for (int i = 0; i <= std::min(K, a.order()); ++i)
    for (int j = 0; j <= std::min(K - i, b.order()); ++j)
      out[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
  return NuSeries(std::move(out), a.exact_ && b.exact_);
}

NuSeries operator*(const Scalar& s, const NuSeries& a) {
  NuSeries r = a;
  for (auto& f : r.c_) f = s * f;
  return r;
}

NuSeries operator*(const CoefFn& f, const NuSeries& a) {
  NuSeries r = a;
  for (auto& g : r.c_) g = f * g;
  return r;
}

PoissonStructure::PoissonStructure(Matrix lambda, int nv) : nv_(nv), lambda_(std::move(lambda)) {
  const auto d = static_cast<std::size_t>(nv + 2);
  if (nv < 0 || nv > kMaxV) throw InputError("Poisson structure: bad number of v variables");
  if (lambda_.rows() != d || lambda_.cols() != d) throw InputError("Poisson tensor must be (nv+2)-square");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      if (lambda_(i, j) != -lambda_(j, i)) throw InputError("Poisson tensor must be antisymmetric");
  try {
    omega_ = Scalar(-1) * inverse(lambda_);
  } catch (const std::domain_error&) {
    throw InputError("Poisson tensor must be nondegenerate");
  }
}

PoissonStructure PoissonStructure::darboux(int nv, const Scalar& c) {
  if (nv % 2 != 0) throw InputError("darboux: nv must be even");
  const auto d = static_cast<std::size_t>(nv + 2);
  Matrix l(d, d);
  l(0, d - 1) = c;
  l(d - 1, 0) = -c;
  const auto half = static_cast<std::size_t>(nv / 2);
  for (std::size_t i = 0; i < half; ++i) {
    l(1 + i, 1 + half + i) = 2 * c;
    l(1 + half + i, 1 + i) = -2 * c;
  }
  return PoissonStructure(std::move(l), nv);
}

CoefFn poisson(const CoefFn& f, const CoefFn& g, const PoissonStructure& P) {
  const int d = P.dim();
  CoefFn out(P.nv());
  for (int u = 0; u < d; ++u) {
    CoefFn fu = f.d(u);
    if (fu.is_zero()) continue;
    for (int w = 0; w < d; ++w) {
      const Scalar& l = P.tensor()(static_cast<std::size_t>(u), static_cast<std::size_t>(w));
      if (sgn(l) == 0) continue;
      out += l * (fu * g.d(w));
    }
  }
  return out;
}

namespace {

struct TensorEntry {
  int u;
  int w;
  Scalar lam;
};

class DerivativeCache {
 public:
  explicit DerivativeCache(const CoefFn& f, int dim) : dim_(dim) { cache_[std::vector<int>(static_cast<std::size_t>(dim))] = f; }

  // Derivative for multi-index `idx`, given that parent(idx - e_coord) is cached.
  const CoefFn& child(const std::vector<int>& parent, int coord) {
    std::vector<int> idx = parent;
    ++idx[static_cast<std::size_t>(coord)];
    auto it = cache_.find(idx);
    if (it != cache_.end()) return it->second;
    CoefFn dv = cache_.at(parent).d(coord);
    return cache_.emplace(std::move(idx), std::move(dv)).first->second;
  }

 private:
  int dim_;
  std::map<std::vector<int>, CoefFn> cache_;
};

// B_m(f, g) = (1/m!) Lambda^{u1 w1}..Lambda^{um wm} d_u.. f d_w.. g for all m
// until the sum terminates. With odd_only the even m are left zero.
std::vector<CoefFn> bidifferential(const CoefFn& f, const CoefFn& g, const PoissonStructure& P, bool odd_only) {
  const int d = P.dim();
  std::vector<TensorEntry> entries;
  for (int u = 0; u < d; ++u)
    for (int w = 0; w < d; ++w) {
      const Scalar& l = P.tensor()(static_cast<std::size_t>(u), static_cast<std::size_t>(w));
      if (sgn(l) != 0) entries.push_back({u, w, l});
    }
  std::vector<CoefFn> out;
  if (f.is_zero() || g.is_zero()) return out;
  DerivativeCache fc(f, d), gc(g, d);
  std::vector<int> df(static_cast<std::size_t>(d)), dg(static_cast<std::size_t>(d));
  std::vector<int> mult(entries.size());
  const int nv = std::max(f.nv(), g.nv());

  std::function<void(std::size_t, int, const Scalar&, const CoefFn&, const CoefFn&)> rec =
      [&](std::size_t start, int m, const Scalar& coef, const CoefFn& fd, const CoefFn& gd) {
        if (!odd_only || m % 2 == 1) {
          if (out.size() <= static_cast<std::size_t>(m)) out.resize(static_cast<std::size_t>(m) + 1, CoefFn(nv));
          out[static_cast<std::size_t>(m)] += coef * (fd * gd);
        }
        for (std::size_t e = start; e < entries.size(); ++e) {
          const auto& en = entries[e];
          const CoefFn& fd2 = fc.child(df, en.u);
          if (fd2.is_zero()) continue;
          const CoefFn& gd2 = gc.child(dg, en.w);
          if (gd2.is_zero()) continue;
          ++df[static_cast<std::size_t>(en.u)];
          ++dg[static_cast<std::size_t>(en.w)];
          ++mult[e];
          rec(e, m + 1, coef * en.lam / mult[e], fd2, gd2);
          --mult[e];
          --df[static_cast<std::size_t>(en.u)];
          --dg[static_cast<std::size_t>(en.w)];
        }
      };
  rec(0, 0, Scalar(1), f, g);
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

NuSeries star_sum(const NuSeries& f, const NuSeries& g, const PoissonStructure& P, int K, bool commutator) {
  if (K < 0) throw InputError("truncation order must be >= 0");
  int Kv = K;
  if (!f.exact()) Kv = std::min(Kv, f.order());
  if (!g.exact()) Kv = std::min(Kv, g.order());
  const int shift = commutator ? 1 : 0;
  std::vector<CoefFn> out(static_cast<std::size_t>(Kv) + 1, CoefFn(P.nv()));
  bool exact = f.exact() && g.exact();
  for (int i = 0; i <= f.order(); ++i)
    for (int j = 0; j <= g.order(); ++j) {
      const CoefFn& fi = f.coeffs()[static_cast<std::size_t>(i)];
      const CoefFn& gj = g.coeffs()[static_cast<std::size_t>(j)];
      if (fi.is_zero() || gj.is_zero()) continue;
      // Every contribution of this pair sits at order >= i + j.
      if (i + j > Kv && !exact) continue;
      auto B = bidifferential(fi, gj, P, commutator);
      for (std::size_t m = 0; m < B.size(); ++m) {
        if (B[m].is_zero()) continue;
        const int ord = i + j + static_cast<int>(m) - shift;
        if (ord > Kv) {
          exact = false;
          continue;
        }
        out[static_cast<std::size_t>(ord)] += B[m];
      }
    }
  return NuSeries(std::move(out), exact);
}

}  // namespace

NuSeries moyal(const NuSeries& f, const NuSeries& g, const PoissonStructure& P, int K) {
  return star_sum(f, g, P, K, false);
}

NuSeries star_commutator(const NuSeries& f, const NuSeries& g, const PoissonStructure& P, int K) {
  return star_sum(f, g, P, K, true);
}

CovarianceReport check_covariance(const std::vector<NuSeries>& lambda, const LieAlgebra& alg,
                                  const PoissonStructure& P, int K) {
  if (lambda.size() != alg.dim()) throw InputError("one series per basis element required");
  CovarianceReport rep;
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i + 1; j < alg.dim(); ++j) {
      NuSeries lhs = star_commutator(lambda[i], lambda[j], P, K);
      Vec c = alg.basis_bracket(i, j);
      NuSeries rhs = NuSeries::constant(P.nv(), 0);
      for (std::size_t k = 0; k < c.size(); ++k)
        if (sgn(c[k]) != 0) rhs += c[k] * lambda[k];
      PairResidual pr{i, j, (lhs - rhs).truncated(K), false};
      pr.ok = pr.residual.is_zero();
      rep.ok = rep.ok && pr.ok;
      rep.pairs.push_back(std::move(pr));
    }
  return rep;
}

}  // namespace lieq
