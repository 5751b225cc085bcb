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

#include "lieq/xi_fn.hpp"

#include <algorithm>

namespace lieq {

XiFn::XiFn(int K) : K_(K) {
  if (K < 0) throw InputError("XiFn: truncation order must be >= 0");
}

XiFn XiFn::term(int K, const XiKey& key, const GScalar& c) {
  XiFn f(K);
  f.add_term(key, {c});
  return f;
}

void XiFn::add_scaled(const XiKey& key, const Series& c, const GScalar& f, int shift) {
  if (f.is_zero()) return;
  Series* dst = nullptr;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const std::size_t o = j + static_cast<std::size_t>(shift);
    if (o > static_cast<std::size_t>(K_)) break;
    if (c[j].is_zero()) continue;
    if (dst == nullptr) dst = &t_[key];
    if (dst->size() <= o) dst->resize(o + 1);
    (*dst)[o] += c[j] * f;
  }
  if (dst == nullptr) return;
  while (!dst->empty() && dst->back().is_zero()) dst->pop_back();
  if (dst->empty()) t_.erase(key);
}

void XiFn::add_term(const XiKey& key, const Series& c) { add_scaled(key, c, 1, 0); }

XiFn XiFn::d_a() const {
  XiFn out(K_);
  for (const auto& [key, c] : t_) out.add_scaled(key, c, key.k, 0);
  return out;
}

XiFn XiFn::d_r() const {
  XiFn out(K_);
  for (const auto& [key, c] : t_) {
    XiKey k2 = key;
    --k2.m;
    out.add_scaled(k2, c, key.m, 0);
  }
  return out;
}

XiFn XiFn::d_xi() const {
  // d/dxi xi^n S^s = n xi^{n-1} S^s - s nu^2 xi^{n+1} S^{s-2}
  XiFn out(K_);
  for (const auto& [key, c] : t_) {
    XiKey k1 = key;
    --k1.n;
    out.add_scaled(k1, c, key.n, 0);
    XiKey k2 = key;
    ++k2.n;
    k2.s -= 2;
    out.add_scaled(k2, c, -key.s, 2);
  }
  return out;
}

XiFn XiFn::expand() const {
  XiFn out(K_);
  for (const auto& [key, c] : t_) {
    if (key.s == 0) {
      out.add_term(key, c);
      continue;
    }
    // (1 - nu^2 xi^2)^{s/2} = sum_j binom(s/2, j) (-1)^j nu^{2j} xi^{2j}
    const Scalar e = rational(key.s, 2);
    Scalar b = 1;
    for (int j = 0; 2 * j <= K_; ++j) {
      if (j > 0) b = b * (e - (j - 1)) / j;
      XiKey k2 = key;
      k2.s = 0;
      k2.n += 2 * j;
      out.add_scaled(k2, c, GScalar(j % 2 == 0 ? b : Scalar(-b)), 2 * j);
    }
  }
  return out;
}

XiFn XiFn::nu_part(int j) const {
  XiFn out(0);
  for (const auto& [key, c] : t_)
    if (static_cast<std::size_t>(j) < c.size() && !c[static_cast<std::size_t>(j)].is_zero())
      out.add_term(key, {c[static_cast<std::size_t>(j)]});
  return out;
}

XiFn XiFn::truncated(int K) const {
  XiFn out(std::min(K, K_));
  for (const auto& [key, c] : t_) out.add_term(key, c);
  return out;
}

XiFn& XiFn::operator+=(const XiFn& o) {
  K_ = std::min(K_, o.K_);
  XiFn out(K_);
  for (const auto& [key, c] : t_) out.add_term(key, c);
  for (const auto& [key, c] : o.t_) out.add_term(key, c);
  t_ = std::move(out.t_);
  return *this;
}

XiFn& XiFn::operator-=(const XiFn& o) { return *this += GScalar(-1) * o; }

XiFn operator*(const XiFn& a, const XiFn& b) {
  XiFn out(std::min(a.K_, b.K_));
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_) {
      XiKey k{ka.k + kb.k, ka.m + kb.m, ka.n + kb.n, ka.s + kb.s};
      for (std::size_t j = 0; j < cb.size(); ++j) out.add_scaled(k, ca, cb[j], static_cast<int>(j));
    }
  return out;
}

XiFn operator*(const GScalar& c, const XiFn& a) {
  XiFn out(a.K_);
  for (const auto& [key, s] : a.t_) out.add_scaled(key, s, c, 0);
  return out;
}

FourierResidual fourier_residual(const XiFn& theta, int n, int K) {
  const XiFn th = theta.truncated(K);
  auto T = [K](int k, int m, int nn, int s, GScalar c = 1) { return XiFn::term(K, XiKey{k, m, nn, s}, c); };
  const GScalar i = GScalar::i();
  const XiFn one = T(0, 0, 0, 0);
  const XiFn S = T(0, 0, 0, 1);
  const XiFn ea = T(1, 0, 0, 0);
  const XiFn ema = T(-1, 0, 0, 0);
  const XiFn r = T(0, 1, 0, 0);
  const XiFn rinv = T(0, -1, 0, 0);
  const XiFn r2 = T(0, 2, 0, 0);
  const XiFn xi = T(0, 0, 1, 0);
  const XiFn xiinv = T(0, 0, -1, 0);
  const XiFn xiinv2 = T(0, 0, -2, 0);
  const XiFn one_plus_S = one + S;
  const XiFn minus_one_plus_S = S - one;
  const GScalar c2n3(2 * n - 3);

  const XiFn dr = th.d_r();
  const XiFn drr = dr.d_r();
  const XiFn drrr = drr.d_r();
  const XiFn da = th.d_a();
  const XiFn dxi = th.d_xi();

  XiFn w(K), o(K);
  // [i xi e^a [(1 + S) r^2 + 2 + 2 i xi e^{-a}] (w|v)] theta
  w += (i * (xi * ea * (one_plus_S * r2 + GScalar(2) * one + (GScalar(2) * i) * (xi * ema)))) * th;
  // - [e^a (1 + S) Omega] theta
  o -= ea * one_plus_S * th;
  // - [e^a (1 + S) Omega] d_a theta
  o -= ea * one_plus_S * da;
  // + [e^a (-1 + S) - e^{-a} / r] Omega r d_r theta
  o += (ea * minus_one_plus_S - ema * rinv) * r * dr;
  // + [e^a [(1 + S) r^2 + 2]] Omega / (2r) d_r theta
  o += (ea * (one_plus_S * r2 + GScalar(2) * one)) * (GScalar(rational(1, 2)) * rinv) * dr;
  // - [2 e^a xi S Omega] d_xi theta
  o -= (GScalar(2) * (ea * xi * S)) * dxi;
  // - [(i e^a / xi)(-1 + S)(w|v)] (d_r^2 theta + (2n - 3)/r d_r theta)
  w -= (i * (ea * xiinv)) * minus_one_plus_S * (drr + c2n3 * (rinv * dr));
  // + [(2 i e^a / xi)(-1 + S)] (w|v) d_r^2 theta
  w += ((GScalar(2) * i) * (ea * xiinv)) * minus_one_plus_S * drr;
  // - [(2 i e^a / xi)(-1 + S)] (w|v)/r d_r theta
  w -= ((GScalar(2) * i) * (ea * xiinv)) * minus_one_plus_S * rinv * dr;
  // - [(2 i e^a / xi)(-1 + S)] (w|v)/r d_a d_r theta
  w -= ((GScalar(2) * i) * (ea * xiinv)) * minus_one_plus_S * rinv * dr.d_a();
  // - [4 i e^a S] (w|v)/r d_xi d_r theta
  w -= ((GScalar(4) * i) * (ea * S)) * rinv * dr.d_xi();
  // - [(e^a / xi^2)(-1 + S)] Omega/(2r) [(2n - 3)/r d_r^2 theta - (2n - 3)/r^2 d_r theta]
  const XiFn half_rinv = GScalar(rational(1, 2)) * rinv;
  o -= (ea * xiinv2) * minus_one_plus_S * half_rinv * (c2n3 * (rinv * drr) - c2n3 * (rinv * rinv * dr));
  // - [(e^a / xi^2)(-1 + S)] Omega/(2r) d_r^3 theta
  o -= (ea * xiinv2) * minus_one_plus_S * half_rinv * drrr;

  return {w.expand(), o.expand()};
}

}  // namespace lieq
