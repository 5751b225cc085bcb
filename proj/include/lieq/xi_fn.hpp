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

#ifndef LIEQ_XI_FN_HPP_
#define LIEQ_XI_FN_HPP_

#include <compare>
#include <map>
#include <vector>

#include "lieq/scalar.hpp"

namespace lieq {

// e^{k a} r^m xi^n S^s with S = (1 - nu^2 xi^2)^{1/2}; m, n may be negative.
struct XiKey {
  int k = 0;
  int m = 0;
  int n = 0;
  int s = 0;
  auto operator<=>(const XiKey&) const = default;
};

// Finite sum of XiKey monomials with coefficients in Q(i)[nu] truncated at
// nu^K.
class XiFn {
 public:
  using Series = std::vector<GScalar>;  // by nu order, length <= K + 1

  explicit XiFn(int K = 0);
  static XiFn term(int K, const XiKey& key, const GScalar& c);

  int order() const { return K_; }
  const std::map<XiKey, Series>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add_term(const XiKey& key, const Series& c);

  XiFn d_a() const;
  XiFn d_r() const;
  XiFn d_xi() const;
  // Replaces every S^s by its binomial nu-series; the result has s = 0 only.
  XiFn expand() const;
  // Coefficient of nu^j, as an order-0 function.
  XiFn nu_part(int j) const;
  XiFn truncated(int K) const;

  XiFn& operator+=(const XiFn& o);
  XiFn& operator-=(const XiFn& o);
  friend XiFn operator+(XiFn a, const XiFn& b) { return a += b; }
  friend XiFn operator-(XiFn a, const XiFn& b) { return a -= b; }
  friend XiFn operator*(const XiFn& a, const XiFn& b);
  friend XiFn operator*(const GScalar& c, const XiFn& a);
  friend bool operator==(const XiFn& a, const XiFn& b) { return a.t_ == b.t_; }

 private:
  void add_scaled(const XiKey& key, const Series& c, const GScalar& f, int shift);

  int K_;
  std::map<XiKey, Series> t_;
};

struct FourierResidual {
  XiFn inner;  // coefficient of (w | v)
  XiFn omega;  // coefficient of Omega(w, v)
};

// The Fourier-side retract equation applied to theta, to order K. `n` is the
// dimension parameter appearing as (2n - 3).
FourierResidual fourier_residual(const XiFn& theta, int n, int K);

}  // namespace lieq

#endif  // LIEQ_XI_FN_HPP_
