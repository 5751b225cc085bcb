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

#include <gtest/gtest.h>

#include <map>
#include <tuple>

#include "gen.hpp"
#include "xi_oracle.hpp"
#include "lieq/xi_fn.hpp"

namespace lieq {
namespace {

using namespace oracle;

TEST(XiFn, ExpansionOfS) {
  const int K = 6;
  const GScalar one(1);
  XiFn s2 = XiFn::term(K, {0, 0, 0, 2}, one).expand();
  XiFn want = XiFn::term(K, {0, 0, 0, 0}, one);
  want.add_term({0, 0, 2, 0}, {0, 0, -1});
  EXPECT_EQ(s2, want);
  // (1 - u)^{1/2} = 1 - u/2 - u^2/8 - u^3/16, u = nu^2 xi^2.
  XiFn s1 = XiFn::term(K, {0, 0, 0, 1}, one).expand();
  XiFn want1 = XiFn::term(K, {0, 0, 0, 0}, one);
  want1.add_term({0, 0, 2, 0}, {0, 0, GScalar(rational(-1, 2))});
  want1.add_term({0, 0, 4, 0}, {0, 0, 0, 0, GScalar(rational(-1, 8))});
  want1.add_term({0, 0, 6, 0}, {0, 0, 0, 0, 0, 0, GScalar(rational(-1, 16))});
  EXPECT_EQ(s1, want1);
  // (1 - u)^{-1/2} = 1 + u/2 + 3u^2/8 + 5u^3/16.
  XiFn sm1 = XiFn::term(K, {0, 0, 0, -1}, one).expand();
  XiFn wantm1 = XiFn::term(K, {0, 0, 0, 0}, one);
  wantm1.add_term({0, 0, 2, 0}, {0, 0, GScalar(rational(1, 2))});
  wantm1.add_term({0, 0, 4, 0}, {0, 0, 0, 0, GScalar(rational(3, 8))});
  wantm1.add_term({0, 0, 6, 0}, {0, 0, 0, 0, 0, 0, GScalar(rational(5, 16))});
  EXPECT_EQ(sm1, wantm1);
}

TEST(XiFn, ExpandIsMultiplicative) {
  auto g = testgen::rng_for(90);
  for (int t = 0; t < 20; ++t) {
    XiFn a = testgen::xi_fn(g, 6, 3), b = testgen::xi_fn(g, 6, 3);
    EXPECT_EQ((a * b).expand(), a.expand() * b.expand());
  }
}

TEST(XiFn, DerivativesCommuteWithExpansion) {
  auto g = testgen::rng_for(91);
  for (int t = 0; t < 20; ++t) {
    XiFn f = testgen::xi_fn(g, 6);
    EXPECT_EQ(f.d_xi().expand(), f.expand().d_xi().truncated(6));
    EXPECT_EQ(f.d_r().expand(), f.expand().d_r());
    EXPECT_EQ(f.d_a().expand(), f.expand().d_a());
  }
}

TEST(XiFn, ProductRule) {
  auto g = testgen::rng_for(92);
  for (int t = 0; t < 20; ++t) {
    XiFn a = testgen::xi_fn(g, 5, 3), b = testgen::xi_fn(g, 5, 3);
    EXPECT_EQ((a * b).d_xi().expand(), (a.d_xi() * b + a * b.d_xi()).expand());
    EXPECT_EQ((a * b).d_r(), a.d_r() * b + a * b.d_r());
    EXPECT_EQ((a * b).d_a(), a.d_a() * b + a * b.d_a());
  }
}

TEST(FourierResidual, ZeroMapsToZero) {
  auto r = fourier_residual(XiFn(6), 2, 6);
  EXPECT_TRUE(r.inner.is_zero());
  EXPECT_TRUE(r.omega.is_zero());
}

TEST(FourierResidual, Linear) {
  auto g = testgen::rng_for(93);
  for (int t = 0; t < 10; ++t) {
    XiFn a = testgen::xi_fn(g, 4), b = testgen::xi_fn(g, 4);
    GScalar c = testgen::gauss(g);
    for (int n : {2, 3}) {
      auto rs = fourier_residual(a + c * b, n, 4);
      auto ra = fourier_residual(a, n, 4), rb = fourier_residual(b, n, 4);
      EXPECT_EQ(rs.inner, ra.inner + c * rb.inner);
      EXPECT_EQ(rs.omega, ra.omega + c * rb.omega);
    }
  }
}

TEST(FourierResidual, Nu0MatchesIndependentTranscription) {
  auto g = testgen::rng_for(94);
  for (int t = 0; t < 20; ++t) {
    XiFn th = testgen::xi_fn(g, 4);
    auto [w, o] = nu0_oracle(nu0_of(th));
    for (int n : {2, 3, 5}) {
      auto r = fourier_residual(th, n, 4);
      EXPECT_EQ(expanded_nu0(r.inner), w);
      EXPECT_EQ(expanded_nu0(r.omega), o);
    }
  }
}

TEST(FourierResidual, ConstantInputLowOrders) {
  const GScalar i = GScalar::i();
  auto r = fourier_residual(XiFn::term(4, {0, 0, 0, 0}, 1), 2, 4);
  XiFn want(4);
  want.add_term({1, 2, 1, 0}, {2 * i});
  want.add_term({1, 0, 1, 0}, {2 * i});
  want.add_term({0, 0, 2, 0}, {-2});
  // nu^2 part of i xi e^a S r^2 with S = 1 - nu^2 xi^2 / 2 + ...
  want.add_term({1, 2, 3, 0}, {0, 0, GScalar(rational(-1, 2)) * i});
  want.add_term({1, 2, 5, 0}, {0, 0, 0, 0, GScalar(rational(-1, 8)) * i});
  EXPECT_EQ(r.inner, want);
  XiFn want_o(4);
  want_o.add_term({1, 0, 0, 0}, {-2});
  want_o.add_term({1, 0, 2, 0}, {0, 0, GScalar(rational(1, 2))});
  want_o.add_term({1, 0, 4, 0}, {0, 0, 0, 0, GScalar(rational(1, 8))});
  EXPECT_EQ(r.omega, want_o);
}

}  // namespace
}  // namespace lieq
