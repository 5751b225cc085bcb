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

#include "gen.hpp"
#include "lieq/su1n_model.hpp"

namespace lieq {
namespace {

GScalar real_trace(const CMatrix& m) { return m.trace(); }

class Su1nTest : public ::testing::TestWithParam<int> {};

TEST_P(Su1nTest, MatricesLieInSu1n) {
  Su1nModel m(GetParam());
  const std::size_t n = static_cast<std::size_t>(GetParam()) + 1;
  CMatrix J(n);
  J(0, 0) = -1;
  for (std::size_t i = 1; i < n; ++i) J(i, i) = 1;
  for (const auto& x : m.matrices()) {
    EXPECT_TRUE(real_trace(x).is_zero());
    CMatrix s = x.adjoint() * J + J * x;
    EXPECT_EQ(s, CMatrix(n));
  }
  EXPECT_EQ(m.dim(), n * n - 1);
}

// Brackets computed from the table agree with matrix commutators.
TEST_P(Su1nTest, BracketsMatchCommutators) {
  Su1nModel m(GetParam());
  const auto& g = m.algebra();
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      EXPECT_EQ(m.matrix_of(g.basis_bracket(i, j)), commutator(m.matrices()[i], m.matrices()[j]));
}

// Killing form of su(1,N) is 2(N+1) Re tr(XY).
TEST_P(Su1nTest, KillingFormTraceOracle) {
  const int N = GetParam();
  Su1nModel m(N);
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      GScalar tr = (m.matrices()[i] * m.matrices()[j]).trace();
      EXPECT_EQ(m.killing()(i, j), 2 * (N + 1) * tr.re);
    }
  EXPECT_EQ(m.beta(m.algebra().e(0), m.algebra().e(0)), 4 * (N + 1));
}

TEST_P(Su1nTest, SigmaIsInvolutiveAutomorphism) {
  Su1nModel m(GetParam());
  const auto& g = m.algebra();
  auto gen = testgen::rng_for(20 + static_cast<std::uint64_t>(GetParam()));
  for (int t = 0; t < 10; ++t) {
    Vec x = testgen::vec(gen, m.dim()), y = testgen::vec(gen, m.dim());
    EXPECT_EQ(m.apply_sigma(m.apply_sigma(x)), x);
    EXPECT_EQ(m.apply_sigma(g.bracket(x, y)), g.bracket(m.apply_sigma(x), m.apply_sigma(y)));
  }
}

TEST_P(Su1nTest, CoordsRoundTrip) {
  Su1nModel m(GetParam());
  auto gen = testgen::rng_for(30);
  for (int t = 0; t < 10; ++t) {
    Vec x = testgen::vec(gen, m.dim());
    EXPECT_EQ(m.coords_of(m.matrix_of(x)), x);
  }
}

TEST_P(Su1nTest, RootDecomposition) {
  const int N = GetParam();
  Su1nModel m(N);
  EXPECT_EQ(m.root(2).space.dim(), 1u);
  EXPECT_EQ(m.root(-2).space.dim(), 1u);
  if (N == 1) {
    EXPECT_THROW(m.root(1), InputError);
    EXPECT_EQ(m.roots().size(), 2u);
  } else {
    EXPECT_EQ(m.root(1).space.dim(), static_cast<std::size_t>(2 * (N - 1)));
    EXPECT_EQ(m.root(-1).space.dim(), static_cast<std::size_t>(2 * (N - 1)));
  }
  EXPECT_EQ(m.a().dim() + m.m().dim(), static_cast<std::size_t>(1 + (N - 1) * (N - 1)));
  const auto& g = m.algebra();
  const Vec h = g.e(m.h_index());
  for (const auto& r : m.roots())
    for (const auto& x : r.space.basis()) EXPECT_EQ(g.bracket(h, x), scale(r.value, x));
  EXPECT_EQ(g.basis_bracket(m.h_index(), m.E_index()), scale(Scalar(2), g.e(m.E_index())));
}

TEST_P(Su1nTest, IwasawaDecomposition) {
  Su1nModel m(GetParam());
  EXPECT_EQ(sum(m.s(), m.k()), Subspace::whole(m.dim()));
  EXPECT_EQ(intersect(m.s(), m.k()).dim(), 0u);
  EXPECT_TRUE(is_subalgebra(m.algebra(), m.s()));
  EXPECT_TRUE(is_subalgebra(m.algebra(), m.k()));
  EXPECT_EQ(normalizer(m.algebra(), m.n()), sum(m.s(), m.m()));
  auto gen = testgen::rng_for(40);
  for (int t = 0; t < 10; ++t) {
    Vec x = testgen::vec(gen, m.dim());
    Vec s = m.project_s(x);
    EXPECT_TRUE(m.s().contains(s));
    EXPECT_TRUE(m.k().contains(sub(x, s)));
  }
}

TEST_P(Su1nTest, StructureChecksPass) {
  Su1nModel m(GetParam());
  for (auto* f : {&verify_model_structure, &verify_sigma_brackets, &verify_m_complement})
    for (const auto& c : (*f)(m)) EXPECT_TRUE(c.ok) << c.name << ": " << c.detail;
}

TEST_P(Su1nTest, BetaSigmaPositiveDefinite) {
  Su1nModel m(GetParam());
  for (const auto& d : leading_minors(m.beta_sigma_gram())) EXPECT_GT(sgn(d), 0);
}

INSTANTIATE_TEST_SUITE_P(N, Su1nTest, ::testing::Values(1, 2, 3));

TEST(Su1n, RejectsBadN) { EXPECT_THROW(Su1nModel(0), InputError); }

TEST(Su1n, CoordsOfRejectsForeignMatrix) {
  Su1nModel m(2);
  CMatrix x(3);
  x(0, 0) = 1;
  EXPECT_THROW(m.coords_of(x), InputError);
}

}  // namespace
}  // namespace lieq
