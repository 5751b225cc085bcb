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
#include "lieq/formal_star.hpp"

namespace lieq {
namespace {

constexpr int kA = 0;

NuSeries ex(const CoefFn& f) { return NuSeries::exact_value(f); }

TEST(CoefFn, DerivativeRules) {
  const int nv = 2;
  const int z = nv + 1;
  EXPECT_EQ(CoefFn::exp_a(nv, 3).d(kA), Scalar(3) * CoefFn::exp_a(nv, 3));
  EXPECT_EQ((CoefFn::z(nv) * CoefFn::z(nv)).d(z), Scalar(2) * CoefFn::z(nv));
  EXPECT_EQ(CoefFn::a(nv).d(kA), CoefFn::constant(nv, 1));
  EXPECT_TRUE(CoefFn::v(nv, 0).d(2).is_zero());
  EXPECT_THROW(CoefFn::v(nv, 2), InputError);
}

TEST(CoefFn, ProductRuleProperty) {
  auto g = testgen::rng_for(60);
  for (int t = 0; t < 30; ++t) {
    CoefFn f = testgen::coef_fn(g, 2, 4, true), h = testgen::coef_fn(g, 2, 4, true);
    for (int c = 0; c < 4; ++c) EXPECT_EQ((f * h).d(c), f.d(c) * h + f * h.d(c));
  }
}

TEST(CoefFn, RingLaws) {
  auto g = testgen::rng_for(61);
  for (int t = 0; t < 20; ++t) {
    CoefFn a = testgen::coef_fn(g, 2), b = testgen::coef_fn(g, 2), c = testgen::coef_fn(g, 2);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
  EXPECT_EQ(CoefFn::exp_a(0, 1) * CoefFn::exp_a(0, -1), CoefFn::constant(0, 1));
}

TEST(PoissonStructure, Validation) {
  EXPECT_THROW(PoissonStructure(Matrix::from_rows({{0, 1}, {1, 0}}, 2), 0), InputError);
  EXPECT_THROW(PoissonStructure(Matrix(2, 2), 0), InputError);
  EXPECT_THROW(PoissonStructure(Matrix(3, 3), 0), InputError);
  EXPECT_THROW(PoissonStructure::darboux(1, 1), InputError);
  auto P = PoissonStructure::darboux(2, rational(1, 2));
  EXPECT_EQ(P.tensor()(0, 3), rational(1, 2));
  EXPECT_EQ(P.tensor()(1, 2), 1);
  EXPECT_EQ(Scalar(-1) * P.tensor() * P.symplectic_form(), Matrix::identity(4));
}

TEST(Poisson, JacobiAndLeibniz) {
  auto g = testgen::rng_for(62);
  auto P = PoissonStructure::darboux(2, rational(1, 2));
  for (int t = 0; t < 20; ++t) {
    CoefFn f = testgen::coef_fn(g, 2, 3, true), h = testgen::coef_fn(g, 2, 3, true), k = testgen::coef_fn(g, 2, 3);
    EXPECT_TRUE((poisson(f, poisson(h, k, P), P) + poisson(h, poisson(k, f, P), P) + poisson(k, poisson(f, h, P), P)).is_zero());
    EXPECT_EQ(poisson(f, h * k, P), poisson(f, h, P) * k + h * poisson(f, k, P));
    EXPECT_EQ(poisson(f, h, P), Scalar(-1) * poisson(h, f, P));
  }
}

// a^2 * z^2 = a^2 z^2 + 4 c nu a z + 2 c^2 nu^2 for Lambda^{az} = c.
TEST(Moyal, ClosedFormPolynomial) {
  const Scalar c = 3;
  PoissonStructure P = PoissonStructure::darboux(0, c);
  CoefFn a = CoefFn::a(0), z = CoefFn::z(0);
  NuSeries got = moyal(ex(a * a), ex(z * z), P, 10);
  std::vector<CoefFn> want{a * a * z * z, Scalar(4) * c * a * z, CoefFn::constant(0, 2 * c * c)};
  EXPECT_TRUE(got.exact());
  EXPECT_TRUE(got.equals(NuSeries(want, true)));
}

// e^a * z^2 = e^a (z + c nu)^2 and z^2 * e^a = e^a (z - c nu)^2.
TEST(Moyal, ClosedFormExponential) {
  const Scalar c = rational(1, 2);
  PoissonStructure P = PoissonStructure::darboux(0, c);
  CoefFn e = CoefFn::exp_a(0, 1), z = CoefFn::z(0);
  auto shifted = [&](const Scalar& s) {
    return NuSeries({e * z * z, Scalar(2 * s) * e * z, CoefFn::constant(0, s * s) * e}, true);
  };
  EXPECT_TRUE(moyal(ex(e), ex(z * z), P, 8).equals(shifted(c)));
  EXPECT_TRUE(moyal(ex(z * z), ex(e), P, 8).equals(shifted(-c)));
}

TEST(Moyal, LowOrdersAndUnit) {
  auto g = testgen::rng_for(63);
  auto P = PoissonStructure::darboux(2, rational(1, 2));
  for (int t = 0; t < 20; ++t) {
    CoefFn f = testgen::coef_fn(g, 2, 3, true), h = testgen::coef_fn(g, 2, 3, true);
    NuSeries fh = moyal(ex(f), ex(h), P, 12);
    EXPECT_EQ(fh.coeff(0), f * h);
    EXPECT_EQ(fh.coeff(1), poisson(f, h, P));
    EXPECT_TRUE(moyal(NuSeries::constant(2, 1), ex(f), P, 12).equals(ex(f)));
    NuSeries comm = star_commutator(ex(f), ex(h), P, 12);
    EXPECT_EQ(comm.coeff(0), poisson(f, h, P));
    EXPECT_TRUE(comm.coeff(1).is_zero());
    NuSeries direct = moyal(ex(f), ex(h), P, 12) - moyal(ex(h), ex(f), P, 12);
    EXPECT_TRUE(direct.equals(NuSeries::nu_power(2, 1, 2) * comm));
  }
}

TEST(Moyal, Associativity) {
  auto g = testgen::rng_for(64);
  auto P = PoissonStructure::darboux(2, rational(1, 2));
  for (int t = 0; t < 12; ++t) {
    NuSeries f = testgen::series(g, 2, 1, true, 2), h = testgen::series(g, 2, 1, true, 2),
             k = testgen::series(g, 2, 0, true, 2);
    NuSeries lhs = moyal(moyal(f, h, P, 20), k, P, 20);
    NuSeries rhs = moyal(f, moyal(h, k, P, 20), P, 20);
    ASSERT_TRUE(lhs.exact() && rhs.exact());
    EXPECT_TRUE(lhs.equals(rhs));
  }
}

TEST(Moyal, TerminationAndTruncation) {
  auto P = PoissonStructure::darboux(2, 1);
  CoefFn x = CoefFn::v(2, 0), y = CoefFn::v(2, 1);
  CoefFn x3 = x * x * x, y3 = y * y * y;
  NuSeries full = moyal(ex(x3), ex(y3), P, 10);
  EXPECT_TRUE(full.exact());
  EXPECT_FALSE(full.coeff(3).is_zero());
  EXPECT_TRUE(full.coeff(4).is_zero());
  NuSeries cut = moyal(ex(x3), ex(y3), P, 2);
  EXPECT_FALSE(cut.exact());
  EXPECT_EQ(cut.order(), 2);
  EXPECT_THROW(cut.coeff(3), PreconditionError);
  EXPECT_TRUE(cut.equals(full.truncated(2)));
}

TEST(NuSeries, ExactnessBookkeeping) {
  NuSeries a({CoefFn::constant(0, 1), CoefFn::constant(0, 2)}, true);
  NuSeries b({CoefFn::constant(0, 1)}, false);
  NuSeries s = a + b;
  EXPECT_FALSE(s.exact());
  EXPECT_EQ(s.order(), 0);
  NuSeries p = a * a;
  EXPECT_TRUE(p.exact());
  EXPECT_EQ(p.coeff(2), CoefFn::constant(0, 4));
  EXPECT_EQ(NuSeries::nu_power(0, 2).div_nu().order(), 1);
  EXPECT_THROW(a.div_nu(), PreconditionError);
  EXPECT_THROW(NuSeries::nu_power(0, -1), InputError);
}

// Linear functions with brackets mirroring a 2-dim algebra [x, y] = y.
TEST(Covariance, AffineAlgebra) {
  StructureTable t({"x", "y"});
  t.set(0, 1, {0, 1});
  LieAlgebra alg(t);
  auto P = PoissonStructure::darboux(0, 1);
  // {-z, e^a} = e^a with Lambda^{az} = 1.
  std::vector<NuSeries> lam{ex(Scalar(-1) * CoefFn::z(0)), ex(CoefFn::exp_a(0, 1))};
  auto rep = check_covariance(lam, alg, P, 6);
  EXPECT_TRUE(rep.ok);
  lam[1] = ex(CoefFn::exp_a(0, 2));
  EXPECT_FALSE(check_covariance(lam, alg, P, 6).ok);
}

}  // namespace
}  // namespace lieq
