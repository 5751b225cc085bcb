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
#include "lieq/linalg.hpp"

namespace lieq {
namespace {

// Cofactor expansion, used only as an oracle for small matrices.
Scalar laplace_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Scalar det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(m(0, j)) == 0) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    Scalar term = m(0, j) * laplace_det(minor);
    det += (j % 2 == 0) ? term : Scalar(-term);
  }
  return det;
}

TEST(Scalar, ParseAndFormat) {
  EXPECT_EQ(parse_scalar("3/6"), rational(1, 2));
  EXPECT_EQ(parse_scalar("-4"), Scalar(-4));
  EXPECT_EQ(format_scalar(rational(-2, 4)), "-1/2");
  EXPECT_EQ(format_scalar(Scalar(3)), "3/1");
  EXPECT_THROW(parse_scalar("1/0"), InputError);
  EXPECT_THROW(parse_scalar("x"), InputError);
  EXPECT_THROW(parse_scalar(""), InputError);
}

TEST(Scalar, RationalIsCanonical) {
  EXPECT_EQ(rational(2, 4), rational(1, 2));
  EXPECT_EQ(rational(3, -6), rational(-1, 2));
}

TEST(Scalar, GaussianField) {
  auto g = testgen::rng_for(1);
  for (int t = 0; t < 50; ++t) {
    GScalar a = testgen::gauss(g), b = testgen::gauss(g);
    if (b.is_zero()) continue;
    EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
  }
  EXPECT_EQ(GScalar::i() * GScalar::i(), GScalar(-1));
}

TEST(Linalg, DeterminantMatchesCofactorExpansion) {
  auto g = testgen::rng_for(2);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = static_cast<std::size_t>(testgen::uniform(g, 1, 5));
    Matrix m = testgen::matrix(g, n, n);
    EXPECT_EQ(determinant(m), laplace_det(m));
  }
}

TEST(Linalg, RankNullityAndKernel) {
  auto g = testgen::rng_for(3);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = static_cast<std::size_t>(testgen::uniform(g, 1, 6));
    std::size_t c = static_cast<std::size_t>(testgen::uniform(g, 1, 7));
    std::size_t k = static_cast<std::size_t>(testgen::uniform(g, 0, 4));
    Matrix m = testgen::low_rank(g, r, c, k);
    auto ns = nullspace(m);
    EXPECT_EQ(rank(m) + ns.size(), c);
    EXPECT_EQ(rank(m), rref(m).pivots.size());
    for (const auto& v : ns) EXPECT_TRUE(is_zero(m.apply(v)));
    EXPECT_LE(rank(m), k);
  }
}

TEST(Linalg, SolveAndInverse) {
  auto g = testgen::rng_for(4);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = static_cast<std::size_t>(testgen::uniform(g, 1, 5));
    Matrix m = testgen::matrix(g, n, n, 0.9);
    Vec x = testgen::vec(g, n);
    auto sol = solve(m, m.apply(x));
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m.apply(*sol), m.apply(x));
    if (sgn(determinant(m)) != 0)
      EXPECT_EQ(m * inverse(m), Matrix::identity(n));
    else
      EXPECT_THROW(inverse(m), std::domain_error);
  }
  Matrix z(2, 2);
  EXPECT_FALSE(solve(z, Vec{1, 0}).has_value());
}

TEST(Linalg, LeadingMinors) {
  Matrix m = Matrix::from_rows({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}, 3);
  auto mins = leading_minors(m);
  ASSERT_EQ(mins.size(), 3u);
  EXPECT_EQ(mins[0], 2);
  EXPECT_EQ(mins[1], 3);
  EXPECT_EQ(mins[2], 4);
}

TEST(Linalg, SparseEchelonMatchesDense) {
  auto g = testgen::rng_for(5);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = static_cast<std::size_t>(testgen::uniform(g, 1, 7));
    std::size_t c = static_cast<std::size_t>(testgen::uniform(g, 1, 7));
    Matrix m = testgen::low_rank(g, r, c, static_cast<std::size_t>(testgen::uniform(g, 0, 4)));
    SparseEchelon se(c);
    for (std::size_t i = 0; i < r; ++i) se.add_row(m.row(i));
    EXPECT_EQ(se.rank(), rank(m));
    auto ns = se.nullspace();
    EXPECT_EQ(ns.size(), c - rank(m));
    for (const auto& v : ns) EXPECT_TRUE(is_zero(m.apply(v)));
    EXPECT_EQ(rank(Matrix::from_rows(ns, c)), ns.size());
  }
}

}  // namespace
}  // namespace lieq
