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

#include "lieq/psd.hpp"

namespace lieq {
namespace {

PsdSpec spec(std::vector<int> n) {
  PsdSpec s;
  s.r = static_cast<int>(n.size());
  s.n = std::move(n);
  return s;
}

// r = 2, n = [2, 2]: H_2 acts on V_1 by diag(1/2, -1/2), e and f of block 2
// by nilpotent maps compatible with [H_2, e] = e.
PsdSpec twisted() {
  PsdSpec s = spec({2, 2});
  s.cross_actions.push_back({2, "H", 1, Matrix::from_rows({{rational(1, 2), 0}, {0, rational(-1, 2)}}, 2)});
  s.cross_actions.push_back({2, "e1", 1, Matrix::from_rows({{0, 1}, {0, 0}}, 2)});
  s.cross_actions.push_back({2, "f1", 1, Matrix::from_rows({{0, 2}, {0, 0}}, 2)});
  return s;
}

TEST(Psd, SingleBlockN1) {
  auto p = build_psd(spec({1}));
  ASSERT_EQ(p.algebra.dim(), 2u);
  const auto& b = p.block(1);
  EXPECT_EQ(p.algebra.basis_bracket(b.h, b.e), scale(Scalar(2), p.algebra.e(b.e)));
}

TEST(Psd, TwoTrivialBlocks) {
  auto p = build_psd(spec({1, 1}));
  ASSERT_EQ(p.algebra.dim(), 4u);
  EXPECT_TRUE(is_zero(p.algebra.basis_bracket(p.block(2).h, p.block(1).h)));
  EXPECT_TRUE(is_zero(p.algebra.basis_bracket(p.block(2).h, p.block(1).e)));
}

TEST(Psd, SingleBlockN2) {
  auto p = build_psd(spec({2}));
  const auto& b = p.block(1);
  ASSERT_EQ(p.algebra.dim(), 4u);
  ASSERT_EQ(b.v.size(), 2u);
  EXPECT_EQ(p.algebra.basis_bracket(b.v[0], b.v[1]), p.algebra.e(b.e));
  EXPECT_EQ(p.algebra.basis_bracket(b.h, b.v[0]), p.algebra.e(b.v[0]));
}

TEST(Psd, DimensionAndLayout) {
  for (auto n : std::vector<std::vector<int>>{{1}, {3}, {1, 2}, {2, 1, 3}, {3, 3, 3}}) {
    auto p = build_psd(spec(n));
    std::size_t want = 0;
    for (int x : n) want += static_cast<std::size_t>(2 * x);
    EXPECT_EQ(p.algebra.dim(), want);
    // Blocks laid out r first.
    EXPECT_EQ(p.block(p.spec.r).h, 0u);
  }
}

void expect_block_laws(const PsdAlgebra& p) {
  const auto& g = p.algebra;
  const std::size_t d = g.dim();
  std::vector<Vec> nil, hs;
  for (const auto& b : p.blocks) {
    hs.push_back(g.e(b.h));
    nil.push_back(g.e(b.e));
    for (auto v : b.v) nil.push_back(g.e(v));
    // ad H_j: 1 on V_j, 2 on E_j.
    for (auto v : b.v) EXPECT_EQ(g.basis_bracket(b.h, v), g.e(v));
    EXPECT_EQ(g.basis_bracket(b.h, b.e), scale(Scalar(2), g.e(b.e)));
    for (std::size_t p1 = 0; p1 < b.v.size(); ++p1) {
      EXPECT_TRUE(is_zero(g.basis_bracket(b.v[p1], b.e)));
      for (std::size_t p2 = 0; p2 < b.v.size(); ++p2)
        EXPECT_EQ(g.basis_bracket(b.v[p1], b.v[p2]), scale(b.omega(p1, p2), g.e(b.e)));
    }
    for (auto x : p.higher(b.j)) {
      EXPECT_TRUE(is_zero(g.basis_bracket(x, b.h)));
      EXPECT_TRUE(is_zero(g.basis_bracket(x, b.e)));
    }
  }
  EXPECT_EQ(derived_subalgebra(g), Subspace(d, nil));
  EXPECT_EQ(bracket_span(g, Subspace(d, hs), Subspace(d, hs)).dim(), 0u);
}

TEST(Psd, BracketLawsTrivialActions) {
  for (auto n : std::vector<std::vector<int>>{{2}, {2, 3}, {3, 1, 2}}) expect_block_laws(build_psd(spec(n)));
}

TEST(Psd, BracketLawsTwistedAction) { expect_block_laws(build_psd(twisted())); }

TEST(Psd, BadCrossActionNamesTriple) {
  PsdSpec s = spec({2, 2});
  s.cross_actions.push_back({2, "e1", 1, Matrix::from_rows({{0, 1}, {0, 0}}, 2)});
  try {
    build_psd(s);
    FAIL() << "expected JacobiError";
  } catch (const JacobiError& e) {
    EXPECT_NE(std::string(e.what()).find("("), std::string::npos);
  }
}

TEST(Psd, MalformedSpecs) {
  EXPECT_THROW(build_psd(spec({})), InputError);
  PsdSpec s = spec({1, 2});
  s.r = 3;
  EXPECT_THROW(build_psd(s), InputError);
  EXPECT_THROW(build_psd(spec({0})), InputError);
  PsdSpec wrong_dir = spec({2, 2});
  wrong_dir.cross_actions.push_back({1, "H", 2, Matrix(2, 2)});
  EXPECT_THROW(build_psd(wrong_dir), InputError);
  PsdSpec wrong_size = spec({2, 2});
  wrong_size.cross_actions.push_back({2, "H", 1, Matrix(3, 3)});
  EXPECT_THROW(build_psd(wrong_size), InputError);
  PsdSpec bad_name = spec({2, 2});
  bad_name.cross_actions.push_back({2, "q", 1, Matrix(2, 2)});
  EXPECT_THROW(build_psd(bad_name), InputError);
  PsdSpec missing = spec({2, 1});
  missing.cross_actions.push_back({2, "e1", 1, Matrix(2, 2)});
  EXPECT_THROW(build_psd(missing), InputError);
}

TEST(Psd, MatchesIwasawaSubalgebra) {
  for (int N : {1, 2, 3}) {
    auto rep = match_iwasawa(build_psd(spec({N})), Su1nModel(N));
    EXPECT_TRUE(rep.ok) << rep.reason;
  }
  auto bad = match_iwasawa(build_psd(spec({2})), Su1nModel(3));
  EXPECT_FALSE(bad.ok);
  EXPECT_NE(bad.reason.find("dimension"), std::string::npos);
  auto rank2 = match_iwasawa(build_psd(spec({1, 1})), Su1nModel(1));
  EXPECT_FALSE(rank2.ok);
}

}  // namespace
}  // namespace lieq
