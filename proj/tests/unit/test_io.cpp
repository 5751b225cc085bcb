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
#include "lieq/io.hpp"

namespace lieq {
namespace {

using io::Json;

template <class T, class Ser, class Par>
void expect_roundtrip(const T& x, Ser ser, Par par) {
  Json j = ser(x);
  std::string text = io::dump(j);
  Json again = ser(par(Json::parse(text)));
  EXPECT_EQ(io::dump(again), text);
}

TEST(Io, AlgebraRoundtrip) {
  auto g = testgen::rng_for(100);
  std::vector<LieAlgebra> algs{Su1nModel(2).algebra(), Su1nModel(3).algebra()};
  for (int t = 0; t < 10; ++t) algs.push_back(LieAlgebra(testgen::semidirect(g, 3)));
  for (const auto& a : algs) {
    LieAlgebra b = io::parse_algebra(Json::parse(io::dump(io::algebra_json(a))));
    EXPECT_EQ(b.labels(), a.labels());
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) EXPECT_EQ(b.basis_bracket(i, j), a.basis_bracket(i, j));
    expect_roundtrip(a, io::algebra_json, io::parse_algebra);
  }
}

TEST(Io, PsdSpecRoundtrip) {
  PsdSpec s;
  s.r = 2;
  s.n = {2, 2};
  s.cross_actions.push_back({2, "H", 1, Matrix::from_rows({{rational(1, 2), 0}, {0, rational(-1, 2)}}, 2)});
  s.cross_actions.push_back({2, "e1", 1, Matrix::from_rows({{0, 1}, {0, 0}}, 2)});
  expect_roundtrip(s, io::psd_spec_json, io::parse_psd_spec);
  PsdSpec plain = io::parse_psd_spec(Json::parse(R"({"r": 3, "n": [1, 2, 3]})"));
  EXPECT_EQ(plain.n, (std::vector<int>{1, 2, 3}));
  EXPECT_TRUE(plain.cross_actions.empty());
  Json pj = io::psd_json(build_psd(s));
  EXPECT_EQ(pj["blocks"].size(), 2u);
  EXPECT_EQ(io::parse_algebra(pj).dim(), 8u);
}

TEST(Io, CochainRoundtrip) {
  auto g = testgen::rng_for(101);
  for (int t = 0; t < 10; ++t) {
    TwoCochain c = TwoCochain::from_pairs(5, testgen::vec(g, pair_count(5)));
    EXPECT_EQ(io::parse_cochain(io::cochain_json(c)), c);
    expect_roundtrip(c, io::cochain_json, io::parse_cochain);
  }
}

TEST(Io, SeriesRoundtrip) {
  auto g = testgen::rng_for(102);
  for (int t = 0; t < 20; ++t) {
    const int nv = 2 * testgen::uniform(g, 0, 2);
    NuSeries s = testgen::series(g, nv, testgen::uniform(g, 0, 3), testgen::coin(g));
    NuSeries back = io::parse_series(Json::parse(io::dump(io::series_json(s))));
    EXPECT_EQ(back.exact(), s.exact());
    EXPECT_EQ(back.coeffs(), s.coeffs());
    expect_roundtrip(s, io::series_json, io::parse_series);
  }
}

TEST(Io, XiFnRoundtrip) {
  auto g = testgen::rng_for(103);
  for (int t = 0; t < 20; ++t) {
    XiFn f = testgen::xi_fn(g, 5);
    EXPECT_EQ(io::parse_xi_fn(io::xi_fn_json(f)), f);
    expect_roundtrip(f, io::xi_fn_json, io::parse_xi_fn);
  }
}

TEST(Io, QmmAndCandidateRoundtrip) {
  for (int N : {1, 2, 3}) {
    Su1nModel m(N);
    auto t = build_qmm(m, NuSeries::constant(2 * (N - 1), 2), rational(1, 2), rational(1, 2));
    expect_roundtrip(t, io::qmm_json, io::parse_qmm);
    QmmTable back = io::parse_qmm(io::qmm_json(t));
    EXPECT_TRUE(verify_qmm(back, m).ok);
  }
  KernelCandidate c{NuSeries::exact_value(CoefFn::z(2) * CoefFn::exp_a(2, 1)), false};
  expect_roundtrip(c, io::candidate_json, io::parse_candidate);
}

TEST(Io, ModelExportIsAnAlgebraDocument) {
  Su1nModel m(2);
  Json j = io::model_json(m);
  EXPECT_EQ(j["N"], 2);
  EXPECT_EQ(j["subspaces"]["k"].size(), m.k().dim());
  EXPECT_EQ(io::parse_algebra(j).dim(), 8u);
  H2Report r{10, 6, 6, 0};
  EXPECT_EQ(io::h2_json(r)["h2"], 0);
}

TEST(Io, DumpIsSortedAndStable) {
  Json j = Json::parse(R"({"b": 1, "a": [2, {"d": 3, "c": 4}]})");
  EXPECT_EQ(io::dump(j), "{\n  \"a\": [\n    2,\n    {\n      \"c\": 4,\n      \"d\": 3\n    }\n  ],\n  \"b\": 1\n}\n");
}

TEST(Io, MalformedInputs) {
  auto bad = [](const char* text) { return Json::parse(text); };
  EXPECT_THROW(io::parse_table(bad(R"({"brackets": []})")), InputError);
  EXPECT_THROW(io::parse_table(bad(R"({"dim": 2, "brackets": [{"i": 0, "j": 5, "coeffs": {}}]})")), InputError);
  EXPECT_THROW(io::parse_table(bad(R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": {"x": "1"}}]})")), InputError);
  EXPECT_THROW(io::parse_table(bad(R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": {"1": "1/0"}}]})")), InputError);
  EXPECT_THROW(io::parse_table(bad(R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": {}}, {"i": 1, "j": 0, "coeffs": {}}]})")), InputError);
  EXPECT_THROW(io::parse_table(bad(R"({"dim": 2, "labels": ["a"], "brackets": []})")), InputError);
  EXPECT_THROW(io::parse_psd_spec(bad(R"({"r": "two", "n": [1]})")), InputError);
  EXPECT_THROW(io::parse_series(bad(R"({"nv": 2, "exact": true, "coeffs": [[{"p": 0, "k": 0, "alpha": [0], "q": 0, "coeff": "1"}]]})")), InputError);
  EXPECT_THROW(io::parse_series(bad(R"({"nv": 2, "exact": "yes", "coeffs": [[]]})")), InputError);
  EXPECT_THROW(io::parse_cochain(bad(R"({"matrix": [["0", "1"], ["1", "0"]]})")), InputError);
  EXPECT_THROW(io::parse_xi_fn(bad(R"({"order": 1, "terms": [{"k": 0, "m": 0, "n": 0, "s": 0, "coeff": [{"re": "1", "im": "0"}, {"re": "1", "im": "0"}, {"re": "1", "im": "0"}]}]})")), InputError);
  EXPECT_THROW(io::read_file("/nonexistent/file.json"), InputError);
  // Well-formed but not a Lie algebra.
  EXPECT_THROW(io::parse_algebra(bad(R"({"dim": 3, "brackets": [
      {"i": 0, "j": 1, "coeffs": {"2": "1"}}, {"i": 1, "j": 2, "coeffs": {"0": "1"}}, {"i": 0, "j": 2, "coeffs": {"2": "1"}}]})")),
               JacobiError);
}

}  // namespace
}  // namespace lieq
