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

#ifndef LIEQ_TESTS_GEN_HPP_
#define LIEQ_TESTS_GEN_HPP_

// Seeded generators shared by the property tests.

#include <random>
#include <vector>

#include "lieq/formal_star.hpp"
#include "lieq/lie_algebra.hpp"
#include "lieq/xi_fn.hpp"

namespace lieq::testgen {

inline std::mt19937_64 rng_for(std::uint64_t seed) { return std::mt19937_64(0x5eed0000ULL + seed); }

inline int uniform(std::mt19937_64& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

inline bool coin(std::mt19937_64& g, double p = 0.5) { return std::bernoulli_distribution(p)(g); }

inline Scalar rat(std::mt19937_64& g, int range = 6, int den = 5) {
  return rational(uniform(g, -range, range), uniform(g, 1, den));
}

inline Vec vec(std::mt19937_64& g, std::size_t n, double density = 0.7) {
  Vec v(n);
  for (auto& x : v)
    if (coin(g, density)) x = rat(g);
  return v;
}

inline Matrix matrix(std::mt19937_64& g, std::size_t r, std::size_t c, double density = 0.6) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (coin(g, density)) m(i, j) = rat(g);
  return m;
}

// Low-rank products give plenty of nontrivial null spaces.
inline Matrix low_rank(std::mt19937_64& g, std::size_t r, std::size_t c, std::size_t k) {
  return matrix(g, r, k, 0.8) * matrix(g, k, c, 0.8);
}

inline GScalar gauss(std::mt19937_64& g) { return {rat(g), coin(g) ? rat(g) : Scalar(0)}; }

// Polynomial in (e^{+-a}, a, v, z) with small degrees.
inline CoefFn coef_fn(std::mt19937_64& g, int nv, int terms = 4, bool with_a = false, int max_deg = 2) {
  CoefFn f(nv);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    m.k = uniform(g, -1, 1);
    m.p = with_a ? uniform(g, 0, 1) : 0;
    m.q = uniform(g, 0, max_deg);
    for (int i = 0; i < nv; ++i) m.alpha[static_cast<std::size_t>(i)] = coin(g, 0.4) ? uniform(g, 1, max_deg) : 0;
    f.add_term(m, rat(g));
  }
  return f;
}

inline NuSeries series(std::mt19937_64& g, int nv, int order, bool exact, int terms = 3) {
  std::vector<CoefFn> cs;
  for (int m = 0; m <= order; ++m) cs.push_back(coin(g, 0.7) ? coef_fn(g, nv, terms) : CoefFn(nv));
  return NuSeries(std::move(cs), exact);
}

inline XiFn xi_fn(std::mt19937_64& g, int K, int terms = 4) {
  XiFn f(K);
  for (int t = 0; t < terms; ++t) {
    XiKey key{uniform(g, -2, 2), uniform(g, -2, 3), uniform(g, -2, 3), uniform(g, -3, 3)};
    XiFn::Series c(static_cast<std::size_t>(uniform(g, 1, K + 1)));
    for (auto& x : c)
      if (coin(g, 0.7)) x = gauss(g);
    f.add_term(key, c);
  }
  return f;
}

// Random nilpotent-by-abelian algebras are awkward to generate; instead take
// a random real form of gl-type brackets: x ad-action by a random matrix on
// an abelian ideal, which always satisfies Jacobi.
inline StructureTable semidirect(std::mt19937_64& g, std::size_t ideal_dim) {
  std::vector<std::string> labels{"t"};
  for (std::size_t i = 0; i < ideal_dim; ++i) labels.push_back("u" + std::to_string(i));
  StructureTable t(labels);
  Matrix a = matrix(g, ideal_dim, ideal_dim, 0.5);
  for (std::size_t j = 0; j < ideal_dim; ++j) {
    Vec v(ideal_dim + 1);
    for (std::size_t i = 0; i < ideal_dim; ++i) v[i + 1] = a(i, j);
    t.set(0, j + 1, v);
  }
  return t;
}

}  // namespace lieq::testgen

#endif  // LIEQ_TESTS_GEN_HPP_
