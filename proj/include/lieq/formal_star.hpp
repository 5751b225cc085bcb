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

#ifndef LIEQ_FORMAL_STAR_HPP_
#define LIEQ_FORMAL_STAR_HPP_

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "lieq/lie_algebra.hpp"

namespace lieq {

// Chart coordinates are (a, v_1..v_nv, z); coordinate index 0 is a, 1..nv are
// the v_i and nv + 1 is z.
constexpr int kMaxV = 12;

// a^p e^{k a} v^alpha z^q
struct Monomial {
  int p = 0;
  int k = 0;
  std::array<int, kMaxV> alpha{};
  int q = 0;

  int v_degree() const;
  auto operator<=>(const Monomial&) const = default;
};

// Finite sum of coefficient * monomial.
class CoefFn {
 public:
  CoefFn() = default;
  explicit CoefFn(int nv);

  static CoefFn constant(int nv, const Scalar& c);
  static CoefFn monomial(int nv, const Monomial& m, const Scalar& c = 1);
  static CoefFn a(int nv);
  static CoefFn z(int nv);
  static CoefFn v(int nv, int i);
  static CoefFn exp_a(int nv, int k);  // e^{k a}

  int nv() const { return nv_; }
  int chart_dim() const { return nv_ + 2; }
  const std::map<Monomial, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  int z_degree() const;
  int v_degree() const;
  int a_degree() const;

  void add_term(const Monomial& m, const Scalar& c);
  // Derivative along chart coordinate `coord`.
  CoefFn d(int coord) const;

  CoefFn& operator+=(const CoefFn& o);
  CoefFn& operator-=(const CoefFn& o);
  friend CoefFn operator+(CoefFn a, const CoefFn& b) { return a += b; }
  friend CoefFn operator-(CoefFn a, const CoefFn& b) { return a -= b; }
  friend CoefFn operator-(const CoefFn& a) { return Scalar(-1) * a; }
  friend CoefFn operator*(const CoefFn& a, const CoefFn& b);
  friend CoefFn operator*(const Scalar& s, const CoefFn& a);
  friend bool operator==(const CoefFn& a, const CoefFn& b) { return a.t_ == b.t_; }
  friend bool operator!=(const CoefFn& a, const CoefFn& b) { return !(a == b); }

 private:
  int nv_ = 0;
  std::map<Monomial, Scalar> t_;
};

std::string to_string(const CoefFn& f);

// Truncated formal power series sum_m nu^m f_m, known up to order(). When
// exact() is set every omitted order is identically zero.
class NuSeries {
 public:
  NuSeries() : c_(1), exact_(true) {}
  NuSeries(std::vector<CoefFn> coeffs, bool exact);
  static NuSeries exact_value(const CoefFn& f) { return NuSeries({f}, true); }
  static NuSeries constant(int nv, const Scalar& c) { return exact_value(CoefFn::constant(nv, c)); }
  // c * nu^m
  static NuSeries nu_power(int nv, int m, const Scalar& c = 1);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool exact() const { return exact_; }
  int nv() const;
  const std::vector<CoefFn>& coeffs() const { return c_; }
  // Coefficient of nu^m; zero past the order of an exact series, throws past
  // the order of a truncated one.
  CoefFn coeff(int m) const;

  NuSeries truncated(int K) const;
  // Divides by nu; requires a vanishing nu^0 coefficient.
  NuSeries div_nu() const;
  bool is_zero() const;  // every known coefficient vanishes
  // Coefficientwise comparison over the orders known for both.
  bool equals(const NuSeries& o) const;

  NuSeries& operator+=(const NuSeries& o);
  NuSeries& operator-=(const NuSeries& o);
  friend NuSeries operator+(NuSeries a, const NuSeries& b) { return a += b; }
  friend NuSeries operator-(NuSeries a, const NuSeries& b) { return a -= b; }
  friend NuSeries operator*(const NuSeries& a, const NuSeries& b);
  friend NuSeries operator*(const Scalar& s, const NuSeries& a);
  friend NuSeries operator*(const CoefFn& f, const NuSeries& a);

 private:
  std::vector<CoefFn> c_;
  bool exact_ = true;
};

// Constant Poisson tensor Lambda^{uw} on the chart.
class PoissonStructure {
 public:
  PoissonStructure() = default;
  // Throws InputError unless lambda is antisymmetric, invertible and
  // (nv + 2)-square.
  PoissonStructure(Matrix lambda, int nv);
  // Lambda^{az} = c, Lambda^{x_i y_i} = 2c with v = (x_1..x_m, y_1..y_m).
  static PoissonStructure darboux(int nv, const Scalar& c);

  int nv() const { return nv_; }
  int dim() const { return nv_ + 2; }
  const Matrix& tensor() const { return lambda_; }
  // omega = -Lambda^{-1}, so that iota_{X_f} omega = -df for X_f = {f, .}.
  const Matrix& symplectic_form() const { return omega_; }

 private:
  int nv_ = 0;
  Matrix lambda_;
  Matrix omega_;
};

// {f, g} = Lambda^{uw} d_u f d_w g
CoefFn poisson(const CoefFn& f, const CoefFn& g, const PoissonStructure& P);

// f * g = sum_m nu^m / m! Lambda^{u1 w1}..Lambda^{um wm} d^m f d^m g, to order K.
NuSeries moyal(const NuSeries& f, const NuSeries& g, const PoissonStructure& P, int K);

// (1 / 2nu) [f, g]_* to order K.
NuSeries star_commutator(const NuSeries& f, const NuSeries& g, const PoissonStructure& P, int K);

// v -> (1 / 2nu) [mu, v]_*
class StarDerivation {
 public:
  StarDerivation(NuSeries mu, PoissonStructure P, int K) : mu_(std::move(mu)), P_(std::move(P)), K_(K) {}
  NuSeries operator()(const NuSeries& v) const { return star_commutator(mu_, v, P_, K_); }
  const NuSeries& generator() const { return mu_; }
  int order() const { return K_; }

 private:
  NuSeries mu_;
  PoissonStructure P_;
  int K_;
};

struct PairResidual {
  std::size_t i = 0;
  std::size_t j = 0;
  NuSeries residual;
  bool ok = false;
};

struct CovarianceReport {
  bool ok = true;
  std::vector<PairResidual> pairs;
};

// (1/2nu)[lambda_i, lambda_j]_* = lambda_[X_i, X_j] for all basis pairs.
CovarianceReport check_covariance(const std::vector<NuSeries>& lambda, const LieAlgebra& alg,
                                  const PoissonStructure& P, int K);

}  // namespace lieq

#endif  // LIEQ_FORMAL_STAR_HPP_
