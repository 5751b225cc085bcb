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

#ifndef LIEQ_BALL_HPP_
#define LIEQ_BALL_HPP_

#include <string>
#include <utility>
#include <vector>

#include "lieq/check.hpp"
#include "lieq/formal_star.hpp"
#include "lieq/su1n_model.hpp"

namespace lieq {

// Point exp(aH) exp(v) exp(zE) of the Iwasawa group S. The a-coordinate is
// carried as exp_a = e^a so that the group law stays rational.
struct ChartPoint {
  Scalar exp_a = 1;
  Vec v;  // x_1..x_m, y_1..y_m in the e_i, f_i basis
  Scalar z;

  friend bool operator==(const ChartPoint& p, const ChartPoint& q) {
    return p.exp_a == q.exp_a && p.v == q.v && p.z == q.z;
  }
};

ChartPoint chart_identity(int nv);
// (a1,v1,z1)(a2,v2,z2) = (a1+a2, e^{-a2} v1 + v2, e^{-2a2} z1 + z2 + e^{-a2} Omega(v1,v2)/2)
ChartPoint group_law(const ChartPoint& p, const ChartPoint& q);
ChartPoint chart_inverse(const ChartPoint& p);
// Standard Omega(v, w) on the chart V-coordinates.
Scalar chart_omega(const Vec& v, const Vec& w);

// Value of f at a chart point. Throws PreconditionError when f contains
// powers of a and e^a != 1, since a = log(e^a) is then irrational.
Scalar evaluate(const CoefFn& f, const ChartPoint& x);

class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(int nv);
  VectorField(std::vector<CoefFn> comps, int nv);

  int nv() const { return nv_; }
  const std::vector<CoefFn>& components() const { return c_; }
  const CoefFn& operator[](int coord) const { return c_.at(static_cast<std::size_t>(coord)); }
  CoefFn apply(const CoefFn& f) const;

  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator*(const Scalar& s, const VectorField& a);
  friend bool operator==(const VectorField& a, const VectorField& b) { return a.c_ == b.c_; }

 private:
  int nv_ = 0;
  std::vector<CoefFn> c_;
};

VectorField lie_bracket(const VectorField& x, const VectorField& y);

// Basis indices of s + m in the model.
std::vector<std::size_t> sm_indices(const Su1nModel& model);

// X* = d/dt exp(-tX) . x at t = 0, for X in s + m (m acting by conjugation).
VectorField fundamental_field(const Su1nModel& model, const Vec& x);

// Function f with df = g and f(0) = 0. Throws PreconditionError (carrying the
// residual one-form) when g is not exact.
CoefFn integrate_gradient(const std::vector<CoefFn>& g);

struct ClassicalMomentMap {
  Scalar c_omega;
  PoissonStructure P;
  std::vector<std::size_t> indices;  // s + m
  std::vector<CoefFn> lambda;        // by model basis index; zero outside s + m
};

// Solves d lambda_X = -iota_{X*} omega with omega = -Lambda^{-1} for the
// Darboux tensor of scale c_omega, then fixes the constants of integration
// (zero at the origin) so that {lambda_X, lambda_Y} = lambda_[X,Y].
ClassicalMomentMap classical_moment_map(const Su1nModel& model, const Scalar& c_omega);

struct QmmOptions {
  bool include_nu2 = true;  // the (N-1) nu^2 term of mu_{sigma E}
};

struct QmmTable {
  int N = 0;
  NuSeries alpha;
  Scalar c_omega;
  Scalar inner_scale;
  PoissonStructure P;
  std::vector<std::string> labels;
  std::vector<NuSeries> mu;  // by model basis index

  void add_nu_shift(std::size_t index, const Scalar& c);
};

// (X | Y) = inner_scale * beta_sigma(X, Y) / beta_sigma(H, H) on V.
Matrix kahler_gram(const Su1nModel& model, const Scalar& inner_scale);

QmmTable build_qmm(const Su1nModel& model, const NuSeries& alpha, const Scalar& c_omega, const Scalar& inner_scale,
                   const QmmOptions& opts = {});
QmmTable build_qmm(const Su1nModel& model, const ClassicalMomentMap& cl, const NuSeries& alpha,
                   const Scalar& inner_scale, const QmmOptions& opts = {});

enum class QmmScope { kFull, kIwasawa };

struct QmmReport {
  bool ok = true;
  QmmScope scope = QmmScope::kFull;
  std::vector<PairResidual> pairs;
  int lowest_failing_order = -1;  // smallest nu order with a nonzero residual
};

// mu_[X,Y] - (1/2nu)[mu_X, mu_Y]_* over basis pairs. With max_order < 0 the
// check runs to the order where every star commutator terminates.
QmmReport verify_qmm(const QmmTable& table, const Su1nModel& model, QmmScope scope = QmmScope::kFull,
                     int max_order = -1);

// nu^0 part of mu_X minus lambda_X is a constant for X in a + Z(m).
std::vector<Check> verify_qmm_structure(const QmmTable& table, const Su1nModel& model, const ClassicalMomentMap& cl);

struct CalibrationCandidate {
  Scalar c_omega;
  Scalar inner_scale;
  bool ok = false;
  std::size_t failing_pairs = 0;
};

struct CalibrationResult {
  std::vector<CalibrationCandidate> candidates;
  std::vector<std::pair<Scalar, Scalar>> passing;
  bool ok() const { return !passing.empty(); }
};

std::vector<Scalar> default_calibration_grid();

// Tries every (c_omega, inner_scale) in grid x grid with alpha = 1 and keeps
// those for which verify_qmm holds at nu orders 0 and 1.
CalibrationResult calibrate(const Su1nModel& model, const std::vector<Scalar>& grid = default_calibration_grid());

}  // namespace lieq

#endif  // LIEQ_BALL_HPP_
