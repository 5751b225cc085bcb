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

#ifndef LIEQ_RETRACT_HPP_
#define LIEQ_RETRACT_HPP_

#include <string>
#include <vector>

#include "lieq/ball.hpp"

namespace lieq {

struct KernelCandidate {
  NuSeries value;
  bool radial = false;  // declared: v enters only through (v | v)
};

// True when every coefficient depends on v only through powers of the
// quadratic form with Gram matrix `gram`.
bool is_radial(const NuSeries& f, const Matrix& gram);
bool is_radial(const CoefFn& f, const Matrix& gram);

// Throws InputError if declared radial but not syntactically radial.
KernelCandidate make_candidate(const NuSeries& value, bool radial, const Su1nModel& model);

// k-generators by label: an m label, or "k_<L>" for L in n meaning L + sigma(L).
Vec k_generator(const Su1nModel& model, const std::string& label);
std::vector<std::string> k_generator_labels(const Su1nModel& model);

NuSeries moment_of(const QmmTable& table, const Vec& x);

// v -> (1/2nu)[mu_X, v]_* for X in k. Throws InputError otherwise.
StarDerivation retract_operator(const Vec& x, const QmmTable& table, const Su1nModel& model, int K);
NuSeries residual(const Vec& x, const KernelCandidate& v, const QmmTable& table, const Su1nModel& model, int K);
// Smallest nu order with a nonzero coefficient, or -1.
int leading_order(const NuSeries& f);

struct WClosureReport {
  bool ad_stable = false;  // [s, W] in W
  bool generates = false;  // [W, W] + W = g
  std::size_t dim_w = 0;
  std::size_t dim_generated = 0;
  bool ok() const { return ad_stable && generates; }
};

// W = s + m + g_{-lambda}.
Subspace default_w(const Su1nModel& model);
WClosureReport check_w_closure(const Su1nModel& model);
WClosureReport check_w_closure(const Su1nModel& model, const Subspace& w);

struct RadialReport {
  bool is_m_invariant = true;
  std::vector<std::string> failing;  // m labels with Y*(v) != 0
};

// Y*(v) = 0 for every basis Y of m.
RadialReport radial_reduce(const KernelCandidate& v, const Su1nModel& model);

}  // namespace lieq

#endif  // LIEQ_RETRACT_HPP_
