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

#ifndef LIEQ_IO_HPP_
#define LIEQ_IO_HPP_

#include <string>

#include "json.hpp"
#include "lieq/ball.hpp"
#include "lieq/cohomology.hpp"
#include "lieq/psd.hpp"
#include "lieq/retract.hpp"
#include "lieq/su1n_model.hpp"
#include "lieq/xi_fn.hpp"

namespace lieq::io {

using Json = nlohmann::json;

// Every parser throws InputError on a malformed document.

Json scalar_json(const Scalar& x);
Scalar parse_scalar_json(const Json& j);

Json matrix_json(const Matrix& m);
Matrix parse_matrix(const Json& j);

Json vec_json(const Vec& v);
Vec parse_vec(const Json& j);

// {"dim", "labels", "brackets": [{"i", "j", "coeffs": {"k": "p/q"}}]}
Json table_json(const StructureTable& t);
StructureTable parse_table(const Json& j);
Json algebra_json(const LieAlgebra& g);
LieAlgebra parse_algebra(const Json& j);  // also throws JacobiError

Json psd_spec_json(const PsdSpec& s);
PsdSpec parse_psd_spec(const Json& j);
// Algebra document plus a "blocks" table.
Json psd_json(const PsdAlgebra& p);

Json cochain_json(const TwoCochain& c);
TwoCochain parse_cochain(const Json& j);

Json coef_fn_json(const CoefFn& f);
CoefFn parse_coef_fn(const Json& j, int nv);

Json series_json(const NuSeries& s);
NuSeries parse_series(const Json& j);

Json xi_fn_json(const XiFn& f);
XiFn parse_xi_fn(const Json& j);

Json qmm_json(const QmmTable& t);
QmmTable parse_qmm(const Json& j);

Json candidate_json(const KernelCandidate& c);
KernelCandidate parse_candidate(const Json& j);

// Algebra document plus sigma, Killing form, subspaces and roots.
Json model_json(const Su1nModel& m);
Json h2_json(const H2Report& r);

Json read_file(const std::string& path);
// Stable textual form: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace lieq::io

#endif  // LIEQ_IO_HPP_
