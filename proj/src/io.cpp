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

#include "lieq/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace lieq::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int get_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

const Json& get_array(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  return j;
}

}  // namespace

Json scalar_json(const Scalar& x) { return format_scalar(x); }

Scalar parse_scalar_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw InputError("rational must be a \"p/q\" string or an integer");
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_json(m.row(i)));
  return rows;
}

Matrix parse_matrix(const Json& j) {
  get_array(j, "matrix");
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(parse_vec(r));
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) throw InputError("matrix rows have different lengths");
  return Matrix::from_rows(rows, cols);
}

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(scalar_json(x));
  return a;
}

Vec parse_vec(const Json& j) {
  get_array(j, "vector");
  Vec v;
  for (const auto& x : j) v.push_back(parse_scalar_json(x));
  return v;
}

Json table_json(const StructureTable& t) {
  Json br = Json::array();
  for (const auto& [key, val] : t.entries()) {
    Json coeffs = Json::object();
    for (const auto& [k, c] : val) coeffs[std::to_string(k)] = scalar_json(c);
    br.push_back({{"i", key.first}, {"j", key.second}, {"coeffs", coeffs}});
  }
  return {{"dim", t.dim()}, {"labels", t.labels()}, {"brackets", br}};
}

StructureTable parse_table(const Json& j) {
  const int dim = get_int(field(j, "dim"), "dim");
  if (dim < 0) throw InputError("dim must be >= 0");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : get_array(j.at("labels"), "labels")) {
      if (!l.is_string()) throw InputError("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (int i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != dim) throw InputError("labels must have dim entries");
  StructureTable t(labels);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& b : get_array(field(j, "brackets"), "brackets")) {
    const int i = get_int(field(b, "i"), "i"), k = get_int(field(b, "j"), "j");
    if (i < 0 || k < 0 || i >= dim || k >= dim) throw InputError("bracket index out of range");
    if (!seen.insert(std::minmax<std::size_t>(i, k)).second) throw InputError("bracket pair listed twice");
    Vec v(static_cast<std::size_t>(dim));
    const Json& co = field(b, "coeffs");
    if (!co.is_object()) throw InputError("coeffs must be an object");
    for (const auto& [key, val] : co.items()) {
      std::size_t idx = 0;
      try {
        std::size_t used = 0;
        idx = std::stoul(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw InputError("coeffs key '" + key + "' is not an index");
      }
      if (idx >= static_cast<std::size_t>(dim)) throw InputError("coeffs index out of range");
      v[idx] = parse_scalar_json(val);
    }
    t.set(static_cast<std::size_t>(i), static_cast<std::size_t>(k), v);
  }
  return t;
}

Json algebra_json(const LieAlgebra& g) { return table_json(g.table()); }

LieAlgebra parse_algebra(const Json& j) { return LieAlgebra(parse_table(j)); }

Json psd_spec_json(const PsdSpec& s) {
  Json ca = Json::array();
  for (const auto& c : s.cross_actions)
    ca.push_back({{"from", c.from}, {"to", c.to}, {"element", c.element}, {"matrix", matrix_json(c.matrix)}});
  return {{"r", s.r}, {"n", s.n}, {"cross_actions", ca}};
}

PsdSpec parse_psd_spec(const Json& j) {
  PsdSpec s;
  s.r = get_int(field(j, "r"), "r");
  for (const auto& x : get_array(field(j, "n"), "n")) s.n.push_back(get_int(x, "n_j"));
  if (j.contains("cross_actions")) {
    for (const auto& c : get_array(j.at("cross_actions"), "cross_actions")) {
      CrossAction a;
      a.from = get_int(field(c, "from"), "from");
      a.to = get_int(field(c, "to"), "to");
      if (!field(c, "element").is_string()) throw InputError("element must be a string");
      a.element = c.at("element").get<std::string>();
      a.matrix = parse_matrix(field(c, "matrix"));
      s.cross_actions.push_back(std::move(a));
    }
  }
  return s;
}

Json psd_json(const PsdAlgebra& p) {
  Json j = algebra_json(p.algebra);
  Json blocks = Json::array();
  for (const auto& b : p.blocks)
    blocks.push_back({{"j", b.j}, {"H", b.h}, {"V", b.v}, {"E", b.e}, {"omega", matrix_json(b.omega)}});
  j["blocks"] = blocks;
  j["spec"] = psd_spec_json(p.spec);
  return j;
}

Json cochain_json(const TwoCochain& c) { return {{"matrix", matrix_json(c.matrix())}}; }

TwoCochain parse_cochain(const Json& j) { return TwoCochain(parse_matrix(field(j, "matrix"))); }

Json coef_fn_json(const CoefFn& f) {
  Json a = Json::array();
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> alpha(m.alpha.begin(), m.alpha.begin() + f.nv());
    a.push_back({{"p", m.p}, {"k", m.k}, {"alpha", alpha}, {"q", m.q}, {"coeff", scalar_json(c)}});
  }
  return a;
}

CoefFn parse_coef_fn(const Json& j, int nv) {
  CoefFn f(nv);
  for (const auto& t : get_array(j, "function")) {
    Monomial m;
    m.p = get_int(field(t, "p"), "p");
    m.k = get_int(field(t, "k"), "k");
    m.q = get_int(field(t, "q"), "q");
    const Json& al = get_array(field(t, "alpha"), "alpha");
    if (static_cast<int>(al.size()) != nv) throw InputError("alpha must have nv entries");
    for (int i = 0; i < nv; ++i) m.alpha[static_cast<std::size_t>(i)] = get_int(al[static_cast<std::size_t>(i)], "alpha");
    f.add_term(m, parse_scalar_json(field(t, "coeff")));
  }
  return f;
}

Json series_json(const NuSeries& s) {
  Json cs = Json::array();
  for (const auto& c : s.coeffs()) cs.push_back(coef_fn_json(c));
  return {{"nv", s.nv()}, {"exact", s.exact()}, {"coeffs", cs}};
}

NuSeries parse_series(const Json& j) {
  const int nv = get_int(field(j, "nv"), "nv");
  if (nv < 0 || nv > kMaxV) throw InputError("nv out of range");
  if (!field(j, "exact").is_boolean()) throw InputError("exact must be a boolean");
  std::vector<CoefFn> cs;
  for (const auto& c : get_array(field(j, "coeffs"), "coeffs")) cs.push_back(parse_coef_fn(c, nv));
  if (cs.empty()) throw InputError("series needs at least one coefficient");
  return NuSeries(std::move(cs), j.at("exact").get<bool>());
}

namespace {

Json gscalar_json(const GScalar& g) { return {{"re", scalar_json(g.re)}, {"im", scalar_json(g.im)}}; }

GScalar parse_gscalar(const Json& j) { return {parse_scalar_json(field(j, "re")), parse_scalar_json(field(j, "im"))}; }

}  // namespace

Json xi_fn_json(const XiFn& f) {
  Json terms = Json::array();
  for (const auto& [key, c] : f.terms()) {
    Json cs = Json::array();
    for (const auto& g : c) cs.push_back(gscalar_json(g));
    terms.push_back({{"k", key.k}, {"m", key.m}, {"n", key.n}, {"s", key.s}, {"coeff", cs}});
  }
  return {{"order", f.order()}, {"terms", terms}};
}

XiFn parse_xi_fn(const Json& j) {
  XiFn f(get_int(field(j, "order"), "order"));
  for (const auto& t : get_array(field(j, "terms"), "terms")) {
    XiKey key{get_int(field(t, "k"), "k"), get_int(field(t, "m"), "m"), get_int(field(t, "n"), "n"),
              get_int(field(t, "s"), "s")};
    XiFn::Series c;
    for (const auto& g : get_array(field(t, "coeff"), "coeff")) c.push_back(parse_gscalar(g));
    if (static_cast<int>(c.size()) > f.order() + 1) throw InputError("XiFn coefficient longer than its order");
    f.add_term(key, c);
  }
  return f;
}

Json qmm_json(const QmmTable& t) {
  Json mu = Json::object();
  for (std::size_t b = 0; b < t.mu.size(); ++b) mu[t.labels.at(b)] = series_json(t.mu[b]);
  return {{"N", t.N},
          {"alpha", series_json(t.alpha)},
          {"c_omega", scalar_json(t.c_omega)},
          {"inner_scale", scalar_json(t.inner_scale)},
          {"poisson", matrix_json(t.P.tensor())},
          {"labels", t.labels},
          {"mu", mu}};
}

QmmTable parse_qmm(const Json& j) {
  QmmTable t;
  t.N = get_int(field(j, "N"), "N");
  if (t.N < 1) throw InputError("N must be >= 1");
  t.alpha = parse_series(field(j, "alpha"));
  t.c_omega = parse_scalar_json(field(j, "c_omega"));
  t.inner_scale = parse_scalar_json(field(j, "inner_scale"));
  t.P = PoissonStructure(parse_matrix(field(j, "poisson")), 2 * (t.N - 1));
  for (const auto& l : get_array(field(j, "labels"), "labels")) {
    if (!l.is_string()) throw InputError("labels must be strings");
    t.labels.push_back(l.get<std::string>());
  }
  const Json& mu = field(j, "mu");
  for (const auto& l : t.labels) t.mu.push_back(parse_series(field(mu, l.c_str())));
  return t;
}

Json candidate_json(const KernelCandidate& c) { return {{"value", series_json(c.value)}, {"radial", c.radial}}; }

KernelCandidate parse_candidate(const Json& j) {
  KernelCandidate c;
  c.value = parse_series(field(j, "value"));
  if (j.contains("radial")) {
    if (!j.at("radial").is_boolean()) throw InputError("radial must be a boolean");
    c.radial = j.at("radial").get<bool>();
  }
  return c;
}

Json model_json(const Su1nModel& m) {
  auto sub = [](const Subspace& s) {
    Json a = Json::array();
    for (const auto& v : s.basis()) a.push_back(vec_json(v));
    return a;
  };
  Json roots = Json::array();
  for (const auto& r : m.roots())
    roots.push_back({{"value", scalar_json(r.value)},
                     {"dim", r.space.dim()},
                     {"basis", sub(r.space)},
                     {"h_lambda", vec_json(r.h_lambda)}});
  Json j = algebra_json(m.algebra());
  j["N"] = m.N();
  j["sigma"] = matrix_json(m.sigma());
  j["killing"] = matrix_json(m.killing());
  j["subspaces"] = {{"k", sub(m.k())}, {"p", sub(m.p())}, {"a", sub(m.a())},
                    {"n", sub(m.n())}, {"m", sub(m.m())}, {"s", sub(m.s())}};
  j["roots"] = roots;
  return j;
}

Json h2_json(const H2Report& r) {
  return {{"h2", r.h2}, {"cocycles", r.cocycles}, {"coboundaries", r.coboundaries}, {"dim_c2", r.dim_c2}};
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lieq::io
