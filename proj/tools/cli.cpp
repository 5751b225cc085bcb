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

#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "lieq/ball.hpp"
#include "lieq/cohomology.hpp"
#include "lieq/psd.hpp"
#include "lieq/retract.hpp"

namespace lieq::cli {

int truncation_order() {
  const char* env = std::getenv(kTruncationEnv);
  if (env == nullptr || *env == '\0') return kDefaultTruncation;
  std::string s(env);
  std::size_t used = 0;
  int k = -1;
  try {
    k = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || k < 0 || k > 64) throw InputError(std::string(kTruncationEnv) + " must be an integer in 0..64");
  return k;
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

io::Json RunReport::to_json() const {
  io::Json cs = io::Json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"ok", c.ok}, {"residual_summary", c.detail}});
  io::Json j = {{"command", command},
                {"inputs", {{"digest", "fnv1a64:" + fnv1a_hex(command + "\n" + params.dump() + "\n" + digest_source)},
                            {"params", params}}},
                {"checks", cs},
                {"ok", ok()}};
  if (timing_ms >= 0) j["timing_ms"] = timing_ms;
  return j;
}

namespace {

using Clock = std::chrono::steady_clock;

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

io::Json parse_text(const std::string& text, const std::string& path) {
  try {
    return io::Json::parse(text);
  } catch (const io::Json::exception& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

std::string summarize(const NuSeries& r) {
  if (r.is_zero()) return "0";
  int lead = leading_order(r);
  std::size_t terms = 0;
  for (const auto& c : r.coeffs()) terms += c.terms().size();
  return "nonzero from nu^" + std::to_string(lead) + " (" + std::to_string(terms) + " terms)";
}

Scalar random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  return rational(num(rng), den(rng));
}

TwoCochain random_cochain(std::size_t dim, std::mt19937_64& rng) {
  Vec v(pair_count(dim));
  std::bernoulli_distribution dense(0.5);
  for (auto& x : v)
    if (dense(rng)) x = random_rational(rng);
  return TwoCochain::from_pairs(dim, v);
}

TwoCochain random_combination(const std::vector<TwoCochain>& basis, std::size_t dim, std::mt19937_64& rng) {
  Vec v(pair_count(dim));
  for (const auto& b : basis) v = add(v, scale(random_rational(rng), b.pairs()));
  return TwoCochain::from_pairs(dim, v);
}

// Thirds: arbitrary cochains, cocycles, and cocycles with one perturbed entry.
std::vector<TwoCochain> sample_cochains(const LieAlgebra& g, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto basis = cocycle_basis(g);
  const std::size_t d = g.dim();
  std::vector<TwoCochain> out;
  for (std::size_t s = 0; s < count; ++s) {
    switch (s % 3) {
      case 0:
        out.push_back(random_cochain(d, rng));
        break;
      case 1:
        out.push_back(random_combination(basis, d, rng));
        break;
      default: {
        Vec v = random_combination(basis, d, rng).pairs();
        if (!v.empty()) {
          std::uniform_int_distribution<std::size_t> pick(0, v.size() - 1);
          v[pick(rng)] += random_rational(rng) + 1;
        }
        out.push_back(TwoCochain::from_pairs(d, v));
      }
    }
  }
  return out;
}

std::vector<Vec> hh_constraints(const PsdAlgebra& p) {
  std::vector<Vec> extra;
  const std::size_t d = p.algebra.dim();
  for (int j = 1; j <= p.spec.r; ++j)
    for (int k = j + 1; k <= p.spec.r; ++k) {
      std::size_t a = p.block(j).h, b = p.block(k).h;
      Vec w(pair_count(d));
      w[pair_index(d, std::min(a, b), std::max(a, b))] = 1;
      extra.push_back(w);
    }
  return extra;
}

std::vector<Check> cocycle_checks_psd(const PsdAlgebra& p, std::size_t samples, std::uint64_t seed) {
  std::vector<Check> out;
  const auto& g = p.algebra;
  auto h2 = h2_dimension(g);
  const std::size_t r = static_cast<std::size_t>(p.spec.r);
  out.push_back({"h2 = r(r-1)/2", h2.h2 == r * (r - 1) / 2, "h2=" + std::to_string(h2.h2)});

  std::size_t disagree = 0;
  for (const auto& c : sample_cochains(g, samples, seed)) {
    bool brute = delta2(g, c).is_zero();
    if (check_block_cocycle(p, c).satisfied != brute) ++disagree;
  }
  out.push_back({"block conditions agree with dc = 0", disagree == 0,
                 std::to_string(disagree) + " of " + std::to_string(samples) + " disagree"});

  std::size_t bad = 0;
  auto basis = cocycle_basis(g, hh_constraints(p));
  for (const auto& c : basis)
    if (!(delta1(g, coboundary_primitive_psd(p, c)) == c)) ++bad;
  out.push_back({"primitive of cocycles vanishing on (H_j, H_k)", bad == 0,
                 std::to_string(bad) + " of " + std::to_string(basis.size()) + " fail"});
  return out;
}

std::vector<Check> cocycle_checks_su1n(const Su1nModel& model) {
  std::vector<Check> out;
  auto h2 = h2_dimension(model.algebra());
  out.push_back({"h2(su(1,N)) = 0", h2.h2 == 0, "h2=" + std::to_string(h2.h2)});

  LieAlgebra s = model.s_algebra();
  auto basis = cocycle_basis(s);
  std::size_t bad = 0;
  for (const auto& c : basis)
    if (!(delta1(s, coboundary_primitive_roots(model, c)) == c)) ++bad;
  out.push_back({"root primitive of s-cocycles", bad == 0,
                 std::to_string(bad) + " of " + std::to_string(basis.size()) + " fail"});

  auto inv = invariant_cocycle_space(model);
  out.push_back({"invariant cocycle space has dim 1", inv.size() == 1, "dim=" + std::to_string(inv.size())});
  bool vanish = true, prim = true;
  for (const auto& c : inv) {
    vanish = vanish && sgn(c(0, 0)) == 0;
    prim = prim && delta1(s, coboundary_primitive_roots(model, c)) == c;
  }
  out.push_back({"invariant cocycles vanish on a x a", vanish, ""});
  out.push_back({"invariant cocycles are exact", prim, ""});
  return out;
}

QmmTable make_qmm(const Su1nModel& model, const Scalar& alpha, bool drop_nu2) {
  QmmOptions o;
  o.include_nu2 = !drop_nu2;
  const int nv = 2 * (model.N() - 1);
  return build_qmm(model, NuSeries::constant(nv, alpha), rational(1, 2), rational(1, 2), o);
}

std::vector<Check> qmm_checks(const QmmTable& table, const Su1nModel& model, QmmScope scope) {
  std::vector<Check> out;
  auto rep = verify_qmm(table, model, scope);
  const auto& g = model.algebra();
  for (const auto& p : rep.pairs)
    out.push_back({"[" + g.label(p.i) + "," + g.label(p.j) + "]", p.ok, summarize(p.residual)});
  return out;
}

std::vector<Check> retract_checks(const Su1nModel& model, int K) {
  std::vector<Check> out;
  const int nv = 2 * (model.N() - 1);
  auto w = check_w_closure(model);
  out.push_back({"W ad_s-stable", w.ad_stable, "dim W=" + std::to_string(w.dim_w)});
  out.push_back({"[W,W] + W = g", w.generates, "dim=" + std::to_string(w.dim_generated)});
  auto ws = check_w_closure(model, model.s());
  out.push_back({"s alone is ad-stable but insufficient", ws.ad_stable && !ws.generates,
                 "dim=" + std::to_string(ws.dim_generated)});

  Matrix gram = kahler_gram(model, 1);
  CoefFn q(nv);
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) q += gram(i, j) * CoefFn::v(nv, i) * CoefFn::v(nv, j);
  const CoefFn z = CoefFn::z(nv);
  std::vector<std::pair<std::string, CoefFn>> radial{
      {"(v|v) z", q * z}, {"e^a", CoefFn::exp_a(nv, 1)}, {"(v|v)^2 + z", q * q + z}};
  for (const auto& [name, f] : radial) {
    auto rep = radial_reduce(make_candidate(NuSeries::exact_value(f), true, model), model);
    out.push_back({"m-residual vanishes for " + name, rep.is_m_invariant, std::to_string(rep.failing.size()) + " failing"});
  }
  auto lone = radial_reduce(make_candidate(NuSeries::exact_value(CoefFn::v(nv, 0)), false, model), model);
  out.push_back({"single coordinate is not m-invariant", !lone.is_m_invariant,
                 std::to_string(lone.failing.size()) + " failing"});

  auto table = make_qmm(model, 1, false);
  auto labels = k_generator_labels(model);
  KernelCandidate one{NuSeries::constant(nv, 1), true};
  for (const auto& l : labels) {
    auto r = residual(k_generator(model, l), one, table, model, K);
    out.push_back({"D_" + l + " annihilates constants", r.is_zero(), summarize(r)});
  }
  // [D_X, D_Y] f = D_[X,Y] f on a probe function.
  NuSeries probe = NuSeries::exact_value(q * z + CoefFn::exp_a(nv, 1) * CoefFn::v(nv, 0) + z * z);
  const auto& g = model.algebra();
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = a + 1; b < labels.size(); ++b) {
      Vec x = k_generator(model, labels[a]), y = k_generator(model, labels[b]);
      auto dx = retract_operator(x, table, model, K);
      auto dy = retract_operator(y, table, model, K);
      auto dxy = retract_operator(g.bracket(x, y), table, model, K);
      NuSeries lhs = (dx(dy(probe)) - dy(dx(probe))).truncated(K);
      NuSeries rhs = dxy(probe).truncated(K);
      NuSeries diff = (lhs - rhs).truncated(K);
      out.push_back({"[D_" + labels[a] + ",D_" + labels[b] + "] = D_[X,Y]", diff.is_zero(), summarize(diff)});
    }
  return out;
}

Scalar parse_rational_opt(const std::string& s) { return parse_scalar(s); }

struct Global {
  bool timing = false;
  std::string report_path;
};

void emit_report(RunReport& rep, const Global& gl, Clock::time_point t0, std::ostream& out, bool to_stdout) {
  if (gl.timing) rep.timing_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  if (to_stdout) out << io::dump(rep.to_json());
  if (!gl.report_path.empty()) write_output(gl.report_path, io::dump(rep.to_json()), out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact algebra toolkit for su(1,N) star products", "lieq"};
  app.require_subcommand(1);
  Global gl;
  app.add_flag("--timing", gl.timing, "Add wall-clock timing to reports");
  app.add_option("--report", gl.report_path, "Also write the run report to this file");

  std::string spec_path, out_path, algebra_path, suite, mutate, label, candidate_path, alpha_s = "1", scope_s = "full";
  int N = 2, K = -1;
  std::size_t samples = 100;
  std::uint64_t seed = 1;

  auto* build = app.add_subcommand("build-psd", "Build an algebra from a decomposition spec");
  build->add_option("spec", spec_path, "Spec JSON")->required();
  build->add_option("--out", out_path, "Output file (default stdout)");

  auto* su1n = app.add_subcommand("su1n-export", "Export the su(1,N) model");
  su1n->add_option("--N", N, "N >= 1")->required();
  su1n->add_option("--out", out_path, "Output file (default stdout)");

  auto* h2 = app.add_subcommand("h2", "Print dim H^2 of an algebra");
  h2->add_option("algebra", algebra_path, "Algebra JSON")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "su1n | qmm | retract | cocycle")->required();
  verify->add_option("--N", N, "N >= 1");
  verify->add_option("--alpha", alpha_s, "Rational constant alpha");
  verify->add_option("--mutate", mutate, "drop-nu2 | shift-n | shift-a");
  verify->add_option("--scope", scope_s, "full | iwasawa");
  verify->add_option("--K", K, "Truncation order");
  verify->add_option("--spec", spec_path, "Decomposition spec for the cocycle suite");
  verify->add_option("--samples", samples, "Random cochains for the cocycle suite");
  verify->add_option("--seed", seed, "Sampling seed");

  auto* rr = app.add_subcommand("retract-residual", "Residual of a kernel candidate");
  rr->add_option("--N", N, "N >= 2")->required();
  rr->add_option("--X", label, "k generator label")->required();
  rr->add_option("--candidate", candidate_path, "Candidate JSON")->required();
  rr->add_option("--K", K, "Truncation order");

  auto* qe = app.add_subcommand("qmm-export", "Export the quantum moment map table");
  qe->add_option("--N", N, "N >= 1")->required();
  qe->add_option("--alpha", alpha_s, "Rational constant alpha");
  qe->add_option("--mutate", mutate, "drop-nu2");
  qe->add_option("--out", out_path, "Output file (default stdout)");

  std::vector<std::string> argv_s{"lieq"};
  argv_s.insert(argv_s.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_s) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "lieq: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto t0 = Clock::now();
  try {
    if (K < 0) K = truncation_order();
    RunReport rep;
    if (*build) {
      rep.command = "build-psd";
      const std::string text = read_text(spec_path);
      rep.digest_source = text;
      PsdSpec spec = io::parse_psd_spec(parse_text(text, spec_path));
      StructureTable t = psd_table(spec);
      auto jr = check_jacobi(t);
      rep.checks.push_back({"jacobi", jr.ok, jr.ok ? "0" : "violated at " + format_triple(t, jr.worst_triple)});
      if (!jr.ok) {
        err << "lieq: Jacobi identity fails at " << format_triple(t, jr.worst_triple) << "\n";
        emit_report(rep, gl, t0, out, false);
        return kExitFail;
      }
      write_output(out_path, io::dump(io::psd_json(build_psd(spec))), out);
      emit_report(rep, gl, t0, out, false);
      return kExitOk;
    }
    if (*su1n) {
      if (N < 1) throw InputError("--N must be >= 1");
      rep.command = "su1n-export";
      rep.params = {{"N", N}};
      write_output(out_path, io::dump(io::model_json(Su1nModel(N))), out);
      emit_report(rep, gl, t0, out, false);
      return kExitOk;
    }
    if (*h2) {
      rep.command = "h2";
      const std::string text = read_text(algebra_path);
      rep.digest_source = text;
      StructureTable t = io::parse_table(parse_text(text, algebra_path));
      auto jr = check_jacobi(t);
      rep.checks.push_back({"jacobi", jr.ok, jr.ok ? "0" : "violated at " + format_triple(t, jr.worst_triple)});
      if (!jr.ok) {
        err << "lieq: Jacobi identity fails at " << format_triple(t, jr.worst_triple) << "\n";
        emit_report(rep, gl, t0, out, false);
        return kExitFail;
      }
      auto r = h2_dimension(LieAlgebra(t));
      out << r.h2 << "\n";
      rep.checks.push_back({"cocycles", true, std::to_string(r.cocycles)});
      rep.checks.push_back({"coboundaries", true, std::to_string(r.coboundaries)});
      emit_report(rep, gl, t0, out, false);
      return kExitOk;
    }
    if (*verify) {
      rep.command = "verify " + suite;
      if (N < 1) throw InputError("--N must be >= 1");
      if (suite == "su1n") {
        rep.params = {{"N", N}};
        Su1nModel model(N);
        for (auto* f : {&verify_model_structure, &verify_sigma_brackets, &verify_m_complement})
          for (auto& c : (*f)(model)) rep.checks.push_back(std::move(c));
      } else if (suite == "qmm") {
        Scalar alpha = parse_rational_opt(alpha_s);
        if (scope_s != "full" && scope_s != "iwasawa") throw InputError("--scope must be full or iwasawa");
        if (!mutate.empty() && mutate != "drop-nu2" && mutate != "shift-n" && mutate != "shift-a")
          throw InputError("unknown mutation '" + mutate + "'");
        rep.params = {{"N", N}, {"alpha", format_scalar(alpha)}, {"mutate", mutate}, {"scope", scope_s}};
        Su1nModel model(N);
        QmmTable table = make_qmm(model, alpha, mutate == "drop-nu2");
        if (mutate == "shift-n") {
          if (model.e_indices().empty()) throw InputError("shift-n needs N >= 2");
          table.add_nu_shift(model.e_indices().front(), 1);
        }
        if (mutate == "shift-a") table.add_nu_shift(model.h_index(), 1);
        rep.checks = qmm_checks(table, model, scope_s == "full" ? QmmScope::kFull : QmmScope::kIwasawa);
      } else if (suite == "retract") {
        if (N < 2) throw InputError("the retract suite needs N >= 2");
        rep.params = {{"N", N}, {"K", K}};
        rep.checks = retract_checks(Su1nModel(N), K);
      } else if (suite == "cocycle") {
        rep.params = {{"samples", samples}, {"seed", seed}};
        if (!spec_path.empty()) {
          const std::string text = read_text(spec_path);
          rep.digest_source = text;
          rep.checks = cocycle_checks_psd(build_psd(io::parse_psd_spec(parse_text(text, spec_path))), samples, seed);
        } else {
          rep.params["N"] = N;
          rep.checks = cocycle_checks_su1n(Su1nModel(N));
        }
      } else {
        throw InputError("unknown suite '" + suite + "'");
      }
      emit_report(rep, gl, t0, out, true);
      return rep.ok() ? kExitOk : kExitFail;
    }
    if (*rr) {
      if (N < 2) throw InputError("--N must be >= 2");
      rep.command = "retract-residual";
      rep.params = {{"N", N}, {"X", label}, {"K", K}};
      const std::string text = read_text(candidate_path);
      rep.digest_source = text;
      Su1nModel model(N);
      KernelCandidate cand = io::parse_candidate(parse_text(text, candidate_path));
      cand = make_candidate(cand.value, cand.radial, model);
      auto table = make_qmm(model, 1, false);
      NuSeries r = residual(k_generator(model, label), cand, table, model, K);
      io::Json j = {{"X", label}, {"K", K}, {"leading_order", leading_order(r)}, {"residual", io::series_json(r)}};
      out << io::dump(j);
      rep.checks.push_back({"residual", r.is_zero(), summarize(r)});
      emit_report(rep, gl, t0, out, false);
      return kExitOk;
    }
    if (*qe) {
      if (N < 1) throw InputError("--N must be >= 1");
      if (!mutate.empty() && mutate != "drop-nu2") throw InputError("qmm-export only supports --mutate drop-nu2");
      Scalar alpha = parse_rational_opt(alpha_s);
      rep.command = "qmm-export";
      rep.params = {{"N", N}, {"alpha", format_scalar(alpha)}, {"mutate", mutate}};
      write_output(out_path, io::dump(io::qmm_json(make_qmm(Su1nModel(N), alpha, mutate == "drop-nu2"))), out);
      emit_report(rep, gl, t0, out, false);
      return kExitOk;
    }
  } catch (const JacobiError& e) {
    err << "lieq: " << e.what() << "\n";
    return kExitFail;
  } catch (const InputError& e) {
    err << "lieq: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "lieq: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "lieq: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lieq::cli
