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

#include "lieq/psd.hpp"

#include <sstream>

namespace lieq {

namespace {

struct Layout {
  std::vector<std::string> labels;
  std::vector<PsdBlock> blocks;
};

Layout layout(const PsdSpec& spec) {
  if (spec.r < 1) throw InputError("psd: r must be >= 1");
  if (static_cast<int>(spec.n.size()) != spec.r) throw InputError("psd: n must have r entries");
  for (int nj : spec.n)
    if (nj < 1) throw InputError("psd: every n_j must be >= 1");
  Layout out;
  out.blocks.resize(static_cast<std::size_t>(spec.r));
  for (int j = spec.r; j >= 1; --j) {
    PsdBlock& b = out.blocks[static_cast<std::size_t>(j - 1)];
    const int m = spec.n[static_cast<std::size_t>(j - 1)] - 1;
    const std::string js = std::to_string(j);
    b.j = j;
    b.h = out.labels.size();
    out.labels.push_back("H" + js);
    for (int i = 1; i <= m; ++i) {
      b.v.push_back(out.labels.size());
      out.labels.push_back("e" + js + "_" + std::to_string(i));
    }
    for (int i = 1; i <= m; ++i) {
      b.v.push_back(out.labels.size());
      out.labels.push_back("f" + js + "_" + std::to_string(i));
    }
    b.e = out.labels.size();
    out.labels.push_back("E" + js);
    b.omega = Matrix(2 * m, 2 * m);
    for (int i = 0; i < m; ++i) {
      b.omega(i, m + i) = 1;
      b.omega(m + i, i) = -1;
    }
  }
  return out;
}

std::size_t element_index(const PsdBlock& b, const std::string& name) {
  if (name == "H") return b.h;
  if (name == "E") return b.e;
  const std::size_t m = b.v.size() / 2;
  if (name.size() >= 2 && (name[0] == 'e' || name[0] == 'f')) {
    std::size_t i = 0;
    try {
      i = std::stoul(name.substr(1));
    } catch (const std::exception&) {
      throw InputError("psd: bad element name '" + name + "'");
    }
    if (i >= 1 && i <= m) return b.v[(name[0] == 'e' ? 0 : m) + i - 1];
  }
  throw InputError("psd: block " + std::to_string(b.j) + " has no element '" + name + "'");
}

}  // namespace

StructureTable psd_table(const PsdSpec& spec) {
  Layout lay = layout(spec);
  const std::size_t d = lay.labels.size();
  StructureTable t(lay.labels);
  std::map<std::pair<std::size_t, std::size_t>, Vec> br;
  auto acc = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
    auto& v = br[{i, j}];
    if (v.empty()) v.assign(d, Scalar(0));
    v[k] += c;
  };
  for (const auto& b : lay.blocks) {
    for (auto v : b.v) acc(b.h, v, v, 1);
    acc(b.h, b.e, b.e, 2);
    for (std::size_t p = 0; p < b.v.size(); ++p)
      for (std::size_t q = 0; q < b.v.size(); ++q)
        if (sgn(b.omega(p, q)) != 0 && b.v[p] < b.v[q]) acc(b.v[p], b.v[q], b.e, b.omega(p, q));
  }
  for (const auto& ca : spec.cross_actions) {
    if (ca.to < 1 || ca.from > spec.r || ca.to >= ca.from)
      throw InputError("psd: cross action must go from a higher block to a lower one (from > to >= 1)");
    const PsdBlock& src = lay.blocks[static_cast<std::size_t>(ca.from - 1)];
    const PsdBlock& dst = lay.blocks[static_cast<std::size_t>(ca.to - 1)];
    const std::size_t x = element_index(src, ca.element);
    const std::size_t m2 = dst.v.size();
    if (ca.matrix.rows() != m2 || ca.matrix.cols() != m2)
      throw InputError("psd: cross action matrix must be " + std::to_string(m2) + "x" + std::to_string(m2));
    for (std::size_t c = 0; c < m2; ++c)
      for (std::size_t r = 0; r < m2; ++r)
        if (sgn(ca.matrix(r, c)) != 0) acc(x, dst.v[c], dst.v[r], ca.matrix(r, c));
  }
  for (auto& [key, v] : br) {
    Vec cur = t.basis_bracket(key.first, key.second);
    t.set(key.first, key.second, add(cur, v));
  }
  return t;
}

std::vector<std::size_t> PsdAlgebra::higher(int j) const {
  std::vector<std::size_t> out;
  for (int k = j + 1; k <= spec.r; ++k) {
    const PsdBlock& b = block(k);
    out.push_back(b.h);
    out.insert(out.end(), b.v.begin(), b.v.end());
    out.push_back(b.e);
  }
  return out;
}

PsdAlgebra build_psd(const PsdSpec& spec) {
  PsdAlgebra p;
  p.spec = spec;
  p.blocks = layout(spec).blocks;
  p.algebra = LieAlgebra(psd_table(spec));
  return p;
}

IsoReport match_iwasawa(const PsdAlgebra& psd, const Su1nModel& model) {
  IsoReport rep;
  const std::size_t d = psd.algebra.dim();
  const std::size_t ds = model.s().dim();
  if (d != ds) {
    rep.reason = "dimension mismatch: psd has dim " + std::to_string(d) + ", s has dim " + std::to_string(ds);
    return rep;
  }
  if (psd.spec.r != 1) {
    rep.reason = "rank mismatch: psd has " + std::to_string(psd.spec.r) + " blocks, s has 1";
    return rep;
  }
  const PsdBlock& b = psd.block(1);
  rep.map = Matrix(model.dim(), d);
  rep.map(model.h_index(), b.h) = 1;
  rep.map(model.E_index(), b.e) = 1;
  auto es = model.e_indices();
  auto fs = model.f_indices();
  const std::size_t m = es.size();
  for (std::size_t i = 0; i < m; ++i) {
    rep.map(es[i], b.v[i]) = 1;
    rep.map(fs[i], b.v[m + i]) = 1;
  }
  const auto& g = model.algebra();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vec lhs = rep.map.apply(psd.algebra.basis_bracket(i, j));
      Vec rhs = g.bracket(rep.map.col(i), rep.map.col(j));
      if (lhs != rhs) {
        rep.reason = "bracket mismatch on (" + psd.algebra.label(i) + ", " + psd.algebra.label(j) + ")";
        return rep;
      }
    }
  rep.ok = true;
  return rep;
}

}  // namespace lieq
