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

#ifndef LIEQ_PSD_HPP_
#define LIEQ_PSD_HPP_

#include <string>
#include <vector>

#include "lieq/lie_algebra.hpp"
#include "lieq/su1n_model.hpp"

namespace lieq {

// An element of block `from` acts on V_to (to < from) by `matrix`, written in
// the V_to basis e_1..e_m, f_1..f_m acting on column vectors.
struct CrossAction {
  int from = 0;
  std::string element;  // "H", "E", "e<i>" or "f<i>" (1-based) inside block `from`
  int to = 0;
  Matrix matrix;
};

// Blocks are numbered 1..r; block j has dim V_j = 2(n_j - 1).
struct PsdSpec {
  int r = 0;
  std::vector<int> n;
  std::vector<CrossAction> cross_actions;
};

struct PsdBlock {
  int j = 0;
  std::size_t h = 0;
  std::vector<std::size_t> v;  // e_1..e_m, f_1..f_m
  std::size_t e = 0;           // E_j
  Matrix omega;                // standard [[0, I], [-I, 0]]
};

struct PsdAlgebra {
  PsdSpec spec;
  LieAlgebra algebra;
  std::vector<PsdBlock> blocks;  // blocks[j - 1]

  const PsdBlock& block(int j) const { return blocks.at(static_cast<std::size_t>(j - 1)); }
  // Indices of blocks k > j, i.e. the elements acting on V_j.
  std::vector<std::size_t> higher(int j) const;
};

// Basis order: H_r, V_r, E_r, ..., H_1, V_1, E_1. Throws InputError on a bad
// spec and JacobiError (naming a triple) when the cross actions are not a
// representation.
PsdAlgebra build_psd(const PsdSpec& spec);
StructureTable psd_table(const PsdSpec& spec);

struct IsoReport {
  bool ok = false;
  std::string reason;
  Matrix map;  // column i: image of psd basis vector i in model coordinates
};

// Identifies psd(1, [N]) with the Iwasawa subalgebra s of su(1,N):
// H -> H, e_i -> e_i, f_i -> f_i, E -> E.
IsoReport match_iwasawa(const PsdAlgebra& psd, const Su1nModel& model);

}  // namespace lieq

#endif  // LIEQ_PSD_HPP_
