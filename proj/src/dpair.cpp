// Copyright 2026 The g1lc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>

#include "g1lc/cba.hpp"

namespace g1lc {

DPair d_true(const BoolAlg& alg) { return {alg.one, alg.one}; }
DPair d_false(const BoolAlg& alg) { return {alg.zero, alg.zero}; }
DPair d_unknown(const BoolAlg& alg) { return {alg.zero, alg.one}; }

bool in_d(const BoolAlg& alg, const DPair& a) { return alg.leq(a.box, a.diamond); }

std::vector<DPair> d_elements(const BoolAlg& alg) {
  std::vector<DPair> out;
  for (const auto& b : alg.carrier) {
    for (const auto& d : alg.carrier) {
      if (alg.leq(b, d)) out.push_back({b, d});
    }
  }
  return out;
}

std::string format_dpair(const BoolAlg& alg, const DPair& a, const std::vector<std::string>& names) {
  if (alg.size() == 2 && alg.zero != alg.one) {
    if (a == d_true(alg)) return "t";
    if (a == d_false(alg)) return "f";
    if (a == d_unknown(alg)) return "u";
  }
  return "(" + format_subset(a.box, names) + ", " + format_subset(a.diamond, names) + ")";
}

DPair d_neg(const BoolAlg& alg, const DPair& a) {
  return {alg.complement(a.diamond), alg.complement(a.box)};
}

bool d_leq(const BoolAlg& alg, const DPair& a, const DPair& b) {
  return alg.leq(a.box, b.box) && alg.leq(a.diamond, b.diamond);
}

bool d_tri(const BoolAlg& alg, const DPair& a, const DPair& b) {
  return alg.leq(a.box, b.box) && alg.leq(b.diamond, a.diamond);
}

namespace {

std::vector<Subset> boxes(const std::vector<DPair>& fam) {
  std::vector<Subset> out;
  for (const auto& p : fam) out.push_back(p.box);
  return out;
}

std::vector<Subset> diamonds(const std::vector<DPair>& fam) {
  std::vector<Subset> out;
  for (const auto& p : fam) out.push_back(p.diamond);
  return out;
}

}  // namespace

DPair d_sup_leq(const BoolAlg& alg, const std::vector<DPair>& family) {
  return {alg.sup(boxes(family)), alg.sup(diamonds(family))};
}

DPair d_inf_leq(const BoolAlg& alg, const std::vector<DPair>& family) {
  return {alg.inf(boxes(family)), alg.inf(diamonds(family))};
}

RawPair d_sup_tri(const BoolAlg& alg, const std::vector<DPair>& family) {
  DPair p{alg.sup(boxes(family)), alg.inf(diamonds(family))};
  return {p, in_d(alg, p)};
}

RawPair d_inf_tri(const BoolAlg& alg, const std::vector<DPair>& family) {
  DPair p{alg.inf(boxes(family)), alg.sup(diamonds(family))};
  return {p, in_d(alg, p)};
}

bool monotone_neg(const BoolAlg& alg, const DPair& a, const DPair& b) {
  return !d_tri(alg, a, b) || d_tri(alg, d_neg(alg, a), d_neg(alg, b));
}

bool monotone_families(const BoolAlg& alg, const std::vector<DPair>& as,
                       const std::vector<DPair>& bs) {
  bool every_b_covered = std::all_of(bs.begin(), bs.end(), [&](const DPair& b) {
    return std::any_of(as.begin(), as.end(), [&](const DPair& a) { return d_tri(alg, a, b); });
  });
  bool every_a_covered = std::all_of(as.begin(), as.end(), [&](const DPair& a) {
    return std::any_of(bs.begin(), bs.end(), [&](const DPair& b) { return d_tri(alg, a, b); });
  });
  if (!every_b_covered || !every_a_covered) return true;
  return d_tri(alg, d_sup_leq(alg, as), d_sup_leq(alg, bs)) &&
         d_tri(alg, d_inf_leq(alg, as), d_inf_leq(alg, bs));
}

}  // namespace g1lc
