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

#include "g1lc/maehara.hpp"

#include <algorithm>
#include <cstdint>

namespace g1lc {

SequentUniverse::SequentUniverse(const std::vector<Formula>& formulas, ProvabilityOracle oracle,
                                 std::size_t max_formulas)
    : oracle_(std::move(oracle)) {
  for (const auto& f : formulas) {
    if (has_quantifier(f)) {
      throw std::invalid_argument(
          "quantified formulas are refused: cut-free provability is only decided for "
          "quantifier-free sequents");
    }
  }
  formulas_ = propositional_universe(formulas).formulas();
  if (formulas_.size() > max_formulas) {
    throw std::invalid_argument("sequent universe over " + std::to_string(formulas_.size()) +
                                " formulas exceeds the limit of " +
                                std::to_string(max_formulas));
  }
  memo_.assign(size(), -1);
}

Sequent SequentUniverse::sequent(std::size_t point) const {
  const std::size_t k = formulas_.size();
  std::vector<Formula> ant;
  std::vector<Formula> suc;
  for (std::size_t i = 0; i < k; ++i) {
    if (point >> i & 1) ant.push_back(formulas_[i]);
    if (point >> (k + i) & 1) suc.push_back(formulas_[i]);
  }
  return Sequent(std::move(ant), std::move(suc));
}

std::size_t SequentUniverse::point(const Sequent& s) const {
  const std::size_t k = formulas_.size();
  auto bit = [&](const Formula& f) {
    auto it = std::lower_bound(formulas_.begin(), formulas_.end(), f);
    if (it == formulas_.end() || !(*it == f)) {
      throw std::invalid_argument("formula outside the sequent universe");
    }
    return static_cast<std::size_t>(it - formulas_.begin());
  };
  std::size_t p = 0;
  for (const auto& a : s.antecedent()) p |= std::size_t{1} << bit(a);
  for (const auto& b : s.succedent()) p |= std::size_t{1} << (k + bit(b));
  return p;
}

bool SequentUniverse::provable(std::size_t point) const {
  signed char& m = memo_.at(point);
  if (m < 0) {
    Provability p = oracle_(sequent(point));
    if (p == Provability::kUnknown) {
      throw OracleFailure("oracle could not decide " + to_string(sequent(point)));
    }
    m = p == Provability::kProvable ? 1 : 0;
  }
  return m == 1;
}

RelationMap maehara_relation(const SequentUniverse& su) {
  RelationMap rm;
  const std::size_t n = su.size();
  for (std::size_t i = 0; i < n; ++i) rm.names.push_back("[" + to_string(su.sequent(i)) + "]");
  rm.m.assign(n, Subset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (su.provable(su.merge(i, j))) rm.m[i].set(j);
    }
  }
  return rm;
}

Subset maehara_M(const SequentUniverse& su, const Sequent& s) {
  const std::size_t n = su.size();
  const std::size_t x = su.point(s);
  Subset out(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (su.provable(su.merge(x, j))) out.set(j);
  }
  return out;
}

MaeharaValuation maehara_valuation(const SequentUniverse& su) {
  RelationMap rm = maehara_relation(su);
  RelationCBA cba = build_relation_cba(rm);
  SemiValuation v = unknown_valuation(cba.alg, propositional_universe(su.formulas()));
  for (const auto& a : su.formulas()) {
    Subset diamond = cba.base.m[su.point(Sequent({}, {a}))];
    Subset box = little_m(cba.base, su.point(Sequent({a}, {})));
    v.set(a, {box, diamond});
  }
  return {std::move(cba), std::move(v)};
}

namespace {

void collect_atoms(const Formula& f, std::vector<Formula>& out) {
  switch (f.kind()) {
    case Connective::kAtom:
      if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
      return;
    case Connective::kNot:
      collect_atoms(f.operand(), out);
      return;
    case Connective::kOr:
    case Connective::kAnd:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
      return;
    default:
      throw std::invalid_argument("formula has a quantifier");
  }
}

bool truth(const Formula& f, const std::vector<Formula>& atoms, std::uint64_t row) {
  switch (f.kind()) {
    case Connective::kAtom:
      return row >> (std::find(atoms.begin(), atoms.end(), f) - atoms.begin()) & 1;
    case Connective::kNot:
      return !truth(f.operand(), atoms, row);
    case Connective::kOr:
      return truth(f.left(), atoms, row) || truth(f.right(), atoms, row);
    default:
      return truth(f.left(), atoms, row) && truth(f.right(), atoms, row);
  }
}

}  // namespace

bool classically_valid(const Sequent& s) {
  std::vector<Formula> atoms;
  for (const auto& f : s.formulas()) collect_atoms(f, atoms);
  if (atoms.size() > 24) throw std::invalid_argument("too many atoms for a truth table");
  for (std::uint64_t row = 0; row < (std::uint64_t{1} << atoms.size()); ++row) {
    bool ant = std::all_of(s.antecedent().begin(), s.antecedent().end(),
                           [&](const Formula& f) { return truth(f, atoms, row); });
    bool suc = std::any_of(s.succedent().begin(), s.succedent().end(),
                           [&](const Formula& f) { return truth(f, atoms, row); });
    if (ant && !suc) return false;
  }
  return true;
}

Endgame maehara_endgame(const SequentUniverse& su, const MaeharaValuation& mv, const Sequent& s) {
  const BoolAlg& alg = mv.cba.alg;
  std::vector<Subset> boxes;
  std::vector<Subset> diamonds;
  for (const auto& a : s.antecedent()) boxes.push_back(mv.valuation.value(a).box);
  for (const auto& b : s.succedent()) diamonds.push_back(mv.valuation.value(b).diamond);
  Subset inf_box = alg.inf(boxes);
  Subset sup_diamond = alg.sup(diamonds);
  Endgame e;
  e.inequality = alg.leq(inf_box, sup_diamond);
  e.antecedent_in_box = inf_box.test(su.point(Sequent(s.antecedent(), {})));
  e.sup_in_m = sup_diamond.is_subset_of(mv.cba.base.m[su.point(Sequent({}, s.succedent()))]);
  e.oracle_proves = su.provable(su.point(s));
  return e;
}

}  // namespace g1lc
