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

#include "g1lc/semival.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

#include "g1lc/parser.hpp"

namespace g1lc {

namespace {

// The formulas a compound formula's clause refers to.
std::vector<Formula> parts(const Formula& f, const FormulaUniverse& u) {
  switch (f.kind()) {
    case Connective::kAtom:
      return {};
    case Connective::kNot:
      return {f.operand()};
    case Connective::kOr:
    case Connective::kAnd:
      return {f.left(), f.right()};
    case Connective::kExists0:
    case Connective::kForall0: {
      std::vector<Formula> out;
      for (const auto& t : u.terms()) out.push_back(instantiate(f, t));
      return out;
    }
    default: {
      std::vector<Formula> out;
      for (const auto& t : u.abstracts(f.arity())) out.push_back(instantiate(f, t));
      return out;
    }
  }
}

// Same as parts() but before the universe exists.
std::vector<Formula> raw_parts(const Formula& f, const std::vector<Term>& terms,
                               const std::map<int, std::vector<Abstract>>& abstracts) {
  switch (f.kind()) {
    case Connective::kAtom:
      return {};
    case Connective::kNot:
      return {f.operand()};
    case Connective::kOr:
    case Connective::kAnd:
      return {f.left(), f.right()};
    case Connective::kExists0:
    case Connective::kForall0: {
      std::vector<Formula> out;
      for (const auto& t : terms) out.push_back(instantiate(f, t));
      return out;
    }
    default: {
      std::vector<Formula> out;
      auto it = abstracts.find(f.arity());
      if (it == abstracts.end()) return out;
      for (const auto& t : it->second) out.push_back(instantiate(f, t));
      return out;
    }
  }
}

const char* condition_name(Connective c) {
  switch (c) {
    case Connective::kNot: return "not";
    case Connective::kOr: return "or";
    case Connective::kAnd: return "and";
    case Connective::kExists0: return "exists0";
    case Connective::kForall0: return "forall0";
    case Connective::kExists1: return "exists1";
    case Connective::kForall1: return "forall1";
    default: return "atom";
  }
}

// The right-hand side of the clause for f given the values of its parts.
DPair clause(const BoolAlg& alg, Connective c, const std::vector<DPair>& values) {
  switch (c) {
    case Connective::kNot:
      return d_neg(alg, values.front());
    case Connective::kOr:
    case Connective::kExists0:
    case Connective::kExists1:
      return d_sup_leq(alg, values);
    default:
      return d_inf_leq(alg, values);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// FormulaUniverse

FormulaUniverse FormulaUniverse::close(const std::vector<Formula>& seeds, std::vector<Term> terms,
                                       std::map<int, std::vector<Abstract>> abstracts,
                                       std::size_t limit) {
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  for (auto& [arity, pool] : abstracts) {
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  }
  FormulaUniverse u;
  std::deque<Formula> work(seeds.begin(), seeds.end());
  std::unordered_map<Formula, std::size_t, FormulaHash> seen;
  std::vector<Formula> all;
  while (!work.empty()) {
    Formula f = work.front();
    work.pop_front();
    if (seen.count(f)) continue;
    if (!is_locally_closed(f)) throw std::invalid_argument("universe formula is not closed");
    seen.emplace(f, all.size());
    all.push_back(f);
    if (all.size() > limit) throw std::length_error("formula universe exceeds its limit");
    for (auto& p : raw_parts(f, terms, abstracts)) work.push_back(std::move(p));
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) u.index_.emplace(all[i], i);
  u.formulas_ = std::move(all);
  u.terms_ = std::move(terms);
  u.abstracts_ = std::move(abstracts);
  return u;
}

const std::vector<Abstract>& FormulaUniverse::abstracts(int arity) const {
  static const std::vector<Abstract> kEmpty;
  auto it = abstracts_.find(arity);
  return it == abstracts_.end() ? kEmpty : it->second;
}

bool FormulaUniverse::is_propositional() const {
  return std::none_of(formulas_.begin(), formulas_.end(),
                      [](const Formula& f) { return has_quantifier(f); });
}

FormulaUniverse propositional_universe(const std::vector<Formula>& seeds) {
  for (const auto& f : seeds) {
    if (has_quantifier(f)) throw std::invalid_argument("formula has a quantifier");
  }
  return FormulaUniverse::close(seeds, {}, {});
}

// ---------------------------------------------------------------------------
// SemiValuation

DPair SemiValuation::value(const Formula& f) const {
  auto it = table.find(f);
  return it == table.end() ? d_unknown(algebra) : it->second;
}

SemiValuation unknown_valuation(const BoolAlg& alg, FormulaUniverse universe) {
  SemiValuation v;
  v.algebra = alg;
  v.universe = std::move(universe);
  return v;
}

bool SemivalReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const SemivalEntry& e) { return e.ok; });
}

std::vector<SemivalEntry> SemivalReport::failures() const {
  std::vector<SemivalEntry> out;
  for (const auto& e : entries) {
    if (!e.ok) out.push_back(e);
  }
  return out;
}

SemivalReport check_semival(const SemiValuation& v) {
  SemivalReport report;
  for (const auto& f : v.universe.formulas()) {
    if (f.is_atomic()) continue;
    std::vector<DPair> values;
    for (const auto& p : parts(f, v.universe)) values.push_back(v.value(p));
    SemivalEntry e;
    e.condition = condition_name(f.kind());
    e.formula = f;
    e.lhs = v.value(f);
    e.rhs = clause(v.algebra, f.kind(), values);
    e.ok = d_tri(v.algebra, e.lhs, e.rhs);
    report.entries.push_back(std::move(e));
  }
  return report;
}

bool soundness_check(const Sequent& s, const SemiValuation& v) {
  std::vector<Subset> boxes;
  std::vector<Subset> diamonds;
  for (const auto& a : s.antecedent()) {
    if (!v.universe.contains(a)) throw std::invalid_argument("formula outside the universe");
    boxes.push_back(v.value(a).box);
  }
  for (const auto& b : s.succedent()) {
    if (!v.universe.contains(b)) throw std::invalid_argument("formula outside the universe");
    diamonds.push_back(v.value(b).diamond);
  }
  return v.algebra.leq(v.algebra.inf(boxes), v.algebra.sup(diamonds));
}

std::vector<SemiValuation> enumerate_two_valued(const FormulaUniverse& u, std::size_t limit) {
  BoolAlg alg = BoolAlg::two();
  const std::vector<DPair> values = {d_false(alg), d_unknown(alg), d_true(alg)};
  const auto& fs = u.formulas();
  const std::size_t n = fs.size();
  std::unordered_map<Formula, std::size_t, FormulaHash> pos;
  for (std::size_t i = 0; i < n; ++i) pos.emplace(fs[i], i);

  // Each compound formula's condition is checked once all its formulas are
  // assigned, i.e. at the largest position among itself and its parts.
  std::vector<std::vector<std::size_t>> checks_at(n);
  std::vector<std::vector<std::size_t>> part_pos(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (fs[i].is_atomic()) continue;
    std::size_t last = i;
    for (const auto& p : parts(fs[i], u)) {
      std::size_t j = pos.at(p);
      part_pos[i].push_back(j);
      last = std::max(last, j);
    }
    checks_at[last].push_back(i);
  }

  std::vector<SemiValuation> out;
  std::vector<int> choice(n, 0);
  auto holds = [&](std::size_t i) {
    std::vector<DPair> vals;
    for (std::size_t j : part_pos[i]) vals.push_back(values[choice[j]]);
    return d_tri(alg, values[choice[i]], clause(alg, fs[i].kind(), vals));
  };
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (out.size() >= limit) return;
    if (k == n) {
      SemiValuation v = unknown_valuation(alg, u);
      for (std::size_t i = 0; i < n; ++i) v.set(fs[i], values[choice[i]]);
      out.push_back(std::move(v));
      return;
    }
    for (int c = 0; c < 3; ++c) {
      choice[k] = c;
      bool ok = std::all_of(checks_at[k].begin(), checks_at[k].end(), holds);
      if (ok) rec(k + 1);
    }
  };
  rec(0);
  return out;
}

std::string format_semival(const SemiValuation& v, const Signature& sig) {
  std::string out;
  for (const auto& f : v.universe.formulas()) {
    out += format_dpair(v.algebra, v.value(f)) + "\t" + to_string(f, sig) + "\n";
  }
  return out;
}

}  // namespace g1lc
