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

// Semi-valuations over finite formula universes.

#ifndef G1LC_SEMIVAL_HPP_
#define G1LC_SEMIVAL_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "g1lc/cba.hpp"
#include "g1lc/sequent.hpp"
#include "g1lc/syntax.hpp"

namespace g1lc {

// A finite formula set closed under immediate subformulas of the
// propositional connectives and under instantiation of every quantifier with
// every pool witness of the right kind.  The pools stand in for all terms and
// all abstracts.
class FormulaUniverse {
 public:
  FormulaUniverse() = default;

  // Closes `seeds`.  Throws std::length_error past `limit` formulas.
  static FormulaUniverse close(const std::vector<Formula>& seeds, std::vector<Term> terms,
                               std::map<int, std::vector<Abstract>> abstracts,
                               std::size_t limit = 100000);

  const std::vector<Formula>& formulas() const { return formulas_; }  // sorted
  const std::vector<Term>& terms() const { return terms_; }
  const std::map<int, std::vector<Abstract>>& abstracts() const { return abstracts_; }
  // Empty vector for an arity without witnesses.
  const std::vector<Abstract>& abstracts(int arity) const;

  bool contains(const Formula& f) const { return index_.count(f) > 0; }
  std::size_t size() const { return formulas_.size(); }
  bool is_propositional() const;

 private:
  std::vector<Formula> formulas_;
  std::unordered_map<Formula, std::size_t, FormulaHash> index_;
  std::vector<Term> terms_;
  std::map<int, std::vector<Abstract>> abstracts_;
};

// Subformula universe of a quantifier-free formula list.
FormulaUniverse propositional_universe(const std::vector<Formula>& seeds);

// Formulas without a table entry have the value (0, 1).
struct SemiValuation {
  BoolAlg algebra;
  std::unordered_map<Formula, DPair, FormulaHash> table;
  FormulaUniverse universe;

  DPair value(const Formula& f) const;
  void set(const Formula& f, const DPair& v) { table[f] = v; }
};

// Everywhere (0, 1) over the universe.
SemiValuation unknown_valuation(const BoolAlg& alg, FormulaUniverse universe);

struct SemivalEntry {
  std::string condition;  // not, or, and, exists0, forall0, exists1, forall1
  Formula formula;
  DPair lhs;
  DPair rhs;
  bool ok = true;
};

struct SemivalReport {
  std::vector<SemivalEntry> entries;
  bool ok() const;
  std::vector<SemivalEntry> failures() const;
};

// One entry per compound universe formula: V(F) <| (the clause for F).
SemivalReport check_semival(const SemiValuation& v);

// inf{box V(A) : A in antecedent} <= sup{diamond V(B) : B in succedent}.
// Throws std::invalid_argument for a formula outside the universe.
bool soundness_check(const Sequent& s, const SemiValuation& v);

// Every semi-valuation into the pair algebra over the two-element algebra on
// a universe, in a fixed order.  Stops after `limit` results.
std::vector<SemiValuation> enumerate_two_valued(const FormulaUniverse& u,
                                                std::size_t limit = 1000000);

std::string format_semival(const SemiValuation& v, const Signature& sig = {});

}  // namespace g1lc

#endif  // G1LC_SEMIVAL_HPP_
