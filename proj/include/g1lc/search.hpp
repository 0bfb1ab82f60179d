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

// Cut-free proof search over finite witness pools.
//
// Each branch keeps a FIFO agenda of (formula, side, witness index) tasks.
// Propositional and eigenvariable tasks run once; a witness task tries the
// next pool entry and goes to the back of the agenda, or waits until a new
// eigenvariable enlarges the pool.  A branch closes on an atomic formula
// occurring on both sides and is saturated when its agenda is empty.

#ifndef G1LC_SEARCH_HPP_
#define G1LC_SEARCH_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <optional>
#include <vector>

#include "g1lc/mints.hpp"
#include "g1lc/proof.hpp"
#include "g1lc/semival.hpp"
#include "g1lc/sequent.hpp"

namespace g1lc {

struct SearchConfig {
  // Extra witnesses; with default_pools the end-sequent's free variables and
  // closed terms, its free second-order variables and relation constants,
  // and abstracts formed from its subformulas are added.
  std::vector<Term> term_pool;
  std::map<int, std::vector<Abstract>> abstract_pool;
  bool default_pools = true;
  std::size_t node_budget = 100000;
  int depth_budget = 2000;
  Fragment fragment;
  Signature signature;
  // Never chosen for eigenvariables or fresh constants.
  std::set<std::string> reserved_names;
};

// The open leaf of a saturated branch together with the pools it was
// saturated against.  Formulas are never removed along a branch, so the
// leaf's cedents are every formula that occurred on that side.
struct Branch {
  std::vector<Formula> antecedent;
  std::vector<Formula> succedent;
  std::vector<Term> terms;
  std::map<int, std::vector<Abstract>> abstracts;
};

struct SearchOutcome {
  enum class Kind { kProved, kRefuted, kExhausted };
  Kind kind = Kind::kExhausted;
  std::optional<ProofTree> proof;
  std::optional<Branch> branch;
  std::size_t nodes = 0;
};

const char* to_string(SearchOutcome::Kind k);

SearchOutcome canonical_search(const Sequent& s, const SearchConfig& cfg = {});

// t on the antecedent, f on the succedent, (0, 1) elsewhere, over the
// closure of the branch formulas under the branch pools.
SemiValuation branch_to_semival(const Branch& b, std::size_t limit = 100000);

// Throws std::invalid_argument for a sequent with a quantifier.
bool decide_cut_free(const Sequent& s);

// Total on quantifier-free sequents; unknown otherwise.
ProvabilityOracle propositional_oracle();
// Provable on Proved, unprovable on Refuted, unknown on Exhausted.
ProvabilityOracle search_oracle(const SearchConfig& cfg);

struct HauptsatzResult {
  bool ok = false;  // a cut-free proof was found
  std::optional<ProofTree> proof;
  std::size_t nodes = 0;
  std::string message;
};

// Throws std::invalid_argument when p does not check with cut allowed.
HauptsatzResult hauptsatz_pipeline(const ProofTree& p, const SearchConfig& cfg = {});

}  // namespace g1lc

#endif  // G1LC_SEARCH_HPP_
