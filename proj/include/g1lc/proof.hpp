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

// Derivations and the proof checker.
//
// Every rule keeps its major formula in the premises, so for a conclusion S
// with major formula F the premises are S plus the minor formula(s) on the
// side the schema prescribes.  Cut is the only rule whose premises are not
// determined by the conclusion; its context split is stored explicitly.

#ifndef G1LC_PROOF_HPP_
#define G1LC_PROOF_HPP_

#include <optional>
#include <string>
#include <vector>

#include "g1lc/sequent.hpp"
#include "g1lc/syntax.hpp"

namespace g1lc {

enum class Rule {
  kInitial,
  kNotL,
  kNotR,
  kOrL,
  kOrR,
  kAndL,
  kAndR,
  kExistsL0,
  kExistsR0,
  kForallL0,
  kForallR0,
  kExistsL1,
  kExistsR1,
  kForallL1,
  kForallR1,
  kCut,
};

const char* rule_name(Rule r);
std::optional<Rule> rule_from_name(const std::string& name);
int rule_arity(Rule r);
// Whether the major formula sits in the antecedent.
bool rule_is_left(Rule r);
// Side of the minor formula(s); differs from the major's side only for
// negation.
bool minor_in_antecedent(Rule r);
bool rule_has_eigenvariable(Rule r);
bool rule_has_witness(Rule r);
bool rule_is_second_order(Rule r);
// Connective the major formula must have; kAtom for Initial and Cut.
Connective rule_connective(Rule r);

struct Instantiation {
  Formula major;
  int index = 0;  // chosen disjunct (R-or) or conjunct (L-and)
  std::optional<Term> term;
  std::optional<Abstract> abstract;
  std::string eigenvariable;
  Formula cut;
  Sequent left_context;   // Gamma => Delta of a cut
  Sequent right_context;  // Pi => Theta of a cut
};

struct ProofTree {
  Sequent conclusion;
  Rule rule = Rule::kInitial;
  Instantiation inst;
  std::vector<ProofTree> premises;

  std::size_t size() const;
  int height() const;
};

enum class ErrorCode {
  kWrongPremise,
  kNotAtomicAxiom,
  kEigenvariableOccursBelow,
  kArityMismatch,
  kCutForbidden,
  kWitnessOutsideFragment,
  kMalformed,
};

const char* error_name(ErrorCode c);

struct Fragment {
  enum class Kind { kFull, kPi1, kBC, kFirstOrder };
  Kind kind = Kind::kFull;
  int n = 0;  // only for kPi1, n >= 1

  static Fragment full() { return {}; }
  static Fragment pi1(int n) { return {Kind::kPi1, n}; }
  static Fragment bc() { return {Kind::kBC, 0}; }
  static Fragment first_order() { return {Kind::kFirstOrder, 0}; }
};

std::string to_string(const Fragment& f);
// Accepts full, pi1:N, bc, first-order.
std::optional<Fragment> parse_fragment(const std::string& text);

// Whether an abstract witness is admissible in the fragment.
bool witness_in_fragment(const Abstract& t, const Fragment& fragment);

struct CheckOptions {
  bool allow_cut = false;
  Fragment fragment;
  Signature signature;
};

struct CheckError {
  ErrorCode code;
  std::vector<int> path;  // premise indices from the root
  std::string message;
};

std::string path_string(const std::vector<int>& path);

struct CheckReport {
  std::vector<CheckError> errors;  // preorder, at most one per node
  bool ok() const { return errors.empty(); }
};

CheckReport check_proof(const ProofTree& p, const CheckOptions& opts = {});

// The premises the schema prescribes for `conclusion` under `inst`, or the
// reason the instance is not well formed.  Side conditions on eigenvariables
// and fragments are checked too.
struct Synthesis {
  std::vector<Sequent> premises;
  std::optional<CheckError> error;
};
Synthesis synthesize_premises(const Sequent& conclusion, Rule rule,
                              const Instantiation& inst,
                              const CheckOptions& opts = {});

// The minor formulas of a node, in premise order.  Empty for Initial and Cut.
std::vector<Formula> minor_formulas(Rule rule, const Instantiation& inst);

// Node builders used by the search and tests.  They compute the premise
// conclusions; callers fill in the subproofs.
ProofTree initial_node(const Sequent& s);

}  // namespace g1lc

#endif  // G1LC_PROOF_HPP_
