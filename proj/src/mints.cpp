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

#include "g1lc/mints.hpp"

#include <map>
#include <stdexcept>

#include "g1lc/parser.hpp"

namespace g1lc {

const char* to_string(Tri t) {
  switch (t) {
    case Tri::kFalse: return "false";
    case Tri::kTrue: return "true";
    case Tri::kUnknown: return "unknown";
  }
  return "?";
}

Tri is_reducible(const ProofTree& node, const ProvabilityOracle& oracle) {
  if (node.rule == Rule::kInitial || node.rule == Rule::kCut) {
    throw std::invalid_argument("is_reducible: the inference has no minor formula");
  }
  bool left = minor_in_antecedent(node.rule);
  bool unknown = false;
  for (const auto& a : minor_formulas(node.rule, node.inst)) {
    Sequent probe = left ? Sequent({}, {a}) : Sequent({a}, {});
    Provability v = oracle(probe);
    if (v == Provability::kProvable) return Tri::kTrue;
    if (v == Provability::kUnknown) unknown = true;
  }
  return unknown ? Tri::kUnknown : Tri::kFalse;
}

namespace {

std::set<std::string> variables_of(const Sequent& s) {
  std::set<std::string> out = free_first_order_variables(s);
  for (const auto& [name, arity] : free_second_order_variables(s)) out.insert(name);
  return out;
}

struct VariableScan {
  std::map<std::string, int> eigen_uses;
  // Variables seen in a sequent that is neither the end-sequent nor above an
  // inference using them as eigenvariable.
  std::set<std::string> stray;
};

// `above` holds eigenvariables of the inferences strictly below p.
void scan(const ProofTree& p, const std::set<std::string>& end_vars, bool is_root,
          std::set<std::string>& above, VariableScan& out) {
  if (!is_root) {
    for (const auto& v : variables_of(p.conclusion)) {
      if (!above.count(v) && !end_vars.count(v)) out.stray.insert(v);
    }
  }
  std::string eigen;
  if (rule_has_eigenvariable(p.rule)) {
    eigen = p.inst.eigenvariable;
    out.eigen_uses[eigen] += 1;
  }
  bool pushed = !eigen.empty() && above.insert(eigen).second;
  for (const auto& q : p.premises) scan(q, end_vars, false, above, out);
  if (pushed) above.erase(eigen);
}

}  // namespace

bool pure_variable(const ProofTree& p) {
  std::set<std::string> end_vars = variables_of(p.conclusion);
  std::set<std::string> above;
  VariableScan result;
  scan(p, end_vars, true, above, result);
  if (!result.stray.empty()) return false;
  for (const auto& [v, uses] : result.eigen_uses) {
    if (uses > 1 || end_vars.count(v)) return false;
  }
  return true;
}

bool is_cut_free(const ProofTree& p) {
  if (p.rule == Rule::kCut) return false;
  for (const auto& q : p.premises) {
    if (!is_cut_free(q)) return false;
  }
  return true;
}

namespace {

Tri any_reducible(const ProofTree& p, const ProvabilityOracle& oracle) {
  bool unknown = false;
  if (p.rule != Rule::kInitial && p.rule != Rule::kCut) {
    Tri r = is_reducible(p, oracle);
    if (r == Tri::kTrue) return Tri::kTrue;
    if (r == Tri::kUnknown) unknown = true;
  }
  for (const auto& q : p.premises) {
    Tri r = any_reducible(q, oracle);
    if (r == Tri::kTrue) return Tri::kTrue;
    if (r == Tri::kUnknown) unknown = true;
  }
  return unknown ? Tri::kUnknown : Tri::kFalse;
}

}  // namespace

Tri is_mints_normal(const ProofTree& p, const ProvabilityOracle& oracle) {
  if (!is_cut_free(p) || !pure_variable(p)) return Tri::kFalse;
  switch (any_reducible(p, oracle)) {
    case Tri::kTrue: return Tri::kFalse;
    case Tri::kFalse: return Tri::kTrue;
    case Tri::kUnknown: return Tri::kUnknown;
  }
  return Tri::kUnknown;
}

ProofTree mints_example() {
  ParseContext ctx;
  Formula all = parse_formula("ALL X:0. X > X", ctx);
  Formula p = parse_formula("P", ctx);
  Abstract a = parse_abstract("\\. P | ~P", ctx);
  Formula a_body = a.body();
  Formula imp = instantiate(all, a);  // ~A | A

  ProofTree root;
  root.conclusion = Sequent({all, p}, {p});
  root.rule = Rule::kForallL1;
  root.inst.major = all;
  root.inst.abstract = a;

  ProofTree split;
  split.conclusion = root.conclusion.add_antecedent(imp);
  split.rule = Rule::kOrL;
  split.inst.major = imp;

  ProofTree neg;
  neg.conclusion = split.conclusion.add_antecedent(imp.left());
  neg.rule = Rule::kNotL;
  neg.inst.major = imp.left();
  neg.premises.push_back(initial_node(neg.conclusion.add_succedent(a_body)));

  split.premises.push_back(std::move(neg));
  split.premises.push_back(initial_node(split.conclusion.add_antecedent(a_body)));
  root.premises.push_back(std::move(split));
  return root;
}

}  // namespace g1lc
