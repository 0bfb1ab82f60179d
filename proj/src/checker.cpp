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
#include <cctype>
#include <functional>

#include "g1lc/fragments.hpp"
#include "g1lc/proof.hpp"

namespace g1lc {

namespace {

struct RuleInfo {
  Rule rule;
  const char* name;
  int arity;
  bool left;
  Connective connective;
};

constexpr RuleInfo kRules[] = {
    {Rule::kInitial, "Initial", 0, false, Connective::kAtom},
    {Rule::kNotL, "NotL", 1, true, Connective::kNot},
    {Rule::kNotR, "NotR", 1, false, Connective::kNot},
    {Rule::kOrL, "OrL", 2, true, Connective::kOr},
    {Rule::kOrR, "OrR", 1, false, Connective::kOr},
    {Rule::kAndL, "AndL", 1, true, Connective::kAnd},
    {Rule::kAndR, "AndR", 2, false, Connective::kAnd},
    {Rule::kExistsL0, "ExistsL0", 1, true, Connective::kExists0},
    {Rule::kExistsR0, "ExistsR0", 1, false, Connective::kExists0},
    {Rule::kForallL0, "ForallL0", 1, true, Connective::kForall0},
    {Rule::kForallR0, "ForallR0", 1, false, Connective::kForall0},
    {Rule::kExistsL1, "ExistsL1", 1, true, Connective::kExists1},
    {Rule::kExistsR1, "ExistsR1", 1, false, Connective::kExists1},
    {Rule::kForallL1, "ForallL1", 1, true, Connective::kForall1},
    {Rule::kForallR1, "ForallR1", 1, false, Connective::kForall1},
    {Rule::kCut, "Cut", 2, false, Connective::kAtom},
};

const RuleInfo& info(Rule r) { return kRules[static_cast<int>(r)]; }

bool starts_lower(const std::string& s) {
  return !s.empty() && std::islower(static_cast<unsigned char>(s[0]));
}
bool starts_upper(const std::string& s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}

CheckError err(ErrorCode c, std::string msg) { return {c, {}, std::move(msg)}; }

Synthesis fail(ErrorCode c, std::string msg) {
  Synthesis s;
  s.error = err(c, std::move(msg));
  return s;
}

// First arity conflict among free second-order variables of the sequent.
std::optional<std::string> arity_conflict(const Sequent& s) {
  std::map<std::string, int> seen;
  std::optional<std::string> bad;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    if (bad) return;
    switch (f.kind()) {
      case Connective::kAtom:
        if (f.head_kind() == HeadKind::kVariable) {
          auto [it, inserted] = seen.emplace(f.head_name(), f.arity());
          if (!inserted && it->second != f.arity()) bad = f.head_name();
        }
        return;
      case Connective::kOr:
      case Connective::kAnd:
        walk(f.left());
        walk(f.right());
        return;
      default:
        walk(f.operand());
    }
  };
  for (const auto& f : s.formulas()) walk(f);
  return bad;
}

std::optional<CheckError> check_term(const Term& t, const Signature& sig) {
  if (!t.is_locally_closed()) return err(ErrorCode::kMalformed, "witness term has a loose bound variable");
  std::function<std::optional<CheckError>(const Term&)> walk =
      [&](const Term& u) -> std::optional<CheckError> {
    if (u.kind() == Term::Kind::kApply) {
      auto it = sig.functions.find(u.name());
      if (it != sig.functions.end() && it->second != static_cast<int>(u.args().size())) {
        return err(ErrorCode::kArityMismatch, "function '" + u.name() + "' has arity " +
                                                  std::to_string(it->second));
      }
      for (const auto& a : u.args()) {
        if (auto e = walk(a)) return e;
      }
    }
    return std::nullopt;
  };
  return walk(t);
}

}  // namespace

const char* rule_name(Rule r) { return info(r).name; }

std::optional<Rule> rule_from_name(const std::string& name) {
  for (const auto& ri : kRules) {
    if (name == ri.name) return ri.rule;
  }
  return std::nullopt;
}

int rule_arity(Rule r) { return info(r).arity; }
bool rule_is_left(Rule r) { return info(r).left; }

bool minor_in_antecedent(Rule r) {
  if (r == Rule::kNotL) return false;
  if (r == Rule::kNotR) return true;
  return info(r).left;
}
Connective rule_connective(Rule r) { return info(r).connective; }

bool rule_has_eigenvariable(Rule r) {
  return r == Rule::kExistsL0 || r == Rule::kForallR0 || r == Rule::kExistsL1 ||
         r == Rule::kForallR1;
}

bool rule_has_witness(Rule r) {
  return r == Rule::kExistsR0 || r == Rule::kForallL0 || r == Rule::kExistsR1 ||
         r == Rule::kForallL1;
}

bool rule_is_second_order(Rule r) {
  return r == Rule::kExistsL1 || r == Rule::kExistsR1 || r == Rule::kForallL1 ||
         r == Rule::kForallR1;
}

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::kWrongPremise: return "WrongPremise";
    case ErrorCode::kNotAtomicAxiom: return "NotAtomicAxiom";
    case ErrorCode::kEigenvariableOccursBelow: return "EigenvariableOccursBelow";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kCutForbidden: return "CutForbidden";
    case ErrorCode::kWitnessOutsideFragment: return "WitnessOutsideFragment";
    case ErrorCode::kMalformed: return "Malformed";
  }
  return "?";
}

std::string to_string(const Fragment& f) {
  switch (f.kind) {
    case Fragment::Kind::kFull: return "full";
    case Fragment::Kind::kPi1: return "pi1:" + std::to_string(f.n);
    case Fragment::Kind::kBC: return "bc";
    case Fragment::Kind::kFirstOrder: return "first-order";
  }
  return "?";
}

std::optional<Fragment> parse_fragment(const std::string& text) {
  if (text == "full") return Fragment::full();
  if (text == "bc") return Fragment::bc();
  if (text == "first-order") return Fragment::first_order();
  if (text.rfind("pi1:", 0) == 0) {
    std::string digits = text.substr(4);
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      return std::nullopt;
    }
    int n = std::stoi(digits);
    if (n < 1) return std::nullopt;
    return Fragment::pi1(n);
  }
  return std::nullopt;
}

bool witness_in_fragment(const Abstract& t, const Fragment& fragment) {
  switch (fragment.kind) {
    case Fragment::Kind::kFull:
      return true;
    case Fragment::Kind::kFirstOrder:
      return false;
    case Fragment::Kind::kPi1:
      return classify_abstract(t, fragment.n);
    case Fragment::Kind::kBC: {
      const Formula& b = t.body();
      if (!b.is_atomic() || b.head_kind() == HeadKind::kBound) return false;
      if (b.head_kind() == HeadKind::kVariable) return t == Abstract::of_variable(b.head_name(), t.arity());
      return t == Abstract::of_relation(b.head_name(), t.arity());
    }
  }
  return false;
}

std::string path_string(const std::vector<int>& path) {
  std::string s = "root";
  for (int i : path) s += "." + std::to_string(i);
  return s;
}

std::size_t ProofTree::size() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.size();
  return n;
}

int ProofTree::height() const {
  int h = 0;
  for (const auto& p : premises) h = std::max(h, p.height());
  return h + 1;
}

std::vector<Formula> minor_formulas(Rule rule, const Instantiation& inst) {
  const Formula& m = inst.major;
  switch (rule) {
    case Rule::kInitial:
    case Rule::kCut:
      return {};
    case Rule::kNotL:
    case Rule::kNotR:
      return {m.operand()};
    case Rule::kOrL:
    case Rule::kAndR:
      return {m.left(), m.right()};
    case Rule::kOrR:
    case Rule::kAndL:
      return {inst.index == 0 ? m.left() : m.right()};
    case Rule::kExistsL0:
    case Rule::kForallR0:
      return {instantiate(m, Term::variable(inst.eigenvariable))};
    case Rule::kExistsR0:
    case Rule::kForallL0:
      return {instantiate(m, *inst.term)};
    case Rule::kExistsL1:
    case Rule::kForallR1:
      return {instantiate(m, Abstract::of_variable(inst.eigenvariable, m.arity()))};
    case Rule::kExistsR1:
    case Rule::kForallL1:
      return {instantiate(m, *inst.abstract)};
  }
  return {};
}

Synthesis synthesize_premises(const Sequent& conclusion, Rule rule, const Instantiation& inst,
                              const CheckOptions& opts) {
  if (auto bad = arity_conflict(conclusion)) {
    return fail(ErrorCode::kArityMismatch,
                "second-order variable '" + *bad + "' is used with two arities");
  }
  if (rule == Rule::kInitial) {
    if (!conclusion.has_atomic_coincidence()) {
      return fail(ErrorCode::kNotAtomicAxiom, "no atomic formula occurs in both cedents");
    }
    return {};
  }
  if (rule == Rule::kCut) {
    if (!opts.allow_cut) return fail(ErrorCode::kCutForbidden, "cut is not allowed");
    if (!inst.cut.valid()) return fail(ErrorCode::kMalformed, "cut formula missing");
    if (inst.left_context.merge(inst.right_context) != conclusion) {
      return fail(ErrorCode::kWrongPremise, "cut split does not reassemble the conclusion");
    }
    Synthesis s;
    s.premises = {inst.left_context.add_succedent(inst.cut),
                  inst.right_context.add_antecedent(inst.cut)};
    return s;
  }
  const Formula& m = inst.major;
  if (!m.valid()) return fail(ErrorCode::kMalformed, "major formula missing");
  if (m.kind() != rule_connective(rule)) {
    return fail(ErrorCode::kMalformed, std::string("major formula does not fit rule ") + rule_name(rule));
  }
  bool left = rule_is_left(rule);
  if (left ? !conclusion.in_antecedent(m) : !conclusion.in_succedent(m)) {
    return fail(ErrorCode::kMalformed, std::string("major formula is not in the ") +
                                           (left ? "antecedent" : "succedent"));
  }
  if ((rule == Rule::kOrR || rule == Rule::kAndL) && inst.index != 0 && inst.index != 1) {
    return fail(ErrorCode::kMalformed, "index must be 0 or 1");
  }
  if (rule_is_second_order(rule) && opts.fragment.kind == Fragment::Kind::kFirstOrder) {
    return fail(ErrorCode::kWitnessOutsideFragment, "second-order rule in the first-order fragment");
  }
  if (rule_has_eigenvariable(rule)) {
    const std::string& e = inst.eigenvariable;
    bool second = rule_is_second_order(rule);
    if (second ? !starts_upper(e) : !starts_lower(e)) {
      return fail(ErrorCode::kMalformed, "eigenvariable '" + e + "' has the wrong case");
    }
    if (opts.signature.declares(e)) {
      return fail(ErrorCode::kMalformed, "eigenvariable '" + e + "' is a declared symbol");
    }
    if (names_of(conclusion).count(e)) {
      return fail(ErrorCode::kEigenvariableOccursBelow,
                  "eigenvariable '" + e + "' occurs in the conclusion");
    }
  }
  if (rule == Rule::kExistsR0 || rule == Rule::kForallL0) {
    if (!inst.term) return fail(ErrorCode::kMalformed, "witness term missing");
    if (auto e = check_term(*inst.term, opts.signature)) {
      Synthesis s;
      s.error = e;
      return s;
    }
  }
  if (rule == Rule::kExistsR1 || rule == Rule::kForallL1) {
    if (!inst.abstract) return fail(ErrorCode::kMalformed, "witness abstract missing");
    const Abstract& t = *inst.abstract;
    if (t.arity() != m.arity()) {
      return fail(ErrorCode::kArityMismatch, "abstract of arity " + std::to_string(t.arity()) +
                                                 " for a quantifier of arity " +
                                                 std::to_string(m.arity()));
    }
    if (!is_closed_below(t.body(), t.arity())) {
      return fail(ErrorCode::kMalformed, "abstract body has a loose bound variable");
    }
    if (!witness_in_fragment(t, opts.fragment)) {
      return fail(ErrorCode::kWitnessOutsideFragment,
                  "witness abstract lies outside fragment " + to_string(opts.fragment));
    }
  }
  std::vector<Formula> minors;
  try {
    minors = minor_formulas(rule, inst);
  } catch (const std::exception& e) {
    return fail(ErrorCode::kArityMismatch, e.what());
  }
  Synthesis s;
  bool minor_left = minor_in_antecedent(rule);
  for (const auto& f : minors) {
    s.premises.push_back(minor_left ? conclusion.add_antecedent(f) : conclusion.add_succedent(f));
  }
  if (s.premises.size() == 1 && rule_arity(rule) == 1) return s;
  if (rule_arity(rule) == 2) return s;
  return fail(ErrorCode::kMalformed, "unexpected premise count");
}

namespace {

void check_node(const ProofTree& p, const CheckOptions& opts, std::vector<int>& path,
                CheckReport& report) {
  auto report_error = [&](CheckError e) {
    e.path = path;
    report.errors.push_back(std::move(e));
  };
  if (static_cast<int>(p.premises.size()) != rule_arity(p.rule)) {
    report_error(err(ErrorCode::kMalformed, std::string(rule_name(p.rule)) + " expects " +
                                                std::to_string(rule_arity(p.rule)) +
                                                " premise(s)"));
  } else {
    Synthesis s = synthesize_premises(p.conclusion, p.rule, p.inst, opts);
    if (s.error) {
      report_error(*s.error);
    } else {
      for (std::size_t i = 0; i < s.premises.size(); ++i) {
        if (s.premises[i] != p.premises[i].conclusion) {
          report_error(err(ErrorCode::kWrongPremise,
                           "premise " + std::to_string(i) + " should be " +
                               to_string(s.premises[i], opts.signature)));
          break;
        }
      }
    }
  }
  for (std::size_t i = 0; i < p.premises.size(); ++i) {
    path.push_back(static_cast<int>(i));
    check_node(p.premises[i], opts, path, report);
    path.pop_back();
  }
}

}  // namespace

CheckReport check_proof(const ProofTree& p, const CheckOptions& opts) {
  CheckReport report;
  std::vector<int> path;
  check_node(p, opts, path, report);
  return report;
}

ProofTree initial_node(const Sequent& s) {
  ProofTree t;
  t.conclusion = s;
  t.rule = Rule::kInitial;
  return t;
}

}  // namespace g1lc
