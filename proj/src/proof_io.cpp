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

#include "g1lc/proof_io.hpp"

#include <json.hpp>

namespace g1lc {

namespace {

using nlohmann::json;

std::vector<Formula> formula_list(const json& j, ParseContext& ctx) {
  std::vector<Formula> out;
  for (const auto& s : j) out.push_back(parse_formula(s.get<std::string>(), ctx));
  return out;
}

ProofTree read_node(const json& j, ParseContext& ctx) {
  if (!j.is_object()) throw SyntaxError("proof node must be an object");
  ProofTree t;
  auto rule = rule_from_name(j.at("rule").get<std::string>());
  if (!rule) throw SyntaxError("unknown rule '" + j.at("rule").get<std::string>() + "'");
  t.rule = *rule;
  t.conclusion = parse_sequent(j.at("conclusion").get<std::string>(), ctx);
  if (j.contains("instantiation")) {
    const json& in = j.at("instantiation");
    if (in.contains("major")) t.inst.major = parse_formula(in.at("major").get<std::string>(), ctx);
    if (in.contains("index")) t.inst.index = in.at("index").get<int>();
    if (in.contains("term")) t.inst.term = parse_term(in.at("term").get<std::string>(), ctx);
    if (in.contains("abstract")) {
      t.inst.abstract = parse_abstract(in.at("abstract").get<std::string>(), ctx);
    }
    if (in.contains("eigenvariable")) t.inst.eigenvariable = in.at("eigenvariable").get<std::string>();
    if (in.contains("cut")) t.inst.cut = parse_formula(in.at("cut").get<std::string>(), ctx);
    if (in.contains("split")) {
      const json& sp = in.at("split");
      t.inst.left_context = Sequent(formula_list(sp.at("gamma"), ctx), formula_list(sp.at("delta"), ctx));
      t.inst.right_context = Sequent(formula_list(sp.at("pi"), ctx), formula_list(sp.at("theta"), ctx));
    }
  }
  if (j.contains("premises")) {
    for (const auto& p : j.at("premises")) t.premises.push_back(read_node(p, ctx));
  }
  return t;
}

json strings(const std::vector<Formula>& fs, const Signature& sig) {
  json a = json::array();
  for (const auto& f : fs) a.push_back(to_string(f, sig));
  return a;
}

json write_node(const ProofTree& t, const Signature& sig) {
  json j;
  j["rule"] = rule_name(t.rule);
  j["conclusion"] = to_string(t.conclusion, sig);
  json in = json::object();
  if (t.rule == Rule::kCut) {
    if (t.inst.cut.valid()) in["cut"] = to_string(t.inst.cut, sig);
    in["split"] = {{"gamma", strings(t.inst.left_context.antecedent(), sig)},
                   {"delta", strings(t.inst.left_context.succedent(), sig)},
                   {"pi", strings(t.inst.right_context.antecedent(), sig)},
                   {"theta", strings(t.inst.right_context.succedent(), sig)}};
  } else if (t.rule != Rule::kInitial) {
    if (t.inst.major.valid()) in["major"] = to_string(t.inst.major, sig);
    if (t.rule == Rule::kOrR || t.rule == Rule::kAndL) in["index"] = t.inst.index;
    if (t.inst.term) in["term"] = to_string(*t.inst.term);
    if (t.inst.abstract) in["abstract"] = to_string(*t.inst.abstract, sig);
    if (rule_has_eigenvariable(t.rule)) in["eigenvariable"] = t.inst.eigenvariable;
    try {
      in["minor"] = strings(minor_formulas(t.rule, t.inst), sig);
    } catch (const std::exception&) {
      // Ill-formed instantiations are written without the informational field.
    }
  }
  j["instantiation"] = in;
  json ps = json::array();
  for (const auto& p : t.premises) ps.push_back(write_node(p, sig));
  j["premises"] = ps;
  return j;
}

void collect_term_symbols(const Term& t, Signature& sig) {
  if (t.kind() == Term::Kind::kConstant) sig.constants.insert(t.name());
  if (t.kind() == Term::Kind::kApply) {
    sig.functions.emplace(t.name(), static_cast<int>(t.args().size()));
    for (const auto& a : t.args()) collect_term_symbols(a, sig);
  }
}

void collect_symbols(const ProofTree& t, Signature& sig) {
  auto add = [&](const Formula& f) {
    Signature s = signature_of(f);
    sig.constants.insert(s.constants.begin(), s.constants.end());
    sig.functions.insert(s.functions.begin(), s.functions.end());
    sig.relations.insert(s.relations.begin(), s.relations.end());
  };
  for (const auto& f : t.conclusion.formulas()) add(f);
  if (t.inst.term) collect_term_symbols(*t.inst.term, sig);
  if (t.inst.abstract) add(t.inst.abstract->body());
  for (const auto& p : t.premises) collect_symbols(p, sig);
}

void collect_arities(const ProofTree& t, std::map<std::string, int>& out) {
  for (const auto& [n, a] : free_second_order_variables(t.conclusion)) out.emplace(n, a);
  if (t.inst.abstract) {
    for (const auto& [n, a] : free_second_order_variables(t.inst.abstract->body())) out.emplace(n, a);
  }
  for (const auto& p : t.premises) collect_arities(p, out);
}

}  // namespace

ProofDocument read_proof(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw SyntaxError(std::string("invalid JSON: ") + e.what());
  }
  ProofDocument doc;
  try {
    if (j.contains("signature")) {
      const json& s = j.at("signature");
      if (s.contains("constants")) {
        for (const auto& c : s.at("constants")) doc.context.signature.constants.insert(c.get<std::string>());
      }
      if (s.contains("functions")) doc.context.signature.functions = s.at("functions").get<std::map<std::string, int>>();
      if (s.contains("relations")) doc.context.signature.relations = s.at("relations").get<std::map<std::string, int>>();
      doc.context.signature.validate();
    }
    if (j.contains("variables")) doc.context.variable_arity = j.at("variables").get<std::map<std::string, int>>();
    doc.proof = read_node(j.at("proof"), doc.context);
  } catch (const json::exception& e) {
    throw SyntaxError(std::string("malformed proof file: ") + e.what());
  }
  return doc;
}

std::string write_proof(const ProofTree& p, const Signature& declared, int indent) {
  Signature sig = declared;
  collect_symbols(p, sig);
  json j;
  json s;
  s["constants"] = sig.constants;
  s["functions"] = sig.functions;
  s["relations"] = sig.relations;
  j["signature"] = s;
  std::map<std::string, int> vars;
  collect_arities(p, vars);
  j["variables"] = vars;
  j["proof"] = write_node(p, sig);
  return j.dump(indent);
}

}  // namespace g1lc
