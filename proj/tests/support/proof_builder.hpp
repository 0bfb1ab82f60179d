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

// Proofs written as rule applications; premise conclusions are synthesized
// from the end-sequent upwards.

#ifndef G1LC_TESTS_SUPPORT_PROOF_BUILDER_HPP_
#define G1LC_TESTS_SUPPORT_PROOF_BUILDER_HPP_

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "g1lc/parser.hpp"
#include "g1lc/proof.hpp"
#include "g1lc/search.hpp"

namespace g1lc::testing {

// One rule application.  Empty strings mean "unused".  kAuto subtrees are
// filled in by cut-free search.
struct Step {
  enum class Kind { kRule, kAuto };
  Kind kind = Kind::kRule;
  Rule rule = Rule::kInitial;
  std::string major;
  int index = 0;
  std::string term;
  std::string abstract;
  std::string eigen;
  std::string cut;
  std::string left;   // cut split Gamma => Delta
  std::string right;  // cut split Pi => Theta
  std::vector<Step> kids;
};

inline Step init() { return {}; }
inline Step autostep() {
  Step s;
  s.kind = Step::Kind::kAuto;
  return s;
}
inline Step r(Rule rule, std::string major, std::vector<Step> kids) {
  Step s;
  s.rule = rule;
  s.major = std::move(major);
  s.kids = std::move(kids);
  return s;
}
inline Step pick(Rule rule, std::string major, int index, Step kid) {
  Step s = r(rule, std::move(major), {std::move(kid)});
  s.index = index;
  return s;
}
inline Step eigen(Rule rule, std::string major, std::string name, Step kid) {
  Step s = r(rule, std::move(major), {std::move(kid)});
  s.eigen = std::move(name);
  return s;
}
inline Step term(Rule rule, std::string major, std::string t, Step kid) {
  Step s = r(rule, std::move(major), {std::move(kid)});
  s.term = std::move(t);
  return s;
}
inline Step witness(Rule rule, std::string major, std::string a, Step kid) {
  Step s = r(rule, std::move(major), {std::move(kid)});
  s.abstract = std::move(a);
  return s;
}
inline Step cut(std::string c, std::string left, std::string right, Step l, Step rr) {
  Step s = r(Rule::kCut, "", {std::move(l), std::move(rr)});
  s.cut = std::move(c);
  s.left = std::move(left);
  s.right = std::move(right);
  return s;
}

// Names used by earlier searches, so that independently searched subproofs
// never share an eigenvariable.
inline std::set<std::string> g_used;

inline void collect_names(const ProofTree& p, std::set<std::string>& out) {
  std::set<std::string> here = names_of(p.conclusion);
  out.insert(here.begin(), here.end());
  for (const auto& q : p.premises) collect_names(q, out);
}

inline ProofTree derive(const Sequent& conclusion, const Step& st, ParseContext& ctx) {
  if (st.kind == Step::Kind::kAuto) {
    SearchConfig cfg;
    cfg.signature = ctx.signature;
    cfg.reserved_names = g_used;
    SearchOutcome out = canonical_search(conclusion, cfg);
    if (out.kind != SearchOutcome::Kind::kProved) {
      throw std::runtime_error("search failed on " + to_string(conclusion, ctx.signature));
    }
    collect_names(*out.proof, g_used);
    return *out.proof;
  }
  Instantiation inst;
  if (!st.major.empty()) inst.major = parse_formula(st.major, ctx);
  inst.index = st.index;
  if (!st.term.empty()) inst.term = parse_term(st.term, ctx);
  if (!st.abstract.empty()) inst.abstract = parse_abstract(st.abstract, ctx);
  inst.eigenvariable = st.eigen;
  if (st.rule == Rule::kCut) {
    inst.cut = parse_formula(st.cut, ctx);
    inst.left_context = parse_sequent(st.left, ctx);
    inst.right_context = parse_sequent(st.right, ctx);
  }
  CheckOptions opts;
  opts.allow_cut = true;
  opts.signature = ctx.signature;
  Synthesis syn = synthesize_premises(conclusion, st.rule, inst, opts);
  if (syn.error) {
    throw std::runtime_error(std::string(rule_name(st.rule)) + " at " +
                             to_string(conclusion, ctx.signature) + ": " + syn.error->message);
  }
  if (syn.premises.size() != st.kids.size()) {
    throw std::runtime_error("premise count mismatch at " + to_string(conclusion, ctx.signature));
  }
  ProofTree p;
  p.conclusion = conclusion;
  p.rule = st.rule;
  p.inst = inst;
  for (std::size_t i = 0; i < st.kids.size(); ++i) {
    p.premises.push_back(derive(syn.premises[i], st.kids[i], ctx));
  }
  return p;
}

struct Built {
  ParseContext ctx;
  ProofTree proof;
};

inline Built build(const std::string& text, const Step& st) {
  Document doc = parse_document(text);
  Built b;
  b.ctx = doc.context;
  Sequent s = parse_sequent(doc.lines.back(), b.ctx);
  b.proof = derive(s, st, b.ctx);
  return b;
}

}  // namespace g1lc::testing

#endif  // G1LC_TESTS_SUPPORT_PROOF_BUILDER_HPP_
