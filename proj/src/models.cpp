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

#include "g1lc/models.hpp"

#include <algorithm>
#include <stdexcept>

#include "g1lc/parser.hpp"

namespace g1lc {

std::size_t Model::tuple_count(int arity) const {
  std::size_t n = 1;
  for (int i = 0; i < arity; ++i) n *= d0.size();
  return n;
}

std::vector<std::size_t> Model::tuple(int arity, std::size_t index) const {
  std::vector<std::size_t> out(arity);
  for (int j = arity - 1; j >= 0; --j) {
    out[j] = index % d0.size();
    index /= d0.size();
  }
  return out;
}

const std::vector<Table>& Model::domain(int arity) const {
  static const std::vector<Table> kEmpty;
  auto it = d1.find(arity);
  return it == d1.end() ? kEmpty : it->second;
}

bool is_diagonal(const Model& m) {
  auto diag = [](const Table& t) {
    return std::all_of(t.values.begin(), t.values.end(),
                       [](const DPair& p) { return p.box == p.diamond; });
  };
  for (const auto& [arity, dom] : m.d1) {
    if (!std::all_of(dom.begin(), dom.end(), diag)) return false;
  }
  for (const auto& [name, t] : m.named) {
    if (!diag(t)) return false;
  }
  return true;
}

bool table_tri(const BoolAlg& alg, const Table& a, const Table& b) {
  if (a.arity != b.arity || a.values.size() != b.values.size()) return false;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (!d_tri(alg, a.values[i], b.values[i])) return false;
  }
  return true;
}

std::string format_table(const Model& m, const Table& t) {
  std::string out = "{";
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    if (i) out += ", ";
    auto tup = m.tuple(t.arity, i);
    out += "(";
    for (std::size_t j = 0; j < tup.size(); ++j) {
      if (j) out += ",";
      out += to_string(m.d0[tup[j]]);
    }
    out += ")->" + format_dpair(m.algebra, t.values[i]);
  }
  return out + "}";
}

namespace {

class Evaluator {
 public:
  Evaluator(const Model& m, const std::map<std::string, Table>& env) : m_(m), env_(env) {
    for (std::size_t i = 0; i < m.d0.size(); ++i) index_.emplace(m.d0[i], i);
  }

  DPair eval(const Formula& f) {
    const BoolAlg& alg = m_.algebra;
    switch (f.kind()) {
      case Connective::kAtom:
        return atom(f);
      case Connective::kNot:
        return d_neg(alg, eval(f.operand()));
      case Connective::kOr:
        return d_sup_leq(alg, {eval(f.left()), eval(f.right())});
      case Connective::kAnd:
        return d_inf_leq(alg, {eval(f.left()), eval(f.right())});
      case Connective::kExists0:
      case Connective::kForall0: {
        std::vector<DPair> vals;
        for (std::size_t i = 0; i < m_.d0.size(); ++i) {
          stack_.push_back({false, i, nullptr});
          vals.push_back(eval(f.operand()));
          stack_.pop_back();
        }
        return f.kind() == Connective::kExists0 ? d_sup_leq(alg, vals) : d_inf_leq(alg, vals);
      }
      default: {
        std::vector<DPair> vals;
        for (const auto& t : m_.domain(f.arity())) {
          stack_.push_back({true, 0, &t});
          vals.push_back(eval(f.operand()));
          stack_.pop_back();
        }
        return f.kind() == Connective::kExists1 ? d_sup_leq(alg, vals) : d_inf_leq(alg, vals);
      }
    }
  }

  // Parameters of an abstract body are bound in order, the last on top.
  DPair eval_with(const Formula& body, const std::vector<std::size_t>& params) {
    for (std::size_t p : params) stack_.push_back({false, p, nullptr});
    DPair out = eval(body);
    stack_.resize(stack_.size() - params.size());
    return out;
  }

 private:
  struct Binding {
    bool second_order;
    std::size_t individual;
    const Table* table;
  };

  const Binding& lookup(int index) const {
    if (index < 0 || index >= static_cast<int>(stack_.size())) {
      throw std::invalid_argument("loose bound variable");
    }
    return stack_[stack_.size() - 1 - index];
  }

  std::size_t term(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::kBound: {
        const Binding& b = lookup(t.index());
        if (b.second_order) throw std::invalid_argument("second-order variable used as a term");
        return b.individual;
      }
      case Term::Kind::kApply: {
        std::vector<Term> args;
        for (const auto& a : t.args()) args.push_back(m_.d0[term(a)]);
        return find(Term::apply(t.name(), std::move(args)));
      }
      default:
        return find(t);
    }
  }

  std::size_t find(const Term& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) throw std::invalid_argument("term '" + to_string(t) + "' has no value");
    return it->second;
  }

  DPair atom(const Formula& f) {
    const Table* table = nullptr;
    if (f.head_kind() == HeadKind::kBound) {
      const Binding& b = lookup(f.head_index());
      if (!b.second_order) throw std::invalid_argument("individual used as a predicate");
      table = b.table;
    } else {
      auto it = env_.find(f.head_name());
      if (it != env_.end()) {
        table = &it->second;
      } else if (auto jt = m_.named.find(f.head_name()); jt != m_.named.end()) {
        table = &jt->second;
      } else {
        throw std::invalid_argument("'" + f.head_name() + "' has no value");
      }
    }
    if (table->arity != f.arity()) {
      throw std::invalid_argument("arity mismatch at '" + to_string(f) + "'");
    }
    std::size_t index = 0;
    for (const auto& a : f.args()) index = index * m_.d0.size() + term(a);
    return table->values.at(index);
  }

  const Model& m_;
  const std::map<std::string, Table>& env_;
  std::map<Term, std::size_t> index_;
  std::vector<Binding> stack_;
};

DPair box_collapse(const DPair& p) { return {p.box, p.box}; }

Table collapse(const Table& t) {
  Table out{t.arity, {}};
  for (const auto& p : t.values) out.values.push_back(box_collapse(p));
  return out;
}

void add_unique(std::vector<Table>& out, const Table& t) {
  if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
}

// Free second-order variables and relation constants with their arities.
std::map<std::string, std::pair<int, bool>> free_heads(const FormulaUniverse& u) {
  std::map<std::string, std::pair<int, bool>> out;
  auto scan = [&](const Formula& f) {
    for (const auto& [name, arity] : free_second_order_variables(f)) out[name] = {arity, false};
    for (const auto& [name, arity] : signature_of(f).relations) out[name] = {arity, true};
  };
  for (const auto& f : u.formulas()) scan(f);
  for (const auto& [arity, pool] : u.abstracts()) {
    for (const auto& t : pool) scan(t.body());
  }
  return out;
}

Abstract head_abstract(const std::string& name, int arity, bool relation) {
  return relation ? Abstract::of_relation(name, arity) : Abstract::of_variable(name, arity);
}

std::set<std::string> universe_names(const FormulaUniverse& u) {
  std::set<std::string> out;
  for (const auto& f : u.formulas()) {
    auto n = names_of(f);
    out.insert(n.begin(), n.end());
  }
  return out;
}

void require_function_free(const FormulaUniverse& u) {
  for (const auto& f : u.formulas()) {
    if (uses_functions(f)) throw std::invalid_argument("universe uses function symbols");
  }
}

void fail(CheckResult& r, const std::string& witness) {
  if (r.ok) r.witness = witness;
  r.ok = false;
}

std::string pair_text(const BoolAlg& alg, const DPair& a, const DPair& b) {
  return format_dpair(alg, a) + " vs " + format_dpair(alg, b);
}

}  // namespace

DPair eval_db(const Model& m, const Formula& f, const std::map<std::string, Table>& env) {
  Evaluator e(m, env);
  return e.eval(f);
}

Table eval_abstract(const Model& m, const Abstract& t, const std::map<std::string, Table>& env) {
  Evaluator e(m, env);
  Table out{t.arity(), {}};
  std::size_t count = m.tuple_count(t.arity());
  for (std::size_t i = 0; i < count; ++i) out.values.push_back(e.eval_with(t.body(), m.tuple(t.arity(), i)));
  return out;
}

namespace {

std::string fresh_variable(const Model& m, const CAInstance& inst, const std::string& base) {
  std::set<std::string> taken = names_of(inst.g.body());
  taken.insert(inst.parameter);
  for (const auto& [name, t] : m.named) taken.insert(name);
  return fresh_name(base, taken);
}

// The parameter values an instance ranges over: one empty run without a
// parameter.
std::vector<std::map<std::string, Table>> parameter_envs(const Model& m, const CAInstance& inst) {
  std::vector<std::map<std::string, Table>> out;
  if (inst.parameter.empty()) {
    out.emplace_back();
    return out;
  }
  for (const auto& t : m.domain(inst.parameter_arity)) out.push_back({{inst.parameter, t}});
  return out;
}

}  // namespace

CheckResult check_3CA(const Model& m, const std::vector<CAInstance>& universe) {
  CheckResult r{"3CA", true, 0, ""};
  for (const auto& inst : universe) {
    for (const auto& env : parameter_envs(m, inst)) {
      ++r.checked;
      Table target = eval_abstract(m, inst.g, env);
      const auto& dom = m.domain(inst.g.arity());
      bool found = std::any_of(dom.begin(), dom.end(),
                               [&](const Table& a) { return table_tri(m.algebra, a, target); });
      if (!found) {
        fail(r, "no element below " + format_table(m, target) + " for " +
                    to_string(inst.g));
      }
    }
  }
  return r;
}

CheckResult check_2CA(const Model& n, const std::vector<CAInstance>& universe) {
  CheckResult r{"2CA", true, 0, ""};
  for (const auto& inst : universe) {
    const int arity = inst.g.arity();
    std::string y = fresh_variable(n, inst, "Y");
    std::set<std::string> taken = names_of(inst.g.body());
    taken.insert(y);
    std::vector<std::string> xs;
    std::vector<Term> args;
    for (int j = 0; j < arity; ++j) {
      xs.push_back(fresh_name("x" + std::to_string(j + 1), taken));
      taken.insert(xs.back());
      args.push_back(Term::variable(xs.back()));
    }
    Formula body = Formula::biconditional(Formula::variable_atom(y, args), inst.g.apply(args));
    for (int j = arity - 1; j >= 0; --j) body = Formula::forall0(xs[j], body);
    for (auto env : parameter_envs(n, inst)) {
      ++r.checked;
      bool found = false;
      for (const auto& cand : n.domain(arity)) {
        env[y] = cand;
        if (eval_db(n, body, env) == d_true(n.algebra)) {
          found = true;
          break;
        }
      }
      if (!found) fail(r, "no comprehension witness for " + to_string(inst.g));
    }
  }
  return r;
}

std::vector<CAInstance> pool_instances(const FormulaUniverse& u) {
  std::vector<CAInstance> out;
  for (const auto& [arity, pool] : u.abstracts()) {
    for (const auto& t : pool) out.push_back({t, "", 0});
  }
  return out;
}

std::vector<Table> diagonal_majorants(const Model& m, const Table& alpha, std::size_t limit) {
  const BoolAlg& alg = m.algebra;
  std::vector<std::vector<Subset>> choices;
  for (const auto& p : alpha.values) {
    std::vector<Subset> c;
    for (const auto& x : alg.carrier) {
      if (alg.leq(p.box, x) && alg.leq(x, p.diamond)) c.push_back(x);
    }
    choices.push_back(std::move(c));
  }
  std::vector<Table> out;
  std::vector<std::size_t> digit(choices.size(), 0);
  while (true) {
    if (std::any_of(choices.begin(), choices.end(), [](const auto& c) { return c.empty(); })) break;
    Table t{alpha.arity, {}};
    for (std::size_t i = 0; i < choices.size(); ++i) {
      t.values.push_back({choices[i][digit[i]], choices[i][digit[i]]});
    }
    out.push_back(std::move(t));
    if (out.size() > limit) throw std::length_error("too many diagonal majorants");
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == choices[i].size()) digit[i++] = 0;
    if (i == digit.size()) break;
  }
  return out;
}

Table abstract_value(const SemiValuation& v, const Abstract& t) {
  const auto& d0 = v.universe.terms();
  Model shape;
  shape.d0 = d0;
  Table out{t.arity(), {}};
  std::size_t count = shape.tuple_count(t.arity());
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Term> args;
    for (std::size_t k : shape.tuple(t.arity(), i)) args.push_back(d0[k]);
    out.values.push_back(v.value(t.apply(args)));
  }
  return out;
}

SemivalModel model_from_semival(const SemiValuation& v) {
  if (v.algebra.size() != 2) throw std::invalid_argument("algebra is not the two-element algebra");
  require_function_free(v.universe);
  SemivalModel sm;
  sm.n.algebra = v.algebra;
  sm.n.d0 = v.universe.terms();
  for (const auto& [arity, pool] : v.universe.abstracts()) {
    auto& dom = sm.n.d1[arity];
    for (const auto& t : pool) {
      Table vt = abstract_value(v, t);
      sm.abstract_values[arity].push_back({t, vt});
      for (const auto& x : diagonal_majorants(sm.n, vt)) add_unique(dom, x);
    }
  }
  for (const auto& [name, info] : free_heads(v.universe)) {
    sm.n.named[name] = collapse(abstract_value(v, head_abstract(name, info.first, info.second)));
  }
  return sm;
}

CheckResult check_semival_below_model(const SemiValuation& v, const SemivalModel& sm) {
  CheckResult r{"semival_below_model", true, 0, ""};
  const BoolAlg& alg = v.algebra;
  std::set<std::string> taken = universe_names(v.universe);
  for (const auto& c : v.universe.formulas()) {
    ++r.checked;
    DPair lhs = v.value(c);
    DPair rhs = eval_db(sm.n, c);
    if (!d_tri(alg, lhs, rhs)) fail(r, to_string(c) + ": " + pair_text(alg, lhs, rhs));
    if (!c.is_second_order_quantifier()) continue;
    std::string z = fresh_name("Z", taken);
    Formula body = open_binder_with_variable(c, z);
    auto it = sm.abstract_values.find(c.arity());
    if (it == sm.abstract_values.end()) continue;
    for (const auto& [t, vt] : it->second) {
      DPair l = v.value(instantiate(c, t));
      for (const auto& x : diagonal_majorants(sm.n, vt)) {
        ++r.checked;
        DPair rr = eval_db(sm.n, body, {{z, x}});
        if (!d_tri(alg, l, rr)) {
          fail(r, to_string(c) + " at " + to_string(t) + ": " + pair_text(alg, l, rr));
        }
      }
    }
  }
  return r;
}

CheckResult check_semival_model_2ca(const SemiValuation& v, const SemivalModel& sm) {
  CheckResult r = check_2CA(sm.n, pool_instances(v.universe));
  r.name = "semival_model_2ca";
  return r;
}

GirardModel girard_dbmodel(const SemiValuation& v) {
  require_function_free(v.universe);
  GirardModel g;
  g.m.algebra = v.algebra;
  g.m.d0 = v.universe.terms();
  for (const auto& [arity, pool] : v.universe.abstracts()) {
    auto& dom = g.m.d1[arity];
    for (const auto& t : pool) {
      Table vt = abstract_value(v, t);
      g.abstract_values[arity].push_back({t, vt});
      add_unique(dom, vt);
    }
  }
  for (const auto& [name, info] : free_heads(v.universe)) {
    g.m.named[name] = abstract_value(v, head_abstract(name, info.first, info.second));
  }
  return g;
}

Model bmodel_from_dbmodel(const Model& m, std::size_t limit) {
  Model n;
  n.algebra = m.algebra;
  n.d0 = m.d0;
  for (const auto& [arity, dom] : m.d1) {
    auto& out = n.d1[arity];
    for (const auto& a : dom) {
      for (const auto& x : diagonal_majorants(m, a, limit)) add_unique(out, x);
    }
  }
  for (const auto& [name, t] : m.named) n.named[name] = collapse(t);
  return n;
}

CheckResult check_semival_below_dbmodel(const SemiValuation& v, const GirardModel& g) {
  CheckResult r{"semival_below_dbmodel", true, 0, ""};
  const BoolAlg& alg = v.algebra;
  std::set<std::string> taken = universe_names(v.universe);
  for (const auto& c : v.universe.formulas()) {
    ++r.checked;
    DPair lhs = v.value(c);
    DPair rhs = eval_db(g.m, c);
    if (!d_tri(alg, lhs, rhs)) fail(r, to_string(c) + ": " + pair_text(alg, lhs, rhs));
    if (!c.is_second_order_quantifier()) continue;
    std::string z = fresh_name("Z", taken);
    Formula body = open_binder_with_variable(c, z);
    auto it = g.abstract_values.find(c.arity());
    if (it == g.abstract_values.end()) continue;
    for (const auto& [t, vt] : it->second) {
      ++r.checked;
      DPair l = v.value(instantiate(c, t));
      DPair rr = eval_db(g.m, body, {{z, vt}});
      if (!d_tri(alg, l, rr)) {
        fail(r, to_string(c) + " at " + to_string(t) + ": " + pair_text(alg, l, rr));
      }
    }
  }
  return r;
}

CheckResult check_dbmodel_3ca(const SemiValuation& v, const GirardModel& g) {
  CheckResult r = check_3CA(g.m, pool_instances(v.universe));
  r.name = "dbmodel_3ca";
  return r;
}

CheckResult check_dbmodel_below_bmodel(const SemiValuation& v, const GirardModel& g, const Model& n) {
  CheckResult r{"dbmodel_below_bmodel", true, 0, ""};
  const BoolAlg& alg = v.algebra;
  std::set<std::string> taken = universe_names(v.universe);
  for (const auto& c : v.universe.formulas()) {
    ++r.checked;
    DPair lhs = eval_db(g.m, c);
    DPair rhs = eval_db(n, c);
    if (!d_tri(alg, lhs, rhs)) fail(r, to_string(c) + ": " + pair_text(alg, lhs, rhs));
    if (!c.is_second_order_quantifier()) continue;
    std::string z = fresh_name("Z", taken);
    Formula body = open_binder_with_variable(c, z);
    for (const auto& a : g.m.domain(c.arity())) {
      DPair l = eval_db(g.m, body, {{z, a}});
      for (const auto& x : diagonal_majorants(g.m, a)) {
        ++r.checked;
        DPair rr = eval_db(n, body, {{z, x}});
        if (!d_tri(alg, l, rr)) fail(r, to_string(c) + ": " + pair_text(alg, l, rr));
      }
    }
  }
  return r;
}

CheckResult check_bmodel_2ca(const SemiValuation& v, const Model& n) {
  CheckResult r = check_2CA(n, pool_instances(v.universe));
  r.name = "bmodel_2ca";
  return r;
}

}  // namespace g1lc
