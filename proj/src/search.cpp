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

#include "g1lc/search.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>

namespace g1lc {

const char* to_string(SearchOutcome::Kind k) {
  switch (k) {
    case SearchOutcome::Kind::kProved: return "proved";
    case SearchOutcome::Kind::kRefuted: return "refuted";
    case SearchOutcome::Kind::kExhausted: return "exhausted";
  }
  return "?";
}

namespace {

enum class Action { kNone, kOnce, kPair, kBranch, kEigen, kWitness };

struct Task {
  Formula f;
  bool left;
  int step;  // witness index, or the conjunct/disjunct of a pair task
};

Rule rule_for(Connective c, bool left) {
  switch (c) {
    case Connective::kNot: return left ? Rule::kNotL : Rule::kNotR;
    case Connective::kOr: return left ? Rule::kOrL : Rule::kOrR;
    case Connective::kAnd: return left ? Rule::kAndL : Rule::kAndR;
    case Connective::kExists0: return left ? Rule::kExistsL0 : Rule::kExistsR0;
    case Connective::kForall0: return left ? Rule::kForallL0 : Rule::kForallR0;
    case Connective::kExists1: return left ? Rule::kExistsL1 : Rule::kExistsR1;
    case Connective::kForall1: return left ? Rule::kForallL1 : Rule::kForallR1;
    default: return Rule::kInitial;
  }
}

Action action_for(const Formula& f, bool left) {
  switch (f.kind()) {
    case Connective::kAtom: return Action::kNone;
    case Connective::kNot: return Action::kOnce;
    case Connective::kOr: return left ? Action::kBranch : Action::kPair;
    case Connective::kAnd: return left ? Action::kPair : Action::kBranch;
    case Connective::kExists0:
    case Connective::kExists1: return left ? Action::kEigen : Action::kWitness;
    default: return left ? Action::kWitness : Action::kEigen;
  }
}

struct State {
  Sequent seq;
  std::deque<Task> agenda;
  std::vector<Task> waiting;
  std::vector<Term> terms;
  std::map<int, std::vector<Abstract>> abstracts;
  int depth = 0;
  bool blocked = false;  // a rule was unavailable in the fragment
};

struct Step {
  Sequent conclusion;
  Rule rule;
  Instantiation inst;
};

struct Result {
  SearchOutcome::Kind kind = SearchOutcome::Kind::kExhausted;
  std::optional<ProofTree> proof;
  std::optional<Branch> branch;
};

bool present(const Sequent& s, const Formula& f, bool left) {
  return left ? s.in_antecedent(f) : s.in_succedent(f);
}

Sequent with(const Sequent& s, const Formula& f, bool left) {
  return left ? s.add_antecedent(f) : s.add_succedent(f);
}

void add_term(std::vector<Term>& pool, const Term& t) {
  if (std::find(pool.begin(), pool.end(), t) == pool.end()) pool.push_back(t);
}

void add_abstract(std::vector<Abstract>& pool, const Abstract& t) {
  if (std::find(pool.begin(), pool.end(), t) == pool.end()) pool.push_back(t);
}

// Subformulas with the free variables their binders opened, outermost first.
struct Candidate {
  Formula g;
  std::vector<std::string> opened;
};

class Searcher {
 public:
  Searcher(const Sequent& s, const SearchConfig& cfg) : cfg_(cfg), end_(s) {
    taken_ = names_of(s);
    for (const auto& t : cfg.term_pool) {
      for (const auto& n : free_first_order_variables(t)) taken_.insert(n);
      if (t.kind() == Term::Kind::kConstant) taken_.insert(t.name());
    }
    for (const auto& [arity, pool] : cfg.abstract_pool) {
      for (const auto& t : pool) {
        auto n = names_of(t.body());
        taken_.insert(n.begin(), n.end());
      }
    }
    taken_.insert(cfg.signature.constants.begin(), cfg.signature.constants.end());
    for (const auto& [n, a] : cfg.signature.functions) taken_.insert(n);
    for (const auto& [n, a] : cfg.signature.relations) taken_.insert(n);
    taken_.insert(cfg.reserved_names.begin(), cfg.reserved_names.end());
    if (cfg.default_pools) collect_candidates();
  }

  SearchOutcome run() {
    State st;
    st.seq = end_;
    std::vector<Term> terms = cfg_.term_pool;
    if (cfg_.default_pools) {
      for (const auto& v : free_first_order_variables(end_)) terms.push_back(Term::variable(v));
      std::set<Term> closed;
      for (const auto& f : end_.formulas()) collect_terms(f, closed);
      terms.insert(terms.end(), closed.begin(), closed.end());
    }
    for (const auto& t : terms) add_term(st.terms, t);
    for (const auto& f : end_.antecedent()) enqueue(st, f, true);
    for (const auto& f : end_.succedent()) enqueue(st, f, false);
    Result r = explore(std::move(st));
    SearchOutcome out;
    out.kind = r.kind;
    out.proof = std::move(r.proof);
    out.branch = std::move(r.branch);
    out.nodes = nodes_;
    return out;
  }

 private:
  void collect_candidates() {
    std::set<std::string> so_opened;
    for (const auto& f : end_.formulas()) gather(f, {}, so_opened);
  }

  void gather(const Formula& f, std::vector<std::string> opened, std::set<std::string>& so_opened) {
    auto fs = free_second_order_variables(f);
    bool clean = std::none_of(fs.begin(), fs.end(),
                              [&](const auto& kv) { return so_opened.count(kv.first) > 0; });
    if (clean) {
      auto free = free_first_order_variables(f);
      std::vector<std::string> used;
      for (const auto& v : opened) {
        if (free.count(v)) used.push_back(v);
      }
      Candidate c{f, used};
      if (std::find_if(candidates_.begin(), candidates_.end(), [&](const Candidate& d) {
            return d.g == c.g && d.opened == c.opened;
          }) == candidates_.end()) {
        candidates_.push_back(std::move(c));
      }
    }
    switch (f.kind()) {
      case Connective::kAtom:
        return;
      case Connective::kNot:
        gather(f.operand(), opened, so_opened);
        return;
      case Connective::kOr:
      case Connective::kAnd:
        gather(f.left(), opened, so_opened);
        gather(f.right(), opened, so_opened);
        return;
      case Connective::kExists0:
      case Connective::kForall0: {
        std::string name = fresh_name("p_" + std::to_string(opened_count_++), taken_);
        taken_.insert(name);
        opened.push_back(name);
        gather(open_binder_with_variable(f, name), opened, so_opened);
        return;
      }
      default: {
        std::string name = fresh_name("P_" + std::to_string(opened_count_++), taken_);
        taken_.insert(name);
        so_opened.insert(name);
        gather(open_binder_with_variable(f, name), opened, so_opened);
        return;
      }
    }
  }

  std::vector<Abstract> default_abstracts(int arity) {
    std::vector<Abstract> out;
    for (const auto& t : cfg_.abstract_pool.count(arity) ? cfg_.abstract_pool.at(arity)
                                                         : std::vector<Abstract>{}) {
      add_abstract(out, t);
    }
    if (!cfg_.default_pools) return out;
    add_abstract(out, constant_abstract(arity, false));
    add_abstract(out, constant_abstract(arity, true));
    for (const auto& [name, a] : free_second_order_variables(end_)) {
      if (a == arity) add_abstract(out, Abstract::of_variable(name, arity));
    }
    std::map<std::string, int> relations = cfg_.signature.relations;
    for (const auto& f : end_.formulas()) {
      for (const auto& [name, a] : signature_of(f).relations) relations.emplace(name, a);
    }
    for (const auto& [name, a] : relations) {
      if (a == arity) add_abstract(out, Abstract::of_relation(name, arity));
    }
    for (const auto& c : candidates_) {
      if (static_cast<int>(c.opened.size()) > arity) continue;
      std::vector<std::string> params = c.opened;
      std::set<std::string> local = names_of(c.g);
      local.insert(params.begin(), params.end());
      while (static_cast<int>(params.size()) < arity) {
        std::string v = fresh_name("y" + std::to_string(params.size() + 1), local);
        local.insert(v);
        params.push_back(v);
      }
      add_abstract(out, Abstract(params, c.g));
    }
    return out;
  }

  std::vector<Abstract>& abstract_pool(State& st, int arity) {
    auto it = st.abstracts.find(arity);
    if (it != st.abstracts.end()) return it->second;
    auto cached = defaults_.find(arity);
    if (cached == defaults_.end()) {
      std::vector<Abstract> pool;
      for (const auto& t : default_abstracts(arity)) {
        if (witness_in_fragment(t, cfg_.fragment)) pool.push_back(t);
      }
      cached = defaults_.emplace(arity, std::move(pool)).first;
    }
    return st.abstracts.emplace(arity, cached->second).first->second;
  }

  void enqueue(State& st, const Formula& f, bool left) {
    if (action_for(f, left) != Action::kNone) st.agenda.push_back({f, left, 0});
  }

  void wake(State& st, bool second_order, int arity) {
    std::vector<Task> still;
    for (auto& t : st.waiting) {
      bool so = t.f.is_second_order_quantifier();
      if (so == second_order && (!so || t.f.arity() == arity)) {
        st.agenda.push_back(std::move(t));
      } else {
        still.push_back(std::move(t));
      }
    }
    st.waiting = std::move(still);
  }

  std::string fresh_eigen(bool second_order) {
    std::string name;
    do {
      name = (second_order ? "E_" : "e_") + std::to_string(++eigen_count_);
    } while (taken_.count(name));
    taken_.insert(name);
    return name;
  }

  Result exhausted() { return {SearchOutcome::Kind::kExhausted, std::nullopt, std::nullopt}; }

  bool over_budget() const { return nodes_ >= cfg_.node_budget; }

  static ProofTree wrap(std::vector<Step>& chain, ProofTree leaf) {
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      ProofTree node;
      node.conclusion = std::move(it->conclusion);
      node.rule = it->rule;
      node.inst = std::move(it->inst);
      node.premises.push_back(std::move(leaf));
      leaf = std::move(node);
    }
    return leaf;
  }

  Result explore(State st) {
    std::vector<Step> chain;
    while (true) {
      if (over_budget()) return exhausted();
      if (st.seq.has_atomic_coincidence()) {
        ++nodes_;
        return {SearchOutcome::Kind::kProved, wrap(chain, initial_node(st.seq)), std::nullopt};
      }
      if (st.depth >= cfg_.depth_budget) return exhausted();
      if (st.agenda.empty()) {
        if (st.blocked) return exhausted();
        Branch b{st.seq.antecedent(), st.seq.succedent(), st.terms, st.abstracts};
        return {SearchOutcome::Kind::kRefuted, std::nullopt, std::move(b)};
      }
      Task task = std::move(st.agenda.front());
      st.agenda.pop_front();
      const Formula& f = task.f;
      const bool left = task.left;
      Instantiation inst;
      inst.major = f;
      const Rule rule = rule_for(f.kind(), left);
      Formula minor;
      bool minor_left = minor_in_antecedent(rule);

      switch (action_for(f, left)) {
        case Action::kNone:
          continue;
        case Action::kOnce:
          minor = f.operand();
          break;
        case Action::kPair:
          if (task.step == 0) st.agenda.push_back({f, left, 1});
          inst.index = task.step;
          minor = task.step == 0 ? f.left() : f.right();
          break;
        case Action::kBranch: {
          const Formula& a = f.left();
          const Formula& b = f.right();
          if (present(st.seq, a, left) || present(st.seq, b, left)) continue;
          ++nodes_;
          ++st.depth;
          Step step{st.seq, rule, std::move(inst)};
          State right = st;
          st.seq = with(st.seq, a, left);
          enqueue(st, a, left);
          right.seq = with(right.seq, b, left);
          enqueue(right, b, left);
          return branch(std::move(chain), std::move(step), std::move(st), std::move(right));
        }
        case Action::kEigen: {
          if (f.is_second_order_quantifier() && cfg_.fragment.kind == Fragment::Kind::kFirstOrder) {
            st.blocked = true;
            continue;
          }
          bool so = f.is_second_order_quantifier();
          std::string e = fresh_eigen(so);
          inst.eigenvariable = e;
          minor = open_binder_with_variable(f, e);
          if (so) {
            add_abstract(abstract_pool(st, f.arity()), Abstract::of_variable(e, f.arity()));
          } else {
            add_term(st.terms, Term::variable(e));
          }
          wake(st, so, so ? f.arity() : 0);
          break;
        }
        case Action::kWitness: {
          bool so = f.is_second_order_quantifier();
          if (so && cfg_.fragment.kind == Fragment::Kind::kFirstOrder) {
            st.blocked = true;
            continue;
          }
          if (so) {
            auto& pool = abstract_pool(st, f.arity());
            if (pool.empty()) {
              Abstract fallback = constant_abstract(f.arity(), false);
              if (!witness_in_fragment(fallback, cfg_.fragment)) {
                st.blocked = true;
                continue;
              }
              pool.push_back(fallback);
            }
            if (task.step >= static_cast<int>(pool.size())) {
              st.waiting.push_back(std::move(task));
              continue;
            }
            inst.abstract = pool[task.step];
            minor = instantiate(f, pool[task.step]);
          } else {
            if (st.terms.empty()) {
              // A fresh constant rather than a variable keeps the pure
              // variable condition.
              std::string c = fresh_name("k_0", taken_);
              taken_.insert(c);
              st.terms.push_back(Term::constant(c));
            }
            if (task.step >= static_cast<int>(st.terms.size())) {
              st.waiting.push_back(std::move(task));
              continue;
            }
            inst.term = st.terms[task.step];
            minor = instantiate(f, st.terms[task.step]);
          }
          st.agenda.push_back({f, left, task.step + 1});
          break;
        }
      }
      if (present(st.seq, minor, minor_left)) continue;
      ++nodes_;
      ++st.depth;
      chain.push_back({st.seq, rule, std::move(inst)});
      st.seq = with(st.seq, minor, minor_left);
      enqueue(st, minor, minor_left);
    }
  }

  // \x. ALL V:0. V, or \x. ALL V:0. (~V | V) when `provable`.
  static Abstract constant_abstract(int arity, bool provable) {
    std::vector<std::string> params;
    for (int j = 0; j < arity; ++j) params.push_back("y" + std::to_string(j + 1));
    Formula v = Formula::variable_atom("V");
    Formula body = provable ? Formula::disjunction(Formula::negation(v), v) : v;
    return Abstract(params, Formula::forall1("V", 0, body));
  }

  Result branch(std::vector<Step> chain, Step step, State left, State right) {
    Result l = explore(std::move(left));
    Result r;
    if (l.kind == SearchOutcome::Kind::kRefuted) return l;
    if (l.kind == SearchOutcome::Kind::kExhausted && over_budget()) return l;
    r = explore(std::move(right));
    if (l.kind == SearchOutcome::Kind::kExhausted) {
      return r.kind == SearchOutcome::Kind::kRefuted ? r : exhausted();
    }
    if (r.kind != SearchOutcome::Kind::kProved) return r;
    ProofTree node;
    node.conclusion = std::move(step.conclusion);
    node.rule = step.rule;
    node.inst = std::move(step.inst);
    node.premises.push_back(std::move(*l.proof));
    node.premises.push_back(std::move(*r.proof));
    return {SearchOutcome::Kind::kProved, wrap(chain, std::move(node)), std::nullopt};
  }

  const SearchConfig& cfg_;
  Sequent end_;
  std::set<std::string> taken_;
  std::vector<Candidate> candidates_;
  std::map<int, std::vector<Abstract>> defaults_;
  std::size_t nodes_ = 0;
  int eigen_count_ = 0;
  int opened_count_ = 0;
};

}  // namespace

SearchOutcome canonical_search(const Sequent& s, const SearchConfig& cfg) {
  Searcher searcher(s, cfg);
  return searcher.run();
}

SemiValuation branch_to_semival(const Branch& b, std::size_t limit) {
  std::vector<Formula> seeds = b.antecedent;
  seeds.insert(seeds.end(), b.succedent.begin(), b.succedent.end());
  BoolAlg alg = BoolAlg::two();
  SemiValuation v =
      unknown_valuation(alg, FormulaUniverse::close(seeds, b.terms, b.abstracts, limit));
  for (const auto& f : b.antecedent) v.set(f, d_true(alg));
  for (const auto& f : b.succedent) {
    if (v.table.count(f)) throw std::invalid_argument("formula on both sides of the branch");
    v.set(f, d_false(alg));
  }
  return v;
}

bool decide_cut_free(const Sequent& s) {
  for (const auto& f : s.formulas()) {
    if (has_quantifier(f)) throw std::invalid_argument("decide_cut_free needs a quantifier-free sequent");
  }
  SearchConfig cfg;
  cfg.default_pools = false;
  cfg.node_budget = std::numeric_limits<std::size_t>::max();
  cfg.depth_budget = std::numeric_limits<int>::max();
  SearchOutcome out = canonical_search(s, cfg);
  if (out.kind == SearchOutcome::Kind::kExhausted) throw std::logic_error("propositional search exhausted");
  return out.kind == SearchOutcome::Kind::kProved;
}

ProvabilityOracle propositional_oracle() {
  return [](const Sequent& s) {
    for (const auto& f : s.formulas()) {
      if (has_quantifier(f)) return Provability::kUnknown;
    }
    return decide_cut_free(s) ? Provability::kProvable : Provability::kUnprovable;
  };
}

ProvabilityOracle search_oracle(const SearchConfig& cfg) {
  return [cfg](const Sequent& s) {
    switch (canonical_search(s, cfg).kind) {
      case SearchOutcome::Kind::kProved: return Provability::kProvable;
      case SearchOutcome::Kind::kRefuted: return Provability::kUnprovable;
      default: return Provability::kUnknown;
    }
  };
}

HauptsatzResult hauptsatz_pipeline(const ProofTree& p, const SearchConfig& cfg) {
  CheckOptions opts;
  opts.allow_cut = true;
  opts.fragment = cfg.fragment;
  opts.signature = cfg.signature;
  CheckReport report = check_proof(p, opts);
  if (!report.ok()) {
    const CheckError& e = report.errors.front();
    throw std::invalid_argument(std::string("input proof rejected: ") + error_name(e.code) + " at " +
                                path_string(e.path) + ": " + e.message);
  }
  SearchOutcome out = canonical_search(p.conclusion, cfg);
  HauptsatzResult r;
  r.nodes = out.nodes;
  if (out.kind == SearchOutcome::Kind::kProved) {
    r.ok = true;
    r.proof = std::move(out.proof);
    r.message = "cut-free proof found";
  } else if (out.kind == SearchOutcome::Kind::kRefuted) {
    r.message = "search saturated without a proof; the witness pools are too small";
  } else {
    r.message = "search budget exhausted";
  }
  return r;
}

}  // namespace g1lc
