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

#include "g1lc/fragments.hpp"

#include <cctype>
#include <stdexcept>

namespace g1lc {

namespace {

struct Occurrences {
  bool second_order = false;
  bool exists0_pos = false, exists0_neg = false;
  bool forall0_pos = false, forall0_neg = false;
  bool exists1_pos = false, exists1_neg = false;
  bool forall1_pos = false, forall1_neg = false;
};

void scan(const Formula& f, bool positive, Occurrences& o) {
  switch (f.kind()) {
    case Connective::kAtom:
      return;
    case Connective::kNot:
      scan(f.operand(), !positive, o);
      return;
    case Connective::kOr:
    case Connective::kAnd:
      scan(f.left(), positive, o);
      scan(f.right(), positive, o);
      return;
    case Connective::kExists0:
      (positive ? o.exists0_pos : o.exists0_neg) = true;
      break;
    case Connective::kForall0:
      (positive ? o.forall0_pos : o.forall0_neg) = true;
      break;
    case Connective::kExists1:
      o.second_order = true;
      (positive ? o.exists1_pos : o.exists1_neg) = true;
      break;
    case Connective::kForall1:
      o.second_order = true;
      (positive ? o.forall1_pos : o.forall1_neg) = true;
      break;
  }
  scan(f.operand(), positive, o);
}

bool valid_hint(const std::string& h, bool upper) {
  if (h.empty()) return false;
  unsigned char c = static_cast<unsigned char>(h[0]);
  return upper ? std::isupper(c) : std::islower(c);
}

Formula erase(const Formula& f, std::set<std::string>& taken) {
  switch (f.kind()) {
    case Connective::kAtom:
      return f;
    case Connective::kNot:
      return Formula::negation(erase(f.operand(), taken));
    case Connective::kOr:
      return Formula::disjunction(erase(f.left(), taken), erase(f.right(), taken));
    case Connective::kAnd:
      return Formula::conjunction(erase(f.left(), taken), erase(f.right(), taken));
    case Connective::kExists1:
    case Connective::kForall1: {
      std::string name = fresh_name(valid_hint(f.hint(), true) ? f.hint() : "X", taken);
      taken.insert(name);
      return erase(open_binder_with_variable(f, name), taken);
    }
    default:
      return Formula::binder(f.kind(), f.hint(), 0, erase(f.operand(), taken));
  }
}

Formula negated_nnf(const Formula& f);

Formula nnf_impl(const Formula& f) {
  switch (f.kind()) {
    case Connective::kAtom:
      return f;
    case Connective::kNot:
      return negated_nnf(f.operand());
    case Connective::kOr:
      return Formula::disjunction(nnf_impl(f.left()), nnf_impl(f.right()));
    case Connective::kAnd:
      return Formula::conjunction(nnf_impl(f.left()), nnf_impl(f.right()));
    default:
      return Formula::binder(f.kind(), f.hint(), f.is_second_order_quantifier() ? f.arity() : 0,
                             nnf_impl(f.operand()));
  }
}

Connective dual(Connective k) {
  switch (k) {
    case Connective::kExists0: return Connective::kForall0;
    case Connective::kForall0: return Connective::kExists0;
    case Connective::kExists1: return Connective::kForall1;
    case Connective::kForall1: return Connective::kExists1;
    default: return k;
  }
}

Formula negated_nnf(const Formula& f) {
  switch (f.kind()) {
    case Connective::kAtom:
      return Formula::negation(f);
    case Connective::kNot:
      return nnf_impl(f.operand());
    case Connective::kOr:
      return Formula::conjunction(negated_nnf(f.left()), negated_nnf(f.right()));
    case Connective::kAnd:
      return Formula::disjunction(negated_nnf(f.left()), negated_nnf(f.right()));
    default:
      return Formula::binder(dual(f.kind()), f.hint(),
                             f.is_second_order_quantifier() ? f.arity() : 0,
                             negated_nnf(f.operand()));
  }
}

struct Prenex {
  std::vector<std::pair<Connective, std::string>> prefix;
  Formula matrix;
};

// f in negation normal form; bound variables are opened under fresh names.
Prenex prenex(const Formula& f, std::set<std::string>& taken) {
  switch (f.kind()) {
    case Connective::kAtom:
    case Connective::kNot:
      return {{}, f};
    case Connective::kOr:
    case Connective::kAnd: {
      Prenex l = prenex(f.left(), taken);
      Prenex r = prenex(f.right(), taken);
      l.prefix.insert(l.prefix.end(), r.prefix.begin(), r.prefix.end());
      l.matrix = f.kind() == Connective::kOr ? Formula::disjunction(l.matrix, r.matrix)
                                             : Formula::conjunction(l.matrix, r.matrix);
      return l;
    }
    default: {
      std::string name = fresh_name(valid_hint(f.hint(), false) ? f.hint() : "x", taken);
      taken.insert(name);
      Prenex inner = prenex(open_binder_with_variable(f, name), taken);
      inner.prefix.insert(inner.prefix.begin(), {f.kind(), name});
      return inner;
    }
  }
}

}  // namespace

SequentClass classify_sequent(const Sequent& s) {
  Occurrences o;
  for (const auto& f : s.antecedent()) scan(f, false, o);
  for (const auto& f : s.succedent()) scan(f, true, o);
  SequentClass c;
  c.is_first_order = !o.second_order;
  c.is_sigma01 = c.is_first_order && !o.exists0_neg && !o.forall0_pos;
  c.is_pi01 = c.is_first_order && !o.exists0_pos && !o.forall0_neg;
  c.is_pi1 = !o.forall1_neg && !o.exists1_pos;
  return c;
}

bool classify_formula_pi1n(const Formula& g, int n) {
  Formula f = g;
  int blocks = 0;
  Connective first = Connective::kAtom, last = Connective::kAtom;
  while (f.is_second_order_quantifier()) {
    if (f.kind() != last) {
      if (blocks == 0) first = f.kind();
      ++blocks;
      last = f.kind();
    }
    f = f.operand();
  }
  if (has_second_order_quantifier(f)) return false;
  if (blocks == 0) return true;
  return first == Connective::kForall1 ? blocks <= n : blocks + 1 <= n;
}

bool classify_abstract(const Abstract& t, int n) { return classify_formula_pi1n(t.body(), n); }

Sequent erase_second_order(const Sequent& s) {
  if (!classify_sequent(s).is_pi1) {
    throw std::invalid_argument("erase_second_order: the sequent is not in the pi1 class");
  }
  std::set<std::string> taken = names_of(s);
  std::vector<Formula> ant, suc;
  for (const auto& f : s.antecedent()) ant.push_back(erase(f, taken));
  for (const auto& f : s.succedent()) suc.push_back(erase(f, taken));
  return Sequent(std::move(ant), std::move(suc));
}

Formula nnf(const Formula& f) { return nnf_impl(f); }

std::pair<Sequent, Signature> herbrand_nf(const Sequent& s, const Signature& sig) {
  if (!classify_sequent(s).is_first_order) {
    throw std::invalid_argument("herbrand_nf: the sequent is not first order");
  }
  if (s.empty()) return {s, sig};
  Formula body;
  if (!s.antecedent().empty()) {
    Formula conj = s.antecedent().front();
    for (std::size_t i = 1; i < s.antecedent().size(); ++i) {
      conj = Formula::conjunction(conj, s.antecedent()[i]);
    }
    body = Formula::negation(conj);
  }
  for (const auto& f : s.succedent()) {
    body = body.valid() ? Formula::disjunction(body, f) : f;
  }
  std::set<std::string> taken = names_of(s);
  taken.insert(sig.constants.begin(), sig.constants.end());
  for (const auto& [n, a] : sig.functions) taken.insert(n);
  for (const auto& [n, a] : sig.relations) taken.insert(n);

  Prenex p = prenex(nnf(body), taken);
  Signature out = sig;
  std::vector<std::string> existentials;
  Formula matrix = p.matrix;
  for (const auto& [kind, name] : p.prefix) {
    if (kind == Connective::kExists0) {
      existentials.push_back(name);
      continue;
    }
    Term replacement = Term::constant("");
    if (existentials.empty()) {
      std::string c = fresh_name("c", taken);
      taken.insert(c);
      out.constants.insert(c);
      replacement = Term::constant(c);
    } else {
      std::string fn = fresh_name("f", taken);
      taken.insert(fn);
      out.functions[fn] = static_cast<int>(existentials.size());
      std::vector<Term> args;
      for (const auto& e : existentials) args.push_back(Term::variable(e));
      replacement = Term::apply(fn, std::move(args));
    }
    matrix = subst_first(matrix, name, replacement);
  }
  for (auto it = existentials.rbegin(); it != existentials.rend(); ++it) {
    matrix = Formula::exists0(*it, matrix);
  }
  return {Sequent({}, {matrix}), out};
}

}  // namespace g1lc
