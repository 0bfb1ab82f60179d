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

#include "g1lc/syntax.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

namespace g1lc {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

// ---------------------------------------------------------------------------
// Signature

bool Signature::declares(const std::string& name) const {
  return constants.count(name) || functions.count(name) ||
         relations.count(name);
}

void Signature::validate() const {
  for (const auto& [name, arity] : functions) {
    if (arity < 1) throw SyntaxError("function symbol '" + name + "' needs arity >= 1");
    if (constants.count(name)) throw SyntaxError("name '" + name + "' declared twice");
  }
  for (const auto& [name, arity] : relations) {
    if (arity < 1) throw SyntaxError("relation constant '" + name + "' needs arity >= 1");
    if (constants.count(name) || functions.count(name)) {
      throw SyntaxError("name '" + name + "' declared twice");
    }
  }
}

Signature Signature::merged(const Signature& other) const {
  Signature out = *this;
  for (const auto& c : other.constants) out.constants.insert(c);
  for (const auto& [name, arity] : other.functions) {
    auto [it, inserted] = out.functions.emplace(name, arity);
    if (!inserted && it->second != arity) {
      throw SyntaxError("conflicting arity for function symbol '" + name + "'");
    }
  }
  for (const auto& [name, arity] : other.relations) {
    auto [it, inserted] = out.relations.emplace(name, arity);
    if (!inserted && it->second != arity) {
      throw SyntaxError("conflicting arity for relation constant '" + name + "'");
    }
  }
  out.validate();
  return out;
}

// ---------------------------------------------------------------------------
// Term

Term Term::variable(std::string name) {
  Term t;
  t.kind_ = Kind::kVariable;
  t.name_ = std::move(name);
  return t;
}

Term Term::constant(std::string name) {
  Term t;
  t.kind_ = Kind::kConstant;
  t.name_ = std::move(name);
  return t;
}

Term Term::bound(int index) {
  Term t;
  t.kind_ = Kind::kBound;
  t.index_ = index;
  return t;
}

Term Term::apply(std::string function, std::vector<Term> args) {
  Term t;
  t.kind_ = Kind::kApply;
  t.name_ = std::move(function);
  t.args_ = std::move(args);
  return t;
}

bool Term::is_locally_closed() const {
  if (kind_ == Kind::kBound) return false;
  return std::all_of(args_.begin(), args_.end(),
                     [](const Term& a) { return a.is_locally_closed(); });
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (a.kind_ == Term::Kind::kBound) return a.index_ <=> b.index_;
  if (auto c = a.name_ <=> b.name_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.args_.begin(), a.args_.end(),
                                                b.args_.begin(), b.args_.end());
}

std::size_t Term::hash() const {
  std::size_t h = static_cast<std::size_t>(kind_) * 31 + 7;
  if (kind_ == Kind::kBound) return mix(h, static_cast<std::size_t>(index_));
  h = mix(h, std::hash<std::string>{}(name_));
  for (const auto& a : args_) h = mix(h, a.hash());
  return h;
}

// ---------------------------------------------------------------------------
// Formula nodes

struct Formula::Node {
  Connective kind = Connective::kAtom;
  HeadKind head = HeadKind::kVariable;
  std::string name;  // atom head name, or binder hint
  int index = -1;    // bound atom head
  int arity = 0;     // second-order binder arity
  std::vector<Term> args;
  Formula a;
  Formula b;
  std::size_t hash = 0;
  std::size_t size = 1;
  int depth = 0;
};

class FormulaBuilder {
 public:
  static Formula make(Formula::Node n) {
    std::size_t h = static_cast<std::size_t>(n.kind) * 1000003u + 17;
    switch (n.kind) {
      case Connective::kAtom:
        h = mix(h, static_cast<std::size_t>(n.head));
        h = mix(h, n.head == HeadKind::kBound
                       ? static_cast<std::size_t>(n.index)
                       : std::hash<std::string>{}(n.name));
        for (const auto& t : n.args) h = mix(h, t.hash());
        n.size = 1;
        n.depth = 0;
        break;
      case Connective::kNot:
        h = mix(h, n.a.hash());
        n.size = 1 + n.a.size();
        n.depth = 1 + n.a.depth();
        break;
      case Connective::kOr:
      case Connective::kAnd:
        h = mix(mix(h, n.a.hash()), n.b.hash());
        n.size = 1 + n.a.size() + n.b.size();
        n.depth = 1 + std::max(n.a.depth(), n.b.depth());
        break;
      default:
        h = mix(mix(h, static_cast<std::size_t>(n.arity)), n.a.hash());
        n.size = 1 + n.a.size();
        n.depth = 1 + n.a.depth();
        break;
    }
    n.hash = h;
    return Formula(std::make_shared<const Formula::Node>(std::move(n)));
  }
};

namespace {

Formula make_atom(HeadKind head, std::string name, int index,
                  std::vector<Term> args) {
  Formula::Node n;
  n.kind = Connective::kAtom;
  n.head = head;
  n.name = std::move(name);
  n.index = index;
  n.args = std::move(args);
  return FormulaBuilder::make(std::move(n));
}

Formula make_unary(const Formula& a) {
  Formula::Node n;
  n.kind = Connective::kNot;
  n.a = a;
  return FormulaBuilder::make(std::move(n));
}

Formula make_binary(Connective kind, const Formula& a, const Formula& b) {
  Formula::Node n;
  n.kind = kind;
  n.a = a;
  n.b = b;
  return FormulaBuilder::make(std::move(n));
}

Formula make_binder(Connective kind, std::string hint, int arity,
                    const Formula& body) {
  Formula::Node n;
  n.kind = kind;
  n.name = std::move(hint);
  n.arity = arity;
  n.a = body;
  return FormulaBuilder::make(std::move(n));
}

// Rebuilds `f` with the same shape but new children; reuses the node when
// nothing changed.
Formula rebuild(const Formula& f, const Formula& a, const Formula& b = {}) {
  switch (f.kind()) {
    case Connective::kNot:
      if (a.hash() == f.operand().hash() && a == f.operand()) return f;
      return make_unary(a);
    case Connective::kOr:
    case Connective::kAnd:
      if (a == f.left() && b == f.right()) return f;
      return make_binary(f.kind(), a, b);
    default:
      if (a == f.operand()) return f;
      return make_binder(f.kind(), f.hint(), f.arity(), a);
  }
}

// --- term index manipulation ----------------------------------------------

Term shift(const Term& t, int by, int cutoff) {
  switch (t.kind()) {
    case Term::Kind::kBound:
      return t.index() >= cutoff ? Term::bound(t.index() + by) : t;
    case Term::Kind::kApply: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(shift(a, by, cutoff));
      return Term::apply(t.name(), std::move(args));
    }
    default:
      return t;
  }
}

std::vector<Term> shift_all(const std::vector<Term>& ts, int by, int cutoff) {
  std::vector<Term> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(shift(t, by, cutoff));
  return out;
}

// Replaces Bound(level) by rep and lowers indices above level.
Term drop_bound(const Term& t, int level, const Term& rep) {
  switch (t.kind()) {
    case Term::Kind::kBound:
      if (t.index() == level) return rep;
      if (t.index() > level) return Term::bound(t.index() - 1);
      return t;
    case Term::Kind::kApply: {
      std::vector<Term> args;
      for (const auto& a : t.args()) args.push_back(drop_bound(a, level, rep));
      return Term::apply(t.name(), std::move(args));
    }
    default:
      return t;
  }
}

Term close_term(const Term& t, const std::string& var, int level) {
  switch (t.kind()) {
    case Term::Kind::kVariable:
      return t.name() == var ? Term::bound(level) : t;
    case Term::Kind::kBound:
      return t.index() >= level ? Term::bound(t.index() + 1) : t;
    case Term::Kind::kApply: {
      std::vector<Term> args;
      for (const auto& a : t.args()) args.push_back(close_term(a, var, level));
      return Term::apply(t.name(), std::move(args));
    }
    default:
      return t;
  }
}

Term replace_var(const Term& t, const std::string& var, const Term& rep) {
  switch (t.kind()) {
    case Term::Kind::kVariable:
      return t.name() == var ? rep : t;
    case Term::Kind::kApply: {
      std::vector<Term> args;
      for (const auto& a : t.args()) args.push_back(replace_var(a, var, rep));
      return Term::apply(t.name(), std::move(args));
    }
    default:
      return t;
  }
}

// --- formula index manipulation -------------------------------------------

// Substitutes the parameters of an abstract body.  At internal depth k,
// Bound(k + n - 1 - j) is parameter j.
Term instantiate_param_term(const Term& t, int k, int n,
                            const std::vector<Term>& args) {
  switch (t.kind()) {
    case Term::Kind::kBound: {
      int i = t.index();
      if (i < k) return t;
      if (i < k + n) return shift(args[n - 1 - (i - k)], k, 0);
      throw std::logic_error("abstract body is not locally closed");
    }
    case Term::Kind::kApply: {
      std::vector<Term> out;
      for (const auto& a : t.args()) out.push_back(instantiate_param_term(a, k, n, args));
      return Term::apply(t.name(), std::move(out));
    }
    default:
      return t;
  }
}

Formula instantiate_params(const Formula& body, int k, int n,
                           const std::vector<Term>& args) {
  switch (body.kind()) {
    case Connective::kAtom: {
      std::vector<Term> out;
      out.reserve(body.args().size());
      for (const auto& a : body.args()) out.push_back(instantiate_param_term(a, k, n, args));
      if (body.head_kind() == HeadKind::kBound && body.head_index() >= k) {
        throw std::logic_error("abstract body refers to an outer binder");
      }
      return make_atom(body.head_kind(), body.head_name(), body.head_index(), std::move(out));
    }
    case Connective::kNot:
      return rebuild(body, instantiate_params(body.operand(), k, n, args));
    case Connective::kOr:
    case Connective::kAnd:
      return rebuild(body, instantiate_params(body.left(), k, n, args),
                     instantiate_params(body.right(), k, n, args));
    default:
      return rebuild(body, instantiate_params(body.operand(), k + 1, n, args));
  }
}

// Removes first-order binder `target` (relative to depth 0) substituting t.
Formula drop_first(const Formula& f, int target, const Term& t, int d) {
  switch (f.kind()) {
    case Connective::kAtom: {
      std::vector<Term> out;
      out.reserve(f.args().size());
      Term rep = shift(t, d, 0);
      for (const auto& a : f.args()) out.push_back(drop_bound(a, target + d, rep));
      int index = f.head_index();
      if (f.head_kind() == HeadKind::kBound) {
        if (index == target + d) throw std::logic_error("first-order index used as predicate");
        if (index > target + d) --index;
      }
      return make_atom(f.head_kind(), f.head_name(), index, std::move(out));
    }
    case Connective::kNot:
      return rebuild(f, drop_first(f.operand(), target, t, d));
    case Connective::kOr:
    case Connective::kAnd:
      return rebuild(f, drop_first(f.left(), target, t, d),
                     drop_first(f.right(), target, t, d));
    default:
      return rebuild(f, drop_first(f.operand(), target, t, d + 1));
  }
}

// Removes second-order binder `target` substituting the abstract.
Formula drop_second(const Formula& f, int target, const Abstract& abs, int d) {
  switch (f.kind()) {
    case Connective::kAtom: {
      int level = target + d;
      std::vector<Term> args = shift_all(f.args(), -1, level + 1);
      if (f.head_kind() == HeadKind::kBound && f.head_index() == level) {
        if (static_cast<int>(args.size()) != abs.arity()) {
          throw SyntaxError("abstract arity does not match the bound variable");
        }
        return instantiate_params(abs.body(), 0, abs.arity(), args);
      }
      int index = f.head_index();
      if (f.head_kind() == HeadKind::kBound && index > level) --index;
      return make_atom(f.head_kind(), f.head_name(), index, std::move(args));
    }
    case Connective::kNot:
      return rebuild(f, drop_second(f.operand(), target, abs, d));
    case Connective::kOr:
    case Connective::kAnd:
      return rebuild(f, drop_second(f.left(), target, abs, d),
                     drop_second(f.right(), target, abs, d));
    default:
      return rebuild(f, drop_second(f.operand(), target, abs, d + 1));
  }
}

Formula close_first(const Formula& f, const std::string& var, int d) {
  switch (f.kind()) {
    case Connective::kAtom: {
      std::vector<Term> out;
      for (const auto& a : f.args()) out.push_back(close_term(a, var, d));
      int index = f.head_index();
      if (f.head_kind() == HeadKind::kBound && index >= d) ++index;
      return make_atom(f.head_kind(), f.head_name(), index, std::move(out));
    }
    case Connective::kNot:
      return rebuild(f, close_first(f.operand(), var, d));
    case Connective::kOr:
    case Connective::kAnd:
      return rebuild(f, close_first(f.left(), var, d), close_first(f.right(), var, d));
    default:
      return rebuild(f, close_first(f.operand(), var, d + 1));
  }
}

Formula close_second(const Formula& f, const std::string& var, int arity, int d) {
  switch (f.kind()) {
    case Connective::kAtom: {
      std::vector<Term> args = shift_all(f.args(), 1, d);
      if (f.head_kind() == HeadKind::kVariable && f.head_name() == var) {
        if (static_cast<int>(args.size()) != arity) {
          throw SyntaxError("second-order variable '" + var + "' has arity " +
                            std::to_string(arity) + " but is applied to " +
                            std::to_string(args.size()) + " argument(s)");
        }
        return make_atom(HeadKind::kBound, "", d, std::move(args));
      }
      int index = f.head_index();
      if (f.head_kind() == HeadKind::kBound && index >= d) ++index;
      return make_atom(f.head_kind(), f.head_name(), index, std::move(args));
    }
    case Connective::kNot:
      return rebuild(f, close_second(f.operand(), var, arity, d));
    case Connective::kOr:
    case Connective::kAnd:
      return rebuild(f, close_second(f.left(), var, arity, d),
                     close_second(f.right(), var, arity, d));
    default:
      return rebuild(f, close_second(f.operand(), var, arity, d + 1));
  }
}

Formula replace_free_first(const Formula& f, const std::string& var,
                           const Term& t, int d) {
  switch (f.kind()) {
    case Connective::kAtom: {
      Term rep = shift(t, d, 0);
      std::vector<Term> out;
      for (const auto& a : f.args()) out.push_back(replace_var(a, var, rep));
      return make_atom(f.head_kind(), f.head_name(), f.head_index(), std::move(out));
    }
    case Connective::kNot:
      return rebuild(f, replace_free_first(f.operand(), var, t, d));
    case Connective::kOr:
    case Connective::kAnd:
      return rebuild(f, replace_free_first(f.left(), var, t, d),
                     replace_free_first(f.right(), var, t, d));
    default:
      return rebuild(f, replace_free_first(f.operand(), var, t, d + 1));
  }
}

Formula replace_free_second(const Formula& f, const std::string& var,
                            const Abstract& abs) {
  switch (f.kind()) {
    case Connective::kAtom:
      if (f.head_kind() == HeadKind::kVariable && f.head_name() == var) {
        if (static_cast<int>(f.args().size()) != abs.arity()) {
          throw SyntaxError("arity mismatch substituting for '" + var + "'");
        }
        return instantiate_params(abs.body(), 0, abs.arity(), f.args());
      }
      return f;
    case Connective::kNot:
      return rebuild(f, replace_free_second(f.operand(), var, abs));
    case Connective::kOr:
    case Connective::kAnd:
      return rebuild(f, replace_free_second(f.left(), var, abs),
                     replace_free_second(f.right(), var, abs));
    default:
      return rebuild(f, replace_free_second(f.operand(), var, abs));
  }
}

bool term_closed_below(const Term& t, int d) {
  if (t.kind() == Term::Kind::kBound) return t.index() < d;
  return std::all_of(t.args().begin(), t.args().end(),
                     [d](const Term& a) { return term_closed_below(a, d); });
}

bool closed_below(const Formula& f, int d) {
  switch (f.kind()) {
    case Connective::kAtom:
      if (f.head_kind() == HeadKind::kBound && f.head_index() >= d) return false;
      return std::all_of(f.args().begin(), f.args().end(),
                         [d](const Term& a) { return term_closed_below(a, d); });
    case Connective::kNot:
      return closed_below(f.operand(), d);
    case Connective::kOr:
    case Connective::kAnd:
      return closed_below(f.left(), d) && closed_below(f.right(), d);
    default:
      return closed_below(f.operand(), d + 1);
  }
}

template <class Fn>
void for_each_atom(const Formula& f, Fn&& fn) {
  switch (f.kind()) {
    case Connective::kAtom:
      fn(f);
      break;
    case Connective::kNot:
      for_each_atom(f.operand(), fn);
      break;
    case Connective::kOr:
    case Connective::kAnd:
      for_each_atom(f.left(), fn);
      for_each_atom(f.right(), fn);
      break;
    default:
      for_each_atom(f.operand(), fn);
      break;
  }
}

template <class Fn>
void for_each_subterm(const Term& t, Fn&& fn) {
  fn(t);
  for (const auto& a : t.args()) for_each_subterm(a, fn);
}

}  // namespace

// ---------------------------------------------------------------------------
// Formula public API

Formula Formula::atom(HeadKind head, std::string name, std::vector<Term> args) {
  if (head == HeadKind::kBound) throw std::invalid_argument("use bound_atom");
  return make_atom(head, std::move(name), -1, std::move(args));
}

Formula Formula::bound_atom(int index, std::vector<Term> args) {
  return make_atom(HeadKind::kBound, "", index, std::move(args));
}

Formula Formula::variable_atom(std::string name, std::vector<Term> args) {
  return make_atom(HeadKind::kVariable, std::move(name), -1, std::move(args));
}

Formula Formula::relation_atom(std::string name, std::vector<Term> args) {
  return make_atom(HeadKind::kConstant, std::move(name), -1, std::move(args));
}

Formula Formula::negation(const Formula& f) { return make_unary(f); }

Formula Formula::disjunction(const Formula& a, const Formula& b) {
  return make_binary(Connective::kOr, a, b);
}

Formula Formula::conjunction(const Formula& a, const Formula& b) {
  return make_binary(Connective::kAnd, a, b);
}

Formula Formula::implication(const Formula& a, const Formula& b) {
  return disjunction(negation(a), b);
}

Formula Formula::biconditional(const Formula& a, const Formula& b) {
  return conjunction(implication(a, b), implication(b, a));
}

Formula Formula::exists0(const std::string& var, const Formula& body) {
  return make_binder(Connective::kExists0, var, 0, close_first(body, var, 0));
}

Formula Formula::forall0(const std::string& var, const Formula& body) {
  return make_binder(Connective::kForall0, var, 0, close_first(body, var, 0));
}

Formula Formula::exists1(const std::string& var, int arity, const Formula& body) {
  return make_binder(Connective::kExists1, var, arity, close_second(body, var, arity, 0));
}

Formula Formula::forall1(const std::string& var, int arity, const Formula& body) {
  return make_binder(Connective::kForall1, var, arity, close_second(body, var, arity, 0));
}

Formula Formula::quantifier(Connective kind, const std::string& var, int arity,
                            const Formula& body) {
  switch (kind) {
    case Connective::kExists0: return exists0(var, body);
    case Connective::kForall0: return forall0(var, body);
    case Connective::kExists1: return exists1(var, arity, body);
    case Connective::kForall1: return forall1(var, arity, body);
    default: throw std::invalid_argument("not a quantifier");
  }
}

Formula Formula::binder(Connective kind, std::string hint, int arity,
                        const Formula& body) {
  return make_binder(kind, std::move(hint), arity, body);
}

Connective Formula::kind() const { return node_->kind; }

bool Formula::is_quantifier() const {
  return is_first_order_quantifier() || is_second_order_quantifier();
}

bool Formula::is_first_order_quantifier() const {
  return kind() == Connective::kExists0 || kind() == Connective::kForall0;
}

bool Formula::is_second_order_quantifier() const {
  return kind() == Connective::kExists1 || kind() == Connective::kForall1;
}

HeadKind Formula::head_kind() const { return node_->head; }
const std::string& Formula::head_name() const { return node_->name; }
int Formula::head_index() const { return node_->index; }
const std::vector<Term>& Formula::args() const { return node_->args; }
const Formula& Formula::operand() const { return node_->a; }
const Formula& Formula::left() const { return node_->a; }
const Formula& Formula::right() const { return node_->b; }
const std::string& Formula::hint() const { return node_->name; }

int Formula::arity() const {
  if (kind() == Connective::kAtom) return static_cast<int>(node_->args.size());
  return node_->arity;
}

std::size_t Formula::hash() const { return node_ ? node_->hash : 0; }
std::size_t Formula::size() const { return node_->size; }
int Formula::depth() const { return node_->depth; }

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (!a.node_) return std::strong_ordering::less;
  if (!b.node_) return std::strong_ordering::greater;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Connective::kAtom: {
      if (auto c = a.head_kind() <=> b.head_kind(); c != 0) return c;
      if (a.head_kind() == HeadKind::kBound) {
        if (auto c = a.head_index() <=> b.head_index(); c != 0) return c;
      } else if (auto c = a.head_name() <=> b.head_name(); c != 0) {
        return c;
      }
      return std::lexicographical_compare_three_way(a.args().begin(), a.args().end(),
                                                    b.args().begin(), b.args().end());
    }
    case Connective::kNot:
      return a.operand() <=> b.operand();
    case Connective::kOr:
    case Connective::kAnd:
      if (auto c = a.left() <=> b.left(); c != 0) return c;
      return a.right() <=> b.right();
    default:
      if (auto c = a.arity() <=> b.arity(); c != 0) return c;
      return a.operand() <=> b.operand();
  }
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return (a <=> b) == std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Abstract

Abstract::Abstract(const std::vector<std::string>& params, const Formula& body)
    : hints_(params) {
  std::set<std::string> seen(params.begin(), params.end());
  if (seen.size() != params.size()) {
    throw SyntaxError("abstract parameters must be distinct");
  }
  Formula b = body;
  for (const auto& p : params) b = close_first(b, p, 0);
  body_ = b;
}

Abstract Abstract::from_locally_nameless(std::vector<std::string> hints,
                                         Formula body) {
  Abstract a;
  a.hints_ = std::move(hints);
  a.body_ = std::move(body);
  return a;
}

Abstract Abstract::of_variable(const std::string& name, int arity) {
  std::vector<Term> args;
  std::vector<std::string> hints;
  for (int j = 0; j < arity; ++j) {
    args.push_back(Term::bound(arity - 1 - j));
    hints.push_back("x" + std::to_string(j + 1));
  }
  return from_locally_nameless(std::move(hints), Formula::variable_atom(name, std::move(args)));
}

Abstract Abstract::of_relation(const std::string& name, int arity) {
  std::vector<Term> args;
  std::vector<std::string> hints;
  for (int j = 0; j < arity; ++j) {
    args.push_back(Term::bound(arity - 1 - j));
    hints.push_back("x" + std::to_string(j + 1));
  }
  return from_locally_nameless(std::move(hints), Formula::relation_atom(name, std::move(args)));
}

Formula Abstract::apply(const std::vector<Term>& args) const {
  if (static_cast<int>(args.size()) != arity()) {
    throw SyntaxError("abstract applied to the wrong number of arguments");
  }
  return instantiate_params(body_, 0, arity(), args);
}

std::strong_ordering operator<=>(const Abstract& a, const Abstract& b) {
  if (auto c = a.arity() <=> b.arity(); c != 0) return c;
  return a.body_ <=> b.body_;
}

// ---------------------------------------------------------------------------
// Substitution

Formula instantiate(const Formula& quantified, const Term& t) {
  if (!quantified.is_first_order_quantifier()) {
    throw std::invalid_argument("instantiate: not a first-order quantifier");
  }
  return drop_first(quantified.operand(), 0, t, 0);
}

Formula instantiate(const Formula& quantified, const Abstract& t) {
  if (!quantified.is_second_order_quantifier()) {
    throw std::invalid_argument("instantiate: not a second-order quantifier");
  }
  if (quantified.arity() != t.arity()) {
    throw SyntaxError("abstract of arity " + std::to_string(t.arity()) +
                      " for a quantifier of arity " + std::to_string(quantified.arity()));
  }
  return drop_second(quantified.operand(), 0, t, 0);
}

Formula subst_first(const Formula& f, const std::string& var, const Term& t) {
  return replace_free_first(f, var, t, 0);
}

Term subst_first(const Term& term, const std::string& var, const Term& t) {
  return replace_var(term, var, t);
}

Formula subst_second(const Formula& f, const std::string& var, const Abstract& t) {
  return replace_free_second(f, var, t);
}

bool alpha_eq(const Formula& f, const Formula& g) { return f == g; }

Formula open_binder_with_variable(const Formula& binder, const std::string& name) {
  if (binder.is_first_order_quantifier()) return instantiate(binder, Term::variable(name));
  return instantiate(binder, Abstract::of_variable(name, binder.arity()));
}

// ---------------------------------------------------------------------------
// Free names

std::set<std::string> free_first_order_variables(const Term& t) {
  std::set<std::string> out;
  for_each_subterm(t, [&](const Term& s) {
    if (s.kind() == Term::Kind::kVariable) out.insert(s.name());
  });
  return out;
}

std::set<std::string> free_first_order_variables(const Formula& f) {
  std::set<std::string> out;
  for_each_atom(f, [&](const Formula& a) {
    for (const auto& t : a.args()) {
      for_each_subterm(t, [&](const Term& s) {
        if (s.kind() == Term::Kind::kVariable) out.insert(s.name());
      });
    }
  });
  return out;
}

std::map<std::string, int> free_second_order_variables(const Formula& f) {
  std::map<std::string, int> out;
  for_each_atom(f, [&](const Formula& a) {
    if (a.head_kind() == HeadKind::kVariable) out.emplace(a.head_name(), a.arity());
  });
  return out;
}

std::set<std::string> constants_of(const Formula& f) {
  std::set<std::string> out;
  for_each_atom(f, [&](const Formula& a) {
    for (const auto& t : a.args()) {
      for_each_subterm(t, [&](const Term& s) {
        if (s.kind() == Term::Kind::kConstant) out.insert(s.name());
      });
    }
  });
  return out;
}

std::set<std::string> names_of(const Formula& f) {
  std::set<std::string> out;
  for_each_atom(f, [&](const Formula& a) {
    if (a.head_kind() != HeadKind::kBound) out.insert(a.head_name());
    for (const auto& t : a.args()) {
      for_each_subterm(t, [&](const Term& s) {
        if (s.kind() != Term::Kind::kBound) out.insert(s.name());
      });
    }
  });
  return out;
}

void collect_terms(const Formula& f, std::set<Term>& out) {
  for_each_atom(f, [&](const Formula& a) {
    for (const auto& t : a.args()) {
      for_each_subterm(t, [&](const Term& s) {
        if (s.is_locally_closed()) out.insert(s);
      });
    }
  });
}

Signature signature_of(const Formula& f) {
  Signature sig;
  for_each_atom(f, [&](const Formula& a) {
    if (a.head_kind() == HeadKind::kConstant) sig.relations.emplace(a.head_name(), a.arity());
    for (const auto& t : a.args()) {
      for_each_subterm(t, [&](const Term& s) {
        if (s.kind() == Term::Kind::kConstant) sig.constants.insert(s.name());
        if (s.kind() == Term::Kind::kApply) {
          sig.functions.emplace(s.name(), static_cast<int>(s.args().size()));
        }
      });
    }
  });
  return sig;
}

bool is_locally_closed(const Formula& f) { return closed_below(f, 0); }
bool is_closed_below(const Formula& f, int depth) { return closed_below(f, depth); }

bool has_second_order_quantifier(const Formula& f) {
  switch (f.kind()) {
    case Connective::kAtom: return false;
    case Connective::kNot: return has_second_order_quantifier(f.operand());
    case Connective::kOr:
    case Connective::kAnd:
      return has_second_order_quantifier(f.left()) || has_second_order_quantifier(f.right());
    case Connective::kExists1:
    case Connective::kForall1: return true;
    default: return has_second_order_quantifier(f.operand());
  }
}

bool has_quantifier(const Formula& f) {
  switch (f.kind()) {
    case Connective::kAtom: return false;
    case Connective::kNot: return has_quantifier(f.operand());
    case Connective::kOr:
    case Connective::kAnd: return has_quantifier(f.left()) || has_quantifier(f.right());
    default: return true;
  }
}

bool uses_functions(const Formula& f) {
  bool found = false;
  for_each_atom(f, [&](const Formula& a) {
    for (const auto& t : a.args()) {
      for_each_subterm(t, [&](const Term& s) {
        if (s.kind() == Term::Kind::kApply) found = true;
      });
    }
  });
  return found;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
  std::string name = base;
  while (taken.count(name)) name += '\'';
  return name;
}

}  // namespace g1lc
