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

// Abstract syntax of the second-order language.
//
// Formulas use a locally nameless representation: bound occurrences are de
// Bruijn indices into a single stack of binders (first- and second-order
// binders share the index space), free occurrences carry names.  Binders keep
// the name they were written with as a printing hint only.  Two formulas are
// equal iff they are alpha-equivalent, so the structural order below is the
// canonical order used for cedents and serialization.

#ifndef G1LC_SYNTAX_HPP_
#define G1LC_SYNTAX_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace g1lc {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t position = npos)
      : std::runtime_error(what), position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Individual constants, function symbols and relation constants.  The empty
// signature is the default.
struct Signature {
  std::set<std::string> constants;
  std::map<std::string, int> functions;
  std::map<std::string, int> relations;

  bool declares(const std::string& name) const;
  // Throws SyntaxError on a non-positive arity or a name used twice.
  void validate() const;
  // Union of two signatures; throws on conflicting declarations.
  Signature merged(const Signature& other) const;

  bool operator==(const Signature&) const = default;
};

// First-order term.
class Term {
 public:
  enum class Kind { kVariable, kConstant, kBound, kApply };

  static Term variable(std::string name);
  static Term constant(std::string name);
  static Term bound(int index);
  static Term apply(std::string function, std::vector<Term> args);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  int index() const { return index_; }
  const std::vector<Term>& args() const { return args_; }

  bool is_variable() const { return kind_ == Kind::kVariable; }
  bool is_locally_closed() const;

  friend std::strong_ordering operator<=>(const Term& a, const Term& b);
  friend bool operator==(const Term& a, const Term& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  std::size_t hash() const;

 private:
  Term() = default;

  Kind kind_ = Kind::kVariable;
  std::string name_;
  int index_ = -1;
  std::vector<Term> args_;
};

enum class Connective {
  kAtom,
  kNot,
  kOr,
  kAnd,
  kExists0,
  kForall0,
  kExists1,
  kForall1,
};

// Whether an atom's head is a free second-order variable, a relation
// constant, or a bound second-order variable.
enum class HeadKind { kVariable, kConstant, kBound };

class Abstract;

class Formula {
 public:
  // An empty handle; only useful as a placeholder.
  Formula() = default;

  static Formula atom(HeadKind head, std::string name, std::vector<Term> args);
  static Formula bound_atom(int index, std::vector<Term> args);
  // Free second-order variable applied to args (nullary when args is empty).
  static Formula variable_atom(std::string name, std::vector<Term> args = {});
  static Formula relation_atom(std::string name, std::vector<Term> args);

  static Formula negation(const Formula& f);
  static Formula disjunction(const Formula& a, const Formula& b);
  static Formula conjunction(const Formula& a, const Formula& b);
  // A > B is sugar for ~A | B; A <-> B for (~A | B) & (~B | A).
  static Formula implication(const Formula& a, const Formula& b);
  static Formula biconditional(const Formula& a, const Formula& b);

  // Binders over a named free variable of `body`; the variable becomes bound.
  static Formula exists0(const std::string& var, const Formula& body);
  static Formula forall0(const std::string& var, const Formula& body);
  // Throws SyntaxError if an occurrence of `var` in body has the wrong arity.
  static Formula exists1(const std::string& var, int arity, const Formula& body);
  static Formula forall1(const std::string& var, int arity, const Formula& body);
  static Formula quantifier(Connective kind, const std::string& var, int arity,
                            const Formula& body);

  // Raw binder around a body already in locally nameless form.
  static Formula binder(Connective kind, std::string hint, int arity,
                        const Formula& body);

  bool valid() const { return node_ != nullptr; }
  Connective kind() const;
  bool is_atomic() const { return kind() == Connective::kAtom; }
  bool is_quantifier() const;
  bool is_first_order_quantifier() const;
  bool is_second_order_quantifier() const;

  // Atom accessors.
  HeadKind head_kind() const;
  const std::string& head_name() const;
  int head_index() const;
  const std::vector<Term>& args() const;

  // Connective accessors: operand() for negation and binders (the body).
  const Formula& operand() const;
  const Formula& left() const;
  const Formula& right() const;

  // Binder accessors.
  const std::string& hint() const;
  int arity() const;  // second-order binder arity; atom argument count

  std::size_t hash() const;
  std::size_t size() const;
  int depth() const;

  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);
  friend bool operator==(const Formula& a, const Formula& b);

  struct Node;

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  friend class FormulaBuilder;

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// An n-ary second-order term \x1...xn. G.  The body keeps its parameters as
// loose de Bruijn indices: parameter j (0-based) is index n-1-j at depth 0.
class Abstract {
 public:
  Abstract() = default;
  // Closes the named parameters of `body`.  Parameters must be distinct.
  Abstract(const std::vector<std::string>& params, const Formula& body);

  static Abstract from_locally_nameless(std::vector<std::string> hints,
                                        Formula body);
  // \x1..xn. X(x1,..,xn) for a free second-order variable or relation.
  static Abstract of_variable(const std::string& name, int arity);
  static Abstract of_relation(const std::string& name, int arity);

  int arity() const { return static_cast<int>(hints_.size()); }
  const std::vector<std::string>& param_hints() const { return hints_; }
  const Formula& body() const { return body_; }

  // G(t1,...,tn); args must have arity() elements.
  Formula apply(const std::vector<Term>& args) const;

  friend std::strong_ordering operator<=>(const Abstract& a,
                                          const Abstract& b);
  friend bool operator==(const Abstract& a, const Abstract& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  std::vector<std::string> hints_;
  Formula body_;
};

// F(t) for a first-order quantified formula F = Qx.G.
Formula instantiate(const Formula& quantified, const Term& t);
// F(T) for a second-order quantified formula; throws on arity mismatch.
Formula instantiate(const Formula& quantified, const Abstract& t);

Formula subst_first(const Formula& f, const std::string& var, const Term& t);
Term subst_first(const Term& term, const std::string& var, const Term& t);
// Replaces the free second-order variable `var` of arity t.arity().
// Throws SyntaxError when an occurrence of var has a different arity.
Formula subst_second(const Formula& f, const std::string& var,
                     const Abstract& t);

bool alpha_eq(const Formula& f, const Formula& g);

// Free names.
std::set<std::string> free_first_order_variables(const Formula& f);
std::set<std::string> free_first_order_variables(const Term& t);
std::map<std::string, int> free_second_order_variables(const Formula& f);
std::set<std::string> constants_of(const Formula& f);
// Every free name: first-order variables, constants, function symbols,
// second-order variables and relation constants.
std::set<std::string> names_of(const Formula& f);
void collect_terms(const Formula& f, std::set<Term>& out);
// Constants, function symbols and relation constants occurring in f.
Signature signature_of(const Formula& f);

bool is_locally_closed(const Formula& f);
// No loose bound index >= depth (an abstract body with `depth` parameters).
bool is_closed_below(const Formula& f, int depth);
bool has_second_order_quantifier(const Formula& f);
bool has_quantifier(const Formula& f);
bool uses_functions(const Formula& f);

// Argument-position helpers exposed for the evaluators.
Formula open_binder_with_variable(const Formula& binder, const std::string& name);

// Picks `base`, base', base'', ... avoiding `taken`.
std::string fresh_name(const std::string& base,
                       const std::set<std::string>& taken);

}  // namespace g1lc

#endif  // G1LC_SYNTAX_HPP_
