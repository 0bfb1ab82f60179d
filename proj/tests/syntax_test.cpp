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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "g1lc/parser.hpp"
#include "g1lc/syntax.hpp"

namespace g1lc {
namespace {

Signature consts(std::initializer_list<std::string> cs) {
  Signature sig;
  sig.constants = cs;
  return sig;
}

TEST(ParseTest, SecondOrderExistential) {
  Formula f = parse_formula("EX X:1. X(c)", consts({"c"}));
  ASSERT_EQ(f.kind(), Connective::kExists1);
  EXPECT_EQ(f.arity(), 1);
  Formula body = open_binder_with_variable(f, "X");
  EXPECT_EQ(body, Formula::variable_atom("X", {Term::constant("c")}));
}

TEST(ParseTest, ImplicationIsSugar) {
  EXPECT_EQ(parse_formula("A > B"), parse_formula("~A | B"));
  EXPECT_EQ(parse_formula("A <-> B"), parse_formula("(~A | B) & (~B | A)"));
}

TEST(ParseTest, ArityMismatchIsRejected) {
  ParseContext ctx;
  ctx.variable_arity["X"] = 1;
  EXPECT_THROW(parse_formula("X(c, d)", ctx), SyntaxError);
  EXPECT_THROW(parse_formula("X(c) & X(c, d)"), SyntaxError);
}

TEST(ParseTest, SyntaxErrorCarriesPosition) {
  try {
    parse_formula("P & & Q");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_NE(e.position(), SyntaxError::npos);
  }
}

TEST(ParseTest, Precedence) {
  EXPECT_EQ(parse_formula("~P & Q | R"), parse_formula("((~P) & Q) | R"));
  EXPECT_EQ(parse_formula("P > Q > R"), parse_formula("P > (Q > R)"));
  EXPECT_EQ(parse_formula("ALL x. R(x) | Q(x)"), parse_formula("ALL x. (R(x) | Q(x))"));
}

TEST(ParseTest, DocumentHeader) {
  Document d = parse_document("# comment\nconst c\nfun f:1\nrel R:2\nvar X:1\nR(c, f(c))\n");
  EXPECT_EQ(d.context.signature.constants.count("c"), 1u);
  EXPECT_EQ(d.context.signature.functions.at("f"), 1);
  EXPECT_EQ(d.context.signature.relations.at("R"), 2);
  EXPECT_EQ(d.context.variable_arity.at("X"), 1);
  ASSERT_EQ(d.lines.size(), 1u);
}

TEST(SubstFirstTest, UnderBinder) {
  Signature sig = consts({"c"});
  Formula f = parse_formula("ALL y. X(x)", sig);
  EXPECT_TRUE(alpha_eq(subst_first(f, "x", Term::constant("c")),
                       parse_formula("ALL y. X(c)", sig)));
}

TEST(SubstFirstTest, Identity) {
  Formula f = parse_formula("X(x)");
  EXPECT_EQ(subst_first(f, "x", Term::variable("x")), f);
}

TEST(SubstFirstTest, AvoidsCapture) {
  Formula f = parse_formula("EX y. X(x, y)");
  Formula g = subst_first(f, "x", Term::variable("y"));
  EXPECT_TRUE(alpha_eq(g, parse_formula("EX z. X(y, z)")));
  EXPECT_EQ(free_first_order_variables(g), std::set<std::string>{"y"});
  EXPECT_NE(to_string(g).find("y'"), std::string::npos);
}

TEST(SubstSecondTest, RenamesVariable) {
  Formula f = parse_formula("ALL x. X(x)");
  Abstract t({"y"}, parse_formula("Y(y)"));
  EXPECT_TRUE(alpha_eq(subst_second(f, "X", t), parse_formula("ALL x. Y(x)")));
}

TEST(SubstSecondTest, VacuousParameter) {
  Formula f = parse_formula("X(c)", consts({"c"}));
  Abstract t({"x"}, parse_formula("EX z. Z(z)"));
  EXPECT_TRUE(alpha_eq(subst_second(f, "X", t), parse_formula("EX z. Z(z)")));
}

TEST(SubstSecondTest, AvoidsCapture) {
  Formula f = parse_formula("EX y. X(y)");
  Abstract t({"x"}, parse_formula("Y(y)"));
  Formula g = subst_second(f, "X", t);
  EXPECT_TRUE(alpha_eq(g, parse_formula("EX z. Y(y)")));
  EXPECT_EQ(free_first_order_variables(g), std::set<std::string>{"y"});
}

TEST(SubstSecondTest, ArityMismatch) {
  Formula f = parse_formula("X(c)", consts({"c"}));
  Abstract t({"x", "y"}, parse_formula("Q(x, y)"));
  EXPECT_THROW(subst_second(f, "X", t), SyntaxError);
}

TEST(AlphaTest, Examples) {
  EXPECT_TRUE(alpha_eq(parse_formula("EX x. X(x)"), parse_formula("EX y. X(y)")));
  EXPECT_FALSE(alpha_eq(parse_formula("EX x. X(x)"), parse_formula("ALL x. X(x)")));
  Signature sig = consts({"c"});
  EXPECT_TRUE(alpha_eq(parse_formula("ALL X:1. X(c)", sig), parse_formula("ALL Y:1. Y(c)", sig)));
  EXPECT_FALSE(alpha_eq(parse_formula("X(x)"), parse_formula("X(y)")));
}

TEST(InstantiateTest, SecondOrderWithAbstract) {
  Signature sig = consts({"c"});
  sig.relations = {{"R", 1}, {"Q", 1}};
  Formula f = parse_formula("EX X:1. X(c)", sig);
  ParseContext ctx{sig, {}};
  Abstract t = parse_abstract("\\x. R(x) | Q(x)", ctx);
  EXPECT_EQ(instantiate(f, t), parse_formula("R(c) | Q(c)", sig));
  EXPECT_THROW(instantiate(f, parse_abstract("\\x y. R(x)", ctx)), SyntaxError);
}

TEST(FreshNameTest, Primes) {
  EXPECT_EQ(fresh_name("x", {}), "x");
  EXPECT_EQ(fresh_name("x", {"x", "x'"}), "x''");
}

// Random formulas over a fixed vocabulary: first-order variables x y z,
// the constant c, unary X Y and nullary P.
class RandomFormulas {
 public:
  explicit RandomFormulas(unsigned seed) : rng_(seed) {}

  Formula next(int depth) {
    int pick = depth <= 0 ? choose(3) : choose(11);
    switch (pick) {
      case 0: return Formula::variable_atom("P");
      case 1: return Formula::variable_atom(choose(2) ? "X" : "Y", {term()});
      case 2: return Formula::variable_atom("X", {term()});
      case 3: return Formula::negation(next(depth - 1));
      case 4: return Formula::disjunction(next(depth - 1), next(depth - 1));
      case 5: return Formula::conjunction(next(depth - 1), next(depth - 1));
      case 6: return Formula::exists0(fo(), next(depth - 1));
      case 7: return Formula::forall0(fo(), next(depth - 1));
      case 8: return Formula::exists1(choose(2) ? "X" : "Y", 1, next(depth - 1));
      case 9: return Formula::forall1(choose(2) ? "X" : "Y", 1, next(depth - 1));
      default: return Formula::forall1("P", 0, next(depth - 1));
    }
  }

  Term term() { return choose(4) == 0 ? Term::constant("c") : Term::variable(fo()); }

 private:
  int choose(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  std::string fo() { return std::string(1, "xyz"[choose(3)]); }

  std::mt19937 rng_;
};

TEST(SyntaxPropertyTest, PrintParseRoundTrip) {
  RandomFormulas gen(20261016);
  Signature sig = consts({"c"});
  for (int i = 0; i < 2000; ++i) {
    Formula f = gen.next(5);
    std::string text = to_string(f, sig);
    Formula g = parse_formula(text, sig);
    ASSERT_TRUE(alpha_eq(f, g)) << text;
    ASSERT_EQ(to_string(g, sig), text);
  }
}

TEST(SyntaxPropertyTest, IdentityAbstractIsNeutral) {
  RandomFormulas gen(7);
  for (int i = 0; i < 1000; ++i) {
    Formula f = gen.next(4);
    ASSERT_TRUE(alpha_eq(subst_second(f, "X", Abstract::of_variable("X", 1)), f))
        << to_string(f);
  }
}

TEST(SyntaxPropertyTest, FreeVariablesOfSubstitution) {
  RandomFormulas gen(11);
  for (int i = 0; i < 1000; ++i) {
    Formula f = gen.next(4);
    Formula body = gen.next(2);
    Abstract t({"x"}, body);
    Formula g = subst_second(f, "X", t);
    auto allowed = free_second_order_variables(f);
    allowed.erase("X");
    auto from_t = free_second_order_variables(t.body());
    allowed.insert(from_t.begin(), from_t.end());
    for (const auto& [name, arity] : free_second_order_variables(g)) {
      ASSERT_TRUE(allowed.count(name)) << name << " in " << to_string(g);
    }
    auto fo_allowed = free_first_order_variables(f);
    auto fo_t = free_first_order_variables(t.body());
    fo_t.erase("x");
    fo_allowed.insert(fo_t.begin(), fo_t.end());
    for (const auto& name : free_first_order_variables(g)) {
      ASSERT_TRUE(fo_allowed.count(name)) << name << " in " << to_string(g);
    }
  }
}

// Rebuilds f with every binder renamed to a fresh w-name.
Formula rebind(const Formula& f, int& counter) {
  switch (f.kind()) {
    case Connective::kAtom:
      return f;
    case Connective::kNot:
      return Formula::negation(rebind(f.operand(), counter));
    case Connective::kOr:
      return Formula::disjunction(rebind(f.left(), counter), rebind(f.right(), counter));
    case Connective::kAnd:
      return Formula::conjunction(rebind(f.left(), counter), rebind(f.right(), counter));
    default: {
      bool so = f.is_second_order_quantifier();
      std::string name = (so ? "W" : "w") + std::to_string(counter++);
      Formula body = rebind(open_binder_with_variable(f, name), counter);
      switch (f.kind()) {
        case Connective::kExists0: return Formula::exists0(name, body);
        case Connective::kForall0: return Formula::forall0(name, body);
        case Connective::kExists1: return Formula::exists1(name, f.arity(), body);
        default: return Formula::forall1(name, f.arity(), body);
      }
    }
  }
}

TEST(SyntaxPropertyTest, SubstitutionRespectsAlpha) {
  RandomFormulas gen(13);
  Signature sig = consts({"c"});
  for (int i = 0; i < 1000; ++i) {
    Formula f = gen.next(4);
    int counter = 0;
    Formula g = rebind(f, counter);
    ASSERT_TRUE(alpha_eq(f, g));
    if (counter > 0) ASSERT_NE(to_string(f, sig), to_string(g, sig));
    Term t = gen.term();
    Abstract a({"x"}, gen.next(2));
    ASSERT_TRUE(alpha_eq(subst_first(f, "x", t), subst_first(g, "x", t)));
    ASSERT_TRUE(alpha_eq(subst_second(f, "X", a), subst_second(g, "X", a)));
  }
}

}  // namespace
}  // namespace g1lc
