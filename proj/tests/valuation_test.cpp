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
#include <map>
#include <string>
#include <vector>

#include "g1lc/maehara.hpp"
#include "g1lc/models.hpp"
#include "g1lc/parser.hpp"
#include "g1lc/search.hpp"
#include "g1lc/semival.hpp"
#include "support/oracle.hpp"

namespace g1lc {
namespace {

using testing::D2;

Table constant_table(const Model& m, int arity, const DPair& v) {
  return Table{arity, std::vector<DPair>(m.tuple_count(arity), v)};
}

// D0 = {c}, one relation constant A:1 and a single unary D1 element.
struct SmallModel {
  D2 d;
  Signature sig;
  Model m;

  explicit SmallModel(const DPair& alpha) {
    sig.constants = {"c"};
    sig.relations = {{"A", 1}};
    m.algebra = d.alg;
    m.d0 = {Term::constant("c")};
    m.d1[1] = {constant_table(m, 1, alpha)};
    m.d1[0] = {constant_table(m, 0, d.t), constant_table(m, 0, d.f)};
    m.named["A"] = constant_table(m, 1, alpha);
  }

  DPair eval(const std::string& text) const { return eval_db(m, parse_formula(text, sig)); }
};

TEST(EvalTest, Examples) {
  SmallModel s(D2().u);
  EXPECT_EQ(s.eval("EX X:1. X(c)"), s.d.u);
  EXPECT_EQ(s.eval("~A(c)"), s.d.u);
  EXPECT_EQ(s.eval("A(c) & ~A(c)"), s.d.u);
  EXPECT_EQ(s.eval("EX P:0. P"), s.d.t);
  EXPECT_EQ(s.eval("ALL P:0. P"), s.d.f);
  EXPECT_EQ(s.eval("ALL P:0. P | ~P"), s.d.t);
  EXPECT_EQ(s.eval("ALL x. A(x)"), s.d.u);
}

TEST(EvalTest, AbstractValue) {
  SmallModel s(D2().t);
  ParseContext ctx{s.sig, {}};
  Table t = eval_abstract(s.m, parse_abstract("\\x. ~A(x)", ctx));
  EXPECT_EQ(t, constant_table(s.m, 1, s.d.f));
}

TEST(EvalTest, RespectsAlpha) {
  SmallModel s(D2().u);
  EXPECT_EQ(s.eval("EX X:1. ALL x. X(x) | A(x)"), s.eval("EX Y:1. ALL y. Y(y) | A(y)"));
}

TEST(EvalTest, Errors) {
  SmallModel s(D2().u);
  EXPECT_THROW(eval_db(s.m, parse_formula("B(c)", s.sig)), std::invalid_argument);
  EXPECT_THROW(eval_db(s.m, parse_formula("A(x)", s.sig)), std::invalid_argument);
}

CAInstance not_x() {
  ParseContext ctx;
  ctx.variable_arity["X"] = 1;
  return CAInstance{Abstract({"x"}, parse_formula("~X(x)", ctx)), "X", 1};
}

TEST(ComprehensionTest, ThreeValuedExamples) {
  SmallModel s(D2().t);
  EXPECT_FALSE(check_3CA(s.m, {not_x()}).ok);
  EXPECT_TRUE(check_3CA(s.m, {}).ok);
  s.m.d1[1].push_back(constant_table(s.m, 1, s.d.u));
  EXPECT_TRUE(check_3CA(s.m, {not_x()}).ok);
  s.m.d1[1] = {constant_table(s.m, 1, s.d.t), constant_table(s.m, 1, s.d.f)};
  EXPECT_TRUE(check_3CA(s.m, {not_x()}).ok);
}

TEST(ComprehensionTest, TwoValuedExamples) {
  SmallModel s(D2().t);
  EXPECT_FALSE(check_2CA(s.m, {not_x()}).ok);
  EXPECT_TRUE(check_2CA(s.m, {}).ok);
  s.m.d1[1].push_back(constant_table(s.m, 1, s.d.f));
  EXPECT_TRUE(check_2CA(s.m, {not_x()}).ok);
}

struct PQ {
  Formula p = Formula::variable_atom("P");
  Formula q = Formula::variable_atom("Q");
  Formula pq = Formula::conjunction(p, q);
  D2 d;
};

TEST(SemivalTest, Examples) {
  PQ x;
  SemiValuation v = unknown_valuation(x.d.alg, propositional_universe({x.pq}));
  EXPECT_TRUE(check_semival(v).ok());
  v.set(x.pq, x.d.f);
  v.set(x.p, x.d.f);
  EXPECT_TRUE(check_semival(v).ok());

  Formula np = Formula::negation(x.p);
  SemiValuation w = unknown_valuation(x.d.alg, propositional_universe({np}));
  w.set(np, x.d.t);
  w.set(x.p, x.d.t);
  SemivalReport r = check_semival(w);
  ASSERT_FALSE(r.ok());
  ASSERT_EQ(r.failures().size(), 1u);
  EXPECT_EQ(r.failures()[0].condition, "not");
  EXPECT_EQ(r.failures()[0].rhs, x.d.f);
}

TEST(SemivalTest, BranchOfFailedSearch) {
  PQ x;
  SearchOutcome out = canonical_search(Sequent({}, {x.pq}));
  ASSERT_EQ(out.kind, SearchOutcome::Kind::kRefuted);
  SemiValuation v = branch_to_semival(*out.branch);
  EXPECT_TRUE(check_semival(v).ok());
  EXPECT_EQ(v.value(x.pq), x.d.f);
  EXPECT_TRUE(v.value(x.p) == x.d.f || v.value(x.q) == x.d.f);
  EXPECT_FALSE(soundness_check(Sequent({}, {x.pq}), v));
}

TEST(SemivalTest, Soundness) {
  PQ x;
  SemiValuation v = unknown_valuation(x.d.alg, propositional_universe({x.p}));
  EXPECT_TRUE(soundness_check(Sequent({x.p}, {x.p}), v));
  v.set(x.p, x.d.f);
  EXPECT_FALSE(soundness_check(Sequent({}, {x.p}), v));
  EXPECT_THROW(soundness_check(Sequent({}, {x.q}), v), std::invalid_argument);
}

// Brute force over all 3^n tables.
std::size_t count_semivals(const FormulaUniverse& u) {
  D2 d;
  const std::vector<DPair> vals = {d.f, d.u, d.t};
  std::size_t n = u.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  std::size_t count = 0;
  for (std::size_t code = 0; code < total; ++code) {
    SemiValuation v = unknown_valuation(d.alg, u);
    std::size_t c = code;
    for (const auto& f : u.formulas()) {
      v.set(f, vals[c % 3]);
      c /= 3;
    }
    if (check_semival(v).ok()) ++count;
  }
  return count;
}

TEST(SemivalTest, EnumerationMatchesBruteForce) {
  auto fs = testing::formulas_up_to({"P", "Q"}, 1);
  fs.push_back(parse_formula("~(P & ~Q)"));
  fs.push_back(parse_formula("(P | Q) & ~P"));
  for (const auto& f : fs) {
    FormulaUniverse u = propositional_universe({f});
    auto all = enumerate_two_valued(u);
    ASSERT_EQ(all.size(), count_semivals(u)) << to_string(f);
    for (const auto& v : all) ASSERT_TRUE(check_semival(v).ok());
  }
  Signature sig;
  sig.constants = {"c"};
  FormulaUniverse u = FormulaUniverse::close({parse_formula("EX X:1. ~X(c)", sig)},
                                             {Term::constant("c")},
                                             {{1, {Abstract::of_variable("R", 1)}}});
  EXPECT_EQ(enumerate_two_valued(u).size(), count_semivals(u));
}

TEST(SemivalTest, ValidSequentsAreSoundExhaustively) {
  auto fs = testing::formulas_up_to({"P", "Q"}, 1);
  for (const auto& a : fs) {
    for (const auto& b : fs) {
      Sequent s({a}, {b});
      if (!testing::tt_valid(s)) continue;
      for (const auto& v : enumerate_two_valued(propositional_universe({a, b}))) {
        ASSERT_TRUE(soundness_check(s, v)) << to_string(s);
      }
    }
  }
}

// Second-order universes with at most two letters and two individuals.
std::vector<FormulaUniverse> small_universes() {
  Signature sig;
  sig.constants = {"c", "d"};
  sig.relations = {{"R", 1}};
  ParseContext ctx{sig, {}};
  Term c = Term::constant("c");
  Term d = Term::constant("d");
  Abstract r = parse_abstract("\\x. R(x)", ctx);
  Abstract not_r = parse_abstract("\\x. ~R(x)", ctx);
  Formula p = Formula::variable_atom("P");
  std::vector<FormulaUniverse> out;
  out.push_back(FormulaUniverse::close({parse_formula("EX X:0. X & ~X", sig)}, {c},
                                       {{0, {Abstract({}, p)}}}));
  out.push_back(FormulaUniverse::close({parse_formula("EX X:1. X(c)", sig)}, {c}, {{1, {r}}}));
  out.push_back(FormulaUniverse::close({parse_formula("ALL X:1. X(c) | ~X(c)", sig)}, {c},
                                       {{1, {r, not_r}}}));
  out.push_back(FormulaUniverse::close({parse_formula("EX X:1. X(c) & ~X(d)", sig)}, {c, d},
                                       {{1, {r}}}));
  out.push_back(FormulaUniverse::close({parse_formula("ALL x. R(x)", sig)}, {c, d}, {}));
  return out;
}

TEST(ModelTest, SemivalModelExamples) {
  D2 d;
  Signature sig;
  sig.constants = {"c"};
  sig.relations = {{"R", 1}};
  ParseContext ctx{sig, {}};
  Abstract t = parse_abstract("\\x. R(x)", ctx);
  FormulaUniverse u = FormulaUniverse::close({parse_formula("EX X:1. X(c)", sig)},
                                             {Term::constant("c")}, {{1, {t}}});
  SemiValuation v = unknown_valuation(d.alg, u);
  SemivalModel sm = model_from_semival(v);
  EXPECT_EQ(sm.n.domain(1).size(), 2u);
  EXPECT_TRUE(is_diagonal(sm.n));
  EXPECT_TRUE(check_semival_below_model(v, sm).ok);
  EXPECT_TRUE(check_semival_model_2ca(v, sm).ok);

  v.set(parse_formula("R(c)", sig), d.t);
  v.set(parse_formula("EX X:1. X(c)", sig), d.t);
  ASSERT_TRUE(check_semival(v).ok());
  SemivalModel one = model_from_semival(v);
  ASSERT_EQ(one.n.domain(1).size(), 1u);
  EXPECT_EQ(one.n.domain(1)[0], constant_table(one.n, 1, d.t));
  EXPECT_TRUE(check_semival_below_model(v, one).ok);

  SemiValuation wide = unknown_valuation(BoolAlg::powerset(2), u);
  EXPECT_THROW(model_from_semival(wide), std::invalid_argument);
}

TEST(ModelTest, AllConstructionsOnBranchValuation) {
  PQ x;
  SearchOutcome out = canonical_search(Sequent({}, {x.pq}));
  ASSERT_TRUE(out.branch);
  SemiValuation v = branch_to_semival(*out.branch);
  GirardModel g = girard_dbmodel(v);
  Model n = bmodel_from_dbmodel(g.m);
  EXPECT_TRUE(is_diagonal(n));
  EXPECT_TRUE(check_semival_below_dbmodel(v, g).ok);
  EXPECT_TRUE(check_dbmodel_3ca(v, g).ok);
  EXPECT_TRUE(check_dbmodel_below_bmodel(v, g, n).ok);
  EXPECT_TRUE(check_bmodel_2ca(v, n).ok);
  for (const auto& f : v.universe.formulas()) {
    EXPECT_TRUE(d_tri(v.algebra, eval_db(g.m, f), eval_db(n, f))) << to_string(f);
  }
}

TEST(ModelTest, AllConstructionsExhaustively) {
  std::size_t valuations = 0;
  for (const auto& u : small_universes()) {
    for (const auto& v : enumerate_two_valued(u)) {
      ++valuations;
      SemivalModel sm = model_from_semival(v);
      ASSERT_TRUE(check_semival_below_model(v, sm).ok) << format_semival(v);
      ASSERT_TRUE(check_semival_model_2ca(v, sm).ok) << format_semival(v);
      GirardModel g = girard_dbmodel(v);
      Model n = bmodel_from_dbmodel(g.m);
      ASSERT_TRUE(check_semival_below_dbmodel(v, g).ok) << format_semival(v);
      ASSERT_TRUE(check_dbmodel_3ca(v, g).ok) << format_semival(v);
      ASSERT_TRUE(check_dbmodel_below_bmodel(v, g, n).ok) << format_semival(v);
      ASSERT_TRUE(check_bmodel_2ca(v, n).ok) << format_semival(v);
    }
  }
  EXPECT_GT(valuations, 20u);
}

SequentUniverse universe_of(const std::vector<std::string>& texts) {
  std::vector<Formula> fs;
  for (const auto& t : texts) fs.push_back(parse_formula(t));
  return SequentUniverse(fs, propositional_oracle());
}

TEST(MaeharaTest, RelationExamples) {
  SequentUniverse su = universe_of({"P"});
  Formula p = Formula::variable_atom("P");
  Subset m = maehara_M(su, Sequent({}, {p}));
  EXPECT_TRUE(m[su.point(Sequent({p}, {}))]);
  EXPECT_FALSE(m[su.point(Sequent({}, {}))]);
  for (std::size_t x = 0; x < su.size(); ++x) {
    EXPECT_EQ(maehara_M(su, su.sequent(x))[x], su.provable(x));
  }
  RelationMap rm = maehara_relation(su);
  EXPECT_FALSE(check_conditions(rm));
  RelationCBA cba = build_relation_cba(rm);
  EXPECT_EQ(cba.alg.zero, maehara_M(su, Sequent({}, {})));
}

TEST(MaeharaTest, NegationInstance) {
  SequentUniverse su = universe_of({"~P"});
  MaeharaValuation mv = maehara_valuation(su);
  const BoolAlg& A = mv.cba.alg;
  Formula p = Formula::variable_atom("P");
  Formula np = Formula::negation(p);
  DPair vp = mv.valuation.value(p);
  DPair vnp = mv.valuation.value(np);
  // diamond V(~A) contains -box V(A)
  EXPECT_TRUE(A.complement(vp.box).is_subset_of(vnp.diamond));
  EXPECT_TRUE(vnp.box.is_subset_of(A.complement(vp.diamond)));
  EXPECT_TRUE(verify_laws(A).ok());
}

std::vector<std::vector<std::string>> maehara_universes() {
  return {{"P"},          {"~P"},           {"P | ~P"},     {"P & ~P"},    {"P", "Q"},
          {"P & Q"},      {"P | Q"},        {"~(P & Q)"},   {"~P | Q"},    {"P & Q", "~P"},
          {"(P | Q) & ~Q"}, {"~~P"}};
}

TEST(MaeharaTest, ValuationAndEndgame) {
  for (const auto& texts : maehara_universes()) {
    SequentUniverse su = universe_of(texts);
    MaeharaValuation mv = maehara_valuation(su);
    ASSERT_TRUE(check_semival(mv.valuation).ok()) << texts[0];
    EXPECT_TRUE(verify_relation_laws(mv.cba).ok()) << texts[0];
    for (const auto& f : su.formulas()) {
      DPair v = mv.valuation.value(f);
      ASSERT_TRUE(v.box.is_subset_of(v.diamond));
      ASSERT_TRUE(in_d(mv.cba.alg, v));
    }
    std::size_t valid = 0;
    for (std::size_t x = 0; x < su.size(); ++x) {
      Sequent s = su.sequent(x);
      ASSERT_EQ(su.provable(x), testing::tt_valid(s)) << to_string(s);
      if (!classically_valid(s)) continue;
      ++valid;
      Endgame e = maehara_endgame(su, mv, s);
      ASSERT_TRUE(e.ok()) << to_string(s);
    }
    EXPECT_GT(valid, 0u);
  }
}

TEST(MaeharaTest, Refusals) {
  Signature sig;
  sig.constants = {"c"};
  EXPECT_THROW(SequentUniverse({parse_formula("EX X:1. X(c)", sig)}, propositional_oracle()),
               std::invalid_argument);
  EXPECT_THROW(universe_of({"((P & Q) | ~R) & (S | ~T)"}), std::invalid_argument);
}

}  // namespace
}  // namespace g1lc
