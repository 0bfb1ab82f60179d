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

// Finite pair-valued and Boolean-valued models, comprehension checks, and the
// models built from a semi-valuation.

#ifndef G1LC_MODELS_HPP_
#define G1LC_MODELS_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "g1lc/cba.hpp"
#include "g1lc/semival.hpp"
#include "g1lc/syntax.hpp"

namespace g1lc {

// A function D0^n -> pairs.  values[i] is the value at the tuple whose
// digits in base |D0| (most significant first) spell i.
struct Table {
  int arity = 0;
  std::vector<DPair> values;
  friend bool operator==(const Table&, const Table&) = default;
};

// Individuals are terms, each read as a name for itself.  d1[n] is the
// second-order domain of arity n; `named` interprets free second-order
// variables and relation constants.  A Boolean-valued model is one whose
// tables are all diagonal.
struct Model {
  BoolAlg algebra;
  std::vector<Term> d0;
  std::map<int, std::vector<Table>> d1;
  std::map<std::string, Table> named;

  std::size_t tuple_count(int arity) const;
  std::vector<std::size_t> tuple(int arity, std::size_t index) const;
  const std::vector<Table>& domain(int arity) const;  // empty if absent
};

using DBModel = Model;
using BModel = Model;

bool is_diagonal(const Model& m);
// Pointwise <| (the information order on pairs).
bool table_tri(const BoolAlg& alg, const Table& a, const Table& b);
std::string format_table(const Model& m, const Table& t);

// Throws std::invalid_argument on a name or term without a value and on an
// arity mismatch.  `env` overrides m.named.
DPair eval_db(const Model& m, const Formula& f, const std::map<std::string, Table>& env = {});
Table eval_abstract(const Model& m, const Abstract& t,
                    const std::map<std::string, Table>& env = {});

// A comprehension instance: G(x1..xn, X^k), with `parameter` naming the free
// second-order variable X (empty when G has no distinguished parameter).
struct CAInstance {
  Abstract g;
  std::string parameter;
  int parameter_arity = 0;
};

struct CheckResult {
  std::string name;
  bool ok = true;
  std::size_t checked = 0;
  std::string witness;  // first failure
};

// For every instance and every beta in d1[k] some alpha in d1[n] has
// alpha <| M(\x.G(x, beta)).
CheckResult check_3CA(const Model& m, const std::vector<CAInstance>& universe);
// For every instance and every X in d1[k] some Y in d1[n] makes
// ALL x. (Y(x) <-> G(x, X)) evaluate to 1.
CheckResult check_2CA(const Model& n, const std::vector<CAInstance>& universe);

// The abstracts of the pools, without a distinguished parameter.
std::vector<CAInstance> pool_instances(const FormulaUniverse& u);

// Diagonal tables X with alpha <| X.  Throws std::length_error past `limit`.
std::vector<Table> diagonal_majorants(const Model& m, const Table& alpha,
                                      std::size_t limit = 100000);

// v(T)(t1..tn) = v(G(t1..tn)) over the universe's individuals.
Table abstract_value(const SemiValuation& v, const Abstract& t);

// Boolean-valued model read off a semi-valuation over the two-element
// algebra: D0 is the term pool and the arity-n domain is the union of
// {X : v(T) <| X} over the pool abstracts T.  Free names get the box of
// their value.
struct SemivalModel {
  Model n;
  std::map<int, std::vector<std::pair<Abstract, Table>>> abstract_values;
};

// Throws std::invalid_argument unless the algebra has two elements and the
// universe is function free.
SemivalModel model_from_semival(const SemiValuation& v);
// v(C) <| N(C) for closed C, and v(F(T)) <| N(F(X)) whenever v(T) <| X for
// every second-order quantified universe formula QX.F.
CheckResult check_semival_below_model(const SemiValuation& v, const SemivalModel& sm);
CheckResult check_semival_model_2ca(const SemiValuation& v, const SemivalModel& sm);

// The two-step construction.  girard_dbmodel: D1 of arity n is {V(T)} over
// the pool abstracts.  bmodel_from_dbmodel: I(alpha) = {X diagonal :
// alpha <| X}.
struct GirardModel {
  Model m;
  std::map<int, std::vector<std::pair<Abstract, Table>>> abstract_values;
};
GirardModel girard_dbmodel(const SemiValuation& v);
Model bmodel_from_dbmodel(const Model& m, std::size_t limit = 100000);

CheckResult check_semival_below_dbmodel(const SemiValuation& v, const GirardModel& g);
CheckResult check_dbmodel_3ca(const SemiValuation& v, const GirardModel& g);
// M(F(a)) <| N(F(X)) whenever a <| X, plus M(C) <| N(C) for closed C.
CheckResult check_dbmodel_below_bmodel(const SemiValuation& v, const GirardModel& g, const Model& n);
CheckResult check_bmodel_2ca(const SemiValuation& v, const Model& n);

}  // namespace g1lc

#endif  // G1LC_MODELS_HPP_
