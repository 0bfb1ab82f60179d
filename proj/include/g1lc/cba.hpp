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

// Finite complete Boolean algebras whose elements are subsets of a base set,
// the pair algebra over them, and the algebra induced by a relation map.

#ifndef G1LC_CBA_HPP_
#define G1LC_CBA_HPP_

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace g1lc {

using Subset = boost::dynamic_bitset<>;

std::string format_subset(const Subset& s, const std::vector<std::string>& names = {});

// A finite Boolean algebra.  Every element is a subset of {0..base_size-1};
// the operations need not be the set operations.
struct BoolAlg {
  std::size_t base_size = 0;
  std::vector<Subset> carrier;  // sorted, duplicate free
  Subset zero;
  Subset one;
  std::function<Subset(const Subset&, const Subset&)> join;
  std::function<Subset(const Subset&, const Subset&)> meet;
  std::function<Subset(const Subset&)> complement;
  std::function<bool(const Subset&, const Subset&)> leq;

  // Folds; sup of the empty family is zero and inf is one.
  Subset sup(const std::vector<Subset>& family) const;
  Subset inf(const std::vector<Subset>& family) const;
  bool contains(const Subset& a) const;
  std::size_t size() const { return carrier.size(); }

  // The two-element algebra {0, 1} over a one-point base.
  static BoolAlg two();
  // All subsets of an n-point base with the set operations.
  static BoolAlg powerset(std::size_t n);
};

struct LawResult {
  std::string law;
  bool passed = true;
  std::string witness;  // first counterexample
  std::size_t checked = 0;
};

struct LawReport {
  std::vector<LawResult> results;
  bool ok() const;
  // The first failing law, if any.
  const LawResult* first_failure() const;
  std::string to_json(int indent = 2) const;
};

struct LawOptions {
  // Families up to this carrier size are checked exhaustively for
  // completeness; larger carriers use all families of size <= 3.
  std::size_t exhaustive_family_limit = 10;
  std::vector<std::string> names;  // base element names for witnesses
};

// Partial order, lattice, bounds, distributivity, complement, De Morgan,
// closure of the carrier, uniqueness of complements, and agreement of sup/inf
// with brute-force least upper and greatest lower bounds.
LawReport verify_laws(const BoolAlg& alg, const LawOptions& opts = {});

// ---------------------------------------------------------------------------
// Pair algebra.  A pair (box, diamond) belongs to the pair algebra iff
// box <= diamond.

struct DPair {
  Subset box;
  Subset diamond;
  friend bool operator==(const DPair&, const DPair&) = default;
};

DPair d_true(const BoolAlg& alg);     // (1, 1)
DPair d_false(const BoolAlg& alg);    // (0, 0)
DPair d_unknown(const BoolAlg& alg);  // (0, 1)
bool in_d(const BoolAlg& alg, const DPair& a);
std::vector<DPair> d_elements(const BoolAlg& alg);
// t, f, u for the two-element algebra, else "(box, diamond)".
std::string format_dpair(const BoolAlg& alg, const DPair& a,
                         const std::vector<std::string>& names = {});

DPair d_neg(const BoolAlg& alg, const DPair& a);
bool d_leq(const BoolAlg& alg, const DPair& a, const DPair& b);
bool d_tri(const BoolAlg& alg, const DPair& a, const DPair& b);
DPair d_sup_leq(const BoolAlg& alg, const std::vector<DPair>& family);
DPair d_inf_leq(const BoolAlg& alg, const std::vector<DPair>& family);

struct RawPair {
  DPair pair;
  bool in_d = false;
};
// (sup box, inf diamond) and (inf box, sup diamond), not forced into the pair
// algebra.
RawPair d_sup_tri(const BoolAlg& alg, const std::vector<DPair>& family);
RawPair d_inf_tri(const BoolAlg& alg, const std::vector<DPair>& family);

// a <| b implies -a <| -b.
bool monotone_neg(const BoolAlg& alg, const DPair& a, const DPair& b);
// Whenever every b is <|-above some a and every a is <|-below some b, the
// <=-sups and <=-infs are <|-related.  Vacuously true otherwise.
bool monotone_families(const BoolAlg& alg, const std::vector<DPair>& as,
                       const std::vector<DPair>& bs);

// ---------------------------------------------------------------------------
// Relation maps.

struct RelationMap {
  std::vector<std::string> names;  // the base set X
  std::vector<Subset> m;           // m[x] = M(x)

  std::size_t size() const { return names.size(); }
};

// (1): x in M(x) iff M(x) = X.  (2): x in M(y) iff y in M(x).
struct ConditionViolation {
  int condition = 0;
  std::size_t x = 0;
  std::size_t y = 0;
  std::string describe(const RelationMap& rm) const;
};

class ConditionViolated : public std::runtime_error {
 public:
  explicit ConditionViolated(ConditionViolation v, const std::string& what)
      : std::runtime_error(what), violation_(v) {}
  const ConditionViolation& violation() const { return violation_; }

 private:
  ConditionViolation violation_;
};

std::optional<ConditionViolation> check_conditions(const RelationMap& rm);

// Intersection of all M(x) containing alpha; the whole base when none does.
Subset closure(const RelationMap& rm, const Subset& alpha);
// Intersection of all M(x) with y in M(x).
Subset little_m(const RelationMap& rm, std::size_t y);

struct RelationCBA {
  RelationMap base;
  BoolAlg alg;
};

enum class CarrierMethod { kAuto, kFilter, kGenerate };

// Throws ConditionViolated.  kFilter tests every subset for being a closure
// fixed point; kGenerate closes {M(x)} and X under intersection.  kAuto
// filters up to 16 base points.
RelationCBA build_relation_cba(const RelationMap& rm,
                               CarrierMethod method = CarrierMethod::kAuto);

// verify_laws plus the relation-specific identities: 0 = {x : x in M(x)},
// meets are intersections, sups are closures of unions, every M(x) is in
// the carrier, alpha <= M(x) implies x in -alpha, and m(y) = -M(y).
LawReport verify_relation_laws(const RelationCBA& cba, const LawOptions& opts = {});

// Every relation map on n points satisfying both conditions, in a fixed order.
std::vector<RelationMap> enumerate_relation_maps(std::size_t n);

// Text form:
//   set a b c
//   M a = b c
//   M b = a
// Elements without an M line map to the empty set.  Lines starting with '#'
// are comments.  Throws std::invalid_argument on malformed input.
RelationMap parse_relation_map(const std::string& text);
std::string format_relation_map(const RelationMap& rm);

}  // namespace g1lc

#endif  // G1LC_CBA_HPP_
