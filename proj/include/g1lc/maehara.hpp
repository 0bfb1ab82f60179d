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

// The algebra of sequents induced by cut-free provability and the
// semi-valuation it carries.

#ifndef G1LC_MAEHARA_HPP_
#define G1LC_MAEHARA_HPP_

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "g1lc/cba.hpp"
#include "g1lc/mints.hpp"
#include "g1lc/semival.hpp"
#include "g1lc/sequent.hpp"

namespace g1lc {

// Thrown when the oracle cannot decide a sequent.
class OracleFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every sequent over a finite quantifier-free formula set U.  Point i has
// antecedent bits i mod 2^|U| and succedent bits i div 2^|U|.
class SequentUniverse {
 public:
  // U is the subformula closure of `formulas`.  Throws std::invalid_argument
  // for a quantified formula or when U has more than `max_formulas` members.
  SequentUniverse(const std::vector<Formula>& formulas, ProvabilityOracle oracle,
                  std::size_t max_formulas = 6);

  const std::vector<Formula>& formulas() const { return formulas_; }
  std::size_t size() const { return std::size_t{1} << (2 * formulas_.size()); }
  Sequent sequent(std::size_t point) const;
  // Throws std::invalid_argument for a formula outside U.
  std::size_t point(const Sequent& s) const;
  std::size_t merge(std::size_t a, std::size_t b) const { return a | b; }

  // Memoized.  Throws OracleFailure when the oracle answers unknown.
  bool provable(std::size_t point) const;

 private:
  std::vector<Formula> formulas_;
  ProvabilityOracle oracle_;
  mutable std::vector<signed char> memo_;
};

// M(x) = {y : x merged with y is provable}, with names the bracketed printed
// sequents.
RelationMap maehara_relation(const SequentUniverse& su);
Subset maehara_M(const SequentUniverse& su, const Sequent& s);

struct MaeharaValuation {
  RelationCBA cba;
  SemiValuation valuation;  // diamond V(A) = M(=> A), box V(A) = m(A =>)
};

MaeharaValuation maehara_valuation(const SequentUniverse& su);

// The closing argument for one sequent G => D over U that is provable with
// cut: inf box V(G) <= sup diamond V(D), the point (G =>) lies in inf box
// V(G), sup diamond V(D) is contained in M(=> D), and so the oracle proves
// G => D.
struct Endgame {
  bool inequality = false;
  bool antecedent_in_box = false;
  bool sup_in_m = false;
  bool oracle_proves = false;
  bool ok() const { return inequality && antecedent_in_box && sup_in_m && oracle_proves; }
};

// Truth-table validity of a quantifier-free sequent; distinct atomic
// formulas are independent letters.  Throws std::invalid_argument otherwise.
bool classically_valid(const Sequent& s);

Endgame maehara_endgame(const SequentUniverse& su, const MaeharaValuation& mv, const Sequent& s);

}  // namespace g1lc

#endif  // G1LC_MAEHARA_HPP_
