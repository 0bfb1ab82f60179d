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

#ifndef G1LC_SEQUENT_HPP_
#define G1LC_SEQUENT_HPP_

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "g1lc/parser.hpp"
#include "g1lc/syntax.hpp"

namespace g1lc {

// Gamma => Delta with both cedents finite sets.  Cedents are kept sorted in
// the canonical formula order without duplicates, so equality of sequents is
// equality of the underlying sets.
class Sequent {
 public:
  Sequent() = default;
  Sequent(std::vector<Formula> antecedent, std::vector<Formula> succedent);

  const std::vector<Formula>& antecedent() const { return ant_; }
  const std::vector<Formula>& succedent() const { return suc_; }

  bool in_antecedent(const Formula& f) const;
  bool in_succedent(const Formula& f) const;
  bool empty() const { return ant_.empty() && suc_.empty(); }

  Sequent add_antecedent(const Formula& f) const;
  Sequent add_succedent(const Formula& f) const;
  // Componentwise union.
  Sequent merge(const Sequent& other) const;
  bool subset_of(const Sequent& other) const;

  // Some atomic formula occurs in both cedents.
  bool has_atomic_coincidence() const;

  std::vector<Formula> formulas() const;

  friend auto operator<=>(const Sequent&, const Sequent&) = default;
  friend bool operator==(const Sequent&, const Sequent&) = default;

 private:
  std::vector<Formula> ant_;
  std::vector<Formula> suc_;
};

std::set<std::string> names_of(const Sequent& s);
std::set<std::string> free_first_order_variables(const Sequent& s);
std::map<std::string, int> free_second_order_variables(const Sequent& s);

Sequent parse_sequent(std::string_view text, ParseContext& ctx);
Sequent parse_sequent(std::string_view text, const Signature& sig = {});
std::string to_string(const Sequent& s, const Signature& sig = {});

}  // namespace g1lc

#endif  // G1LC_SEQUENT_HPP_
