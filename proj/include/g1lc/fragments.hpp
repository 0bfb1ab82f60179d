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

// Sequent classes and the transforms between them.

#ifndef G1LC_FRAGMENTS_HPP_
#define G1LC_FRAGMENTS_HPP_

#include <utility>

#include "g1lc/sequent.hpp"
#include "g1lc/syntax.hpp"

namespace g1lc {

// Polarity flags.  Antecedent occurrences are negative, succedent ones
// positive, and negation flips the sign.
//   first_order: no second-order quantifier.
//   sigma01: first order, EX x only positive, ALL x only negative.
//   pi01: first order, EX x only negative, ALL x only positive.
//   pi1: ALL X only positive, EX X only negative.
struct SequentClass {
  bool is_first_order = false;
  bool is_sigma01 = false;
  bool is_pi01 = false;
  bool is_pi1 = false;
};

SequentClass classify_sequent(const Sequent& s);

// Prenex second-order prefix of at most n alternating blocks starting with
// ALL over a matrix without second-order quantifiers.  A prefix starting with
// EX needs one block of slack.  Requires n >= 1.
bool classify_formula_pi1n(const Formula& g, int n);
bool classify_abstract(const Abstract& t, int n);

// Deletes every second-order quantifier, reopening its variable under a
// fresh free name.  Throws std::invalid_argument unless s is a pi1 sequent.
Sequent erase_second_order(const Sequent& s);

// (=> H) with H existential-prenex: the sequent is read as ~/\G | \/D, put in
// negation normal form, prenexed left to right, and every universal
// quantifier is replaced by a fresh function symbol of the existential
// variables governing it (a fresh constant when there are none).  The empty
// sequent is returned unchanged.  Throws std::invalid_argument unless s is
// first order.
std::pair<Sequent, Signature> herbrand_nf(const Sequent& s, const Signature& sig);

// Negation normal form over ~, |, & and the quantifiers.
Formula nnf(const Formula& f);

}  // namespace g1lc

#endif  // G1LC_FRAGMENTS_HPP_
