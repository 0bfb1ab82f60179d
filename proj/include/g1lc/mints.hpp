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

// Reducible inferences, the pure variable condition and irreducible proofs.

#ifndef G1LC_MINTS_HPP_
#define G1LC_MINTS_HPP_

#include <functional>

#include "g1lc/proof.hpp"

namespace g1lc {

enum class Tri { kFalse, kTrue, kUnknown };
const char* to_string(Tri t);

enum class Provability { kProvable, kUnprovable, kUnknown };

// Must be a pure function of the sequent.
using ProvabilityOracle = std::function<Provability(const Sequent&)>;

// True iff some antecedent minor A has (=> A) provable or some succedent
// minor A has (A =>) provable.  Unknown when no minor settles it and the
// oracle answered unknown for at least one.  Throws std::invalid_argument for
// Initial and Cut nodes.
Tri is_reducible(const ProofTree& node, const ProvabilityOracle& oracle);

// Every free variable that occurs above the end-sequent but not in it is the
// eigenvariable of exactly one inference, and every eigenvariable occurs only
// in sequents strictly above its own inference.
bool pure_variable(const ProofTree& p);

bool is_cut_free(const ProofTree& p);

// Cut-free, pure variable condition, and no reducible inference.
Tri is_mints_normal(const ProofTree& p, const ProvabilityOracle& oracle);

// The derivation of  ALL X:0. (X > X), P => P  that instantiates X with the
// provable P | ~P and then splits the implication with OrL.  Both inferences
// are reducible.  The OrL node is at path {0}.
ProofTree mints_example();

}  // namespace g1lc

#endif  // G1LC_MINTS_HPP_
