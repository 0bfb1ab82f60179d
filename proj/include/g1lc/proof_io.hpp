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

// Proof files.
//
//   {"signature": {"constants": [..], "functions": {"f": 1}, "relations": {..}},
//    "variables": {"X": 1},
//    "proof": node}
//
//   node = {"rule": "OrR", "conclusion": "A => B | C",
//           "instantiation": {"major": "B | C", "index": 0, "term": "t",
//                             "abstract": "\\x. F", "eigenvariable": "a",
//                             "cut": "C", "split": {"gamma": [..], "delta": [..],
//                                                   "pi": [..], "theta": [..]},
//                             "minor": [..]},
//           "premises": [node, ..]}
//
// Only the instantiation fields the rule uses are written.  "minor" is
// informational and ignored on input.

#ifndef G1LC_PROOF_IO_HPP_
#define G1LC_PROOF_IO_HPP_

#include <string>
#include <string_view>

#include "g1lc/parser.hpp"
#include "g1lc/proof.hpp"

namespace g1lc {

struct ProofDocument {
  ParseContext context;
  ProofTree proof;
};

// Throws SyntaxError on malformed JSON, unknown rules or unparsable formulas.
ProofDocument read_proof(std::string_view json_text);
// Signature and variable arities are completed from the proof itself.
std::string write_proof(const ProofTree& p, const Signature& sig = {}, int indent = 2);

}  // namespace g1lc

#endif  // G1LC_PROOF_IO_HPP_
