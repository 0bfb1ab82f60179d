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

// Subcommands of the g1lc binary.  Each writes a JSON report to `out`,
// diagnostics to `err`, and returns the process exit code.

#ifndef G1LC_CLI_HPP_
#define G1LC_CLI_HPP_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace g1lc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitInput = 3;

// Flags take precedence over the config file:
//   {"terms": ["c"], "abstracts": ["\\x. R(x)"], "node_budget": 1000,
//    "depth_budget": 100, "fragment": "pi1:1", "default_pools": true}
struct SearchFlags {
  std::string config;
  std::vector<std::string> terms;
  std::vector<std::string> abstracts;
  std::optional<std::size_t> node_budget;
  std::optional<int> depth_budget;
  std::optional<std::string> fragment;
  bool no_default_pools = false;
};

int cmd_check(const std::string& proof_file, bool allow_cut, const std::string& fragment,
              std::ostream& out, std::ostream& err);
// A sequent file is a document (see parser.hpp) with one sequent line.
// Proved: the proof file.  Refuted: the branch report, exit 1.  Exhausted:
// exit 2.  The proof goes to `out_file` when given.
int cmd_search(const std::string& sequent_file, const SearchFlags& flags,
               const std::string& out_file, std::ostream& out, std::ostream& err);
// `path` is a relation file or a directory of them; with enumerate > 0 every
// relation map on 1..enumerate points is processed instead.
int cmd_cba(const std::string& path, bool verify, int enumerate, std::ostream& out,
            std::ostream& err);
// Searches the sequent and reports the semi-valuation of a refuted branch
// together with the model checks.
int cmd_semival(const std::string& sequent_file, const SearchFlags& flags, std::ostream& out,
                std::ostream& err);
// A universe file is a document with one formula per line.
int cmd_maehara(const std::string& universe_file, std::ostream& out, std::ostream& err);
int cmd_hauptsatz(const std::string& proof_file, const SearchFlags& flags,
                  const std::string& out_file, std::ostream& out, std::ostream& err);
// Without a file, the built-in example.
int cmd_mints(const std::string& proof_file, std::ostream& out, std::ostream& err);
int cmd_classify(const std::string& sequent_file, std::ostream& out, std::ostream& err);
// Corpus file:
//   {"entries": [{"name": "n", "file": "p.json", "expect": "accept",
//                 "fragment": "full", "allow_cut": false}]}
// expect is accept, reject:<ErrorName>, proved, refuted, exhausted or
// hauptsatz.  Paths are relative to the corpus file.
int cmd_corpus(const std::string& corpus_file, std::ostream& out, std::ostream& err);

}  // namespace g1lc::cli

#endif  // G1LC_CLI_HPP_
