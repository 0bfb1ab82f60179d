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

#include <CLI11.hpp>
#include <iostream>

#include "g1lc/cli.hpp"

namespace {

void add_search_flags(CLI::App* app, g1lc::cli::SearchFlags& flags) {
  app->add_option("--config", flags.config, "JSON search configuration");
  app->add_option("--term", flags.terms, "extra witness term (repeatable)");
  app->add_option("--abstract", flags.abstracts, "extra witness abstract (repeatable)");
  app->add_option("--node-budget", flags.node_budget, "maximum number of search nodes");
  app->add_option("--depth-budget", flags.depth_budget, "maximum branch depth");
  app->add_option("--fragment", flags.fragment, "full, first-order, pi1:<n> or bc");
  app->add_flag("--no-default-pools", flags.no_default_pools,
                "use only the configured witnesses");
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = g1lc::cli;
  CLI::App app{"g1lc: proof checking and cut-free search for second-order LK"};
  app.require_subcommand(1);

  std::string file;
  std::string out_file;
  std::string fragment = "full";
  bool allow_cut = false;
  bool verify = false;
  int enumerate = 0;
  cli::SearchFlags flags;

  auto* check = app.add_subcommand("check", "check a proof file");
  check->add_option("proof", file, "proof JSON")->required();
  check->add_flag("--allow-cut", allow_cut, "accept the cut rule");
  check->add_option("--fragment", fragment, "full, first-order, pi1:<n> or bc");

  auto* search = app.add_subcommand("search", "canonical cut-free proof search");
  search->add_option("sequent", file, "sequent file")->required();
  search->add_option("-o,--out", out_file, "write the proof here");
  add_search_flags(search, flags);

  auto* cba = app.add_subcommand("cba", "build the algebra of a relation map");
  cba->add_option("relation", file, "relation file or directory");
  cba->add_flag("--verify", verify, "check the algebra laws");
  cba->add_option("--enumerate", enumerate, "process every relation map on 1..N points");

  auto* semival = app.add_subcommand("semival", "semi-valuation of a refuted branch");
  semival->add_option("sequent", file, "sequent file")->required();
  add_search_flags(semival, flags);

  auto* maehara = app.add_subcommand("maehara", "algebra of sequents over a formula set");
  maehara->add_option("universe", file, "formula file")->required();

  auto* hauptsatz = app.add_subcommand("hauptsatz", "cut-free proof of a proof's end-sequent");
  hauptsatz->add_option("proof", file, "proof JSON")->required();
  hauptsatz->add_option("-o,--out", out_file, "write the proof here");
  add_search_flags(hauptsatz, flags);

  auto* mints = app.add_subcommand("mints", "normal-form report for a proof");
  mints->add_option("proof", file, "proof JSON (default: the built-in example)");

  auto* classify = app.add_subcommand("classify", "syntactic classes of a sequent");
  classify->add_option("sequent", file, "sequent file")->required();

  auto* corpus = app.add_subcommand("corpus", "run a test corpus");
  corpus->add_option("corpus", file, "corpus JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitInput;
  }

  std::ostream& out = std::cout;
  std::ostream& err = std::cerr;
  try {
    if (*check) return cli::cmd_check(file, allow_cut, fragment, out, err);
    if (*search) return cli::cmd_search(file, flags, out_file, out, err);
    if (*cba) {
      if (file.empty() && enumerate <= 0) {
        err << "cba needs a relation file or --enumerate\n";
        return cli::kExitInput;
      }
      return cli::cmd_cba(file, verify, enumerate, out, err);
    }
    if (*semival) return cli::cmd_semival(file, flags, out, err);
    if (*maehara) return cli::cmd_maehara(file, out, err);
    if (*hauptsatz) return cli::cmd_hauptsatz(file, flags, out_file, out, err);
    if (*mints) return cli::cmd_mints(file, out, err);
    if (*classify) return cli::cmd_classify(file, out, err);
    if (*corpus) return cli::cmd_corpus(file, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return cli::kExitFailure;
  }
  return cli::kExitInput;
}
