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

#include "g1lc/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <set>
#include <sstream>
#include <stdexcept>

#include "g1lc/cba.hpp"
#include "g1lc/fragments.hpp"
#include "g1lc/maehara.hpp"
#include "g1lc/mints.hpp"
#include "g1lc/models.hpp"
#include "g1lc/parser.hpp"
#include "g1lc/proof_io.hpp"
#include "g1lc/search.hpp"
#include "g1lc/semival.hpp"

namespace g1lc::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

// Raised for unreadable or malformed input; maps to kExitInput.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text << "\n";
}

// Runs `body`, turning input problems into exit code 3.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    err << "malformed JSON: " << e.what() << "\n";
  }
  return kExitInput;
}

ProofDocument load_proof(const std::string& path) { return read_proof(read_file(path)); }

struct SequentDocument {
  ParseContext context;
  Sequent sequent;
};

SequentDocument load_sequent(const std::string& path) {
  Document doc = parse_document(read_file(path));
  std::vector<std::string> lines;
  for (const auto& l : doc.lines) {
    if (l.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(l);
  }
  if (lines.size() != 1) throw InputError("'" + path + "' must contain exactly one sequent");
  SequentDocument out;
  out.context = doc.context;
  out.sequent = parse_sequent(lines.front(), out.context);
  return out;
}

Fragment fragment_or_throw(const std::string& text) {
  auto f = parse_fragment(text);
  if (!f) throw InputError("unknown fragment '" + text + "'");
  return *f;
}

SearchConfig make_config(const SearchFlags& flags, ParseContext& ctx) {
  SearchConfig cfg;
  std::vector<std::string> terms;
  std::vector<std::string> abstracts;
  if (!flags.config.empty()) {
    json j = json::parse(read_file(flags.config));
    if (j.contains("terms")) terms = j.at("terms").get<std::vector<std::string>>();
    if (j.contains("abstracts")) abstracts = j.at("abstracts").get<std::vector<std::string>>();
    if (j.contains("node_budget")) cfg.node_budget = j.at("node_budget").get<std::size_t>();
    if (j.contains("depth_budget")) cfg.depth_budget = j.at("depth_budget").get<int>();
    if (j.contains("fragment")) cfg.fragment = fragment_or_throw(j.at("fragment").get<std::string>());
    if (j.contains("default_pools")) cfg.default_pools = j.at("default_pools").get<bool>();
  }
  terms.insert(terms.end(), flags.terms.begin(), flags.terms.end());
  abstracts.insert(abstracts.end(), flags.abstracts.begin(), flags.abstracts.end());
  if (flags.node_budget) cfg.node_budget = *flags.node_budget;
  if (flags.depth_budget) cfg.depth_budget = *flags.depth_budget;
  if (flags.fragment) cfg.fragment = fragment_or_throw(*flags.fragment);
  if (flags.no_default_pools) cfg.default_pools = false;
  for (const auto& t : terms) cfg.term_pool.push_back(parse_term(t, ctx));
  for (const auto& a : abstracts) {
    Abstract t = parse_abstract(a, ctx);
    cfg.abstract_pool[t.arity()].push_back(t);
  }
  cfg.signature = ctx.signature;
  return cfg;
}

json formula_list(const std::vector<Formula>& fs, const Signature& sig) {
  json a = json::array();
  for (const auto& f : fs) a.push_back(to_string(f, sig));
  return a;
}

json check_json(const CheckResult& r) {
  json j{{"name", r.name}, {"ok", r.ok}, {"checked", r.checked}};
  if (!r.ok) j["witness"] = r.witness;
  return j;
}

json semival_json(const SemiValuation& v, const SemivalReport& rep, const Signature& sig) {
  json j;
  j["ok"] = rep.ok();
  j["table"] = json::array();
  for (const auto& f : v.universe.formulas()) {
    j["table"].push_back({{"formula", to_string(f, sig)},
                          {"value", format_dpair(v.algebra, v.value(f))}});
  }
  j["conditions"] = json::array();
  for (const auto& e : rep.entries) {
    j["conditions"].push_back({{"condition", e.condition},
                               {"formula", to_string(e.formula, sig)},
                               {"lhs", format_dpair(v.algebra, e.lhs)},
                               {"rhs", format_dpair(v.algebra, e.rhs)},
                               {"ok", e.ok}});
  }
  return j;
}

json branch_json(const Branch& b, const Signature& sig) {
  json j;
  j["antecedent"] = formula_list(b.antecedent, sig);
  j["succedent"] = formula_list(b.succedent, sig);
  j["terms"] = json::array();
  for (const auto& t : b.terms) j["terms"].push_back(to_string(t));
  j["abstracts"] = json::object();
  for (const auto& [arity, pool] : b.abstracts) {
    json a = json::array();
    for (const auto& t : pool) a.push_back(to_string(t, sig));
    j["abstracts"][std::to_string(arity)] = a;
  }
  return j;
}

ProvabilityOracle mixed_oracle() {
  SearchConfig cfg;
  cfg.node_budget = 20000;
  ProvabilityOracle prop = propositional_oracle();
  ProvabilityOracle search = search_oracle(cfg);
  return [prop, search](const Sequent& s) {
    Provability p = prop(s);
    return p == Provability::kUnknown ? search(s) : p;
  };
}

void reducibility(const ProofTree& p, std::vector<int>& path, const ProvabilityOracle& oracle,
                  json& out) {
  if (p.rule != Rule::kInitial && p.rule != Rule::kCut) {
    out.push_back({{"path", path_string(path)},
                   {"rule", rule_name(p.rule)},
                   {"reducible", to_string(is_reducible(p, oracle))}});
  }
  for (std::size_t i = 0; i < p.premises.size(); ++i) {
    path.push_back(static_cast<int>(i));
    reducibility(p.premises[i], path, oracle, out);
    path.pop_back();
  }
}

// One relation map: dump plus optional law report.  Returns whether it
// satisfied the conditions and, when verified, every law.
bool process_relation(const RelationMap& rm, const std::string& label, bool verify, json& out) {
  json j;
  j["source"] = label;
  j["points"] = rm.size();
  if (auto v = check_conditions(rm)) {
    j["condition_violated"] = v->condition;
    j["witness"] = v->describe(rm);
    out.push_back(j);
    return false;
  }
  RelationCBA cba = build_relation_cba(rm);
  j["carrier_size"] = cba.alg.size();
  json carrier = json::array();
  for (const auto& a : cba.alg.carrier) carrier.push_back(format_subset(a, rm.names));
  j["carrier"] = carrier;
  j["zero"] = format_subset(cba.alg.zero, rm.names);
  json small_m = json::object();
  for (std::size_t y = 0; y < rm.size(); ++y) {
    small_m[rm.names[y]] = format_subset(little_m(rm, y), rm.names);
  }
  j["m"] = small_m;
  bool ok = true;
  if (verify) {
    LawOptions opts;
    opts.names = rm.names;
    LawReport rep = verify_relation_laws(cba, opts);
    j["laws"] = json::parse(rep.to_json());
    ok = rep.ok();
  }
  out.push_back(j);
  return ok;
}

}  // namespace

int cmd_check(const std::string& proof_file, bool allow_cut, const std::string& fragment,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ProofDocument doc = load_proof(proof_file);
    CheckOptions opts;
    opts.allow_cut = allow_cut;
    opts.fragment = fragment_or_throw(fragment);
    opts.signature = doc.context.signature;
    CheckReport rep = check_proof(doc.proof, opts);
    json j;
    j["ok"] = rep.ok();
    j["nodes"] = doc.proof.size();
    j["end_sequent"] = to_string(doc.proof.conclusion, doc.context.signature);
    j["errors"] = json::array();
    for (const auto& e : rep.errors) {
      j["errors"].push_back(
          {{"code", error_name(e.code)}, {"path", path_string(e.path)}, {"message", e.message}});
    }
    out << j.dump(2) << "\n";
    if (!rep.ok()) {
      const auto& e = rep.errors.front();
      err << error_name(e.code) << " at " << path_string(e.path) << ": " << e.message << "\n";
      return kExitFailure;
    }
    return kExitOk;
  });
}

int cmd_search(const std::string& sequent_file, const SearchFlags& flags,
               const std::string& out_file, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SequentDocument doc = load_sequent(sequent_file);
    SearchConfig cfg = make_config(flags, doc.context);
    SearchOutcome res = canonical_search(doc.sequent, cfg);
    const Signature& sig = doc.context.signature;
    if (res.kind == SearchOutcome::Kind::kProved) {
      std::string text = write_proof(*res.proof, sig);
      if (out_file.empty()) {
        out << text << "\n";
      } else {
        write_file(out_file, text);
        out << json{{"verdict", "proved"}, {"nodes", res.nodes}, {"proof", out_file}}.dump(2)
            << "\n";
      }
      return kExitOk;
    }
    json j{{"verdict", to_string(res.kind)}, {"nodes", res.nodes}};
    if (res.kind == SearchOutcome::Kind::kExhausted) {
      out << j.dump(2) << "\n";
      err << "search budget exhausted\n";
      return kExitBudget;
    }
    j["branch"] = branch_json(*res.branch, sig);
    SemiValuation v = branch_to_semival(*res.branch);
    j["valuation"] = semival_json(v, check_semival(v), sig);
    out << j.dump(2) << "\n";
    return kExitFailure;
  });
}

int cmd_cba(const std::string& path, bool verify, int enumerate, std::ostream& out,
            std::ostream& err) {
  return guarded(err, [&] {
    json results = json::array();
    bool all_ok = true;
    std::size_t count = 0;
    if (enumerate > 0) {
      for (int n = 1; n <= enumerate; ++n) {
        for (const auto& rm : enumerate_relation_maps(n)) {
          all_ok = process_relation(rm, "enumerated", verify, results) && all_ok;
          ++count;
        }
      }
    } else {
      std::vector<std::string> files;
      if (fs::is_directory(path)) {
        for (const auto& e : fs::directory_iterator(path)) {
          if (e.is_regular_file()) files.push_back(e.path().string());
        }
        std::sort(files.begin(), files.end());
      } else {
        files.push_back(path);
      }
      for (const auto& f : files) {
        RelationMap rm;
        try {
          rm = parse_relation_map(read_file(f));
        } catch (const std::invalid_argument& e) {
          throw InputError(f + ": " + e.what());
        }
        all_ok = process_relation(rm, f, verify, results) && all_ok;
        ++count;
      }
    }
    json j{{"ok", all_ok}, {"relations", count}};
    if (count == 1 || enumerate <= 0) j["results"] = results;
    if (enumerate > 0) {
      std::size_t failed = 0;
      for (const auto& r : results) {
        if (r.contains("condition_violated") || (r.contains("laws") && !r["laws"]["ok"].get<bool>())) {
          ++failed;
        }
      }
      j["failed"] = failed;
    }
    out << j.dump(2) << "\n";
    if (!all_ok) {
      for (const auto& r : results) {
        if (r.contains("condition_violated")) {
          err << "ConditionViolated (" << r["condition_violated"].get<int>()
              << "): " << r["witness"].get<std::string>() << "\n";
        }
      }
      return kExitFailure;
    }
    return kExitOk;
  });
}

int cmd_semival(const std::string& sequent_file, const SearchFlags& flags, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    SequentDocument doc = load_sequent(sequent_file);
    SearchConfig cfg = make_config(flags, doc.context);
    SearchOutcome res = canonical_search(doc.sequent, cfg);
    const Signature& sig = doc.context.signature;
    if (res.kind == SearchOutcome::Kind::kExhausted) {
      err << "search budget exhausted\n";
      return kExitBudget;
    }
    if (res.kind == SearchOutcome::Kind::kProved) {
      err << "the sequent is cut-free provable; there is no open branch\n";
      out << json{{"verdict", "proved"}}.dump(2) << "\n";
      return kExitFailure;
    }
    SemiValuation v = branch_to_semival(*res.branch);
    SemivalReport rep = check_semival(v);
    json j{{"verdict", "refuted"}};
    j["branch"] = branch_json(*res.branch, sig);
    j["valuation"] = semival_json(v, rep, sig);
    j["soundness_inequality"] = soundness_check(doc.sequent, v);
    bool ok = rep.ok() && !soundness_check(doc.sequent, v);
    json checks = json::array();
    try {
      SemivalModel sm = model_from_semival(v);
      GirardModel g = girard_dbmodel(v);
      Model n = bmodel_from_dbmodel(g.m);
      for (const auto& c : {check_semival_below_model(v, sm), check_semival_model_2ca(v, sm), check_semival_below_dbmodel(v, g), check_dbmodel_3ca(v, g),
                            check_dbmodel_below_bmodel(v, g, n), check_bmodel_2ca(v, n)}) {
        checks.push_back(check_json(c));
        ok = ok && c.ok;
      }
    } catch (const std::exception& e) {
      j["models"] = std::string("not built: ") + e.what();
    }
    j["model_checks"] = checks;
    j["ok"] = ok;
    out << j.dump(2) << "\n";
    return ok ? kExitOk : kExitFailure;
  });
}

int cmd_maehara(const std::string& universe_file, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Document doc = parse_document(read_file(universe_file));
    ParseContext ctx = doc.context;
    std::vector<Formula> formulas;
    for (const auto& l : doc.lines) {
      if (l.find_first_not_of(" \t\r") == std::string::npos) continue;
      formulas.push_back(parse_formula(l, ctx));
    }
    std::optional<SequentUniverse> su;
    try {
      su.emplace(formulas, propositional_oracle());
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("refused: ") + e.what());
    }
    MaeharaValuation mv = maehara_valuation(*su);
    SemivalReport rep = check_semival(mv.valuation);
    const auto& names = mv.cba.base.names;
    json j;
    j["points"] = su->size();
    j["carrier_size"] = mv.cba.alg.size();
    j["zero"] = format_subset(mv.cba.alg.zero, names);
    j["valuation"] = json::array();
    bool ok = rep.ok();
    for (const auto& a : su->formulas()) {
      DPair p = mv.valuation.value(a);
      bool inside = in_d(mv.cba.alg, p);
      ok = ok && inside;
      j["valuation"].push_back({{"formula", to_string(a, ctx.signature)},
                                {"box", format_subset(p.box, names)},
                                {"diamond", format_subset(p.diamond, names)},
                                {"box_below_diamond", inside}});
    }
    json sv = semival_json(mv.valuation, rep, ctx.signature);
    j["semival_ok"] = rep.ok();
    j["conditions"] = sv["conditions"];
    std::size_t valid = 0;
    std::size_t closed = 0;
    for (std::size_t x = 0; x < su->size(); ++x) {
      Sequent s = su->sequent(x);
      if (!classically_valid(s)) continue;
      ++valid;
      Endgame e = maehara_endgame(*su, mv, s);
      if (e.ok()) {
        ++closed;
      } else {
        ok = false;
        err << "endgame fails at " << to_string(s, ctx.signature) << "\n";
      }
    }
    j["valid_sequents"] = valid;
    j["endgame_ok"] = closed;
    j["ok"] = ok;
    out << j.dump(2) << "\n";
    return ok ? kExitOk : kExitFailure;
  });
}

int cmd_hauptsatz(const std::string& proof_file, const SearchFlags& flags,
                  const std::string& out_file, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ProofDocument doc = load_proof(proof_file);
    SearchConfig cfg = make_config(flags, doc.context);
    HauptsatzResult r;
    try {
      r = hauptsatz_pipeline(doc.proof, cfg);
    } catch (const std::invalid_argument& e) {
      err << e.what() << "\n";
      return kExitFailure;
    }
    if (!r.ok) {
      err << r.message << "\n";
      out << json{{"ok", false}, {"nodes", r.nodes}, {"message", r.message}}.dump(2) << "\n";
      return kExitBudget;
    }
    std::string text = write_proof(*r.proof, doc.context.signature);
    if (out_file.empty()) {
      out << text << "\n";
    } else {
      write_file(out_file, text);
      out << json{{"ok", true}, {"nodes", r.nodes}, {"proof", out_file}}.dump(2) << "\n";
    }
    return kExitOk;
  });
}

int cmd_mints(const std::string& proof_file, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ProofTree p = proof_file.empty() ? mints_example() : load_proof(proof_file).proof;
    ProvabilityOracle oracle = mixed_oracle();
    json j;
    j["cut_free"] = is_cut_free(p);
    j["pure_variable"] = pure_variable(p);
    j["mints_normal"] = to_string(is_mints_normal(p, oracle));
    json nodes = json::array();
    std::vector<int> path;
    reducibility(p, path, oracle, nodes);
    j["inferences"] = nodes;
    out << j.dump(2) << "\n";
    return kExitOk;
  });
}

int cmd_classify(const std::string& sequent_file, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SequentDocument doc = load_sequent(sequent_file);
    const Signature& sig = doc.context.signature;
    SequentClass c = classify_sequent(doc.sequent);
    json j{{"first_order", c.is_first_order},
           {"sigma01", c.is_sigma01},
           {"pi01", c.is_pi01},
           {"pi1", c.is_pi1}};
    if (c.is_pi1) j["erased"] = to_string(erase_second_order(doc.sequent), sig);
    if (c.is_first_order) {
      auto [h, hsig] = herbrand_nf(doc.sequent, sig);
      j["herbrand"] = to_string(h, hsig);
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  });
}

int cmd_corpus(const std::string& corpus_file, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    json corpus = json::parse(read_file(corpus_file));
    fs::path base = fs::path(corpus_file).parent_path();
    std::set<std::string> names;
    json results = json::array();
    std::size_t passed = 0;
    for (const auto& e : corpus.at("entries")) {
      std::string name = e.at("name").get<std::string>();
      if (!names.insert(name).second) throw InputError("duplicate corpus entry '" + name + "'");
      std::string file = (base / e.at("file").get<std::string>()).string();
      std::string expect = e.at("expect").get<std::string>();
      Fragment fragment = fragment_or_throw(e.value("fragment", std::string("full")));
      bool allow_cut = e.value("allow_cut", false);
      std::string got;
      if (expect == "accept" || expect.rfind("reject:", 0) == 0) {
        ProofDocument doc = load_proof(file);
        CheckOptions opts{allow_cut, fragment, doc.context.signature};
        CheckReport rep = check_proof(doc.proof, opts);
        got = rep.ok() ? "accept" : std::string("reject:") + error_name(rep.errors.front().code);
      } else if (expect == "hauptsatz") {
        ProofDocument doc = load_proof(file);
        SearchConfig cfg;
        cfg.fragment = fragment;
        cfg.signature = doc.context.signature;
        HauptsatzResult r = hauptsatz_pipeline(doc.proof, cfg);
        got = "no cut-free proof";
        if (r.ok) {
          ProofDocument back = read_proof(write_proof(*r.proof, doc.context.signature));
          CheckOptions opts{false, fragment, back.context.signature};
          bool same = back.proof.conclusion == doc.proof.conclusion;
          got = check_proof(back.proof, opts).ok() && same ? "hauptsatz" : "bad cut-free proof";
        }
      } else {
        SequentDocument doc = load_sequent(file);
        SearchFlags flags;
        SearchConfig cfg = make_config(flags, doc.context);
        cfg.fragment = fragment;
        got = to_string(canonical_search(doc.sequent, cfg).kind);
      }
      bool pass = got == expect;
      passed += pass;
      results.push_back({{"name", name}, {"expect", expect}, {"got", got}, {"pass", pass}});
      if (!pass) err << name << ": expected " << expect << ", got " << got << "\n";
    }
    json j{{"entries", results.size()}, {"passed", passed}, {"results", results}};
    j["ok"] = passed == results.size();
    out << j.dump(2) << "\n";
    return passed == results.size() ? kExitOk : kExitFailure;
  });
}

}  // namespace g1lc::cli
