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

#include "g1lc/cba.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <memory>
#include <set>
#include <sstream>

namespace g1lc {

std::string format_subset(const Subset& s, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = s.find_first(); i != Subset::npos; i = s.find_next(i)) {
    if (!first) out += ",";
    first = false;
    out += i < names.size() ? names[i] : std::to_string(i);
  }
  return out + "}";
}

Subset BoolAlg::sup(const std::vector<Subset>& family) const {
  Subset acc = zero;
  for (const auto& a : family) acc = join(acc, a);
  return acc;
}

Subset BoolAlg::inf(const std::vector<Subset>& family) const {
  Subset acc = one;
  for (const auto& a : family) acc = meet(acc, a);
  return acc;
}

bool BoolAlg::contains(const Subset& a) const {
  return std::binary_search(carrier.begin(), carrier.end(), a);
}

namespace {

void set_operations(BoolAlg& alg) {
  alg.join = [](const Subset& a, const Subset& b) { return a | b; };
  alg.meet = [](const Subset& a, const Subset& b) { return a & b; };
  alg.complement = [](const Subset& a) { return ~a; };
  alg.leq = [](const Subset& a, const Subset& b) { return a.is_subset_of(b); };
}

}  // namespace

BoolAlg BoolAlg::two() { return powerset(1); }

BoolAlg BoolAlg::powerset(std::size_t n) {
  BoolAlg alg;
  alg.base_size = n;
  for (unsigned long bits = 0; bits < (1ul << n); ++bits) alg.carrier.emplace_back(n, bits);
  std::sort(alg.carrier.begin(), alg.carrier.end());
  alg.zero = Subset(n);
  alg.one = ~Subset(n);
  set_operations(alg);
  return alg;
}

// ---------------------------------------------------------------------------
// Laws

bool LawReport::ok() const {
  return std::all_of(results.begin(), results.end(), [](const LawResult& r) { return r.passed; });
}

const LawResult* LawReport::first_failure() const {
  for (const auto& r : results) {
    if (!r.passed) return &r;
  }
  return nullptr;
}

std::string LawReport::to_json(int indent) const {
  nlohmann::json j;
  j["ok"] = ok();
  j["laws"] = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json l{{"law", r.law}, {"passed", r.passed}, {"checked", r.checked}};
    if (!r.passed) l["witness"] = r.witness;
    j["laws"].push_back(l);
  }
  return j.dump(indent);
}

namespace {

class LawChecker {
 public:
  LawChecker(const BoolAlg& alg, const LawOptions& opts) : alg_(alg), opts_(opts) {}

  std::string fmt(const Subset& s) const { return format_subset(s, opts_.names); }

  LawResult& law(const std::string& name) {
    report_.results.push_back({name, true, "", 0});
    return report_.results.back();
  }

  // Records one instance; keeps the first witness.
  static void expect(LawResult& r, bool holds, const std::function<std::string()>& witness) {
    ++r.checked;
    if (!holds && r.passed) {
      r.passed = false;
      r.witness = witness();
    }
  }

  void unary(const std::string& name, const std::function<bool(const Subset&)>& p) {
    LawResult& r = law(name);
    for (const auto& a : alg_.carrier) expect(r, p(a), [&] { return "a=" + fmt(a); });
  }

  void binary(const std::string& name, const std::function<bool(const Subset&, const Subset&)>& p) {
    LawResult& r = law(name);
    for (const auto& a : alg_.carrier) {
      for (const auto& b : alg_.carrier) {
        expect(r, p(a, b), [&] { return "a=" + fmt(a) + " b=" + fmt(b); });
      }
    }
  }

  void ternary(const std::string& name,
               const std::function<bool(const Subset&, const Subset&, const Subset&)>& p) {
    LawResult& r = law(name);
    const auto& c = alg_.carrier;
    std::size_t k = c.size();
    std::size_t stride = 1;
    // Large carriers: a deterministic stride through the triples.
    const std::size_t budget = 300000;
    if (k * k * k > budget) stride = (k * k * k) / budget + 1;
    for (std::size_t idx = 0; idx < k * k * k; idx += stride) {
      const Subset& a = c[idx / (k * k)];
      const Subset& b = c[(idx / k) % k];
      const Subset& d = c[idx % k];
      expect(r, p(a, b, d), [&] { return "a=" + fmt(a) + " b=" + fmt(b) + " c=" + fmt(d); });
    }
  }

  std::optional<Subset> brute_lub(const std::vector<Subset>& fam) const {
    std::vector<const Subset*> upper;
    for (const auto& c : alg_.carrier) {
      if (std::all_of(fam.begin(), fam.end(), [&](const Subset& f) { return alg_.leq(f, c); })) {
        upper.push_back(&c);
      }
    }
    for (const Subset* u : upper) {
      if (std::all_of(upper.begin(), upper.end(), [&](const Subset* v) { return alg_.leq(*u, *v); })) {
        return *u;
      }
    }
    return std::nullopt;
  }

  std::optional<Subset> brute_glb(const std::vector<Subset>& fam) const {
    std::vector<const Subset*> lower;
    for (const auto& c : alg_.carrier) {
      if (std::all_of(fam.begin(), fam.end(), [&](const Subset& f) { return alg_.leq(c, f); })) {
        lower.push_back(&c);
      }
    }
    for (const Subset* l : lower) {
      if (std::all_of(lower.begin(), lower.end(), [&](const Subset* v) { return alg_.leq(*v, *l); })) {
        return *l;
      }
    }
    return std::nullopt;
  }

  void completeness() {
    law("sup is the least upper bound");
    law("inf is the greatest lower bound");
    LawResult& rs = report_.results[report_.results.size() - 2];
    LawResult& ri = report_.results.back();
    auto check = [&](const std::vector<Subset>& fam) {
      auto describe = [&] {
        std::string s = "family=[";
        for (std::size_t i = 0; i < fam.size(); ++i) s += (i ? " " : "") + fmt(fam[i]);
        return s + "]";
      };
      auto lub = brute_lub(fam);
      expect(rs, lub && *lub == alg_.sup(fam), describe);
      auto glb = brute_glb(fam);
      expect(ri, glb && *glb == alg_.inf(fam), describe);
    };
    const auto& c = alg_.carrier;
    if (c.size() <= opts_.exhaustive_family_limit) {
      for (unsigned long bits = 0; bits < (1ul << c.size()); ++bits) {
        std::vector<Subset> fam;
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (bits >> i & 1) fam.push_back(c[i]);
        }
        check(fam);
      }
      return;
    }
    check({});
    for (std::size_t i = 0; i < c.size(); ++i) {
      check({c[i]});
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        check({c[i], c[j]});
        if (c.size() <= 40) {
          for (std::size_t l = j + 1; l < c.size(); ++l) check({c[i], c[j], c[l]});
        }
      }
    }
  }

  LawReport run() {
    const BoolAlg& A = alg_;
    auto eq = [](const Subset& a, const Subset& b) { return a == b; };
    {
      LawResult& r = law("zero and one are in the carrier");
      expect(r, A.contains(A.zero), [&] { return "zero=" + fmt(A.zero); });
      expect(r, A.contains(A.one), [&] { return "one=" + fmt(A.one); });
    }
    binary("carrier closed under join", [&](auto& a, auto& b) { return A.contains(A.join(a, b)); });
    binary("carrier closed under meet", [&](auto& a, auto& b) { return A.contains(A.meet(a, b)); });
    unary("carrier closed under complement", [&](auto& a) { return A.contains(A.complement(a)); });
    unary("leq reflexive", [&](auto& a) { return A.leq(a, a); });
    binary("leq antisymmetric", [&](auto& a, auto& b) { return !(A.leq(a, b) && A.leq(b, a)) || a == b; });
    ternary("leq transitive", [&](auto& a, auto& b, auto& c) {
      return !(A.leq(a, b) && A.leq(b, c)) || A.leq(a, c);
    });
    binary("join is an upper bound", [&](auto& a, auto& b) {
      Subset j = A.join(a, b);
      return A.leq(a, j) && A.leq(b, j);
    });
    ternary("join is least", [&](auto& a, auto& b, auto& c) {
      return !(A.leq(a, c) && A.leq(b, c)) || A.leq(A.join(a, b), c);
    });
    binary("meet is a lower bound", [&](auto& a, auto& b) {
      Subset m = A.meet(a, b);
      return A.leq(m, a) && A.leq(m, b);
    });
    ternary("meet is greatest", [&](auto& a, auto& b, auto& c) {
      return !(A.leq(c, a) && A.leq(c, b)) || A.leq(c, A.meet(a, b));
    });
    binary("join commutative", [&](auto& a, auto& b) { return eq(A.join(a, b), A.join(b, a)); });
    binary("meet commutative", [&](auto& a, auto& b) { return eq(A.meet(a, b), A.meet(b, a)); });
    ternary("join associative", [&](auto& a, auto& b, auto& c) {
      return eq(A.join(A.join(a, b), c), A.join(a, A.join(b, c)));
    });
    ternary("meet associative", [&](auto& a, auto& b, auto& c) {
      return eq(A.meet(A.meet(a, b), c), A.meet(a, A.meet(b, c)));
    });
    binary("absorption", [&](auto& a, auto& b) {
      return eq(A.join(a, A.meet(a, b)), a) && eq(A.meet(a, A.join(a, b)), a);
    });
    ternary("meet distributes over join", [&](auto& a, auto& b, auto& c) {
      return eq(A.meet(a, A.join(b, c)), A.join(A.meet(a, b), A.meet(a, c)));
    });
    ternary("join distributes over meet", [&](auto& a, auto& b, auto& c) {
      return eq(A.join(a, A.meet(b, c)), A.meet(A.join(a, b), A.join(a, c)));
    });
    unary("zero is least", [&](auto& a) { return A.leq(A.zero, a); });
    unary("one is greatest", [&](auto& a) { return A.leq(a, A.one); });
    unary("a meet -a = 0", [&](auto& a) { return eq(A.meet(a, A.complement(a)), A.zero); });
    unary("a join -a = 1", [&](auto& a) { return eq(A.join(a, A.complement(a)), A.one); });
    unary("complement is unique", [&](auto& a) {
      int n = 0;
      for (const auto& b : A.carrier) {
        if (A.meet(a, b) == A.zero && A.join(a, b) == A.one) ++n;
      }
      return n == 1;
    });
    unary("double complement", [&](auto& a) { return eq(A.complement(A.complement(a)), a); });
    binary("De Morgan for join", [&](auto& a, auto& b) {
      return eq(A.complement(A.join(a, b)), A.meet(A.complement(a), A.complement(b)));
    });
    binary("De Morgan for meet", [&](auto& a, auto& b) {
      return eq(A.complement(A.meet(a, b)), A.join(A.complement(a), A.complement(b)));
    });
    completeness();
    return std::move(report_);
  }

  LawReport& report() { return report_; }

 private:
  const BoolAlg& alg_;
  const LawOptions& opts_;
  LawReport report_;
};

}  // namespace

LawReport verify_laws(const BoolAlg& alg, const LawOptions& opts) {
  LawChecker c(alg, opts);
  return c.run();
}

// ---------------------------------------------------------------------------
// Relation maps

std::string ConditionViolation::describe(const RelationMap& rm) const {
  auto name = [&](std::size_t i) { return i < rm.names.size() ? rm.names[i] : std::to_string(i); };
  std::ostringstream out;
  out << "condition (" << condition << ") fails";
  if (condition == 1) {
    out << " at x=" << name(x) << ": x " << (rm.m[x].test(x) ? "is" : "is not")
        << " in M(x) but M(x) " << (rm.m[x].all() ? "=" : "!=") << " X";
  } else {
    out << " at x=" << name(x) << " y=" << name(y) << ": x in M(y) but y not in M(x)";
  }
  return out.str();
}

std::optional<ConditionViolation> check_conditions(const RelationMap& rm) {
  std::size_t n = rm.size();
  if (rm.m.size() != n) throw std::invalid_argument("relation map: one M(x) per element required");
  for (std::size_t x = 0; x < n; ++x) {
    if (rm.m[x].size() != n) throw std::invalid_argument("relation map: M(x) has the wrong width");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (rm.m[x].test(x) != rm.m[x].all()) return ConditionViolation{1, x, x};
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (rm.m[y].test(x) && !rm.m[x].test(y)) return ConditionViolation{2, x, y};
    }
  }
  return std::nullopt;
}

Subset closure(const RelationMap& rm, const Subset& alpha) {
  Subset acc = ~Subset(rm.size());
  for (const auto& mx : rm.m) {
    if (alpha.is_subset_of(mx)) acc &= mx;
  }
  return acc;
}

Subset little_m(const RelationMap& rm, std::size_t y) {
  Subset acc = ~Subset(rm.size());
  for (const auto& mx : rm.m) {
    if (mx.test(y)) acc &= mx;
  }
  return acc;
}

namespace {

std::vector<Subset> carrier_by_filter(const RelationMap& rm) {
  std::size_t n = rm.size();
  std::vector<Subset> out;
  for (unsigned long bits = 0; bits < (1ul << n); ++bits) {
    Subset a(n, bits);
    if (closure(rm, a) == a) out.push_back(a);
  }
  return out;
}

std::vector<Subset> carrier_by_generation(const RelationMap& rm) {
  std::set<Subset> seen{~Subset(rm.size())};
  std::vector<Subset> frontier(seen.begin(), seen.end());
  std::set<Subset> gens(rm.m.begin(), rm.m.end());
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (const auto& c : frontier) {
      for (const auto& g : gens) {
        Subset d = c & g;
        if (seen.insert(d).second) next.push_back(d);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

RelationCBA build_relation_cba(const RelationMap& rm, CarrierMethod method) {
  if (rm.size() == 0) throw std::invalid_argument("relation map: the base set is empty");
  if (auto v = check_conditions(rm)) throw ConditionViolated(*v, v->describe(rm));
  RelationCBA out;
  out.base = rm;
  BoolAlg& alg = out.alg;
  std::size_t n = rm.size();
  alg.base_size = n;
  if (method == CarrierMethod::kAuto) {
    method = n <= 16 ? CarrierMethod::kFilter : CarrierMethod::kGenerate;
  }
  alg.carrier = method == CarrierMethod::kFilter ? carrier_by_filter(rm) : carrier_by_generation(rm);
  std::sort(alg.carrier.begin(), alg.carrier.end());
  alg.one = ~Subset(n);
  alg.zero = alg.one;
  for (const auto& my : rm.m) alg.zero &= my;
  // The lambdas share ownership of the map so the algebra outlives `out.base`.
  auto base = std::make_shared<const RelationMap>(rm);
  alg.meet = [](const Subset& a, const Subset& b) { return a & b; };
  alg.join = [base](const Subset& a, const Subset& b) { return closure(*base, a | b); };
  alg.complement = [base](const Subset& a) {
    Subset acc = ~Subset(base->size());
    for (std::size_t x = a.find_first(); x != Subset::npos; x = a.find_next(x)) acc &= base->m[x];
    return acc;
  };
  alg.leq = [](const Subset& a, const Subset& b) { return a.is_subset_of(b); };
  return out;
}

LawReport verify_relation_laws(const RelationCBA& cba, const LawOptions& opts_in) {
  LawOptions opts = opts_in;
  if (opts.names.empty()) opts.names = cba.base.names;
  LawChecker c(cba.alg, opts);
  LawReport report = c.run();
  const RelationMap& rm = cba.base;
  const BoolAlg& A = cba.alg;
  auto fmt = [&](const Subset& s) { return format_subset(s, opts.names); };
  auto add = [&](const std::string& name) -> LawResult& {
    report.results.push_back({name, true, "", 0});
    return report.results.back();
  };
  {
    LawResult& r = add("zero = {x : x in M(x)}");
    Subset diag(rm.size());
    for (std::size_t x = 0; x < rm.size(); ++x) diag[x] = rm.m[x].test(x);
    LawChecker::expect(r, diag == A.zero, [&] { return "zero=" + fmt(A.zero) + " diagonal=" + fmt(diag); });
  }
  {
    LawResult& r = add("every M(x) is in the carrier");
    for (std::size_t x = 0; x < rm.size(); ++x) {
      LawChecker::expect(r, A.contains(rm.m[x]), [&] { return "x=" + opts.names[x]; });
    }
  }
  {
    LawResult& r = add("carrier = closure fixed points");
    for (const auto& a : A.carrier) {
      LawChecker::expect(r, closure(rm, a) == a, [&] { return "a=" + fmt(a); });
    }
    if (rm.size() <= 16) {
      std::size_t fixed = 0;
      for (unsigned long bits = 0; bits < (1ul << rm.size()); ++bits) {
        Subset a(rm.size(), bits);
        if (closure(rm, a) == a) ++fixed;
      }
      LawChecker::expect(r, fixed == A.size(), [&] {
        return "fixed points=" + std::to_string(fixed) + " carrier=" + std::to_string(A.size());
      });
    }
  }
  {
    LawResult& r = add("inf is intersection");
    for (const auto& a : A.carrier) {
      for (const auto& b : A.carrier) {
        LawChecker::expect(r, A.inf({a, b}) == (a & b), [&] { return "a=" + fmt(a) + " b=" + fmt(b); });
      }
    }
  }
  {
    LawResult& r = add("sup is closure of union");
    for (const auto& a : A.carrier) {
      for (const auto& b : A.carrier) {
        LawChecker::expect(r, A.sup({a, b}) == closure(rm, a | b),
                           [&] { return "a=" + fmt(a) + " b=" + fmt(b); });
      }
    }
  }
  {
    LawResult& r = add("alpha <= M(x) implies x in -alpha");
    for (const auto& a : A.carrier) {
      Subset na = A.complement(a);
      for (std::size_t x = 0; x < rm.size(); ++x) {
        if (a.is_subset_of(rm.m[x])) {
          LawChecker::expect(r, na.test(x), [&] { return "alpha=" + fmt(a) + " x=" + opts.names[x]; });
        }
      }
    }
  }
  {
    LawResult& r = add("m(y) = -M(y)");
    for (std::size_t y = 0; y < rm.size(); ++y) {
      LawChecker::expect(r, little_m(rm, y) == A.complement(rm.m[y]), [&] {
        return "y=" + opts.names[y] + " m(y)=" + fmt(little_m(rm, y)) + " -M(y)=" + fmt(A.complement(rm.m[y]));
      });
    }
  }
  return report;
}

std::vector<RelationMap> enumerate_relation_maps(std::size_t n) {
  // Symmetric relations R on n points with xRx implying xRy for all y;
  // M(x) = {y : xRy}.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) cells.emplace_back(x, y);
  }
  std::vector<RelationMap> out;
  for (unsigned long bits = 0; bits < (1ul << cells.size()); ++bits) {
    RelationMap rm;
    for (std::size_t x = 0; x < n; ++x) rm.names.push_back("x" + std::to_string(x + 1));
    rm.m.assign(n, Subset(n));
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (bits >> i & 1) {
        rm.m[cells[i].first].set(cells[i].second);
        rm.m[cells[i].second].set(cells[i].first);
      }
    }
    if (!check_conditions(rm)) out.push_back(std::move(rm));
  }
  return out;
}

RelationMap parse_relation_map(const std::string& text) {
  RelationMap rm;
  std::istringstream in(text);
  std::string line;
  std::map<std::string, std::size_t> index;
  std::vector<std::pair<std::string, std::vector<std::string>>> entries;
  bool have_set = false;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string head;
    if (!(words >> head) || head[0] == '#') continue;
    if (head == "set") {
      if (have_set) throw std::invalid_argument("relation map: duplicate 'set' line");
      have_set = true;
      std::string w;
      while (words >> w) {
        if (!index.emplace(w, rm.names.size()).second) {
          throw std::invalid_argument("relation map: element '" + w + "' listed twice");
        }
        rm.names.push_back(w);
      }
      continue;
    }
    if (head != "M") throw std::invalid_argument("relation map: unexpected line '" + line + "'");
    std::string x, eq, w;
    if (!(words >> x >> eq) || eq != "=") {
      throw std::invalid_argument("relation map: expected 'M x = ...' in '" + line + "'");
    }
    std::vector<std::string> ys;
    while (words >> w) ys.push_back(w);
    entries.emplace_back(x, ys);
  }
  if (!have_set) throw std::invalid_argument("relation map: missing 'set' line");
  if (rm.names.empty()) throw std::invalid_argument("relation map: the base set is empty");
  std::size_t n = rm.names.size();
  rm.m.assign(n, Subset(n));
  std::set<std::string> defined;
  auto lookup = [&](const std::string& w) {
    auto it = index.find(w);
    if (it == index.end()) throw std::invalid_argument("relation map: unknown element '" + w + "'");
    return it->second;
  };
  for (const auto& [x, ys] : entries) {
    if (!defined.insert(x).second) throw std::invalid_argument("relation map: M " + x + " given twice");
    std::size_t xi = lookup(x);
    for (const auto& y : ys) rm.m[xi].set(lookup(y));
  }
  return rm;
}

std::string format_relation_map(const RelationMap& rm) {
  std::ostringstream out;
  out << "set";
  for (const auto& n : rm.names) out << ' ' << n;
  out << '\n';
  for (std::size_t x = 0; x < rm.size(); ++x) {
    out << "M " << rm.names[x] << " =";
    for (std::size_t y = rm.m[x].find_first(); y != Subset::npos; y = rm.m[x].find_next(y)) {
      out << ' ' << rm.names[y];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace g1lc
