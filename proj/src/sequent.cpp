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

#include "g1lc/sequent.hpp"

#include <algorithm>

namespace g1lc {

namespace {

void normalize(std::vector<Formula>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool contains(const std::vector<Formula>& v, const Formula& f) {
  return std::binary_search(v.begin(), v.end(), f);
}

std::vector<Formula> inserted(const std::vector<Formula>& v, const Formula& f) {
  auto it = std::lower_bound(v.begin(), v.end(), f);
  if (it != v.end() && *it == f) return v;
  std::vector<Formula> out;
  out.reserve(v.size() + 1);
  out.insert(out.end(), v.begin(), it);
  out.push_back(f);
  out.insert(out.end(), it, v.end());
  return out;
}

std::vector<Formula> united(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  std::vector<Formula> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Sequent::Sequent(std::vector<Formula> antecedent, std::vector<Formula> succedent)
    : ant_(std::move(antecedent)), suc_(std::move(succedent)) {
  normalize(ant_);
  normalize(suc_);
}

bool Sequent::in_antecedent(const Formula& f) const { return contains(ant_, f); }
bool Sequent::in_succedent(const Formula& f) const { return contains(suc_, f); }

Sequent Sequent::add_antecedent(const Formula& f) const {
  Sequent s;
  s.ant_ = inserted(ant_, f);
  s.suc_ = suc_;
  return s;
}

Sequent Sequent::add_succedent(const Formula& f) const {
  Sequent s;
  s.ant_ = ant_;
  s.suc_ = inserted(suc_, f);
  return s;
}

Sequent Sequent::merge(const Sequent& other) const {
  Sequent s;
  s.ant_ = united(ant_, other.ant_);
  s.suc_ = united(suc_, other.suc_);
  return s;
}

bool Sequent::subset_of(const Sequent& other) const {
  return std::includes(other.ant_.begin(), other.ant_.end(), ant_.begin(), ant_.end()) &&
         std::includes(other.suc_.begin(), other.suc_.end(), suc_.begin(), suc_.end());
}

bool Sequent::has_atomic_coincidence() const {
  for (const auto& f : ant_) {
    if (f.is_atomic() && contains(suc_, f)) return true;
  }
  return false;
}

std::vector<Formula> Sequent::formulas() const { return united(ant_, suc_); }

std::set<std::string> names_of(const Sequent& s) {
  std::set<std::string> out;
  for (const auto& f : s.formulas()) {
    auto n = names_of(f);
    out.insert(n.begin(), n.end());
  }
  return out;
}

std::set<std::string> free_first_order_variables(const Sequent& s) {
  std::set<std::string> out;
  for (const auto& f : s.formulas()) {
    auto n = free_first_order_variables(f);
    out.insert(n.begin(), n.end());
  }
  return out;
}

std::map<std::string, int> free_second_order_variables(const Sequent& s) {
  std::map<std::string, int> out;
  for (const auto& f : s.formulas()) {
    auto n = free_second_order_variables(f);
    out.insert(n.begin(), n.end());
  }
  return out;
}

Sequent parse_sequent(std::string_view text, ParseContext& ctx) {
  SequentText t = parse_sequent_text(text, ctx);
  return Sequent(std::move(t.antecedent), std::move(t.succedent));
}

Sequent parse_sequent(std::string_view text, const Signature& sig) {
  ParseContext ctx{sig, {}};
  return parse_sequent(text, ctx);
}

std::string to_string(const Sequent& s, const Signature& sig) {
  std::string out;
  for (std::size_t i = 0; i < s.antecedent().size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.antecedent()[i], sig);
  }
  out += s.antecedent().empty() ? "=>" : " =>";
  for (std::size_t i = 0; i < s.succedent().size(); ++i) {
    out += i ? ", " : " ";
    out += to_string(s.succedent()[i], sig);
  }
  return out;
}

}  // namespace g1lc
