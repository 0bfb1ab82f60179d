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

#include <cctype>
#include <string>
#include <vector>

#include "g1lc/parser.hpp"

namespace g1lc {

namespace {

bool valid_hint(const std::string& h, bool upper) {
  if (h.empty() || h == "EX" || h == "ALL") return false;
  unsigned char c = static_cast<unsigned char>(h[0]);
  if (upper ? !std::isupper(c) : !std::islower(c)) return false;
  for (char ch : h) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '\'') return false;
  }
  return true;
}

class Printer {
 public:
  Printer(std::set<std::string> taken) : taken_(std::move(taken)) {}

  std::string term(const Term& t) const {
    switch (t.kind()) {
      case Term::Kind::kVariable:
      case Term::Kind::kConstant:
        return t.name();
      case Term::Kind::kBound:
        return bound_name(t.index());
      case Term::Kind::kApply: {
        std::string s = t.name() + "(";
        for (std::size_t i = 0; i < t.args().size(); ++i) {
          if (i) s += ", ";
          s += term(t.args()[i]);
        }
        return s + ")";
      }
    }
    return {};
  }

  // Levels: 0 anything, 1 left of '|', 2 right of '|' or left of '&',
  // 3 right of '&' or under '~'.
  std::string formula(const Formula& f, int level) {
    switch (f.kind()) {
      case Connective::kAtom: {
        std::string s = f.head_kind() == HeadKind::kBound ? bound_name(f.head_index())
                                                          : f.head_name();
        if (!f.args().empty()) {
          s += "(";
          for (std::size_t i = 0; i < f.args().size(); ++i) {
            if (i) s += ", ";
            s += term(f.args()[i]);
          }
          s += ")";
        }
        return s;
      }
      case Connective::kNot:
        return "~" + formula(f.operand(), 3);
      case Connective::kOr: {
        std::string s = formula(f.left(), 1) + " | " + formula(f.right(), 2);
        return level > 1 ? "(" + s + ")" : s;
      }
      case Connective::kAnd: {
        std::string s = formula(f.left(), 2) + " & " + formula(f.right(), 3);
        return level > 2 ? "(" + s + ")" : s;
      }
      default:
        break;
    }
    bool second = f.is_second_order_quantifier();
    bool exists = f.kind() == Connective::kExists0 || f.kind() == Connective::kExists1;
    std::string base = valid_hint(f.hint(), second) ? f.hint() : (second ? "X" : "x");
    std::string name = fresh_name(base, taken_);
    std::string s = exists ? "EX " : "ALL ";
    s += name;
    if (second) s += ":" + std::to_string(f.arity());
    s += ". ";
    push(name);
    s += formula(f.operand(), 0);
    pop();
    return level > 0 ? "(" + s + ")" : s;
  }

  void push(const std::string& name) {
    stack_.push_back(name);
    taken_.insert(name);
  }
  void pop() {
    taken_.erase(stack_.back());
    stack_.pop_back();
  }
  std::string fresh(const std::string& hint, bool upper) {
    return fresh_name(valid_hint(hint, upper) ? hint : (upper ? "X" : "x"), taken_);
  }

 private:
  std::string bound_name(int index) const {
    if (index < 0 || index >= static_cast<int>(stack_.size())) {
      return "#" + std::to_string(index);
    }
    return stack_[stack_.size() - 1 - index];
  }

  std::set<std::string> taken_;
  std::vector<std::string> stack_;
};

std::set<std::string> reserved(const Formula& f, const Signature& sig) {
  std::set<std::string> taken = names_of(f);
  taken.insert(sig.constants.begin(), sig.constants.end());
  for (const auto& [n, a] : sig.functions) taken.insert(n);
  for (const auto& [n, a] : sig.relations) taken.insert(n);
  return taken;
}

}  // namespace

std::string to_string(const Formula& f, const Signature& sig) {
  if (!f.valid()) return "<invalid>";
  Printer p(reserved(f, sig));
  return p.formula(f, 0);
}

std::string to_string(const Term& t) { return Printer({}).term(t); }

std::string to_string(const Abstract& a, const Signature& sig) {
  Printer p(reserved(a.body(), sig));
  std::string s = "\\";
  for (const auto& h : a.param_hints()) {
    std::string name = p.fresh(h, false);
    p.push(name);
    s += name + " ";
  }
  if (s.back() == ' ') s.pop_back();
  return s + ". " + p.formula(a.body(), 0);
}

}  // namespace g1lc
