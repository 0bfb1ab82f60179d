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

#include "g1lc/parser.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace g1lc {

namespace {

enum class Tok {
  kIdent,
  kLParen,
  kRParen,
  kComma,
  kDot,
  kColon,
  kTilde,
  kAmp,
  kBar,
  kImplies,
  kIff,
  kArrow,
  kBackslash,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (is_name_char(c)) {
      while (i < s.size() && is_name_char(s[i])) ++i;
      out.push_back({Tok::kIdent, std::string(s.substr(start, i - start)), start});
      continue;
    }
    auto single = [&](Tok k) {
      out.push_back({k, std::string(1, c), start});
      ++i;
    };
    switch (c) {
      case '(': single(Tok::kLParen); break;
      case ')': single(Tok::kRParen); break;
      case ',': single(Tok::kComma); break;
      case '.': single(Tok::kDot); break;
      case ':': single(Tok::kColon); break;
      case '~': single(Tok::kTilde); break;
      case '&': single(Tok::kAmp); break;
      case '|': single(Tok::kBar); break;
      case '>': single(Tok::kImplies); break;
      case '\\': single(Tok::kBackslash); break;
      case '=':
        if (s.substr(i, 2) == "=>") {
          out.push_back({Tok::kArrow, "=>", start});
          i += 2;
          break;
        }
        throw SyntaxError("unexpected '='", start);
      case '<':
        if (s.substr(i, 3) == "<->") {
          out.push_back({Tok::kIff, "<->", start});
          i += 3;
          break;
        }
        throw SyntaxError("unexpected '<'", start);
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", start);
    }
  }
  out.push_back({Tok::kEnd, "", s.size()});
  return out;
}

bool starts_upper(const std::string& s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}

bool starts_lower(const std::string& s) {
  return !s.empty() && std::islower(static_cast<unsigned char>(s[0]));
}

bool is_keyword(const std::string& s) { return s == "EX" || s == "ALL"; }

int parse_arity(const std::string& text, std::size_t pos) {
  if (text.empty()) throw SyntaxError("expected an arity", pos);
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw SyntaxError("expected an arity, got '" + text + "'", pos);
    }
  }
  return std::stoi(text);
}

class Parser {
 public:
  Parser(std::string_view text, ParseContext& ctx) : toks_(lex(text)), ctx_(ctx) {}

  Formula formula() { return iff(); }

  Term term() {
    const Token& t = expect(Tok::kIdent, "a term");
    const std::string& name = t.text;
    if (ctx_.signature.functions.count(name)) {
      int arity = ctx_.signature.functions.at(name);
      std::vector<Term> args = arguments();
      if (static_cast<int>(args.size()) != arity) {
        throw SyntaxError("function symbol '" + name + "' expects " +
                              std::to_string(arity) + " argument(s)",
                          t.pos);
      }
      return Term::apply(name, std::move(args));
    }
    if (peek().kind == Tok::kLParen) {
      throw SyntaxError("unknown function symbol '" + name + "'", t.pos);
    }
    if (ctx_.signature.constants.count(name)) return Term::constant(name);
    if (ctx_.signature.relations.count(name)) {
      throw SyntaxError("relation constant '" + name + "' used as a term", t.pos);
    }
    if (!starts_lower(name)) {
      throw SyntaxError("unknown individual constant '" + name + "'", t.pos);
    }
    return Term::variable(name);
  }

  Abstract abstract() {
    expect(Tok::kBackslash, "'\\'");
    std::vector<std::string> params;
    while (peek().kind == Tok::kIdent) {
      const Token& t = next();
      check_first_order_binder(t);
      params.push_back(t.text);
    }
    expect(Tok::kDot, "'.'");
    for (const auto& p : params) scope_.push_back({p, -1});
    Formula body = formula();
    scope_.resize(scope_.size() - params.size());
    return Abstract(params, body);
  }

  SequentText sequent() {
    SequentText out;
    if (peek().kind != Tok::kArrow) out.antecedent = formula_list();
    expect(Tok::kArrow, "'=>'");
    if (peek().kind != Tok::kEnd) out.succedent = formula_list();
    return out;
  }

  void finish() {
    if (peek().kind != Tok::kEnd) {
      throw SyntaxError("unexpected '" + peek().text + "'", peek().pos);
    }
  }

 private:
  struct Bound {
    std::string name;
    int arity;  // -1 for first-order
  };

  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_++]; }

  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) {
      std::string got = peek().kind == Tok::kEnd ? "end of input" : "'" + peek().text + "'";
      throw SyntaxError(std::string("expected ") + what + ", got " + got, peek().pos);
    }
    return next();
  }

  std::vector<Formula> formula_list() {
    std::vector<Formula> out{formula()};
    while (peek().kind == Tok::kComma) {
      next();
      out.push_back(formula());
    }
    return out;
  }

  Formula iff() {
    Formula f = implication();
    while (peek().kind == Tok::kIff) {
      next();
      f = Formula::biconditional(f, implication());
    }
    return f;
  }

  Formula implication() {
    Formula f = disjunction();
    if (peek().kind == Tok::kImplies) {
      next();
      return Formula::implication(f, implication());
    }
    return f;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (peek().kind == Tok::kBar) {
      next();
      f = Formula::disjunction(f, conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (peek().kind == Tok::kAmp) {
      next();
      f = Formula::conjunction(f, unary());
    }
    return f;
  }

  Formula unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kTilde:
        next();
        return Formula::negation(unary());
      case Tok::kLParen: {
        next();
        Formula f = formula();
        expect(Tok::kRParen, "')'");
        return f;
      }
      case Tok::kIdent:
        if (is_keyword(t.text)) return quantified();
        return atom();
      default:
        throw SyntaxError(t.kind == Tok::kEnd ? "unexpected end of input"
                                              : "unexpected '" + t.text + "'",
                          t.pos);
    }
  }

  void check_first_order_binder(const Token& t) {
    if (!starts_lower(t.text)) {
      throw SyntaxError("first-order variable '" + t.text + "' must start lowercase", t.pos);
    }
    if (ctx_.signature.declares(t.text)) {
      throw SyntaxError("cannot bind declared symbol '" + t.text + "'", t.pos);
    }
  }

  Formula quantified() {
    bool exists = next().text == "EX";
    const Token& v = expect(Tok::kIdent, "a bound variable");
    if (starts_upper(v.text) && !is_keyword(v.text)) {
      if (ctx_.signature.declares(v.text)) {
        throw SyntaxError("cannot bind declared symbol '" + v.text + "'", v.pos);
      }
      expect(Tok::kColon, "':' and an arity");
      const Token& a = expect(Tok::kIdent, "an arity");
      int arity = parse_arity(a.text, a.pos);
      expect(Tok::kDot, "'.'");
      scope_.push_back({v.text, arity});
      Formula body = formula();
      scope_.pop_back();
      return exists ? Formula::exists1(v.text, arity, body)
                    : Formula::forall1(v.text, arity, body);
    }
    check_first_order_binder(v);
    expect(Tok::kDot, "'.'");
    scope_.push_back({v.text, -1});
    Formula body = formula();
    scope_.pop_back();
    return exists ? Formula::exists0(v.text, body) : Formula::forall0(v.text, body);
  }

  std::vector<Term> arguments() {
    std::vector<Term> args;
    if (peek().kind != Tok::kLParen) return args;
    next();
    args.push_back(term());
    while (peek().kind == Tok::kComma) {
      next();
      args.push_back(term());
    }
    expect(Tok::kRParen, "')'");
    return args;
  }

  Formula atom() {
    const Token& t = next();
    const std::string name = t.text;
    std::size_t pos = t.pos;
    if (!starts_upper(name)) {
      throw SyntaxError("expected a predicate, got '" + name + "'", pos);
    }
    std::vector<Term> args = arguments();
    int n = static_cast<int>(args.size());
    auto arity_error = [&](int declared) {
      return SyntaxError("'" + name + "' has arity " + std::to_string(declared) +
                             " but is applied to " + std::to_string(n) + " argument(s)",
                         pos);
    };
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->name != name) continue;
      if (it->arity < 0) break;
      if (it->arity != n) throw arity_error(it->arity);
      return Formula::variable_atom(name, std::move(args));
    }
    if (auto it = ctx_.signature.relations.find(name); it != ctx_.signature.relations.end()) {
      if (it->second != n) throw arity_error(it->second);
      return Formula::relation_atom(name, std::move(args));
    }
    if (ctx_.signature.declares(name)) {
      throw SyntaxError("'" + name + "' is not a predicate", pos);
    }
    auto [it, inserted] = ctx_.variable_arity.emplace(name, n);
    if (!inserted && it->second != n) throw arity_error(it->second);
    return Formula::variable_atom(name, std::move(args));
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  ParseContext& ctx_;
  std::vector<Bound> scope_;
};

}  // namespace

Formula parse_formula(std::string_view text, ParseContext& ctx) {
  Parser p(text, ctx);
  Formula f = p.formula();
  p.finish();
  return f;
}

Formula parse_formula(std::string_view text, const Signature& sig) {
  ParseContext ctx{sig, {}};
  return parse_formula(text, ctx);
}

Term parse_term(std::string_view text, ParseContext& ctx) {
  Parser p(text, ctx);
  Term t = p.term();
  p.finish();
  return t;
}

Abstract parse_abstract(std::string_view text, ParseContext& ctx) {
  Parser p(text, ctx);
  Abstract a = p.abstract();
  p.finish();
  return a;
}

SequentText parse_sequent_text(std::string_view text, ParseContext& ctx) {
  Parser p(text, ctx);
  SequentText s = p.sequent();
  p.finish();
  return s;
}

Document parse_document(std::string_view text) {
  Document doc;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
    if (line[0] == '#') continue;
    std::istringstream words(line);
    std::string keyword;
    words >> keyword;
    if (keyword != "const" && keyword != "fun" && keyword != "rel" && keyword != "var") {
      doc.lines.push_back(line);
      continue;
    }
    std::string item;
    while (words >> item) {
      if (keyword == "const") {
        doc.context.signature.constants.insert(item);
        continue;
      }
      auto colon = item.find(':');
      if (colon == std::string::npos) {
        throw SyntaxError("expected name:arity in '" + keyword + "' declaration, got '" + item + "'");
      }
      std::string name = item.substr(0, colon);
      int arity = parse_arity(item.substr(colon + 1), SyntaxError::npos);
      if (keyword == "fun") doc.context.signature.functions[name] = arity;
      if (keyword == "rel") doc.context.signature.relations[name] = arity;
      if (keyword == "var") {
        if (!starts_upper(name)) {
          throw SyntaxError("second-order variable '" + name + "' must start uppercase");
        }
        doc.context.variable_arity[name] = arity;
      }
    }
  }
  doc.context.signature.validate();
  return doc;
}

std::string format_header(const ParseContext& ctx) {
  std::ostringstream out;
  const Signature& sig = ctx.signature;
  if (!sig.constants.empty()) {
    out << "const";
    for (const auto& c : sig.constants) out << ' ' << c;
    out << '\n';
  }
  if (!sig.functions.empty()) {
    out << "fun";
    for (const auto& [n, a] : sig.functions) out << ' ' << n << ':' << a;
    out << '\n';
  }
  if (!sig.relations.empty()) {
    out << "rel";
    for (const auto& [n, a] : sig.relations) out << ' ' << n << ':' << a;
    out << '\n';
  }
  if (!ctx.variable_arity.empty()) {
    out << "var";
    for (const auto& [n, a] : ctx.variable_arity) out << ' ' << n << ':' << a;
    out << '\n';
  }
  return out.str();
}

}  // namespace g1lc
