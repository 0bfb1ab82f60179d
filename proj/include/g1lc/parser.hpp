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

// Text syntax.
//
//   formula  ::= formula '<->' formula | formula '>' formula
//              | formula '|' formula | formula '&' formula | '~' formula
//              | ('EX' | 'ALL') binder '.' formula | atom | '(' formula ')'
//   binder   ::= lowercase-name | Uppercase-name ':' arity
//   atom     ::= Name [ '(' term { ',' term } ')' ]
//   abstract ::= '\' { lowercase-name } '.' formula
//   sequent  ::= [ formula { ',' formula } ] '=>' [ formula { ',' formula } ]
//
// Precedence from tightest: ~, &, |, >, <->.  Quantifier bodies extend as far
// right as possible.  '>' associates to the right, '|' and '&' to the left.
//
// A document is a sequence of lines; header lines declare the signature and
// free second-order variables:
//
//   const c d          individual constants
//   fun f:1 S:1        function symbols
//   rel R:2            relation constants
//   var X:1 P:0        free second-order variables (otherwise inferred)
//
// Lines starting with '#' are comments.

#ifndef G1LC_PARSER_HPP_
#define G1LC_PARSER_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "g1lc/syntax.hpp"

namespace g1lc {

// Names known while parsing.  Free second-order variable arities are fixed by
// a `var` declaration or by their first use, and must agree afterwards.
struct ParseContext {
  Signature signature;
  std::map<std::string, int> variable_arity;
};

Formula parse_formula(std::string_view text, ParseContext& ctx);
Formula parse_formula(std::string_view text, const Signature& sig = {});
Term parse_term(std::string_view text, ParseContext& ctx);
Abstract parse_abstract(std::string_view text, ParseContext& ctx);

struct SequentText {
  std::vector<Formula> antecedent;
  std::vector<Formula> succedent;
};
SequentText parse_sequent_text(std::string_view text, ParseContext& ctx);

struct Document {
  ParseContext context;
  std::vector<std::string> lines;  // non-header, non-comment lines
};
// Throws SyntaxError on a malformed header.
Document parse_document(std::string_view text);
// Header lines reproducing the signature and declared variables.
std::string format_header(const ParseContext& ctx);

// Printing.  Bound variables are renamed where needed so the output parses
// back to an alpha-equivalent formula under `sig`.
std::string to_string(const Formula& f, const Signature& sig = {});
std::string to_string(const Term& t);
std::string to_string(const Abstract& a, const Signature& sig = {});

}  // namespace g1lc

#endif  // G1LC_PARSER_HPP_
