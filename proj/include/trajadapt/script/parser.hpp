// Copyright 2026 The trajadapt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRAJADAPT_SCRIPT_PARSER_HPP_
#define TRAJADAPT_SCRIPT_PARSER_HPP_

#include <span>
#include <string_view>

#include "trajadapt/script/ast.hpp"
#include "trajadapt/script/lexer.hpp"

namespace trajadapt::script {

/// Recursive-descent parser for the script subset:
///
///   program := {stmt}
///   stmt    := assign | for | if | exprstmt
///   assign  := target '=' expr NEWLINE
///   target  := IDENT {'[' expr ']'}
///   for     := 'for' IDENT 'in' 'range' '(' expr [',' expr [',' expr]] ')'
///              ':' block
///   if      := 'if' expr ':' block {'elif' expr ':' block}
///              ['else' ':' block]
///   block   := NEWLINE INDENT stmt {stmt} DEDENT
///
/// Expression precedence, loosest first: or, and, not, comparison
/// (non-chaining), + -, * / %, unary -, **, postfix call/index/slice.
/// Calls must name a builtin; the only methods are .append and .extend.
///
/// Throws ScriptException (ErrorKind::kParse) naming the offending token.
Program parse(std::span<const Token> tokens);

/// tokenize + parse.
Program parse_source(std::string_view source);

}  // namespace trajadapt::script

#endif  // TRAJADAPT_SCRIPT_PARSER_HPP_
