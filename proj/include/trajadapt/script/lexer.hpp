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

#ifndef TRAJADAPT_SCRIPT_LEXER_HPP_
#define TRAJADAPT_SCRIPT_LEXER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "trajadapt/script/error.hpp"

namespace trajadapt::script {

enum class TokenKind {
  kIdentifier,
  kNumber,
  kString,
  kOperator,
  kKeyword,
  kIndent,
  kDedent,
  kNewline,
  kEof,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::kEof;
  // Identifier/keyword/operator text; decoded contents for strings; source
  // spelling for numbers.
  std::string lexeme;
  int line = 1;
  int column = 1;

  bool is(TokenKind k, std::string_view text) const {
    return kind == k && lexeme == text;
  }
  bool is_op(std::string_view text) const {
    return is(TokenKind::kOperator, text);
  }
  bool is_keyword(std::string_view text) const {
    return is(TokenKind::kKeyword, text);
  }
};

/// Reserved words. The ones outside the language subset are still lexed as
/// keywords so the parser can reject them by name.
bool is_keyword(std::string_view word);

/// Offside-rule tokenizer. Indentation is spaces only; newlines inside
/// brackets are joined. Throws ScriptException with ErrorKind::kLex.
std::vector<Token> tokenize(std::string_view source);

}  // namespace trajadapt::script

#endif  // TRAJADAPT_SCRIPT_LEXER_HPP_
