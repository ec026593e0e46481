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

#include "trajadapt/script/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace trajadapt::script {

namespace {

constexpr std::array<std::string_view, 33> kKeywords = {
    "for",   "in",     "if",     "elif",     "else",   "and",    "or",
    "not",   "True",   "False",  "None",     "def",    "while",  "import",
    "from",  "lambda", "return", "class",    "with",   "try",    "except",
    "finally", "raise", "assert", "del",     "global", "nonlocal", "yield",
    "pass",  "break",  "continue", "is",     "as",
};

constexpr std::array<std::string_view, 9> kTwoCharOps = {
    "**", "==", "!=", "<=", ">=", "+=", "-=", "*=", "/=",
};

constexpr std::string_view kOneCharOps = "+-*/%=<>()[]{},:.;";

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    while (true) {
      if (at_line_start_ && depth_ == 0) {
        if (!begin_line()) break;
        continue;
      }
      if (eof()) break;
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '#') {
        skip_comment();
      } else if (c == '\\' && peek(1) == '\n') {
        advance();
        advance();
      } else if (c == '\n') {
        if (depth_ == 0) {
          emit(TokenKind::kNewline, "", line_, col_);
          at_line_start_ = true;
        }
        advance();
      } else if (digit(c) || (c == '.' && digit(peek(1)))) {
        lex_number();
      } else if (ident_start(c)) {
        lex_word();
      } else if (c == '"' || c == '\'') {
        lex_string();
      } else {
        lex_operator();
      }
    }
    finish();
    return std::move(tokens_);
  }

 private:
  bool eof() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& message, int line, int col) const {
    throw ScriptException({ErrorKind::kLex,
                           message + " at line " + std::to_string(line) +
                               ", column " + std::to_string(col),
                           line});
  }

  void emit(TokenKind kind, std::string lexeme, int line, int col) {
    tokens_.push_back({kind, std::move(lexeme), line, col});
  }

  void skip_comment() {
    while (!eof() && peek() != '\n') advance();
  }

  // Measures indentation of a new logical line and emits INDENT/DEDENT.
  // Returns false at end of input.
  bool begin_line() {
    int width = 0;
    while (!eof() && (peek() == ' ' || peek() == '\t')) {
      if (peek() == '\t') fail("tab in indentation", line_, col_);
      ++width;
      advance();
    }
    if (eof()) return false;
    const char c = peek();
    if (c == '\n' || c == '\r' || c == '#') {
      skip_comment();
      while (!eof() && peek() == '\r') advance();
      if (!eof()) advance();  // the newline
      return true;
    }
    at_line_start_ = false;
    if (width > indents_.back()) {
      indents_.push_back(width);
      emit(TokenKind::kIndent, "", line_, 1);
    } else {
      while (width < indents_.back()) {
        indents_.pop_back();
        emit(TokenKind::kDedent, "", line_, 1);
      }
      if (width != indents_.back()) {
        fail("unindent does not match any outer indentation level", line_,
             col_);
      }
    }
    return true;
  }

  void lex_number() {
    const int line = line_, col = col_;
    const std::size_t start = pos_;
    while (digit(peek())) advance();
    if (peek() == '.') {
      advance();
      while (digit(peek())) advance();
    }
    if (peek() == 'e' || peek() == 'E') {
      const std::size_t sign = (peek(1) == '+' || peek(1) == '-') ? 1 : 0;
      if (digit(peek(1 + sign))) {
        advance();
        if (sign) advance();
        while (digit(peek())) advance();
      }
    }
    if (ident_char(peek())) fail("invalid number literal", line, col);
    emit(TokenKind::kNumber, std::string(src_.substr(start, pos_ - start)),
         line, col);
  }

  void lex_word() {
    const int line = line_, col = col_;
    const std::size_t start = pos_;
    while (ident_char(peek())) advance();
    std::string word(src_.substr(start, pos_ - start));
    const TokenKind kind =
        is_keyword(word) ? TokenKind::kKeyword : TokenKind::kIdentifier;
    emit(kind, std::move(word), line, col);
  }

  void lex_string() {
    const int line = line_, col = col_;
    const char quote = peek();
    advance();
    std::string text;
    while (true) {
      if (eof() || peek() == '\n') fail("unterminated string", line, col);
      const char c = peek();
      if (c == quote) {
        advance();
        break;
      }
      if (c == '\\') {
        advance();
        if (eof()) fail("unterminated string", line, col);
        const char e = peek();
        switch (e) {
          case 'n': text += '\n'; break;
          case 't': text += '\t'; break;
          case 'r': text += '\r'; break;
          case '0': text += '\0'; break;
          case '\\': case '\'': case '"': text += e; break;
          case '\n': break;  // escaped line break
          default:
            text += '\\';
            text += e;
        }
        advance();
        continue;
      }
      text += c;
      advance();
    }
    emit(TokenKind::kString, std::move(text), line, col);
  }

  void lex_operator() {
    const int line = line_, col = col_;
    const std::string_view two = src_.substr(pos_, 2);
    if (std::find(kTwoCharOps.begin(), kTwoCharOps.end(), two) !=
        kTwoCharOps.end()) {
      advance();
      advance();
      emit(TokenKind::kOperator, std::string(two), line, col);
      return;
    }
    const char c = peek();
    if (kOneCharOps.find(c) == std::string_view::npos) {
      const unsigned char u = static_cast<unsigned char>(c);
      std::string shown = std::isprint(u) ? std::string(1, c)
                                          : "\\x" + std::to_string(u);
      fail("illegal character '" + shown + "'", line, col);
    }
    if (c == '(' || c == '[' || c == '{') ++depth_;
    if ((c == ')' || c == ']' || c == '}') && depth_ > 0) --depth_;
    advance();
    emit(TokenKind::kOperator, std::string(1, c), line, col);
  }

  void finish() {
    const bool open_line =
        !tokens_.empty() && tokens_.back().kind != TokenKind::kNewline &&
        tokens_.back().kind != TokenKind::kDedent;
    if (open_line) emit(TokenKind::kNewline, "", line_, col_);
    while (indents_.size() > 1) {
      indents_.pop_back();
      emit(TokenKind::kDedent, "", line_, 1);
    }
    emit(TokenKind::kEof, "", line_, col_);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  int depth_ = 0;
  bool at_line_start_ = true;
  std::vector<int> indents_{0};
  std::vector<Token> tokens_;
};

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdentifier: return "identifier";
    case TokenKind::kNumber: return "number";
    case TokenKind::kString: return "string";
    case TokenKind::kOperator: return "operator";
    case TokenKind::kKeyword: return "keyword";
    case TokenKind::kIndent: return "indent";
    case TokenKind::kDedent: return "dedent";
    case TokenKind::kNewline: return "newline";
    case TokenKind::kEof: return "eof";
  }
  return "eof";
}

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::vector<Token> tokenize(std::string_view source) {
  return Lexer(source).run();
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kLex: return "lex";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kName: return "name";
    case ErrorKind::kType: return "type";
    case ErrorKind::kIndex: return "index";
    case ErrorKind::kBudget: return "budget";
    case ErrorKind::kMissingOutput: return "missing_output";
    case ErrorKind::kBadOutputShape: return "bad_output_shape";
    case ErrorKind::kNumeric: return "numeric";
  }
  return "parse";
}

std::optional<ErrorKind> parse_error_kind(std::string_view name) {
  for (ErrorKind k :
       {ErrorKind::kLex, ErrorKind::kParse, ErrorKind::kName, ErrorKind::kType,
        ErrorKind::kIndex, ErrorKind::kBudget, ErrorKind::kMissingOutput,
        ErrorKind::kBadOutputShape, ErrorKind::kNumeric}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::string ScriptError::describe() const {
  std::string out(to_string(kind));
  out += " error";
  if (line > 0) out += " (line " + std::to_string(line) + ")";
  out += ": ";
  out += message;
  return out;
}

}  // namespace trajadapt::script
