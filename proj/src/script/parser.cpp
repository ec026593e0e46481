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

#include "trajadapt/script/parser.hpp"

#include <charconv>
#include <cmath>
#include <optional>

#include "trajadapt/script/builtins.hpp"

namespace trajadapt::script {

namespace {

constexpr int kMaxNesting = 100;

std::string describe(const Token& tok) {
  switch (tok.kind) {
    case TokenKind::kEof: return "end of input";
    case TokenKind::kNewline: return "end of line";
    case TokenKind::kIndent: return "indent";
    case TokenKind::kDedent: return "dedent";
    case TokenKind::kString: return "string '" + tok.lexeme + "'";
    default: return "'" + tok.lexeme + "'";
  }
}

std::optional<BinaryOp> comparison_op(const Token& tok) {
  if (tok.kind != TokenKind::kOperator) return std::nullopt;
  if (tok.lexeme == "<") return BinaryOp::kLt;
  if (tok.lexeme == "<=") return BinaryOp::kLe;
  if (tok.lexeme == ">") return BinaryOp::kGt;
  if (tok.lexeme == ">=") return BinaryOp::kGe;
  if (tok.lexeme == "==") return BinaryOp::kEq;
  if (tok.lexeme == "!=") return BinaryOp::kNe;
  return std::nullopt;
}

bool is_augmented(const Token& tok) {
  return tok.is_op("+=") || tok.is_op("-=") || tok.is_op("*=") ||
         tok.is_op("/=");
}

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {
    if (tokens_.empty() || tokens_.back().kind != TokenKind::kEof) {
      throw ScriptException(
          {ErrorKind::kParse, "token stream must end with eof", 0});
    }
  }

  Program program() {
    Program prog;
    while (!at(TokenKind::kEof)) {
      if (at(TokenKind::kNewline)) {
        advance();
        continue;
      }
      prog.statements.push_back(statement());
    }
    return prog;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at(TokenKind kind) const { return peek().kind == kind; }
  bool at_op(std::string_view op) const { return peek().is_op(op); }
  bool at_keyword(std::string_view kw) const { return peek().is_keyword(kw); }
  const Token& advance() {
    const Token& tok = peek();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return tok;
  }

  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    throw ScriptException({ErrorKind::kParse, message, at.line});
  }
  [[noreturn]] void unsupported(const Token& tok) const {
    fail("unsupported construct '" + tok.lexeme + "'", tok);
  }
  [[noreturn]] void unexpected(const Token& tok,
                               std::string_view expected = {}) const {
    std::string msg = "unexpected " + describe(tok);
    if (!expected.empty()) msg += ", expected " + std::string(expected);
    fail(msg, tok);
  }

  void expect_op(std::string_view op) {
    if (!at_op(op)) {
      if (is_augmented(peek()) || at_op(";") || at_op("{")) unsupported(peek());
      unexpected(peek(), "'" + std::string(op) + "'");
    }
    advance();
  }
  void expect_newline() {
    if (at(TokenKind::kNewline)) {
      advance();
      return;
    }
    if (at(TokenKind::kEof)) return;
    const Token& tok = peek();
    if (is_augmented(tok) || tok.is_op(";") || tok.kind == TokenKind::kKeyword) {
      unsupported(tok);
    }
    unexpected(tok, "end of line");
  }

  ExprPtr make(Expr::Node node, int line) {
    return std::make_unique<Expr>(Expr{std::move(node), line});
  }

  // ---- statements -------------------------------------------------------

  Stmt statement() {
    const Token& tok = peek();
    DepthGuard guard(*this, tok);
    if (tok.kind == TokenKind::kKeyword) {
      if (tok.lexeme == "for") return for_statement();
      if (tok.lexeme == "if") return if_statement();
      const bool expression_start = tok.lexeme == "True" ||
                                    tok.lexeme == "False" ||
                                    tok.lexeme == "None" || tok.lexeme == "not";
      if (!expression_start) {
        if (tok.lexeme == "elif" || tok.lexeme == "else") {
          fail("'" + tok.lexeme + "' without a matching 'if'", tok);
        }
        unsupported(tok);
      }
    }
    if (tok.kind == TokenKind::kIndent) fail("unexpected indent", tok);
    if (tok.kind == TokenKind::kDedent) unexpected(tok);
    return simple_statement();
  }

  Stmt simple_statement() {
    const int line = peek().line;
    ExprPtr lhs = expression();
    if (is_augmented(peek())) unsupported(peek());
    if (!at_op("=")) {
      expect_newline();
      return {ExprStmt{std::move(lhs)}, line};
    }
    const Token& eq = advance();
    ExprPtr value = expression();
    if (at_op("=")) fail("chained assignment is not supported", peek());
    expect_newline();
    if (auto* var = std::get_if<VarRef>(&lhs->node)) {
      return {AssignStmt{var->name, std::move(value)}, line};
    }
    if (auto* idx = std::get_if<IndexExpr>(&lhs->node)) {
      if (!assignable_base(*idx->base)) {
        fail("cannot assign to this expression", eq);
      }
      return {IndexAssignStmt{std::move(idx->base), std::move(idx->index),
                              std::move(value)},
              line};
    }
    if (std::holds_alternative<SliceExpr>(lhs->node)) {
      fail("slice assignment is not supported", eq);
    }
    fail("cannot assign to this expression", eq);
  }

  // A target is IDENT followed by zero or more subscripts.
  static bool assignable_base(const Expr& e) {
    if (std::holds_alternative<VarRef>(e.node)) return true;
    if (const auto* idx = std::get_if<IndexExpr>(&e.node)) {
      return assignable_base(*idx->base);
    }
    return false;
  }

  Stmt for_statement() {
    const int line = advance().line;  // 'for'
    if (!at(TokenKind::kIdentifier)) unexpected(peek(), "loop variable");
    std::string var = advance().lexeme;
    if (at_op(",")) fail("tuple unpacking is not supported", peek());
    if (!at_keyword("in")) unexpected(peek(), "'in'");
    advance();
    if (!peek().is(TokenKind::kIdentifier, "range")) {
      fail("unsupported construct '" + peek().lexeme +
               "': for loops must iterate over range(...)",
           peek());
    }
    advance();
    expect_op("(");
    std::vector<ExprPtr> args;
    args.push_back(expression());
    while (at_op(",") && args.size() < 4) {
      advance();
      if (at_op(")")) break;
      args.push_back(expression());
    }
    if (args.size() > 3) fail("range() takes at most 3 arguments", peek());
    expect_op(")");
    expect_op(":");
    Block body = block();
    ForRangeStmt loop{std::move(var), nullptr, nullptr, nullptr, std::move(body)};
    if (args.size() == 1) {
      loop.start = make(NumberLit{0.0}, line);
      loop.stop = std::move(args[0]);
    } else {
      loop.start = std::move(args[0]);
      loop.stop = std::move(args[1]);
      if (args.size() == 3) loop.step = std::move(args[2]);
    }
    return {std::move(loop), line};
  }

  Stmt if_statement() {
    const int line = advance().line;  // 'if'
    IfChainStmt chain;
    ExprPtr cond = expression();
    expect_op(":");
    chain.branches.push_back({std::move(cond), block()});
    while (at_keyword("elif")) {
      advance();
      ExprPtr c = expression();
      expect_op(":");
      chain.branches.push_back({std::move(c), block()});
    }
    if (at_keyword("else")) {
      advance();
      expect_op(":");
      chain.else_body = block();
    }
    return {std::move(chain), line};
  }

  Block block() {
    if (!at(TokenKind::kNewline)) {
      fail("expected a new indented line after ':', found " + describe(peek()),
           peek());
    }
    advance();
    if (!at(TokenKind::kIndent)) {
      fail("expected an indented block, found " + describe(peek()), peek());
    }
    advance();
    Block body;
    while (!at(TokenKind::kDedent) && !at(TokenKind::kEof)) {
      body.push_back(statement());
    }
    if (at(TokenKind::kDedent)) advance();
    return body;
  }

  // ---- expressions ------------------------------------------------------

  // Recursion guard; the evaluator walks the same tree recursively.
  struct DepthGuard {
    DepthGuard(Parser& p, const Token& at) : parser(p) {
      if (++parser.depth_ > kMaxNesting) {
        parser.fail("nesting too deep (limit " + std::to_string(kMaxNesting) + ")", at);
      }
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  ExprPtr expression() {
    DepthGuard guard(*this, peek());
    return or_expr();
  }

  ExprPtr or_expr() {
    ExprPtr lhs = and_expr();
    while (at_keyword("or")) {
      const int line = advance().line;
      lhs = make(BinaryExpr{BinaryOp::kOr, std::move(lhs), and_expr()}, line);
    }
    return lhs;
  }

  ExprPtr and_expr() {
    ExprPtr lhs = not_expr();
    while (at_keyword("and")) {
      const int line = advance().line;
      lhs = make(BinaryExpr{BinaryOp::kAnd, std::move(lhs), not_expr()}, line);
    }
    return lhs;
  }

  ExprPtr not_expr() {
    if (at_keyword("not")) {
      const int line = advance().line;
      return make(UnaryExpr{UnaryOp::kNot, not_expr()}, line);
    }
    return comparison();
  }

  ExprPtr comparison() {
    ExprPtr lhs = additive();
    if (auto op = comparison_op(peek())) {
      const int line = advance().line;
      lhs = make(BinaryExpr{*op, std::move(lhs), additive()}, line);
      if (comparison_op(peek())) {
        fail("chained comparisons are not supported", peek());
      }
    }
    if (at_keyword("in") || at_keyword("is")) unsupported(peek());
    return lhs;
  }

  ExprPtr additive() {
    ExprPtr lhs = multiplicative();
    while (at_op("+") || at_op("-")) {
      const Token& tok = advance();
      const BinaryOp op = tok.lexeme == "+" ? BinaryOp::kAdd : BinaryOp::kSub;
      lhs = make(BinaryExpr{op, std::move(lhs), multiplicative()}, tok.line);
    }
    return lhs;
  }

  ExprPtr multiplicative() {
    ExprPtr lhs = unary();
    while (at_op("*") || at_op("/") || at_op("%")) {
      const Token& tok = advance();
      const BinaryOp op = tok.lexeme == "*"   ? BinaryOp::kMul
                          : tok.lexeme == "/" ? BinaryOp::kDiv
                                              : BinaryOp::kMod;
      lhs = make(BinaryExpr{op, std::move(lhs), unary()}, tok.line);
    }
    return lhs;
  }

  ExprPtr unary() {
    if (at_op("-")) {
      const int line = advance().line;
      return make(UnaryExpr{UnaryOp::kNeg, unary()}, line);
    }
    if (at_op("+")) {
      advance();
      return unary();
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = postfix();
    if (at_op("**")) {
      const int line = advance().line;
      return make(BinaryExpr{BinaryOp::kPow, std::move(base), unary()}, line);
    }
    return base;
  }

  ExprPtr postfix() {
    ExprPtr e = primary();
    while (true) {
      if (at_op("(")) {
        const Token& paren = peek();
        auto* var = std::get_if<VarRef>(&e->node);
        if (var == nullptr) unsupported(paren);
        e = call(std::move(var->name), e->line);
      } else if (at_op("[")) {
        e = subscript(std::move(e));
      } else if (at_op(".")) {
        e = method_call(std::move(e));
      } else {
        return e;
      }
    }
  }

  ExprPtr call(std::string name, int line) {
    const BuiltinInfo* info = find_builtin(name);
    if (info == nullptr) {
      fail("unknown function '" + name +
               "' (only the listed builtin functions can be called)",
           peek());
    }
    advance();  // '('
    std::vector<ExprPtr> args;
    while (!at_op(")")) {
      if (at(TokenKind::kIdentifier) && peek(1).is_op("=")) {
        fail("unsupported construct: keyword argument '" + peek().lexeme + "='",
             peek());
      }
      if (at_op("*") || at_op("**")) unsupported(peek());
      args.push_back(expression());
      if (at_op(",")) {
        advance();
      } else if (!at_op(")")) {
        unexpected(peek(), "',' or ')'");
      }
    }
    advance();  // ')'
    const int n = static_cast<int>(args.size());
    if (n < info->min_args || (info->max_args != kVariadic && n > info->max_args)) {
      std::string expected =
          info->min_args == info->max_args
              ? std::to_string(info->min_args)
              : info->max_args == kVariadic
                    ? "at least " + std::to_string(info->min_args)
                    : std::to_string(info->min_args) + " to " +
                          std::to_string(info->max_args);
      throw ScriptException({ErrorKind::kParse,
                             name + "() takes " + expected + " argument(s), " +
                                 std::to_string(n) + " given",
                             line});
    }
    return make(CallExpr{std::move(name), std::move(args)}, line);
  }

  ExprPtr subscript(ExprPtr base) {
    const int line = advance().line;  // '['
    ExprPtr lower;
    if (!at_op(":")) {
      lower = expression();
      if (at_op("]")) {
        advance();
        return make(IndexExpr{std::move(base), std::move(lower)}, line);
      }
      if (at_op(",")) fail("multi-dimensional indexing is not supported", peek());
    }
    expect_op(":");
    ExprPtr upper;
    if (!at_op("]")) {
      if (at_op(":")) fail("slice steps are not supported", peek());
      upper = expression();
    }
    if (at_op(":")) fail("slice steps are not supported", peek());
    expect_op("]");
    return make(SliceExpr{std::move(base), std::move(lower), std::move(upper)},
                line);
  }

  ExprPtr method_call(ExprPtr base) {
    const Token& dot = advance();
    if (!at(TokenKind::kIdentifier)) unexpected(peek(), "method name");
    const Token& name = advance();
    Method method;
    if (name.lexeme == "append") {
      method = Method::kAppend;
    } else if (name.lexeme == "extend") {
      method = Method::kExtend;
    } else {
      fail("unsupported construct '." + name.lexeme +
               "' (only .append(x) and .extend(xs) are allowed)",
           name);
    }
    expect_op("(");
    ExprPtr arg = expression();
    expect_op(")");
    return make(MethodCallExpr{std::move(base), method, std::move(arg)},
                dot.line);
  }

  ExprPtr primary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case TokenKind::kNumber: {
        advance();
        double value = 0.0;
        const char* first = tok.lexeme.data();
        const char* last = first + tok.lexeme.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
          fail("number literal out of range: " + tok.lexeme, tok);
        }
        return make(NumberLit{value}, tok.line);
      }
      case TokenKind::kString:
        advance();
        return make(StringLit{tok.lexeme}, tok.line);
      case TokenKind::kIdentifier:
        advance();
        return make(VarRef{tok.lexeme}, tok.line);
      case TokenKind::kKeyword:
        if (tok.lexeme == "True" || tok.lexeme == "False") {
          advance();
          return make(BoolLit{tok.lexeme == "True"}, tok.line);
        }
        if (tok.lexeme == "None") {
          advance();
          return make(NoneLit{}, tok.line);
        }
        unsupported(tok);
      case TokenKind::kOperator:
        if (tok.lexeme == "(") {
          advance();
          ExprPtr inner = expression();
          if (at_op(",")) fail("tuples are not supported; use a list", peek());
          expect_op(")");
          return inner;
        }
        if (tok.lexeme == "[") return list_literal();
        if (tok.lexeme == "{") unsupported(tok);
        unexpected(tok);
      default:
        unexpected(tok, "an expression");
    }
  }

  ExprPtr list_literal() {
    const int line = advance().line;  // '['
    ListLit list;
    while (!at_op("]")) {
      list.items.push_back(expression());
      if (at_keyword("for")) fail("list comprehensions are not supported", peek());
      if (at_op(",")) {
        advance();
      } else if (!at_op("]")) {
        unexpected(peek(), "',' or ']'");
      }
    }
    advance();
    return make(std::move(list), line);
  }

  std::span<const Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

Program parse(std::span<const Token> tokens) {
  return Parser(tokens).program();
}

Program parse_source(std::string_view source) {
  const std::vector<Token> tokens = tokenize(source);
  return parse(tokens);
}

}  // namespace trajadapt::script
