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

#ifndef TRAJADAPT_SCRIPT_AST_HPP_
#define TRAJADAPT_SCRIPT_AST_HPP_

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace trajadapt::script {

struct Expr;
struct Stmt;
using ExprPtr = std::unique_ptr<Expr>;
using Block = std::vector<Stmt>;

enum class UnaryOp { kNeg, kNot };
enum class BinaryOp {
  kAdd, kSub, kMul, kDiv, kMod, kPow,
  kAnd, kOr,
  kLt, kLe, kGt, kGe, kEq, kNe,
};
enum class Method { kAppend, kExtend };

std::string_view to_string(UnaryOp op);
std::string_view to_string(BinaryOp op);
std::string_view to_string(Method m);

struct NumberLit { double value; };
struct StringLit { std::string value; };
struct BoolLit { bool value; };
struct NoneLit {};
struct ListLit { std::vector<ExprPtr> items; };
struct VarRef { std::string name; };
struct IndexExpr { ExprPtr base; ExprPtr index; };
// Either bound may be null.
struct SliceExpr { ExprPtr base; ExprPtr lower; ExprPtr upper; };
struct UnaryExpr { UnaryOp op; ExprPtr operand; };
struct BinaryExpr { BinaryOp op; ExprPtr lhs; ExprPtr rhs; };
struct CallExpr { std::string name; std::vector<ExprPtr> args; };
struct MethodCallExpr { ExprPtr base; Method method; ExprPtr arg; };

struct Expr {
  using Node = std::variant<NumberLit, StringLit, BoolLit, NoneLit, ListLit,
                            VarRef, IndexExpr, SliceExpr, UnaryExpr,
                            BinaryExpr, CallExpr, MethodCallExpr>;
  Node node;
  int line = 0;
};

struct AssignStmt { std::string target; ExprPtr value; };
// base[index] = value; base is any postfix expression (e.g. t[i]).
struct IndexAssignStmt { ExprPtr base; ExprPtr index; ExprPtr value; };
// for var in range(start, stop, step); step may be null.
struct ForRangeStmt {
  std::string var;
  ExprPtr start;
  ExprPtr stop;
  ExprPtr step;
  Block body;
};
struct IfBranch { ExprPtr condition; Block body; };
struct IfChainStmt { std::vector<IfBranch> branches; Block else_body; };
struct ExprStmt { ExprPtr expr; };

struct Stmt {
  using Node = std::variant<AssignStmt, IndexAssignStmt, ForRangeStmt,
                            IfChainStmt, ExprStmt>;
  Node node;
  int line = 0;
};

/// A parsed script. Move-only and immutable after parsing.
struct Program {
  Block statements;
};

/// Canonical S-expression of the tree, without source positions. Two
/// programs are structurally identical iff their dumps are equal.
std::string dump(const Program& program);
std::string dump(const Expr& expr);

/// Re-emits indentation-delimited source that parses back to a
/// structurally identical program.
std::string to_source(const Program& program);

}  // namespace trajadapt::script

#endif  // TRAJADAPT_SCRIPT_AST_HPP_
