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

#include "trajadapt/script/ast.hpp"

#include "trajadapt/json_io.hpp"

namespace trajadapt::script {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      case '\0': out += "\\0"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

// ---- S-expression dump ---------------------------------------------------

void dump_expr(const Expr& e, std::string& out);

void dump_opt(const ExprPtr& e, std::string& out) {
  if (e) {
    dump_expr(*e, out);
  } else {
    out += "_";
  }
}

void dump_expr(const Expr& e, std::string& out) {
  std::visit(
      Overloaded{
          [&](const NumberLit& n) { out += "(num " + format_number(n.value) + ")"; },
          [&](const StringLit& s) { out += "(str " + quote(s.value) + ")"; },
          [&](const BoolLit& b) { out += b.value ? "(bool true)" : "(bool false)"; },
          [&](const NoneLit&) { out += "(none)"; },
          [&](const ListLit& l) {
            out += "(list";
            for (const auto& item : l.items) {
              out += ' ';
              dump_expr(*item, out);
            }
            out += ')';
          },
          [&](const VarRef& v) { out += "(var " + v.name + ")"; },
          [&](const IndexExpr& i) {
            out += "(index ";
            dump_expr(*i.base, out);
            out += ' ';
            dump_expr(*i.index, out);
            out += ')';
          },
          [&](const SliceExpr& s) {
            out += "(slice ";
            dump_expr(*s.base, out);
            out += ' ';
            dump_opt(s.lower, out);
            out += ' ';
            dump_opt(s.upper, out);
            out += ')';
          },
          [&](const UnaryExpr& u) {
            out += "(" + std::string(to_string(u.op)) + " ";
            dump_expr(*u.operand, out);
            out += ')';
          },
          [&](const BinaryExpr& b) {
            out += "(" + std::string(to_string(b.op)) + " ";
            dump_expr(*b.lhs, out);
            out += ' ';
            dump_expr(*b.rhs, out);
            out += ')';
          },
          [&](const CallExpr& c) {
            out += "(call " + c.name;
            for (const auto& a : c.args) {
              out += ' ';
              dump_expr(*a, out);
            }
            out += ')';
          },
          [&](const MethodCallExpr& m) {
            out += "(method " + std::string(to_string(m.method)) + " ";
            dump_expr(*m.base, out);
            out += ' ';
            dump_expr(*m.arg, out);
            out += ')';
          },
      },
      e.node);
}

void dump_block(const Block& block, std::string& out);

void dump_stmt(const Stmt& s, std::string& out) {
  std::visit(Overloaded{
                 [&](const AssignStmt& a) {
                   out += "(assign " + a.target + " ";
                   dump_expr(*a.value, out);
                   out += ')';
                 },
                 [&](const IndexAssignStmt& a) {
                   out += "(setitem ";
                   dump_expr(*a.base, out);
                   out += ' ';
                   dump_expr(*a.index, out);
                   out += ' ';
                   dump_expr(*a.value, out);
                   out += ')';
                 },
                 [&](const ForRangeStmt& f) {
                   out += "(for " + f.var + " ";
                   dump_expr(*f.start, out);
                   out += ' ';
                   dump_expr(*f.stop, out);
                   out += ' ';
                   dump_opt(f.step, out);
                   out += ' ';
                   dump_block(f.body, out);
                   out += ')';
                 },
                 [&](const IfChainStmt& c) {
                   out += "(if";
                   for (const auto& br : c.branches) {
                     out += " (branch ";
                     dump_expr(*br.condition, out);
                     out += ' ';
                     dump_block(br.body, out);
                     out += ')';
                   }
                   if (!c.else_body.empty()) {
                     out += " (else ";
                     dump_block(c.else_body, out);
                     out += ')';
                   }
                   out += ')';
                 },
                 [&](const ExprStmt& e) {
                   out += "(expr ";
                   dump_expr(*e.expr, out);
                   out += ')';
                 },
             },
             s.node);
}

void dump_block(const Block& block, std::string& out) {
  out += "(block";
  for (const auto& s : block) {
    out += ' ';
    dump_stmt(s, out);
  }
  out += ')';
}

// ---- source printer --------------------------------------------------------

std::string binary_spelling(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAnd: return "and";
    case BinaryOp::kOr: return "or";
    default: return std::string(to_string(op));
  }
}

std::string source_expr(const Expr& e);

std::string source_args(const std::vector<ExprPtr>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += source_expr(*args[i]);
  }
  return out;
}

// Every compound subexpression is parenthesized, so precedence never has to
// be reconstructed.
std::string source_expr(const Expr& e) {
  return std::visit(
      Overloaded{
          [](const NumberLit& n) { return format_number(n.value); },
          [](const StringLit& s) { return quote(s.value); },
          [](const BoolLit& b) { return std::string(b.value ? "True" : "False"); },
          [](const NoneLit&) { return std::string("None"); },
          [](const ListLit& l) { return "[" + source_args(l.items) + "]"; },
          [](const VarRef& v) { return v.name; },
          [](const IndexExpr& i) {
            return source_expr(*i.base) + "[" + source_expr(*i.index) + "]";
          },
          [](const SliceExpr& s) {
            return source_expr(*s.base) + "[" +
                   (s.lower ? source_expr(*s.lower) : "") + ":" +
                   (s.upper ? source_expr(*s.upper) : "") + "]";
          },
          [](const UnaryExpr& u) {
            return u.op == UnaryOp::kNeg ? "(-" + source_expr(*u.operand) + ")"
                                         : "(not " + source_expr(*u.operand) + ")";
          },
          [](const BinaryExpr& b) {
            return "(" + source_expr(*b.lhs) + " " + binary_spelling(b.op) + " " +
                   source_expr(*b.rhs) + ")";
          },
          [](const CallExpr& c) { return c.name + "(" + source_args(c.args) + ")"; },
          [](const MethodCallExpr& m) {
            return source_expr(*m.base) + "." + std::string(to_string(m.method)) +
                   "(" + source_expr(*m.arg) + ")";
          },
      },
      e.node);
}

void source_block(const Block& block, int depth, std::string& out);

void source_stmt(const Stmt& s, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(depth) * 4, ' ');
  std::visit(
      Overloaded{
          [&](const AssignStmt& a) {
            out += pad + a.target + " = " + source_expr(*a.value) + "\n";
          },
          [&](const IndexAssignStmt& a) {
            out += pad + source_expr(*a.base) + "[" + source_expr(*a.index) +
                   "] = " + source_expr(*a.value) + "\n";
          },
          [&](const ForRangeStmt& f) {
            out += pad + "for " + f.var + " in range(" + source_expr(*f.start) +
                   ", " + source_expr(*f.stop);
            if (f.step) out += ", " + source_expr(*f.step);
            out += "):\n";
            source_block(f.body, depth + 1, out);
          },
          [&](const IfChainStmt& c) {
            for (std::size_t i = 0; i < c.branches.size(); ++i) {
              out += pad + (i == 0 ? "if " : "elif ") +
                     source_expr(*c.branches[i].condition) + ":\n";
              source_block(c.branches[i].body, depth + 1, out);
            }
            if (!c.else_body.empty()) {
              out += pad + "else:\n";
              source_block(c.else_body, depth + 1, out);
            }
          },
          [&](const ExprStmt& e) { out += pad + source_expr(*e.expr) + "\n"; },
      },
      s.node);
}

void source_block(const Block& block, int depth, std::string& out) {
  for (const auto& s : block) source_stmt(s, depth, out);
}

}  // namespace

std::string_view to_string(UnaryOp op) {
  return op == UnaryOp::kNeg ? "neg" : "not";
}

std::string_view to_string(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd: return "+";
    case BinaryOp::kSub: return "-";
    case BinaryOp::kMul: return "*";
    case BinaryOp::kDiv: return "/";
    case BinaryOp::kMod: return "%";
    case BinaryOp::kPow: return "**";
    case BinaryOp::kAnd: return "&&";
    case BinaryOp::kOr: return "||";
    case BinaryOp::kLt: return "<";
    case BinaryOp::kLe: return "<=";
    case BinaryOp::kGt: return ">";
    case BinaryOp::kGe: return ">=";
    case BinaryOp::kEq: return "==";
    case BinaryOp::kNe: return "!=";
  }
  return "?";
}

std::string_view to_string(Method m) {
  return m == Method::kAppend ? "append" : "extend";
}

std::string dump(const Program& program) {
  std::string out;
  dump_block(program.statements, out);
  return out;
}

std::string dump(const Expr& expr) {
  std::string out;
  dump_expr(expr, out);
  return out;
}

std::string to_source(const Program& program) {
  std::string out;
  source_block(program.statements, 0, out);
  return out;
}

}  // namespace trajadapt::script
