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

#include "trajadapt/script/interpreter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <unordered_map>
#include <variant>
#include <vector>

#include "trajadapt/json_io.hpp"
#include "trajadapt/script/builtins.hpp"
#include "trajadapt/script/parser.hpp"
#include "trajadapt/transforms.hpp"

namespace trajadapt::script {

namespace {

constexpr int kMaxCompareDepth = 64;
// Largest magnitude at which every integer is exactly representable.
constexpr double kMaxExactInt = 9007199254740992.0;

struct ListData;
using ListRef = ListData*;
struct None {};
using Value = std::variant<None, double, bool, std::string, ListRef>;

struct ListData {
  std::vector<Value> items;
};

std::string type_name(const Value& v) {
  switch (v.index()) {
    case 0: return "None";
    case 1: return "number";
    case 2: return "bool";
    case 3: return "string";
    default: return "list";
  }
}

bool truthy(const Value& v) {
  if (std::holds_alternative<None>(v)) return false;
  if (const auto* d = std::get_if<double>(&v)) return *d != 0.0;
  if (const auto* b = std::get_if<bool>(&v)) return *b;
  if (const auto* s = std::get_if<std::string>(&v)) return !s->empty();
  return !std::get<ListRef>(v)->items.empty();
}

class Interpreter {
 public:
  Interpreter(const Scene& scene, const Trajectory& traj,
              const SandboxLimits& limits)
      : scene_(scene), traj_(traj), limits_(limits) {}

  Trajectory run(const Program& program) {
    exec_block(program.statements);
    return read_output();
  }

 private:
  // ---- bookkeeping ------------------------------------------------------

  [[noreturn]] void fail(ErrorKind kind, std::string message, int line) const {
    throw ScriptException({kind, std::move(message), line});
  }

  void charge(std::int64_t steps, int line) {
    steps_ += steps;
    if (steps_ > limits_.step_budget) {
      fail(ErrorKind::kBudget,
           "step budget of " + std::to_string(limits_.step_budget) +
               " exceeded",
           line);
    }
  }

  void check_size(std::size_t n, int line) const {
    if (n > limits_.max_list_len) {
      fail(ErrorKind::kBudget,
           "list size limit exceeded (" + std::to_string(n) + " > " +
               std::to_string(limits_.max_list_len) + " elements)",
           line);
    }
  }

  ListRef new_list(std::vector<Value> items, int line) {
    check_size(items.size(), line);
    charge(static_cast<std::int64_t>(items.size()), line);
    arena_.push_back(std::make_unique<ListData>(ListData{std::move(items)}));
    return arena_.back().get();
  }

  double finite(double x, int line) const {
    if (!std::isfinite(x)) fail(ErrorKind::kNumeric, "result is not a finite number", line);
    return x;
  }

  // ---- conversions ------------------------------------------------------

  double as_number(const Value& v, int line, std::string_view what) const {
    if (const auto* d = std::get_if<double>(&v)) return *d;
    fail(ErrorKind::kType,
         std::string(what) + " must be a number, got " + type_name(v), line);
  }

  std::int64_t as_integer(const Value& v, int line, std::string_view what) const {
    const double d = as_number(v, line, what);
    const double r = std::round(d);
    if (std::abs(d - r) > 1e-9 || std::abs(r) > kMaxExactInt) {
      fail(ErrorKind::kType,
           std::string(what) + " must be an integer, got " + format_number(d),
           line);
    }
    return static_cast<std::int64_t>(r);
  }

  ListRef as_list(const Value& v, int line, std::string_view what) const {
    if (const auto* l = std::get_if<ListRef>(&v)) return *l;
    fail(ErrorKind::kType,
         std::string(what) + " must be a list, got " + type_name(v), line);
  }

  Vec3 as_vec3(const Value& v, int line, std::string_view what) const {
    const auto* l = std::get_if<ListRef>(&v);
    if (l == nullptr || (*l)->items.size() < 3) {
      fail(ErrorKind::kType,
           std::string(what) + " must be an [x, y, z] list, got " +
               (l ? "a list of length " + std::to_string((*l)->items.size())
                  : type_name(v)),
           line);
    }
    const auto& items = (*l)->items;
    return {as_number(items[0], line, what), as_number(items[1], line, what),
            as_number(items[2], line, what)};
  }

  Value vec3_value(const Vec3& p, int line) {
    return new_list({p.x, p.y, p.z}, line);
  }

  Trajectory as_trajectory(const Value& v, int line, std::string_view what) {
    const ListRef list = as_list(v, line, what);
    charge(static_cast<std::int64_t>(list->items.size()), line);
    std::vector<Waypoint> wps;
    wps.reserve(list->items.size());
    for (std::size_t i = 0; i < list->items.size(); ++i) {
      const auto* row = std::get_if<ListRef>(&list->items[i]);
      if (row == nullptr || (*row)->items.size() != 4) {
        fail(ErrorKind::kType,
             std::string(what) + "[" + std::to_string(i) +
                 "] must be an [x, y, z, v] list",
             line);
      }
      const auto& r = (*row)->items;
      wps.push_back({as_number(r[0], line, what), as_number(r[1], line, what),
                     as_number(r[2], line, what), as_number(r[3], line, what)});
    }
    try {
      return Trajectory(std::move(wps));
    } catch (const std::invalid_argument& e) {
      fail(ErrorKind::kType, std::string(what) + ": " + e.what(), line);
    }
  }

  Value trajectory_value(const Trajectory& t, int line) {
    std::vector<Value> rows;
    rows.reserve(t.size());
    for (const auto& w : t.waypoints()) {
      rows.emplace_back(new_list({w.x, w.y, w.z, w.v}, line));
    }
    return new_list(std::move(rows), line);
  }

  std::size_t normalize_index(std::int64_t i, std::size_t size, int line) const {
    const auto n = static_cast<std::int64_t>(size);
    const std::int64_t k = i < 0 ? i + n : i;
    if (k < 0 || k >= n) {
      fail(ErrorKind::kIndex,
           "index " + std::to_string(i) + " out of range for length " +
               std::to_string(size),
           line);
    }
    return static_cast<std::size_t>(k);
  }

  // ---- statements -------------------------------------------------------

  void exec_block(const Block& block) {
    for (const auto& s : block) exec(s);
  }

  void exec(const Stmt& stmt) {
    charge(1, stmt.line);
    std::visit([&](const auto& node) { exec_node(node, stmt.line); }, stmt.node);
  }

  void exec_node(const AssignStmt& s, int) {
    env_[s.target] = eval(*s.value);
  }

  void exec_node(const IndexAssignStmt& s, int line) {
    Value value = eval(*s.value);
    const Value base = eval(*s.base);
    const Value index = eval(*s.index);
    const ListRef list = as_list(base, line, "assignment target");
    const std::size_t k =
        normalize_index(as_integer(index, line, "list index"), list->items.size(), line);
    list->items[k] = std::move(value);
  }

  void exec_node(const ForRangeStmt& s, int line) {
    const std::int64_t start = as_integer(eval(*s.start), line, "range() start");
    const std::int64_t stop = as_integer(eval(*s.stop), line, "range() stop");
    const std::int64_t step =
        s.step ? as_integer(eval(*s.step), line, "range() step") : 1;
    if (step == 0) fail(ErrorKind::kNumeric, "range() step must not be zero", line);
    for (std::int64_t i = start; step > 0 ? i < stop : i > stop; i += step) {
      charge(1, line);
      env_[s.var] = static_cast<double>(i);
      exec_block(s.body);
    }
  }

  void exec_node(const IfChainStmt& s, int) {
    for (const auto& branch : s.branches) {
      if (truthy(eval(*branch.condition))) {
        exec_block(branch.body);
        return;
      }
    }
    exec_block(s.else_body);
  }

  void exec_node(const ExprStmt& s, int) { eval(*s.expr); }

  // ---- expressions ------------------------------------------------------

  Value eval(const Expr& e) {
    charge(1, e.line);
    return std::visit([&](const auto& node) { return eval_node(node, e.line); },
                      e.node);
  }

  Value eval_node(const NumberLit& n, int) { return n.value; }
  Value eval_node(const StringLit& s, int) { return s.value; }
  Value eval_node(const BoolLit& b, int) { return b.value; }
  Value eval_node(const NoneLit&, int) { return None{}; }

  Value eval_node(const ListLit& l, int line) {
    std::vector<Value> items;
    items.reserve(l.items.size());
    for (const auto& item : l.items) items.push_back(eval(*item));
    return new_list(std::move(items), line);
  }

  Value eval_node(const VarRef& v, int line) {
    auto it = env_.find(v.name);
    if (it == env_.end()) {
      fail(ErrorKind::kName, "name '" + v.name + "' is not defined", line);
    }
    return it->second;
  }

  Value eval_node(const IndexExpr& ix, int line) {
    const Value base = eval(*ix.base);
    const Value index = eval(*ix.index);
    if (const auto* s = std::get_if<std::string>(&base)) {
      const std::size_t k =
          normalize_index(as_integer(index, line, "string index"), s->size(), line);
      return std::string(1, (*s)[k]);
    }
    const ListRef list = as_list(base, line, "indexed value");
    const std::size_t k =
        normalize_index(as_integer(index, line, "list index"), list->items.size(), line);
    return list->items[k];
  }

  Value eval_node(const SliceExpr& sl, int line) {
    const Value base = eval(*sl.base);
    const std::size_t size = [&]() -> std::size_t {
      if (const auto* s = std::get_if<std::string>(&base)) return s->size();
      return as_list(base, line, "sliced value")->items.size();
    }();
    const auto n = static_cast<std::int64_t>(size);
    auto bound = [&](const ExprPtr& e, std::int64_t fallback) {
      if (!e) return fallback;
      std::int64_t i = as_integer(eval(*e), line, "slice bound");
      if (i < 0) i += n;
      return std::clamp<std::int64_t>(i, 0, n);
    };
    const std::int64_t lo = bound(sl.lower, 0);
    const std::int64_t hi = std::max(lo, bound(sl.upper, n));
    if (const auto* s = std::get_if<std::string>(&base)) {
      charge(hi - lo, line);
      return s->substr(static_cast<std::size_t>(lo), static_cast<std::size_t>(hi - lo));
    }
    const auto& items = std::get<ListRef>(base)->items;
    return new_list({items.begin() + lo, items.begin() + hi}, line);
  }

  Value eval_node(const UnaryExpr& u, int line) {
    const Value v = eval(*u.operand);
    if (u.op == UnaryOp::kNot) return !truthy(v);
    return -as_number(v, line, "operand of unary -");
  }

  Value eval_node(const BinaryExpr& b, int line) {
    if (b.op == BinaryOp::kAnd) {
      Value lhs = eval(*b.lhs);
      return truthy(lhs) ? eval(*b.rhs) : lhs;
    }
    if (b.op == BinaryOp::kOr) {
      Value lhs = eval(*b.lhs);
      return truthy(lhs) ? lhs : eval(*b.rhs);
    }
    const Value lhs = eval(*b.lhs);
    const Value rhs = eval(*b.rhs);
    switch (b.op) {
      case BinaryOp::kEq: return equal(lhs, rhs, 0, line);
      case BinaryOp::kNe: return !equal(lhs, rhs, 0, line);
      case BinaryOp::kLt:
      case BinaryOp::kLe:
      case BinaryOp::kGt:
      case BinaryOp::kGe: return compare(b.op, lhs, rhs, line);
      default: return arithmetic(b.op, lhs, rhs, line);
    }
  }

  bool equal(const Value& a, const Value& b, int depth, int line) const {
    if (depth > kMaxCompareDepth) fail(ErrorKind::kType, "comparison nested too deeply", line);
    if (a.index() != b.index()) return false;
    if (const auto* la = std::get_if<ListRef>(&a)) {
      const auto& x = (*la)->items;
      const auto& y = std::get<ListRef>(b)->items;
      if (x.size() != y.size()) return false;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (!equal(x[i], y[i], depth + 1, line)) return false;
      }
      return true;
    }
    if (std::holds_alternative<None>(a)) return true;
    if (const auto* d = std::get_if<double>(&a)) return *d == std::get<double>(b);
    if (const auto* s = std::get_if<std::string>(&a)) return *s == std::get<std::string>(b);
    return std::get<bool>(a) == std::get<bool>(b);
  }

  Value compare(BinaryOp op, const Value& a, const Value& b, int line) const {
    int order = 0;
    if (std::holds_alternative<double>(a) && std::holds_alternative<double>(b)) {
      const double x = std::get<double>(a), y = std::get<double>(b);
      order = x < y ? -1 : (x > y ? 1 : 0);
    } else if (std::holds_alternative<std::string>(a) &&
               std::holds_alternative<std::string>(b)) {
      order = std::get<std::string>(a).compare(std::get<std::string>(b));
    } else {
      fail(ErrorKind::kType,
           "cannot compare " + type_name(a) + " with " + type_name(b) + " using " +
               std::string(to_string(op)),
           line);
    }
    switch (op) {
      case BinaryOp::kLt: return order < 0;
      case BinaryOp::kLe: return order <= 0;
      case BinaryOp::kGt: return order > 0;
      default: return order >= 0;
    }
  }

  Value repeat(const Value& seq, const Value& count, int line) {
    const std::int64_t k = std::max<std::int64_t>(0, as_integer(count, line, "repeat count"));
    if (const auto* s = std::get_if<std::string>(&seq)) {
      const double total = static_cast<double>(s->size()) * static_cast<double>(k);
      check_size(static_cast<std::size_t>(std::min(total, 1e18)), line);
      charge(static_cast<std::int64_t>(total), line);
      std::string out;
      for (std::int64_t i = 0; i < k; ++i) out += *s;
      return out;
    }
    const auto& items = std::get<ListRef>(seq)->items;
    const double total = static_cast<double>(items.size()) * static_cast<double>(k);
    check_size(static_cast<std::size_t>(std::min(total, 1e18)), line);
    std::vector<Value> out;
    out.reserve(static_cast<std::size_t>(total));
    for (std::int64_t i = 0; i < k; ++i) out.insert(out.end(), items.begin(), items.end());
    return new_list(std::move(out), line);
  }

  Value arithmetic(BinaryOp op, const Value& a, const Value& b, int line) {
    const bool a_num = std::holds_alternative<double>(a);
    const bool b_num = std::holds_alternative<double>(b);
    if (op == BinaryOp::kAdd && !(a_num && b_num)) {
      if (std::holds_alternative<ListRef>(a) && std::holds_alternative<ListRef>(b)) {
        const auto& x = std::get<ListRef>(a)->items;
        const auto& y = std::get<ListRef>(b)->items;
        check_size(x.size() + y.size(), line);
        std::vector<Value> out(x);
        out.insert(out.end(), y.begin(), y.end());
        return new_list(std::move(out), line);
      }
      if (std::holds_alternative<std::string>(a) && std::holds_alternative<std::string>(b)) {
        std::string out = std::get<std::string>(a) + std::get<std::string>(b);
        charge(static_cast<std::int64_t>(out.size()), line);
        return out;
      }
    }
    if (op == BinaryOp::kMul && !(a_num && b_num)) {
      const bool a_seq = std::holds_alternative<ListRef>(a) ||
                         std::holds_alternative<std::string>(a);
      const bool b_seq = std::holds_alternative<ListRef>(b) ||
                         std::holds_alternative<std::string>(b);
      if (a_seq && b_num) return repeat(a, b, line);
      if (b_seq && a_num) return repeat(b, a, line);
    }
    if (!a_num || !b_num) {
      fail(ErrorKind::kType,
           "unsupported operand types for " + std::string(to_string(op)) + ": " +
               type_name(a) + " and " + type_name(b),
           line);
    }
    const double x = std::get<double>(a);
    const double y = std::get<double>(b);
    switch (op) {
      case BinaryOp::kAdd: return finite(x + y, line);
      case BinaryOp::kSub: return finite(x - y, line);
      case BinaryOp::kMul: return finite(x * y, line);
      case BinaryOp::kDiv:
        if (y == 0.0) fail(ErrorKind::kNumeric, "division by zero", line);
        return finite(x / y, line);
      case BinaryOp::kMod: {
        if (y == 0.0) fail(ErrorKind::kNumeric, "modulo by zero", line);
        double r = std::fmod(x, y);
        if (r != 0.0 && ((r < 0.0) != (y < 0.0))) r += y;  // sign follows divisor
        return finite(r, line);
      }
      case BinaryOp::kPow:
        if (x == 0.0 && y < 0.0) fail(ErrorKind::kNumeric, "zero to a negative power", line);
        return finite(std::pow(x, y), line);
      default:
        fail(ErrorKind::kType, "unsupported operator", line);
    }
  }

  Value eval_node(const MethodCallExpr& m, int line) {
    const Value base = eval(*m.base);
    Value arg = eval(*m.arg);
    const ListRef list = as_list(base, line,
                                 m.method == Method::kAppend ? ".append() target"
                                                             : ".extend() target");
    if (m.method == Method::kAppend) {
      check_size(list->items.size() + 1, line);
      list->items.push_back(std::move(arg));
    } else {
      const auto extra = as_list(arg, line, ".extend() argument")->items;  // copy: may alias
      check_size(list->items.size() + extra.size(), line);
      charge(static_cast<std::int64_t>(extra.size()), line);
      list->items.insert(list->items.end(), extra.begin(), extra.end());
    }
    return None{};
  }

  Value eval_node(const CallExpr& c, int line) {
    std::vector<Value> args;
    args.reserve(c.args.size());
    for (const auto& a : c.args) args.push_back(eval(*a));
    const BuiltinInfo* info = find_builtin(c.name);
    if (info == nullptr) fail(ErrorKind::kName, "unknown function '" + c.name + "'", line);
    return call_builtin(*info, args, line);
  }

  Value min_max(const std::vector<Value>& args, bool want_max, int line,
                std::string_view name) const {
    const std::vector<Value>* pool = &args;
    if (args.size() == 1) pool = &as_list(args[0], line, std::string(name) + "() argument")->items;
    if (pool->empty()) fail(ErrorKind::kType, std::string(name) + "() of an empty list", line);
    double best = as_number((*pool)[0], line, std::string(name) + "() argument");
    for (std::size_t i = 1; i < pool->size(); ++i) {
      const double v = as_number((*pool)[i], line, std::string(name) + "() argument");
      if (want_max ? v > best : v < best) best = v;
    }
    return best;
  }

  // Core transforms report bad parameters as invalid_argument.
  template <class F>
  Value core_call(F&& f, int line, std::string_view name) {
    try {
      return f();
    } catch (const std::invalid_argument& e) {
      fail(ErrorKind::kType, std::string(name) + "(): " + e.what(), line);
    }
  }

  Value call_builtin(const BuiltinInfo& info, const std::vector<Value>& a, int line) {
    const std::string name(info.name);
    auto num = [&](std::size_t i) { return as_number(a[i], line, name + "() argument"); };
    auto integer = [&](std::size_t i) { return as_integer(a[i], line, name + "() argument"); };
    auto traj = [&](std::size_t i) { return as_trajectory(a[i], line, name + "() trajectory"); };
    auto vec = [&](std::size_t i) { return as_vec3(a[i], line, name + "() point"); };
    auto flag = [&](std::size_t i) {
      if (const auto* b = std::get_if<bool>(&a[i])) return *b;
      return num(i) != 0.0;
    };
    auto clamp_int = [&](std::int64_t v) {
      return static_cast<int>(std::clamp<std::int64_t>(v, std::numeric_limits<int>::min(),
                                                       std::numeric_limits<int>::max()));
    };

    switch (info.id) {
      case BuiltinId::kGetTrajectory:
        return trajectory_value(traj_, line);
      case BuiltinId::kDetectObjects: {
        const auto* label = std::get_if<std::string>(&a[0]);
        if (label == nullptr) {
          fail(ErrorKind::kType, "detect_objects() expects an object name string", line);
        }
        if (auto pos = scene_.find(*label)) return vec3_value(*pos, line);
        return None{};
      }
      case BuiltinId::kLen: {
        if (const auto* s = std::get_if<std::string>(&a[0])) return static_cast<double>(s->size());
        return static_cast<double>(as_list(a[0], line, "len() argument")->items.size());
      }
      case BuiltinId::kRange: {
        std::int64_t start = 0, stop = 0, step = 1;
        if (a.size() == 1) {
          stop = integer(0);
        } else {
          start = integer(0);
          stop = integer(1);
          if (a.size() == 3) step = integer(2);
        }
        if (step == 0) fail(ErrorKind::kNumeric, "range() step must not be zero", line);
        const double span = step > 0 ? static_cast<double>(stop - start)
                                     : static_cast<double>(start - stop);
        const double count = span <= 0 ? 0 : std::ceil(span / std::abs(static_cast<double>(step)));
        check_size(static_cast<std::size_t>(std::min(count, 1e18)), line);
        std::vector<Value> items;
        items.reserve(static_cast<std::size_t>(count));
        for (std::int64_t i = start; step > 0 ? i < stop : i > stop; i += step) {
          items.emplace_back(static_cast<double>(i));
        }
        return new_list(std::move(items), line);
      }
      case BuiltinId::kAbs: return std::abs(num(0));
      case BuiltinId::kMin: return min_max(a, false, line, "min");
      case BuiltinId::kMax: return min_max(a, true, line, "max");
      case BuiltinId::kSqrt: {
        const double x = num(0);
        if (x < 0) fail(ErrorKind::kNumeric, "sqrt() of a negative number", line);
        return std::sqrt(x);
      }
      case BuiltinId::kSin: return finite(std::sin(num(0)), line);
      case BuiltinId::kCos: return finite(std::cos(num(0)), line);
      case BuiltinId::kAtan2: return std::atan2(num(0), num(1));
      case BuiltinId::kFloor: return std::floor(num(0));
      case BuiltinId::kRound: return std::nearbyint(num(0));
      case BuiltinId::kInt: return std::trunc(num(0));
      case BuiltinId::kNorm3: return vec(0).norm();
      case BuiltinId::kDist3: return distance(vec(0), vec(1));
      case BuiltinId::kLerp: {
        const Vec3 p = vec(0), q = vec(1);
        const double t = num(2);
        const Vec3 r = p + t * (q - p);
        if (!r.finite()) fail(ErrorKind::kNumeric, "lerp() result is not finite", line);
        return vec3_value(r, line);
      }
      case BuiltinId::kArcLengthParams: {
        const auto s = arc_length_params(traj(0));
        return new_list({s.begin(), s.end()}, line);
      }
      case BuiltinId::kNearestIndex:
        return static_cast<double>(nearest_index(traj(0), vec(1)).index);
      case BuiltinId::kSmoothTrajectory:
        return core_call([&] { return trajectory_value(smooth(traj(0), clamp_int(integer(1))), line); },
                         line, name);
      case BuiltinId::kResampleTrajectory:
        return core_call(
            [&] { return trajectory_value(resample(traj(0), clamp_int(integer(1))), line); },
            line, name);
      case BuiltinId::kEnforceMinDistance:
        return core_call(
            [&] { return trajectory_value(enforce_min_distance(traj(0), vec(1), num(2)), line); },
            line, name);
      case BuiltinId::kScaleSpeedNear:
        return core_call(
            [&] {
              return trajectory_value(
                  scale_speed_near(traj(0), vec(1), num(2), num(3), flag(4)), line);
            },
            line, name);
      case BuiltinId::kTruncateAtNearest:
        return core_call(
            [&] {
              return trajectory_value(
                  truncate_at_nearest(traj(0), vec(1), clamp_int(integer(2))), line);
            },
            line, name);
      case BuiltinId::kAppendSpiral:
        return core_call(
            [&] {
              return trajectory_value(
                  append_spiral(traj(0), num(1), num(2), clamp_int(integer(3))), line);
            },
            line, name);
      case BuiltinId::kTranslateBlend: {
        const auto* mode_name = std::get_if<std::string>(&a[2]);
        const auto mode = mode_name ? parse_blend_mode(*mode_name) : std::nullopt;
        if (!mode) {
          fail(ErrorKind::kType,
               "translate_blend() mode must be 'uniform', 'fix_start', "
               "'fix_goal' or 'fix_both'",
               line);
        }
        return core_call(
            [&] { return trajectory_value(translate_blend(traj(0), vec(1), *mode), line); },
            line, name);
      }
      case BuiltinId::kRadialRescale:
        return core_call(
            [&] {
              return trajectory_value(
                  radial_rescale(traj(0), vec(1), num(2), flag(3)), line);
            },
            line, name);
    }
    fail(ErrorKind::kName, "unknown function '" + name + "'", line);
  }

  // ---- output -----------------------------------------------------------

  Trajectory read_output() {
    const std::string key(kOutputVariable);
    auto it = env_.find(key);
    if (it == env_.end()) {
      fail(ErrorKind::kMissingOutput,
           "the script must store its result in a variable called " + key, 0);
    }
    const auto* list = std::get_if<ListRef>(&it->second);
    if (list == nullptr) {
      fail(ErrorKind::kBadOutputShape,
           key + " must be a list of [x, y, z, v] lists, got " + type_name(it->second), 0);
    }
    const auto& rows = (*list)->items;
    if (rows.size() < 2) {
      fail(ErrorKind::kBadOutputShape,
           key + " must contain at least 2 waypoints, got " + std::to_string(rows.size()), 0);
    }
    std::vector<Waypoint> wps;
    wps.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string where = key + "[" + std::to_string(i) + "]";
      const auto* row = std::get_if<ListRef>(&rows[i]);
      if (row == nullptr || (*row)->items.size() != 4) {
        fail(ErrorKind::kBadOutputShape, where + " must be a list of 4 numbers [x, y, z, v]", 0);
      }
      double c[4];
      for (std::size_t j = 0; j < 4; ++j) {
        const auto* d = std::get_if<double>(&(*row)->items[j]);
        if (d == nullptr || !std::isfinite(*d)) {
          fail(ErrorKind::kBadOutputShape, where + " must contain only finite numbers", 0);
        }
        c[j] = *d;
      }
      if (c[3] < 0.0) {
        fail(ErrorKind::kBadOutputShape, where + " has a negative velocity", 0);
      }
      wps.push_back({c[0], c[1], c[2], c[3]});
    }
    return Trajectory(std::move(wps));
  }

  const Scene& scene_;
  const Trajectory& traj_;
  SandboxLimits limits_;
  std::int64_t steps_ = 0;
  std::unordered_map<std::string, Value> env_;
  std::vector<std::unique_ptr<ListData>> arena_;
};

}  // namespace

ExecOutcome execute(const Program& program, const Scene& scene,
                    const Trajectory& traj, const SandboxLimits& limits) {
  try {
    Interpreter interp(scene, traj, limits);
    return ExecOutcome::success(interp.run(program));
  } catch (const ScriptException& e) {
    return ExecOutcome::failure(e.error());
  } catch (const std::bad_alloc&) {
    return ExecOutcome::failure({ErrorKind::kBudget, "out of memory", 0});
  }
}

ExecOutcome run_script(std::string_view source, const Scene& scene,
                       const Trajectory& traj, const SandboxLimits& limits) {
  Program program;
  try {
    program = parse_source(source);
  } catch (const ScriptException& e) {
    return ExecOutcome::failure(e.error());
  }
  return execute(program, scene, traj, limits);
}

}  // namespace trajadapt::script
