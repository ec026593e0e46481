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

#ifndef TRAJADAPT_SCRIPT_ERROR_HPP_
#define TRAJADAPT_SCRIPT_ERROR_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trajadapt::script {

enum class ErrorKind {
  kLex,
  kParse,
  kName,
  kType,
  kIndex,
  kBudget,
  kMissingOutput,
  kBadOutputShape,
  kNumeric,
};

std::string_view to_string(ErrorKind kind);
std::optional<ErrorKind> parse_error_kind(std::string_view name);

struct ScriptError {
  ErrorKind kind = ErrorKind::kParse;
  std::string message;
  int line = 0;  // 0 when the error is not tied to a source line

  /// "type error (line 3): ..." style text, used as repair feedback.
  std::string describe() const;
  friend bool operator==(const ScriptError&, const ScriptError&) = default;
};

/// Thrown by tokenize/parse and used internally by the evaluator.
class ScriptException : public std::runtime_error {
 public:
  explicit ScriptException(ScriptError error)
      : std::runtime_error(error.describe()), error_(std::move(error)) {}
  const ScriptError& error() const { return error_; }

 private:
  ScriptError error_;
};

}  // namespace trajadapt::script

#endif  // TRAJADAPT_SCRIPT_ERROR_HPP_
