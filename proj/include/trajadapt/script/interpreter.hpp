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

#ifndef TRAJADAPT_SCRIPT_INTERPRETER_HPP_
#define TRAJADAPT_SCRIPT_INTERPRETER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "trajadapt/script/ast.hpp"
#include "trajadapt/script/error.hpp"
#include "trajadapt/trajectory.hpp"

namespace trajadapt::script {

/// The name the script must bind its result to.
inline constexpr std::string_view kOutputVariable = "modified_trajectory";

struct SandboxLimits {
  std::int64_t step_budget = 1'000'000;
  std::size_t max_list_len = 1'000'000;
};

/// Exactly one of `modified` and `error` is set.
struct ExecOutcome {
  std::optional<Trajectory> modified;
  std::optional<ScriptError> error;

  bool ok() const { return modified.has_value(); }
  static ExecOutcome success(Trajectory t) { return {std::move(t), std::nullopt}; }
  static ExecOutcome failure(ScriptError e) { return {std::nullopt, std::move(e)}; }
};

/// Runs `program` against a private copy of the inputs. Every evaluated
/// statement and expression node costs one step, and creating a sequence
/// costs one step per element, so memory is bounded by the budget too. The
/// first error aborts the run. Never throws.
ExecOutcome execute(const Program& program, const Scene& scene,
                    const Trajectory& traj, const SandboxLimits& limits = {});

/// tokenize + parse + execute; lex and parse errors come back as outcomes.
ExecOutcome run_script(std::string_view source, const Scene& scene,
                       const Trajectory& traj, const SandboxLimits& limits = {});

}  // namespace trajadapt::script

#endif  // TRAJADAPT_SCRIPT_INTERPRETER_HPP_
