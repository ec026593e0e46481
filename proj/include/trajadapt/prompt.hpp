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

#ifndef TRAJADAPT_PROMPT_HPP_
#define TRAJADAPT_PROMPT_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trajadapt/trajectory.hpp"

namespace trajadapt {

/// Replacement texts for the user-configurable prompt sections.
struct PromptOverrides {
  std::optional<std::string> coordinate_system;
  std::optional<std::string> environment;
};

struct PromptRequest {
  std::string instruction;
  Scene scene;
  std::vector<std::string> feedback_history;
  PromptOverrides overrides;
};

/// Default axis conventions (+X left, +Y front, +Z up).
std::string_view default_coordinate_system();

/// Grammar summary plus the builtin table, as shown to the model.
std::string language_subset_text();

/// Renders the full prompt. Sections, in order: role and tasks, functions
/// available, coordinate system, environment description (omitted if the
/// scene has neither a description nor objects), rules, language subset,
/// output structure, two in-context plans, feedback (only when there is
/// feedback), and the instruction as the final line. Pure.
///
/// Throws std::invalid_argument if the instruction is empty.
std::string build_prompt(const PromptRequest& request);

/// The model's answer split into its two parts.
struct ProposalText {
  std::string high_level_plan;
  std::string code;
  std::string raw;

  friend bool operator==(const ProposalText&, const ProposalText&) = default;
};

/// The response could not be turned into a plan and a script. Carries the
/// raw text so it can be fed back to the model.
class ResponseParseError : public std::runtime_error {
 public:
  ResponseParseError(const std::string& what, std::string raw)
      : std::runtime_error(what), raw_(std::move(raw)) {}
  const std::string& raw() const { return raw_; }

 private:
  std::string raw_;
};

/// Extracts the first top-level {...} object (surrounding code fences are
/// ignored). Accepts strict JSON and the loose single-quoted / multi-line
/// string style models often produce. The plan is read from
/// `high_level_plan` (string or list of strings), the script from `code`,
/// `python_code` or `Python code`.
ProposalText parse_response(std::string_view text);

}  // namespace trajadapt

#endif  // TRAJADAPT_PROMPT_HPP_
