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

#ifndef TRAJADAPT_SESSION_HPP_
#define TRAJADAPT_SESSION_HPP_

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trajadapt/json_io.hpp"
#include "trajadapt/llm_client.hpp"
#include "trajadapt/prompt.hpp"
#include "trajadapt/script/interpreter.hpp"
#include "trajadapt/trajectory.hpp"

namespace trajadapt {

enum class SessionState { kAwaitingLlm, kProposed, kApproved, kFailed };
std::string_view to_string(SessionState s);

enum class VerdictKind { kPending, kApproved, kFeedback, kAutoRepair };
std::string_view to_string(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::kPending;
  std::string text;  // feedback or repair message

  static Verdict approve() { return {VerdictKind::kApproved, {}}; }
  static Verdict feedback(std::string s) {
    return {VerdictKind::kFeedback, std::move(s)};
  }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Why an iteration produced no usable proposal.
struct IterationError {
  // "transport", "fixture_miss", "response", or a script error kind name.
  std::string kind;
  std::string message;
  int line = 0;
  friend bool operator==(const IterationError&, const IterationError&) = default;
};

struct Iteration {
  std::string prompt;
  std::string response;  // raw model text; empty if the call failed
  std::optional<ProposalText> proposal;
  std::optional<script::ExecOutcome> outcome;  // present iff proposal parsed
  std::optional<IterationError> error;
  Verdict verdict;

  bool succeeded() const { return outcome && outcome->ok(); }
};

struct SessionConfig {
  int auto_repair_budget = 1;  // per generation round
  int max_iterations = 8;
  script::SandboxLimits limits;
  PromptOverrides overrides;
  // Mock-transport key; the iteration index is the number of earlier
  // iterations in the session.
  std::string fixture_id;
};

class InvalidStateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr std::string_view kRepairPrefix = "EXECUTION ERROR:";

/// The review loop for one instruction. Not internally synchronized: callers
/// serialize operations on a given session.
class Session {
 public:
  /// Creates a session in state awaiting_llm without calling the model.
  Session(std::string id, std::string instruction, Scene scene,
          Trajectory original, std::shared_ptr<const LlmClient> client,
          SessionConfig config = {});

  /// Creates a session and runs the first generation.
  static Session start(std::string id, std::string instruction, Scene scene,
                       Trajectory original,
                       std::shared_ptr<const LlmClient> client,
                       SessionConfig config = {});

  /// prompt -> model -> parse -> execute, auto-repairing script and response
  /// errors while the budget lasts. Ends in proposed or failed; never throws
  /// for model or script problems.
  /// Throws InvalidStateError unless the state is awaiting_llm.
  void generate();

  /// Approve, or record feedback and regenerate.
  /// Throws InvalidStateError unless the state is proposed.
  void submit_verdict(const Verdict& verdict);

  /// Like submit_verdict but leaves regeneration after feedback to the
  /// caller: the session is left in awaiting_llm until generate() runs.
  void record_verdict(const Verdict& verdict);

  const std::string& id() const { return id_; }
  const std::string& instruction() const { return instruction_; }
  const Scene& scene() const { return scene_; }
  const Trajectory& original() const { return original_; }
  const std::vector<Iteration>& iterations() const { return iterations_; }
  SessionState state() const { return state_; }
  const SessionConfig& config() const { return config_; }
  /// Every state the session has been in, in order.
  const std::vector<SessionState>& state_history() const { return history_; }

  /// Human feedback and repair messages, oldest first.
  std::vector<std::string> feedback_history() const;
  /// Adapted trajectory of the last successful iteration.
  std::optional<Trajectory> latest_adapted() const;
  /// The approved trajectory (tau_mod); set only in state approved.
  std::optional<Trajectory> final_trajectory() const;
  /// Error of the last iteration, if it failed.
  std::optional<IterationError> latest_error() const;
  /// Plan text of the last iteration that parsed.
  std::optional<std::string> latest_plan() const;

  /// Full audit record.
  Json to_json() const;

 private:
  void set_state(SessionState s);
  Iteration run_once();

  std::string id_;
  std::string instruction_;
  Scene scene_;
  Trajectory original_;
  std::shared_ptr<const LlmClient> client_;
  SessionConfig config_;
  std::vector<Iteration> iterations_;
  SessionState state_ = SessionState::kAwaitingLlm;
  std::vector<SessionState> history_;
  std::optional<IterationError> cap_error_;
};

Json to_json(const IterationError& e);
Json to_json(const Iteration& it);

}  // namespace trajadapt

#endif  // TRAJADAPT_SESSION_HPP_
