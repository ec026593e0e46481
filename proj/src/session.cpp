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

#include "trajadapt/session.hpp"

namespace trajadapt {

std::string_view to_string(SessionState s) {
  switch (s) {
    case SessionState::kAwaitingLlm: return "awaiting_llm";
    case SessionState::kProposed: return "proposed";
    case SessionState::kApproved: return "approved";
    case SessionState::kFailed: return "failed";
  }
  return "?";
}

std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::kPending: return "pending";
    case VerdictKind::kApproved: return "approved";
    case VerdictKind::kFeedback: return "feedback";
    case VerdictKind::kAutoRepair: return "auto_repair";
  }
  return "?";
}

namespace {

constexpr std::size_t kMaxEchoedResponse = 2000;

std::string repair_message(const IterationError& e, const std::string& raw) {
  std::string msg(kRepairPrefix);
  if (e.kind == "response") {
    msg += " the previous response could not be parsed (" + e.message +
           "). Reply with a single object holding \"high_level_plan\" and "
           "\"code\". Previous response:\n";
    msg += raw.size() > kMaxEchoedResponse ? raw.substr(0, kMaxEchoedResponse)
                                           : raw;
  } else {
    msg += " the previous code failed with " + e.kind + " error";
    if (e.line > 0) msg += " at line " + std::to_string(e.line);
    msg += ": " + e.message;
  }
  return msg;
}

}  // namespace

Session::Session(std::string id, std::string instruction, Scene scene,
                 Trajectory original, std::shared_ptr<const LlmClient> client,
                 SessionConfig config)
    : id_(std::move(id)),
      instruction_(std::move(instruction)),
      scene_(std::move(scene)),
      original_(std::move(original)),
      client_(std::move(client)),
      config_(std::move(config)) {
  if (instruction_.empty()) {
    throw std::invalid_argument("instruction must be nonempty");
  }
  if (!client_) throw std::invalid_argument("session needs an LLM client");
  if (config_.auto_repair_budget < 0 || config_.max_iterations < 1) {
    throw std::invalid_argument("bad session limits");
  }
  history_.push_back(state_);
}

Session Session::start(std::string id, std::string instruction, Scene scene,
                       Trajectory original,
                       std::shared_ptr<const LlmClient> client,
                       SessionConfig config) {
  Session s(std::move(id), std::move(instruction), std::move(scene),
            std::move(original), std::move(client), std::move(config));
  s.generate();
  return s;
}

void Session::set_state(SessionState s) {
  state_ = s;
  history_.push_back(s);
}

std::vector<std::string> Session::feedback_history() const {
  std::vector<std::string> out;
  for (const auto& it : iterations_) {
    if (it.verdict.kind == VerdictKind::kFeedback ||
        it.verdict.kind == VerdictKind::kAutoRepair) {
      out.push_back(it.verdict.text);
    }
  }
  return out;
}

Iteration Session::run_once() {
  Iteration it;
  PromptRequest req{instruction_, scene_, feedback_history(),
                    config_.overrides};
  it.prompt = build_prompt(req);
  const RequestContext ctx{config_.fixture_id,
                           static_cast<int>(iterations_.size())};
  try {
    it.response = client_->complete(it.prompt, ctx);
  } catch (const FixtureMissError& e) {
    it.error = IterationError{"fixture_miss", e.what(), 0};
    return it;
  } catch (const std::exception& e) {
    it.error = IterationError{"transport", e.what(), 0};
    return it;
  }
  try {
    it.proposal = parse_response(it.response);
  } catch (const ResponseParseError& e) {
    it.error = IterationError{"response", e.what(), 0};
    return it;
  }
  it.outcome = script::run_script(it.proposal->code, scene_, original_,
                                  config_.limits);
  if (!it.outcome->ok()) {
    const auto& e = *it.outcome->error;
    it.error = IterationError{std::string(script::to_string(e.kind)),
                              e.message, e.line};
  }
  return it;
}

void Session::generate() {
  if (state_ != SessionState::kAwaitingLlm) {
    throw InvalidStateError("generate requires state awaiting_llm, not " +
                            std::string(to_string(state_)));
  }
  int repairs_left = config_.auto_repair_budget;
  while (true) {
    if (static_cast<int>(iterations_.size()) >= config_.max_iterations) {
      cap_error_ = IterationError{
          "iteration_cap",
          "iteration cap of " + std::to_string(config_.max_iterations) +
              " reached",
          0};
      set_state(SessionState::kFailed);
      return;
    }
    iterations_.push_back(run_once());
    Iteration& it = iterations_.back();
    if (it.succeeded()) {
      set_state(SessionState::kProposed);
      return;
    }
    const bool repairable = it.error->kind != "transport" &&
                            it.error->kind != "fixture_miss";
    if (!repairable || repairs_left <= 0) {
      set_state(SessionState::kFailed);
      return;
    }
    --repairs_left;
    it.verdict = {VerdictKind::kAutoRepair, repair_message(*it.error, it.response)};
  }
}

void Session::record_verdict(const Verdict& verdict) {
  if (state_ != SessionState::kProposed) {
    throw InvalidStateError("verdict requires state proposed, not " +
                            std::string(to_string(state_)));
  }
  Iteration& last = iterations_.back();
  switch (verdict.kind) {
    case VerdictKind::kApproved:
      last.verdict = Verdict::approve();
      set_state(SessionState::kApproved);
      return;
    case VerdictKind::kFeedback:
      if (verdict.text.empty()) {
        throw std::invalid_argument("feedback text must be nonempty");
      }
      last.verdict = verdict;
      set_state(SessionState::kAwaitingLlm);
      return;
    default:
      throw std::invalid_argument("verdict must be approve or feedback");
  }
}

void Session::submit_verdict(const Verdict& verdict) {
  record_verdict(verdict);
  if (state_ == SessionState::kAwaitingLlm) generate();
}

std::optional<Trajectory> Session::latest_adapted() const {
  for (auto it = iterations_.rbegin(); it != iterations_.rend(); ++it) {
    if (it->succeeded()) return *it->outcome->modified;
  }
  return std::nullopt;
}

std::optional<Trajectory> Session::final_trajectory() const {
  if (state_ != SessionState::kApproved) return std::nullopt;
  return *iterations_.back().outcome->modified;
}

std::optional<IterationError> Session::latest_error() const {
  if (cap_error_) return cap_error_;
  if (iterations_.empty()) return std::nullopt;
  return iterations_.back().error;
}

std::optional<std::string> Session::latest_plan() const {
  for (auto it = iterations_.rbegin(); it != iterations_.rend(); ++it) {
    if (it->proposal) return it->proposal->high_level_plan;
  }
  return std::nullopt;
}

Json to_json(const IterationError& e) {
  Json j = {{"kind", e.kind}, {"message", e.message}};
  if (e.line > 0) j["line"] = e.line;
  return j;
}

Json to_json(const Iteration& it) {
  Json j;
  j["prompt"] = it.prompt;
  j["response"] = it.response;
  if (it.proposal) {
    j["proposal"] = {{"high_level_plan", it.proposal->high_level_plan},
                     {"code", it.proposal->code}};
  } else {
    j["proposal"] = nullptr;
  }
  if (it.succeeded()) {
    j["adapted"] = to_json(*it.outcome->modified);
  } else {
    j["adapted"] = nullptr;
  }
  j["error"] = it.error ? to_json(*it.error) : Json(nullptr);
  j["verdict"] = {{"kind", to_string(it.verdict.kind)}};
  if (!it.verdict.text.empty()) j["verdict"]["text"] = it.verdict.text;
  return j;
}

Json Session::to_json() const {
  Json j;
  j["id"] = id_;
  j["instruction"] = instruction_;
  j["scene"] = trajadapt::to_json(scene_);
  j["original"] = trajadapt::to_json(original_);
  j["state"] = to_string(state_);
  j["config"] = {{"auto_repair_budget", config_.auto_repair_budget},
                 {"max_iterations", config_.max_iterations},
                 {"step_budget", config_.limits.step_budget},
                 {"fixture_id", config_.fixture_id}};
  Json iters = Json::array();
  for (const auto& it : iterations_) iters.push_back(trajadapt::to_json(it));
  j["iterations"] = std::move(iters);
  if (cap_error_) j["failure"] = trajadapt::to_json(*cap_error_);
  const auto fin = final_trajectory();
  j["final"] = fin ? trajadapt::to_json(*fin) : Json(nullptr);
  return j;
}

}  // namespace trajadapt
