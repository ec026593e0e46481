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

#ifndef TRAJADAPT_SERVICE_HPP_
#define TRAJADAPT_SERVICE_HPP_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trajadapt/dataset.hpp"
#include "trajadapt/json_io.hpp"
#include "trajadapt/llm_client.hpp"
#include "trajadapt/session.hpp"

namespace trajadapt {

struct ServiceConfig {
  LlmConfig llm;
  SessionConfig session;
  std::vector<Sample> corpus;
  // When set, every session is written here as <id>.json after each change.
  std::optional<std::filesystem::path> export_dir;
};

/// What the review UI polls: state, latest plan, original and adapted
/// trajectories, latest error.
Json session_view(const Session& session);

/// HTTP API:
///   POST /api/sessions                 -> 201 view (generation runs async)
///   GET  /api/sessions/{id}            -> view
///   GET  /api/sessions/{id}/export     -> full session record
///   POST /api/sessions/{id}/verdict    -> 200 view, 409 unless proposed
///   GET  /api/corpus                   -> sample summaries
///   POST /api/eval                     -> eval report (one run at a time)
///   GET  /api/health                   -> 200
/// Unknown ids are 404, malformed bodies 400 with the offending field.
class Service {
 public:
  explicit Service(ServiceConfig config);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Binds without serving; port 0 picks a free port. Returns the port, or
  /// -1 on failure.
  int bind(const std::string& host, int port);
  /// Serves on the calling thread until stop().
  bool listen();
  /// Serves on a background thread.
  void start();
  void stop();

  /// Blocks until no generation task is running (tests).
  void wait_idle();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace trajadapt

#endif  // TRAJADAPT_SERVICE_HPP_
