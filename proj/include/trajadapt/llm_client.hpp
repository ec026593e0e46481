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

#ifndef TRAJADAPT_LLM_CLIENT_HPP_
#define TRAJADAPT_LLM_CLIENT_HPP_

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trajadapt {

enum class Transport { kLive, kMock };

std::string_view to_string(Transport t);
std::optional<Transport> parse_transport(std::string_view name);

struct LlmConfig {
  Transport transport = Transport::kMock;
  // Base URL of an OpenAI-compatible API, e.g. "https://api.openai.com/v1".
  // Empty means OPENAI_BASE_URL, falling back to the OpenAI default.
  std::string endpoint;
  std::string model = "gpt-4o";
  double temperature = 0.1;
  double timeout_seconds = 60.0;
  int max_retries = 2;
  // Mock transport only.
  std::filesystem::path fixtures_dir;

  /// Throws std::invalid_argument when temperature or timeout is out of range.
  void validate() const;
};

/// Which canned response the mock transport should return.
struct RequestContext {
  std::string fixture_id;
  int iteration = 0;
};

class TransportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FixtureMissError : public std::runtime_error {
 public:
  explicit FixtureMissError(std::string key)
      : std::runtime_error("no fixture for '" + key + "'"),
        key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Transport interface. Implementations are safe for concurrent calls.
class LlmClient {
 public:
  virtual ~LlmClient() = default;
  virtual std::string complete(const std::string& prompt,
                               const RequestContext& ctx) const = 0;
};

/// Canned responses loaded once from `<id>.<iter>.resp.txt` files; read-only
/// afterwards.
class MockLlmClient final : public LlmClient {
 public:
  explicit MockLlmClient(const std::filesystem::path& fixtures_dir);
  explicit MockLlmClient(std::map<std::string, std::string> responses)
      : responses_(std::move(responses)) {}

  std::string complete(const std::string& prompt,
                       const RequestContext& ctx) const override;
  std::size_t size() const { return responses_.size(); }

  static std::string key(const RequestContext& ctx);

 private:
  std::map<std::string, std::string> responses_;
};

/// Chat-completions over HTTP(S). The API key comes from OPENAI_API_KEY.
class HttpLlmClient final : public LlmClient {
 public:
  explicit HttpLlmClient(LlmConfig cfg);

  std::string complete(const std::string& prompt,
                       const RequestContext& ctx) const override;

  /// Request body for one prompt (exposed for tests).
  std::string request_body(const std::string& prompt) const;
  /// Pulls choices[0].message.content out of a response body. Throws
  /// TransportError on a malformed payload.
  static std::string extract_content(std::string_view body);

 private:
  LlmConfig cfg_;
  std::string base_;
  std::string api_key_;
};

/// Builds the client the config asks for.
std::shared_ptr<const LlmClient> make_client(const LlmConfig& cfg);

}  // namespace trajadapt

#endif  // TRAJADAPT_LLM_CLIENT_HPP_
