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

#include "trajadapt/llm_client.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "httplib.h"
#include "trajadapt/json_io.hpp"

namespace trajadapt {

std::string_view to_string(Transport t) {
  return t == Transport::kLive ? "live" : "mock";
}

std::optional<Transport> parse_transport(std::string_view name) {
  if (name == "live") return Transport::kLive;
  if (name == "mock") return Transport::kMock;
  return std::nullopt;
}

void LlmConfig::validate() const {
  if (!(temperature >= 0.0 && temperature <= 2.0)) {
    throw std::invalid_argument("temperature must be in [0, 2]");
  }
  if (!(timeout_seconds > 0.0) || !std::isfinite(timeout_seconds)) {
    throw std::invalid_argument("timeout must be positive");
  }
  if (max_retries < 0) {
    throw std::invalid_argument("max_retries must be >= 0");
  }
}

// ---- mock --------------------------------------------------------------------

namespace {
constexpr std::string_view kFixtureSuffix = ".resp.txt";
}

MockLlmClient::MockLlmClient(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    throw std::runtime_error("fixtures directory not found: " + dir.string());
  }
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string name = entry.path().filename().string();
    if (name.size() <= kFixtureSuffix.size() ||
        name.compare(name.size() - kFixtureSuffix.size(), kFixtureSuffix.size(),
                     kFixtureSuffix) != 0) {
      continue;
    }
    responses_[name.substr(0, name.size() - kFixtureSuffix.size())] =
        read_text_file(entry.path());
  }
}

std::string MockLlmClient::key(const RequestContext& ctx) {
  return ctx.fixture_id + "." + std::to_string(ctx.iteration);
}

std::string MockLlmClient::complete(const std::string&,
                                    const RequestContext& ctx) const {
  const std::string k = key(ctx);
  const auto it = responses_.find(k);
  if (it == responses_.end()) throw FixtureMissError(k);
  return it->second;
}

// ---- http --------------------------------------------------------------------

namespace {

std::string env_or(const char* name, std::string fallback) {
  const char* v = std::getenv(name);
  return (v != nullptr && *v != '\0') ? std::string(v) : fallback;
}

struct SplitUrl {
  std::string origin;  // scheme://host[:port]
  std::string path;    // "/v1" or ""
};

SplitUrl split_url(const std::string& url) {
  const auto scheme = url.find("://");
  if (scheme == std::string::npos) {
    throw std::invalid_argument("endpoint must start with http:// or https://");
  }
  const auto slash = url.find('/', scheme + 3);
  SplitUrl out;
  if (slash == std::string::npos) {
    out.origin = url;
  } else {
    out.origin = url.substr(0, slash);
    out.path = url.substr(slash);
  }
  while (!out.path.empty() && out.path.back() == '/') out.path.pop_back();
  return out;
}

}  // namespace

HttpLlmClient::HttpLlmClient(LlmConfig cfg) : cfg_(std::move(cfg)) {
  cfg_.validate();
  base_ = cfg_.endpoint.empty()
              ? env_or("OPENAI_BASE_URL", "https://api.openai.com/v1")
              : cfg_.endpoint;
  api_key_ = env_or("OPENAI_API_KEY", "");
  split_url(base_);  // fail early on a bad URL
}

std::string HttpLlmClient::request_body(const std::string& prompt) const {
  Json body = {
      {"model", cfg_.model},
      {"temperature", cfg_.temperature},
      {"messages", Json::array({{{"role", "user"}, {"content", prompt}}})},
  };
  return body.dump();
}

std::string HttpLlmClient::extract_content(std::string_view body) {
  try {
    const Json doc = Json::parse(body);
    const Json& content = doc.at("choices").at(0).at("message").at("content");
    if (!content.is_string()) throw TransportError("content is not a string");
    return content.get<std::string>();
  } catch (const Json::exception& e) {
    throw TransportError(std::string("malformed completion payload: ") +
                         e.what());
  }
}

std::string HttpLlmClient::complete(const std::string& prompt,
                                    const RequestContext&) const {
  const SplitUrl url = split_url(base_);
  const std::string body = request_body(prompt);
  const auto secs = static_cast<time_t>(cfg_.timeout_seconds);
  const auto usecs = static_cast<time_t>(
      (cfg_.timeout_seconds - static_cast<double>(secs)) * 1e6);

  std::string last_error;
  for (int attempt = 0; attempt <= cfg_.max_retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(std::chrono::milliseconds(200 * attempt));
    }
    httplib::Client client(url.origin);
    client.set_connection_timeout(secs, usecs);
    client.set_read_timeout(secs, usecs);
    client.set_write_timeout(secs, usecs);
    httplib::Headers headers;
    if (!api_key_.empty()) {
      headers.emplace("Authorization", "Bearer " + api_key_);
    }
    auto res = client.Post(url.path + "/chat/completions", headers, body,
                           "application/json");
    if (!res) {
      last_error = "request failed: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status < 200 || res->status >= 300) {
      last_error = "HTTP status " + std::to_string(res->status);
      continue;
    }
    try {
      return extract_content(res->body);
    } catch (const TransportError& e) {
      last_error = e.what();
    }
  }
  throw TransportError(last_error + " (after " +
                       std::to_string(cfg_.max_retries + 1) + " attempts)");
}

std::shared_ptr<const LlmClient> make_client(const LlmConfig& cfg) {
  cfg.validate();
  if (cfg.transport == Transport::kMock) {
    return std::make_shared<MockLlmClient>(cfg.fixtures_dir);
  }
  return std::make_shared<HttpLlmClient>(cfg);
}

}  // namespace trajadapt
