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

#include <chrono>
#include <condition_variable>
#include <filesystem>
#include <functional>
#include <mutex>
#include <thread>

#include <gtest/gtest.h>
#include <httplib.h>

#include "golden_support.hpp"
#include "trajadapt/service.hpp"

namespace trajadapt {
namespace {

const Json kTraj = {{"waypoints", Json::array({Json::array({0, 0, 0, 1}),
                                               Json::array({0, 5, 0, 1}),
                                               Json::array({0, 10, 0, 1})})}};

class ServiceTest : public ::testing::Test {
 protected:
  void SetUp() override {
    ServiceConfig cfg;
    cfg.llm.transport = Transport::kMock;
    cfg.llm.fixtures_dir = testing::data_dir() / "fixtures";
    cfg.corpus = load_corpus(testing::data_dir() / "corpus.jsonl");
    service_ = std::make_unique<Service>(cfg);
    port_ = service_->bind("127.0.0.1", 0);
    ASSERT_GT(port_, 0);
    service_->start();
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
    client_->set_read_timeout(60, 0);
  }
  void TearDown() override { service_.reset(); }

  Json post(const std::string& path, const Json& body, int want) {
    auto r = client_->Post(path, body.dump(), "application/json");
    EXPECT_TRUE(r);
    if (!r) return {};
    EXPECT_EQ(r->status, want) << path << " " << r->body;
    return Json::parse(r->body);
  }
  Json get(const std::string& path, int want) {
    auto r = client_->Get(path);
    EXPECT_TRUE(r);
    if (!r) return {};
    EXPECT_EQ(r->status, want) << path << " " << r->body;
    return Json::parse(r->body);
  }
  Json settled(const std::string& id) {
    service_->wait_idle();
    return get("/api/sessions/" + id, 200);
  }

  std::unique_ptr<Service> service_;
  std::unique_ptr<httplib::Client> client_;
  int port_ = 0;
};

TEST_F(ServiceTest, Health) { EXPECT_EQ(get("/api/health", 200).at("status"), "ok"); }

TEST_F(ServiceTest, HappyPathWithFeedback) {
  const Json created = post("/api/sessions",
                            {{"instruction", "Go left by 20"},
                             {"trajectory", kTraj},
                             {"fixture_id", "feedback_go_left"}},
                            201);
  const std::string id = created.at("id");
  const Json v = settled(id);
  EXPECT_EQ(v.at("state"), "proposed");
  EXPECT_FALSE(v.at("plan").is_null());
  EXPECT_EQ(v.at("adapted").at("waypoints").size(), 3u);

  const Json after = post("/api/sessions/" + id + "/verdict",
                          {{"approve", false}, {"feedback", "Keep the start position the same"}},
                          200);
  EXPECT_EQ(after.at("feedback_history").size(), 1u);
  const Json v2 = settled(id);
  EXPECT_EQ(v2.at("state"), "proposed");
  EXPECT_EQ(v2.at("iterations"), 2);
  EXPECT_EQ(v2.at("adapted").at("waypoints")[0], kTraj.at("waypoints")[0]);

  EXPECT_EQ(post("/api/sessions/" + id + "/verdict", {{"approve", true}}, 200).at("state"),
            "approved");
  post("/api/sessions/" + id + "/verdict", {{"approve", true}}, 409);
  const Json exported = get("/api/sessions/" + id + "/export", 200);
  EXPECT_EQ(exported.at("state"), "approved");
  EXPECT_EQ(exported.at("iterations").size(), 2u);
  EXPECT_FALSE(exported.at("final").is_null());
}

TEST_F(ServiceTest, SessionFromCorpusSample) {
  const std::string id = post("/api/sessions", {{"sample_id", "go_left"}}, 201).at("id");
  const Json v = settled(id);
  EXPECT_EQ(v.at("state"), "proposed");
  EXPECT_EQ(v.at("instruction"), "Go left");
  EXPECT_EQ(v.at("original").at("waypoints").size(), 51u);
}

TEST_F(ServiceTest, FailedSessionReportsError) {
  const std::string id = post("/api/sessions",
                              {{"instruction", "Go left"}, {"trajectory", kTraj},
                               {"fixture_id", "does_not_exist"}},
                              201)
                             .at("id");
  const Json v = settled(id);
  EXPECT_EQ(v.at("state"), "failed");
  EXPECT_EQ(v.at("error").at("kind"), "fixture_miss");
  post("/api/sessions/" + id + "/verdict", {{"approve", true}}, 409);
}

TEST_F(ServiceTest, NotFound) {
  get("/api/sessions/nope", 404);
  get("/api/sessions/nope/export", 404);
  post("/api/sessions/nope/verdict", {{"approve", true}}, 404);
}

TEST_F(ServiceTest, BadRequestsNameTheField) {
  EXPECT_EQ(post("/api/sessions", {{"trajectory", kTraj}}, 400).at("field"), "instruction");
  EXPECT_EQ(post("/api/sessions", {{"instruction", "x"}}, 400).at("field"), "trajectory");
  EXPECT_EQ(post("/api/sessions", {{"instruction", "x"}, {"trajectory", {{"waypoints", {{1, 2}}}}}}, 400)
                .at("field"),
            "trajectory");
  EXPECT_EQ(post("/api/sessions", {{"sample_id", "nope"}}, 400).at("field"), "sample_id");
  EXPECT_EQ(post("/api/sessions", {{"instruction", 5}}, 400).at("field"), "instruction");
  auto r = client_->Post("/api/sessions", "{oops", "application/json");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 400);

  const std::string id = post("/api/sessions", {{"sample_id", "go_left"}}, 201).at("id");
  settled(id);
  EXPECT_EQ(post("/api/sessions/" + id + "/verdict", Json::object(), 400).at("field"), "approve");
  EXPECT_EQ(post("/api/sessions/" + id + "/verdict", {{"approve", false}}, 400).at("field"),
            "feedback");
  EXPECT_EQ(post("/api/eval", {{"llm", "pigeon"}}, 400).at("field"), "llm");
}

TEST_F(ServiceTest, CorpusAndEval) {
  const Json corpus = get("/api/corpus", 200);
  EXPECT_GE(corpus.size(), 20u);
  EXPECT_TRUE(corpus[0].contains("instruction"));
  const Json report = post("/api/eval", Json::object(), 200);
  EXPECT_EQ(report.at("overall").at("passed"), report.at("overall").at("total"));
}

TEST_F(ServiceTest, CorsPreflight) {
  auto r = client_->Options("/api/sessions");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 204);
  EXPECT_EQ(r->get_header_value("Access-Control-Allow-Origin"), "*");
}

// A slow model makes awaiting_llm observable and verdicts during it a 409.
TEST(ServiceLiveTest, AwaitingLlmIsObservable) {
  std::mutex mu;
  std::condition_variable cv;
  bool release = false;
  httplib::Server model;
  model.Post("/v1/chat/completions", [&](const httplib::Request&, httplib::Response& res) {
    std::unique_lock lock(mu);
    cv.wait(lock, [&] { return release; });
    const Json content = {{"high_level_plan", "1) nothing"},
                          {"code", "modified_trajectory = get_trajectory()"}};
    res.set_content(Json{{"choices", {{{"message", {{"content", content.dump()}}}}}}}.dump(),
                    "application/json");
  });
  const int model_port = model.bind_to_any_port("127.0.0.1");
  std::thread model_thread([&] { model.listen_after_bind(); });
  model.wait_until_ready();

  auto unblock = [&] {
    {
      std::lock_guard lock(mu);
      release = true;
    }
    cv.notify_all();
  };
  struct Finally {
    std::function<void()> f;
    ~Finally() { f(); }
  } cleanup{[&] {
    unblock();
    model.stop();
    if (model_thread.joinable()) model_thread.join();
  }};

  {
    ServiceConfig cfg;
    cfg.llm.transport = Transport::kLive;
    cfg.llm.endpoint = "http://127.0.0.1:" + std::to_string(model_port) + "/v1";
    cfg.llm.timeout_seconds = 30;
    Service service(cfg);
    const int port = service.bind("127.0.0.1", 0);
    service.start();
    httplib::Client c("127.0.0.1", port);

    auto created = c.Post("/api/sessions",
                          Json{{"instruction", "Go left"}, {"trajectory", kTraj}}.dump(),
                          "application/json");
    ASSERT_TRUE(created);
    ASSERT_EQ(created->status, 201);
    const Json view = Json::parse(created->body);
    EXPECT_EQ(view.at("state"), "awaiting_llm");
    const std::string id = view.at("id");
    auto polled = c.Get("/api/sessions/" + id);
    ASSERT_TRUE(polled);
    EXPECT_EQ(Json::parse(polled->body).at("state"), "awaiting_llm");
    auto early = c.Post("/api/sessions/" + id + "/verdict", R"({"approve": true})",
                        "application/json");
    ASSERT_TRUE(early);
    EXPECT_EQ(early->status, 409);

    unblock();
    service.wait_idle();
    EXPECT_EQ(Json::parse(c.Get("/api/sessions/" + id)->body).at("state"), "proposed");
    service.stop();
  }
}

TEST(ServiceExportTest, WritesSessionRecords) {
  const auto dir = std::filesystem::temp_directory_path() / "trajadapt_service_export";
  std::filesystem::remove_all(dir);
  ServiceConfig cfg;
  cfg.llm.transport = Transport::kMock;
  cfg.llm.fixtures_dir = testing::data_dir() / "fixtures";
  cfg.export_dir = dir;
  Service service(cfg);
  const int port = service.bind("127.0.0.1", 0);
  service.start();
  httplib::Client c("127.0.0.1", port);
  auto r = c.Post("/api/sessions",
                  Json{{"instruction", "Go left"}, {"trajectory", kTraj},
                       {"fixture_id", "identity"}}
                      .dump(),
                  "application/json");
  ASSERT_TRUE(r);
  const std::string id = Json::parse(r->body).at("id");
  service.wait_idle();
  const Json rec = load_json_file(dir / (id + ".json"));
  EXPECT_EQ(rec.at("state"), "proposed");
  service.stop();
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace trajadapt
