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

#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <utility>

#include <gtest/gtest.h>

#include "golden_support.hpp"
#include "trajadapt/llm_client.hpp"
#include "trajadapt/session.hpp"
#include "trajadapt/transforms.hpp"

namespace trajadapt {
namespace {

const Trajectory kLine({{0, 0, 0, 1}, {0, 5, 0, 1}, {0, 10, 0, 1}});
const Scene kScene({{"box", {2, 5, 0}}});

std::string response(const std::string& code) {
  return Json{{"high_level_plan", "1) do it"}, {"code", code}}.dump();
}

const std::string kGood = response(
    "modified_trajectory = translate_blend(get_trajectory(), [3, 0, 0], 'fix_start')");
const std::string kMissingOutput = response("t = get_trajectory()");
const std::string kBudget = response(
    "for i in range(1000000000):\n    x = 1\nmodified_trajectory = get_trajectory()");
const std::string kMalformed = "I think you should move left.";

std::shared_ptr<const LlmClient> client(std::map<std::string, std::string> m) {
  return std::make_shared<MockLlmClient>(std::move(m));
}

SessionConfig cfg(std::string fixture, int budget = 1) {
  SessionConfig c;
  c.fixture_id = std::move(fixture);
  c.auto_repair_budget = budget;
  return c;
}

Session start(std::map<std::string, std::string> fixtures, int budget = 1) {
  return Session::start("t", "Go left", kScene, kLine, client(std::move(fixtures)),
                        cfg("f", budget));
}

TEST(SessionTest, ValidFixtureProposes) {
  const Session s = start({{"f.0", kGood}});
  EXPECT_EQ(s.state(), SessionState::kProposed);
  ASSERT_EQ(s.iterations().size(), 1u);
  const Iteration& it = s.iterations()[0];
  ASSERT_TRUE(it.proposal);
  EXPECT_EQ(it.proposal->high_level_plan, "1) do it");
  EXPECT_NE(it.proposal->code.find("translate_blend"), std::string::npos);
  EXPECT_TRUE(it.succeeded());
  EXPECT_EQ(*s.latest_adapted(), translate_blend(kLine, {3, 0, 0}, BlendMode::kFixStart));
  EXPECT_EQ(s.latest_plan(), "1) do it");
  EXPECT_FALSE(s.final_trajectory());
  EXPECT_EQ(s.state_history(),
            (std::vector<SessionState>{SessionState::kAwaitingLlm, SessionState::kProposed}));
}

TEST(SessionTest, ConstructorDoesNotCallTheModel) {
  Session s("t", "Go left", kScene, kLine, client({}), cfg("f"));
  EXPECT_EQ(s.state(), SessionState::kAwaitingLlm);
  EXPECT_TRUE(s.iterations().empty());
  EXPECT_THROW(s.submit_verdict(Verdict::approve()), InvalidStateError);
}

TEST(SessionTest, MalformedWithoutBudgetFails) {
  const Session s = start({{"f.0", kMalformed}}, 0);
  EXPECT_EQ(s.state(), SessionState::kFailed);
  ASSERT_TRUE(s.latest_error());
  EXPECT_EQ(s.latest_error()->kind, "response");
}

TEST(SessionTest, MalformedThenValidRepairs) {
  const Session s = start({{"f.0", kMalformed}, {"f.1", kGood}}, 1);
  EXPECT_EQ(s.state(), SessionState::kProposed);
  ASSERT_EQ(s.iterations().size(), 2u);
  EXPECT_EQ(s.iterations()[0].verdict.kind, VerdictKind::kAutoRepair);
  EXPECT_EQ(s.iterations()[1].prompt.find(std::string(kRepairPrefix)) != std::string::npos,
            true);
}

TEST(SessionTest, BudgetErrorThenValidRepairs) {
  const Session s = start({{"f.0", kBudget}, {"f.1", kGood}}, 1);
  EXPECT_EQ(s.state(), SessionState::kProposed);
  ASSERT_EQ(s.iterations().size(), 2u);
  EXPECT_EQ(s.iterations()[0].error->kind, "budget");
  EXPECT_NE(s.iterations()[1].prompt.find("budget"), std::string::npos);
}

TEST(SessionTest, MissingOutputWithZeroBudgetFails) {
  const Session s = start({{"f.0", kMissingOutput}}, 0);
  EXPECT_EQ(s.state(), SessionState::kFailed);
  EXPECT_EQ(s.latest_error()->kind, "missing_output");
  EXPECT_EQ(s.iterations().size(), 1u);
}

TEST(SessionTest, RepairBudgetIsBounded) {
  const Session s = start({{"f.0", kMissingOutput}, {"f.1", kMissingOutput},
                           {"f.2", kGood}},
                          1);
  EXPECT_EQ(s.state(), SessionState::kFailed);
  EXPECT_EQ(s.iterations().size(), 2u);
}

TEST(SessionTest, FixtureMissIsNotRepaired) {
  const Session s = start({}, 3);
  EXPECT_EQ(s.state(), SessionState::kFailed);
  EXPECT_EQ(s.latest_error()->kind, "fixture_miss");
  EXPECT_EQ(s.iterations().size(), 1u);
}

TEST(SessionTest, ApproveFreezesFinalTrajectory) {
  Session s = start({{"f.0", kGood}});
  const Trajectory preview = *s.latest_adapted();
  s.submit_verdict(Verdict::approve());
  EXPECT_EQ(s.state(), SessionState::kApproved);
  EXPECT_EQ(*s.final_trajectory(), preview);
  EXPECT_THROW(s.submit_verdict(Verdict::approve()), InvalidStateError);
  EXPECT_THROW(s.generate(), InvalidStateError);
}

TEST(SessionTest, FeedbackRegeneratesWithFeedbackInPrompt) {
  Session s = start({{"f.0", kGood}, {"f.1", kGood}, {"f.2", kGood}});
  s.submit_verdict(Verdict::feedback("shift only the middle"));
  EXPECT_EQ(s.state(), SessionState::kProposed);
  ASSERT_EQ(s.iterations().size(), 2u);
  EXPECT_EQ(s.iterations()[0].verdict, Verdict::feedback("shift only the middle"));
  const std::string& p = s.iterations()[1].prompt;
  EXPECT_NE(p.find("shift only the middle"), std::string::npos);
  EXPECT_NE(p.find("Go left"), std::string::npos);
  s.submit_verdict(Verdict::feedback("and slower"));
  const std::string& p3 = s.iterations()[2].prompt;
  EXPECT_NE(p3.find("shift only the middle"), std::string::npos);
  EXPECT_NE(p3.find("and slower"), std::string::npos);
  EXPECT_EQ(s.feedback_history(),
            (std::vector<std::string>{"shift only the middle", "and slower"}));
}

TEST(SessionTest, RecordVerdictLeavesGenerationToCaller) {
  Session s = start({{"f.0", kGood}, {"f.1", kGood}});
  s.record_verdict(Verdict::feedback("more"));
  EXPECT_EQ(s.state(), SessionState::kAwaitingLlm);
  EXPECT_EQ(s.iterations().size(), 1u);
  s.generate();
  EXPECT_EQ(s.state(), SessionState::kProposed);
}

TEST(SessionTest, IterationCap) {
  std::map<std::string, std::string> m;
  for (int i = 0; i < 20; ++i) m["f." + std::to_string(i)] = kGood;
  SessionConfig c = cfg("f");
  c.max_iterations = 3;
  Session s = Session::start("t", "Go left", kScene, kLine, client(m), c);
  s.submit_verdict(Verdict::feedback("a"));
  s.submit_verdict(Verdict::feedback("b"));
  EXPECT_EQ(s.state(), SessionState::kProposed);
  s.submit_verdict(Verdict::feedback("c"));
  EXPECT_EQ(s.state(), SessionState::kFailed);
  EXPECT_EQ(s.iterations().size(), 3u);
  EXPECT_EQ(s.latest_error()->kind, "iteration_cap");
}

TEST(SessionTest, ShippedFeedbackFixturePair) {
  SessionConfig c = cfg("feedback_go_left");
  Session s = Session::start("fb", "Go left by 20", Scene(), kLine,
                             std::make_shared<MockLlmClient>(testing::data_dir() / "fixtures"), c);
  ASSERT_EQ(s.state(), SessionState::kProposed);
  EXPECT_NE(s.latest_adapted()->front(), kLine.front());
  s.submit_verdict(Verdict::feedback("Keep the start position the same"));
  ASSERT_EQ(s.state(), SessionState::kProposed);
  EXPECT_EQ(s.latest_adapted()->front(), kLine.front());
  s.submit_verdict(Verdict::approve());
  EXPECT_EQ(s.state(), SessionState::kApproved);
}

TEST(SessionTest, ExportRecord) {
  Session s = start({{"f.0", kMalformed}, {"f.1", kGood}});
  s.submit_verdict(Verdict::approve());
  const Json j = s.to_json();
  EXPECT_EQ(j.at("id"), "t");
  EXPECT_EQ(j.at("state"), "approved");
  EXPECT_EQ(j.at("instruction"), "Go left");
  ASSERT_EQ(j.at("iterations").size(), 2u);
  EXPECT_EQ(j.at("iterations")[0].at("verdict").at("kind"), "auto_repair");
  EXPECT_EQ(j.at("iterations")[1].at("verdict").at("kind"), "approved");
  EXPECT_EQ(trajectory_from_json(j.at("final")), *s.final_trajectory());
}

TEST(SessionTest, ReplayIsByteForByte) {
  const std::map<std::string, std::string> m = {
      {"f.0", kBudget}, {"f.1", kGood}, {"f.2", kMissingOutput}, {"f.3", kGood}};
  auto run = [&] {
    Session s = start(m);
    s.submit_verdict(Verdict::feedback("again"));
    return s.to_json().dump();
  };
  EXPECT_EQ(run(), run());
}

TEST(SessionTest, StateMachineSafetyUnderRandomVerdicts) {
  const std::set<std::pair<SessionState, SessionState>> allowed = {
      {SessionState::kAwaitingLlm, SessionState::kProposed},
      {SessionState::kAwaitingLlm, SessionState::kFailed},
      {SessionState::kProposed, SessionState::kApproved},
      {SessionState::kProposed, SessionState::kAwaitingLlm},
  };
  const std::string pool[] = {kGood, kGood, kMissingOutput, kMalformed, kBudget};
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    std::map<std::string, std::string> m;
    for (int i = 0; i < 10; ++i) {
      if (rng() % 10 != 0) m["f." + std::to_string(i)] = pool[rng() % 5];
    }
    SessionConfig c = cfg("f", static_cast<int>(rng() % 3));
    c.max_iterations = 6;
    c.limits.step_budget = 20000;
    Session s = Session::start("t", "Go left", kScene, kLine, client(m), c);
    for (int step = 0; step < 8; ++step) {
      const int action = static_cast<int>(rng() % 4);
      try {
        if (action == 0) s.submit_verdict(Verdict::approve());
        else if (action == 1) s.submit_verdict(Verdict::feedback("fb" + std::to_string(step)));
        else if (action == 2) s.record_verdict(Verdict::feedback("r"));
        else s.generate();
      } catch (const InvalidStateError&) {
      }
    }
    const auto& h = s.state_history();
    ASSERT_FALSE(h.empty());
    ASSERT_EQ(h.front(), SessionState::kAwaitingLlm);
    ASSERT_EQ(h.back(), s.state());
    for (std::size_t i = 1; i < h.size(); ++i) {
      ASSERT_TRUE(allowed.contains({h[i - 1], h[i]}))
          << "trial " << trial << ": " << to_string(h[i - 1]) << " -> " << to_string(h[i]);
    }
    ASSERT_EQ(s.original(), kLine);
    if (s.state() == SessionState::kApproved) ASSERT_TRUE(s.final_trajectory());
  }
}

}  // namespace
}  // namespace trajadapt
