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

#include <cmath>
#include <map>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "golden_support.hpp"
#include "trajadapt/dataset.hpp"
#include "trajadapt/transforms.hpp"

namespace trajadapt {
namespace {

std::vector<Sample> shipped() { return load_corpus(testing::data_dir() / "corpus.jsonl"); }

TEST(GenerateTrajectoryTest, Line) {
  TrajSpec s;
  s.start = {0, 0, 0};
  s.goal = {0, 10, 0};
  s.n = 11;
  s.v0 = 2;
  const Trajectory t = generate_trajectory(s);
  ASSERT_EQ(t.size(), 11u);
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_NEAR(t[i].y, static_cast<double>(i), 1e-12);
    EXPECT_EQ(t[i].x, 0.0);
    EXPECT_EQ(t[i].v, 2.0);
  }
}

TEST(GenerateTrajectoryTest, ArcPeaksAtMidpoint) {
  TrajSpec s;
  s.kind = TrajKind::kArc;
  s.start = {0, 0, 0};
  s.goal = {2, 0, 0};
  s.n = 3;
  s.sag = 1;
  const Trajectory t = generate_trajectory(s);
  EXPECT_EQ(t.front().position(), (Vec3{0, 0, 0}));
  EXPECT_EQ(t.back().position(), (Vec3{2, 0, 0}));
  EXPECT_NEAR(t[1].x, 1, 1e-12);
  EXPECT_NEAR(t[1].y, 1, 1e-12);
  EXPECT_NEAR(t[1].z, 0, 1e-12);
}

TEST(GenerateTrajectoryTest, NoiseIsSeededAndSparesEndpoints) {
  TrajSpec s;
  s.kind = TrajKind::kZigzag;
  s.start = {0, 0, 0};
  s.goal = {0, 50, 0};
  s.n = 30;
  s.amplitude = 2;
  s.periods = 3;
  s.noise_std = 0.5;
  s.seed = 11;
  const Trajectory a = generate_trajectory(s);
  EXPECT_EQ(a, generate_trajectory(s));
  EXPECT_EQ(a.front().position(), s.start);
  EXPECT_EQ(a.back().position(), s.goal);
  s.seed = 12;
  EXPECT_NE(a, generate_trajectory(s));
}

TEST(GenerateTrajectoryTest, RejectsInvalidSpecs) {
  TrajSpec s;
  s.goal = {1, 0, 0};
  s.n = 1;
  EXPECT_THROW(generate_trajectory(s), ConfigError);
  s.n = 5;
  s.noise_std = -1;
  EXPECT_THROW(generate_trajectory(s), ConfigError);
}

TEST(LateralDirectionTest, Examples) {
  const Vec3 a = lateral_direction({0, 0, 0}, {2, 0, 0});
  EXPECT_NEAR(a.y, 1, 1e-12);
  const Vec3 b = lateral_direction({0, 0, 0}, {0, 5, 0});
  EXPECT_NEAR(b.x, 1, 1e-12);
  EXPECT_NEAR(lateral_direction({0, 0, 0}, {3, 3, 1}).norm(), 1, 1e-12);
}

TEST(CorpusTest, ShippedCorpusCoversRequirements) {
  const auto corpus = shipped();
  EXPECT_GE(corpus.size(), 20u);
  std::set<Category> cats;
  std::set<std::string> instructions;
  for (const auto& s : corpus) {
    cats.insert(s.category);
    instructions.insert(s.instruction);
  }
  EXPECT_EQ(cats.size(), kAllCategories.size());
  EXPECT_TRUE(instructions.contains("Go left"));
}

TEST(CorpusTest, RoundTrip) {
  const auto corpus = shipped();
  const std::string dumped = dump_corpus(corpus);
  EXPECT_EQ(parse_corpus(dumped), corpus);
  for (const auto& s : corpus) EXPECT_EQ(sample_from_json(to_json(s)), s);
}

TEST(CorpusTest, ErrorsNameTheLine) {
  const std::string good =
      R"({"id": "a", "instruction": "Go left", "category": "cartesian", "scene": {"objects": []},)"
      R"( "traj_spec": {"kind": "line", "start": [0,0,0], "goal": [0,1,0], "n": 5},)"
      R"( "checks": [{"type": "start_fixed"}]})";
  EXPECT_EQ(parse_corpus(good + "\n\n").size(), 1u);
  try {
    parse_corpus(good + "\n" + good + "\n");
    FAIL();
  } catch (const CorpusError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);
  }
  std::string no_checks = good;
  no_checks.replace(no_checks.find(R"([{"type": "start_fixed"}])"),
                    std::string(R"([{"type": "start_fixed"}])").size(), "[]");
  try {
    parse_corpus("\n" + no_checks);
    FAIL();
  } catch (const CorpusError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("checks"), std::string::npos);
  }
  EXPECT_THROW(parse_corpus("{not json"), CorpusError);
}

// The reference chain shipped next to each sample demonstrates that its
// checks are satisfiable.
TEST(CorpusTest, EveryReferenceSolutionPassesItsChecks) {
  for (const auto& s : shipped()) {
    const auto path = testing::data_dir() / "fixtures" / (s.id + ".reference.json");
    ASSERT_TRUE(std::filesystem::exists(path)) << s.id;
    const Trajectory orig = generate_trajectory(s.traj_spec);
    const Trajectory ref = apply_transform_chain(load_json_file(path), orig, s.scene);
    const Report r = evaluate(orig, ref, s.scene, s.checks);
    EXPECT_TRUE(r.pass()) << s.id << " " << to_json(r).dump();
  }
}

TEST(TransformChainTest, MatchesDirectCalls) {
  const Trajectory t({{0, 0, 0, 1}, {0, 5, 0, 1}, {0, 10, 0, 1}});
  const Scene scene({{"box", {1, 5, 0}}});
  const Json chain = Json::parse(R"([
    {"op": "translate_blend", "offset": [2, 0, 0], "mode": "fix_both"},
    {"op": "truncate_at_nearest", "label": "box", "ramp": 1}
  ])");
  const Trajectory want =
      truncate_at_nearest(translate_blend(t, {2, 0, 0}, BlendMode::kFixBoth), {1, 5, 0}, 1);
  EXPECT_EQ(apply_transform_chain(chain, t, scene), want);
  EXPECT_EQ(apply_transform_chain(Json::array(), t, scene), t);
  EXPECT_THROW(apply_transform_chain(Json::parse(R"([{"op": "teleport"}])"), t, scene),
               ConfigError);
  EXPECT_THROW(apply_transform_chain(
                   Json::parse(R"([{"op": "truncate_at_nearest", "label": "cat", "ramp": 1}])"),
                   t, scene),
               ConfigError);
}

TEST(EvalTest, ShippedFixturesPassAndAreDeterministic) {
  const auto corpus = shipped();
  auto client = std::make_shared<MockLlmClient>(testing::data_dir() / "fixtures");
  const EvalReport a = run_eval(corpus, client);
  ASSERT_EQ(a.samples.size(), corpus.size());
  EXPECT_EQ(a.overall.total, static_cast<int>(corpus.size()));
  EXPECT_EQ(a.overall.passed, a.overall.total);
  for (std::size_t i = 0; i < corpus.size(); ++i) EXPECT_EQ(a.samples[i].id, corpus[i].id);
  EvalOptions serial;
  serial.jobs = 1;
  const EvalReport b = run_eval(corpus, client, serial);
  EXPECT_EQ(to_json(a, false), to_json(b, false));
}

TEST(EvalTest, IdentityPolicyAndFixtureMissAreIsolated) {
  auto corpus = shipped();
  std::map<std::string, std::string> fixtures;
  const std::string identity = read_text_file(testing::data_dir() / "fixtures" /
                                              "identity.0.resp.txt");
  for (auto& s : corpus) {
    s.fixture_id = "identity";
  }
  corpus[0].fixture_id = "nowhere";
  fixtures["identity.0"] = identity;
  const EvalReport r = run_eval(corpus, std::make_shared<MockLlmClient>(fixtures));
  ASSERT_EQ(r.samples.size(), corpus.size());
  EXPECT_FALSE(r.samples[0].passed);
  ASSERT_TRUE(r.samples[0].error);
  EXPECT_NE(r.samples[0].error->find("nowhere.0"), std::string::npos);
  int tallied = 0;
  for (std::size_t i = 1; i < r.samples.size(); ++i) {
    const auto& s = r.samples[i];
    EXPECT_EQ(s.state, SessionState::kApproved) << s.id;
    ASSERT_TRUE(s.report) << s.id;
    EXPECT_EQ(s.checks_total, static_cast<int>(corpus[i].checks.size()));
    // No instruction in the corpus is satisfied by doing nothing.
    EXPECT_FALSE(s.passed) << s.id;
    tallied += s.passed;
  }
  EXPECT_EQ(r.overall.passed, tallied);
  int cat_total = 0;
  for (const auto& [c, tally] : r.categories) cat_total += tally.total;
  EXPECT_EQ(cat_total, static_cast<int>(corpus.size()));
}

}  // namespace
}  // namespace trajadapt
