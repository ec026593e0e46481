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

#include <cstdlib>
#include <filesystem>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "golden_support.hpp"
#include "trajadapt/json_io.hpp"
#include "trajadapt/prompt.hpp"
#include "trajadapt/script/parser.hpp"

namespace trajadapt {
namespace {

int occurrences(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

std::string last_line(const std::string& s) {
  const auto nl = s.rfind('\n');
  return nl == std::string::npos ? s : s.substr(nl + 1);
}

TEST(BuildPromptTest, InstructionInFinalSlotAndExample) {
  const std::string p = build_prompt({"Go left", Scene(), {}, {}});
  EXPECT_EQ(last_line(p), "Go left");
  EXPECT_EQ(occurrences(p, "Go left"), 2);
  EXPECT_NE(p.find("EXAMPLE 1"), std::string::npos);
  EXPECT_NE(p.find("EXAMPLE 2"), std::string::npos);
  EXPECT_EQ(p.find("FEEDBACK:"), std::string::npos);
  EXPECT_EQ(p.find("ENVIRONMENT DESCRIPTION"), std::string::npos);
}

TEST(BuildPromptTest, SectionOrder) {
  const std::string p = build_prompt({"Go left", Scene({{"box", {1, 2, 0}}}), {"x"}, {}});
  const char* sections[] = {"FUNCTIONS AVAILABLE", "COORDINATE SYSTEM:",
                            "ENVIRONMENT DESCRIPTION:", "RULES:", "BUILTIN FUNCTIONS:",
                            "OUTPUT STRUCTURE", "EXAMPLE 1", "FEEDBACK:"};
  std::size_t prev = 0;
  for (const char* s : sections) {
    const auto pos = p.find(s);
    ASSERT_NE(pos, std::string::npos) << s;
    EXPECT_GT(pos, prev) << s;
    prev = pos;
  }
}

TEST(BuildPromptTest, FeedbackSectionQuotesEachEntryWithInstruction) {
  const std::string p =
      build_prompt({"Go left", Scene(), {"also keep speed constant", "less"}, {}});
  const auto fb = p.find("FEEDBACK:");
  ASSERT_NE(fb, std::string::npos);
  const std::string tail = p.substr(fb);
  EXPECT_NE(tail.find("also keep speed constant"), std::string::npos);
  EXPECT_NE(tail.find("2. Original instruction: \"Go left\"\n   Feedback: less"),
            std::string::npos);
  EXPECT_GE(occurrences(tail, "Go left"), 3);
}

TEST(BuildPromptTest, EnvironmentRendering) {
  const std::string p = build_prompt({"Go left", Scene({{"box", {1, 2, 0}}}), {}, {}});
  EXPECT_NE(p.find("\nbox at [1, 2, 0]\n"), std::string::npos);
  const std::string d = build_prompt(
      {"Go left", Scene({{"box", {1, 2, 0}}}, "A tidy kitchen."), {}, {}});
  EXPECT_NE(d.find("ENVIRONMENT DESCRIPTION:\nA tidy kitchen.\n"), std::string::npos);
  PromptOverrides o;
  o.environment = "custom env";
  o.coordinate_system = "custom axes";
  const std::string c = build_prompt({"Go left", Scene(), {}, o});
  EXPECT_NE(c.find("ENVIRONMENT DESCRIPTION:\ncustom env\n"), std::string::npos);
  EXPECT_NE(c.find("COORDINATE SYSTEM:\ncustom axes\n"), std::string::npos);
}

TEST(BuildPromptTest, CoordinateConventions) {
  const std::string axes(default_coordinate_system());
  for (const char* a : {"positive X axis is left", "Negative X axis is right",
                        "positive Y axis is front", "Negative Y axis is back",
                        "positive Z axis is up", "Negative Z axis is down"}) {
    EXPECT_NE(axes.find(a), std::string::npos) << a;
  }
}

TEST(BuildPromptTest, EveryRuleAppears) {
  const std::string p = build_prompt({"Stop near the box", Scene(), {}, {}});
  for (const char* frag :
       {"Use only the given functions", "Shift the points gradually",
        "Deduce from instruction if the goal point should be changed",
        "Waypoints can be added or removed",
        "Intermediate waypoints shall be modified", "modified_trajectory",
        "velocity changes shall be smooth"}) {
    EXPECT_NE(p.find(frag), std::string::npos) << frag;
  }
}

TEST(BuildPromptTest, LanguageSubsetListsEveryBuiltin) {
  const std::string t = language_subset_text();
  for (const char* name : {"get_trajectory", "detect_objects", "translate_blend",
                           "append_spiral", "scale_speed_near", "dist3"}) {
    EXPECT_NE(t.find(name), std::string::npos) << name;
  }
}

TEST(BuildPromptTest, PureAndRejectsEmptyInstruction) {
  const PromptRequest r{"Go right", Scene({{"sofa", {0, 1, 0}}}), {"a"}, {}};
  EXPECT_EQ(build_prompt(r), build_prompt(r));
  EXPECT_THROW(build_prompt({"", Scene(), {}, {}}), std::invalid_argument);
}

TEST(BuildPromptTest, Snapshot) {
  const auto path = std::filesystem::path(__FILE__).parent_path().parent_path() /
                    "snapshots" / "prompt_go_left_box.txt";
  const std::string p = build_prompt(
      {"Go left", Scene({{"box", {1, 2, 0}}}), {"keep the start fixed"}, {}});
  if (std::getenv("TRAJADAPT_UPDATE_SNAPSHOTS") != nullptr) {
    std::filesystem::create_directories(path.parent_path());
    write_text_file(path, p);
  }
  EXPECT_EQ(p, read_text_file(path));
}

TEST(ParseResponseTest, StrictJson) {
  const auto r = parse_response(
      R"j({"high_level_plan": "1) shift", "code": "modified_trajectory = get_trajectory()"})j");
  EXPECT_EQ(r.high_level_plan, "1) shift");
  EXPECT_EQ(r.code, "modified_trajectory = get_trajectory()");
}

TEST(ParseResponseTest, FencedIsIdentical) {
  const std::string body =
      R"j({"high_level_plan": "1) shift", "code": "modified_trajectory = get_trajectory()"})j";
  const auto a = parse_response(body);
  const auto b = parse_response("Here you go:\n```json\n" + body + "\n```\nDone.");
  EXPECT_EQ(a.high_level_plan, b.high_level_plan);
  EXPECT_EQ(a.code, b.code);
}

TEST(ParseResponseTest, LooseStyleAndListPlan) {
  const auto r = parse_response(
      "{\n'high_level_plan': ['1) a', '2) b'],\n'Python code': \"\"\"\n"
      "```python\nt = get_trajectory()\nmodified_trajectory = t\n```\n\"\"\"\n}");
  EXPECT_EQ(r.high_level_plan, "1) a\n2) b");
  EXPECT_EQ(r.code, "t = get_trajectory()\nmodified_trajectory = t");
  const auto p = parse_response(
      R"j({"high_level_plan": "x {not a brace}", "python_code": "modified_trajectory = get_trajectory()"})j");
  EXPECT_EQ(p.high_level_plan, "x {not a brace}");
}

TEST(ParseResponseTest, Failures) {
  for (const char* bad :
       {"Sure! Here is what I would do.", "{\"code\": \"x = 1\"}",
        "{\"high_level_plan\": \"p\"}", "{\"high_level_plan\": \"\", \"code\": \"x\"}",
        "{\"high_level_plan\": \"p\", \"code\": 3}", "{ unterminated"}) {
    try {
      parse_response(bad);
      ADD_FAILURE() << "accepted: " << bad;
    } catch (const ResponseParseError& e) {
      EXPECT_EQ(e.raw(), bad);
    }
  }
}

TEST(ParseResponseTest, EveryShippedFixtureParsesAndCompiles) {
  // Deliberately malformed fixtures used by the repair tests.
  const std::set<std::string> malformed = {"repair_response.0"};
  int n = 0;
  for (const auto& e : std::filesystem::directory_iterator(testing::data_dir() / "fixtures")) {
    const std::string name = e.path().filename().string();
    if (!name.ends_with(".resp.txt")) continue;
    const std::string key = name.substr(0, name.size() - std::string(".resp.txt").size());
    const std::string text = read_text_file(e.path());
    if (malformed.contains(key)) {
      EXPECT_THROW(parse_response(text), ResponseParseError) << key;
      continue;
    }
    ++n;
    ProposalText p;
    ASSERT_NO_THROW(p = parse_response(text)) << key;
    EXPECT_NO_THROW(script::parse_source(p.code)) << key << "\n" << p.code;
  }
  EXPECT_GE(n, 20);
}

}  // namespace
}  // namespace trajadapt
