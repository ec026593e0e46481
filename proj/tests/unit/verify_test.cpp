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
#include <vector>

#include <gtest/gtest.h>

#include "property_support.hpp"
#include "trajadapt/transforms.hpp"
#include "trajadapt/verify.hpp"

namespace trajadapt {
namespace {

const Trajectory kLine({{0, 0, 0, 1}, {0, 5, 0, 1}, {0, 10, 0, 1}});

bool passes(const Trajectory& orig, const Trajectory& adapted, const Scene& scene,
            const CheckSpec& c) {
  const std::vector<CheckSpec> v{c};
  return evaluate(orig, adapted, scene, v).pass();
}

TEST(VerifyTest, FixStartShiftPassesStartFixedAndShift) {
  const Trajectory a = translate_blend(kLine, {20, 0, 0}, BlendMode::kFixStart);
  const std::vector<CheckSpec> checks{check::StartFixed{},
                                      check::DirectionalShift{{1, 0, 0}, 5},
                                      check::GoalDisplaced{{1, 0, 0}, 20, 1e-9},
                                      check::GoalFixed{}};
  const Report r = evaluate(kLine, a, Scene(), checks);
  ASSERT_EQ(r.results.size(), 4u);
  EXPECT_TRUE(r.results[0].pass);
  EXPECT_TRUE(r.results[1].pass);
  EXPECT_GT(r.results[1].measured, 5);
  EXPECT_TRUE(r.results[2].pass);
  EXPECT_FALSE(r.results[3].pass);
  EXPECT_DOUBLE_EQ(r.results[3].measured, 20);
  EXPECT_FALSE(r.pass());
}

TEST(VerifyTest, ClearanceAndSpeed) {
  const Scene scene({{"box", {1, 5, 0}}});
  EXPECT_FALSE(passes(kLine, kLine, scene, check::MinClearance{"box", 3, 0}));
  const Trajectory pushed = enforce_min_distance(kLine, {1, 5, 0}, 3);
  EXPECT_TRUE(passes(kLine, pushed, scene, check::MinClearance{"box", 3, 1e-9}));

  const Trajectory slow = scale_speed_near(kLine, {1, 5, 0}, 2, 0.5, false);
  EXPECT_TRUE(passes(kLine, slow, scene, check::SpeedReducedWithin{"box", 2}));
  EXPECT_FALSE(passes(kLine, slow, scene, check::SpeedIncreasedWithin{"box", 2}));
  EXPECT_TRUE(passes(kLine, slow, scene, check::MaxSpeedWithin{"box", 2, 0.5}));
  EXPECT_FALSE(passes(kLine, slow, scene, check::MinSpeedWithin{"box", 2, 0.9}));
}

TEST(VerifyTest, VacuousSpeedRegionFails) {
  const Scene scene({{"box", {100, 100, 0}}});
  const std::vector<CheckSpec> checks{check::SpeedReducedWithin{"box", 1},
                                      check::MaxSpeedWithin{"box", 1, 10}};
  const Report r = evaluate(kLine, kLine, scene, checks);
  for (const auto& c : r.results) {
    EXPECT_FALSE(c.pass);
    EXPECT_TRUE(std::isnan(c.measured));
  }
  EXPECT_TRUE(to_json(r).at("checks")[0].at("measured").is_null());
}

TEST(VerifyTest, TruncateAndStop) {
  const Scene scene({{"box", {1, 5, 0}}});
  const Trajectory t = truncate_at_nearest(kLine, {1, 5, 0}, 1);
  EXPECT_TRUE(passes(kLine, t, scene, check::StopsAtEnd{}));
  EXPECT_TRUE(passes(kLine, t, scene, check::TruncatedNear{"box"}));
  EXPECT_FALSE(passes(kLine, kLine, scene, check::StopsAtEnd{}));
  EXPECT_FALSE(passes(kLine, kLine, scene, check::TruncatedNear{"box"}));
}

TEST(VerifyTest, SmoothnessAndShape) {
  EXPECT_TRUE(passes(kLine, kLine, Scene(), check::Smoothness{1e-9}));
  EXPECT_TRUE(passes(kLine, kLine, Scene(), check::ShapeSimilarity{0}));
  const Trajectory zig({{0, 0, 0, 1}, {3, 5, 0, 1}, {0, 10, 0, 1}});
  EXPECT_FALSE(passes(kLine, zig, Scene(), check::Smoothness{0.1}));
  EXPECT_FALSE(passes(kLine, zig, Scene(), check::ShapeSimilarity{0.1}));
}

TEST(VerifyTest, UnknownLabelIsConfigErrorNamingAll) {
  const std::vector<CheckSpec> checks{check::MinClearance{"ghost", 1, 0},
                                      check::SpeedReducedWithin{"phantom", 1}};
  try {
    evaluate(kLine, kLine, Scene({{"box", {0, 0, 0}}}), checks);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("ghost"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("phantom"), std::string::npos);
  }
  // Lookup is case-insensitive.
  const std::vector<CheckSpec> ok{check::MinClearance{"BOX", 0, 0}};
  EXPECT_NO_THROW(evaluate(kLine, kLine, Scene({{"box", {9, 9, 9}}}), ok));
}

TEST(VerifyTest, CheckJsonRoundTrip) {
  const std::vector<CheckSpec> all{
      check::StartFixed{1e-3},         check::GoalFixed{},
      check::GoalDisplaced{{1, 0, 0}, 20, 0.5},
      check::DirectionalShift{{0, 0, -1}, 2},
      check::MinClearance{"box", 10, 0.1},
      check::MaxSpeedWithin{"person", 2, 0.5},
      check::MinSpeedWithin{"person", 2, 1.5},
      check::SpeedReducedWithin{"box", 3},
      check::SpeedIncreasedWithin{"box", 3},
      check::StopsAtEnd{},             check::TruncatedNear{"sofa", 0.01},
      check::Smoothness{0.5},          check::ShapeSimilarity{0.2}};
  for (const auto& c : all) {
    const Json j = to_json(c);
    EXPECT_EQ(j.at("type"), check_type_name(c));
    EXPECT_EQ(check_from_json(j), c) << j.dump();
  }
}

TEST(VerifyTest, CheckJsonRejectsBadInput) {
  for (const char* bad :
       {R"({"type": "warp_drive"})", R"({"type": "goal_displaced", "dir": [0, 0, 0],
         "amount": 1, "tol": 0})",
        R"({"type": "min_clearance", "label": "box", "d": 1, "tol": -1})",
        R"({"type": "min_clearance", "d": 1})", R"({"type": "smoothness"})",
        R"({"type": "max_speed_within", "label": "box", "radius": 0, "vmax": 1})",
        R"([1, 2])"}) {
    EXPECT_THROW(check_from_json(Json::parse(bad)), FormatError) << bad;
  }
}

TEST(VerifyPropertyTest, IdentityFailsAnyDisplacement) {
  testing::Rng rng(404);
  for (int i = 0; i < 1000; ++i) {
    const Trajectory t = testing::random_trajectory(rng);
    const Vec3 dir = testing::random_point(rng);
    if (dir.norm() < 1e-3) continue;
    const double amount = testing::uniform(rng, 0.1, 50);
    const double tol = testing::uniform(rng, 0, 0.09);
    ASSERT_FALSE(passes(t, t, Scene(), check::GoalDisplaced{dir, amount, tol})) << i;
  }
}

// Each transform must satisfy the check it is designed to meet.
TEST(VerifyPropertyTest, TransformsSatisfyTheirChecks) {
  testing::Rng rng(2026);
  for (int i = 0; i < 200; ++i) {
    std::vector<Waypoint> w;
    const int n = testing::uniform_int(rng, 3, 25);
    for (int k = 0; k < n; ++k) {
      const Vec3 p = testing::random_point(rng);
      w.push_back({p.x, p.y, p.z, testing::uniform(rng, 0.5, 3)});
    }
    const Trajectory t(w);
    const Vec3 c = t[static_cast<std::size_t>(testing::uniform_int(rng, 0, n - 1))].position();
    const Scene scene({{"obj", c}});
    const Vec3 off = testing::random_point(rng);
    SCOPED_TRACE(i);

    ASSERT_TRUE(passes(t, translate_blend(t, off, BlendMode::kFixStart), scene,
                       check::StartFixed{1e-9}));
    ASSERT_TRUE(passes(t, translate_blend(t, off, BlendMode::kFixGoal), scene,
                       check::GoalFixed{1e-9}));
    if (off.norm() > 1e-6) {
      ASSERT_TRUE(passes(t, translate_blend(t, off, BlendMode::kUniform), scene,
                         check::GoalDisplaced{off, off.norm(), 1e-9}));
      ASSERT_TRUE(passes(t, translate_blend(t, off, BlendMode::kUniform), scene,
                         check::DirectionalShift{off, off.norm() - 1e-9}));
    }
    const double d = testing::uniform(rng, 0.5, 5);
    ASSERT_TRUE(passes(t, enforce_min_distance(t, c, d), scene,
                       check::MinClearance{"obj", d, 1e-9}));
    const double r = testing::uniform(rng, 0.5, 4);
    const Trajectory slow = scale_speed_near(t, c, r, 0.5, false);
    ASSERT_TRUE(passes(t, slow, scene, check::SpeedReducedWithin{"obj", r}));
    const Trajectory fast = scale_speed_near(t, c, r, 2, false);
    ASSERT_TRUE(passes(t, fast, scene, check::SpeedIncreasedWithin{"obj", r}));
    const Trajectory stop = truncate_at_nearest(t, c, testing::uniform_int(rng, 1, 5));
    ASSERT_TRUE(passes(t, stop, scene, check::StopsAtEnd{}));
    // Nearest at index 0 keeps two waypoints, so the end is not the nearest.
    if (nearest_index(t, c).index > 0) {
      ASSERT_TRUE(passes(t, stop, scene, check::TruncatedNear{"obj", 1e-9}));
    }
    ASSERT_TRUE(passes(t, t, scene, check::ShapeSimilarity{1e-12}));
  }
}

}  // namespace
}  // namespace trajadapt
