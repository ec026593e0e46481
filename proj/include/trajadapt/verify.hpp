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

#ifndef TRAJADAPT_VERIFY_HPP_
#define TRAJADAPT_VERIFY_HPP_

#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "trajadapt/json_io.hpp"
#include "trajadapt/trajectory.hpp"

namespace trajadapt {

namespace check {

struct StartFixed {
  double tol = 1e-6;
  friend bool operator==(const StartFixed&, const StartFixed&) = default;
};
struct GoalFixed {
  double tol = 1e-6;
  friend bool operator==(const GoalFixed&, const GoalFixed&) = default;
};
struct GoalDisplaced {
  Vec3 dir;
  double amount = 0;
  double tol = 0;
  friend bool operator==(const GoalDisplaced&, const GoalDisplaced&) = default;
};
struct DirectionalShift {
  Vec3 dir;
  double min_amount = 0;
  friend bool operator==(const DirectionalShift&, const DirectionalShift&) = default;
};
struct MinClearance {
  std::string label;
  double d = 0;
  double tol = 0;
  friend bool operator==(const MinClearance&, const MinClearance&) = default;
};
struct MaxSpeedWithin {
  std::string label;
  double radius = 0;
  double vmax = 0;
  friend bool operator==(const MaxSpeedWithin&, const MaxSpeedWithin&) = default;
};
struct MinSpeedWithin {
  std::string label;
  double radius = 0;
  double vmin = 0;
  friend bool operator==(const MinSpeedWithin&, const MinSpeedWithin&) = default;
};
struct SpeedReducedWithin {
  std::string label;
  double radius = 0;
  friend bool operator==(const SpeedReducedWithin&, const SpeedReducedWithin&) = default;
};
struct SpeedIncreasedWithin {
  std::string label;
  double radius = 0;
  friend bool operator==(const SpeedIncreasedWithin&, const SpeedIncreasedWithin&) = default;
};
struct StopsAtEnd {
  double vtol = 1e-9;
  friend bool operator==(const StopsAtEnd&, const StopsAtEnd&) = default;
};
struct TruncatedNear {
  std::string label;
  double tol = 1e-6;
  friend bool operator==(const TruncatedNear&, const TruncatedNear&) = default;
};
struct Smoothness {
  double max_roughness = 0;
  friend bool operator==(const Smoothness&, const Smoothness&) = default;
};
struct ShapeSimilarity {
  double eps_rel = 0;
  friend bool operator==(const ShapeSimilarity&, const ShapeSimilarity&) = default;
};

}  // namespace check

using CheckSpec =
    std::variant<check::StartFixed, check::GoalFixed, check::GoalDisplaced,
                 check::DirectionalShift, check::MinClearance,
                 check::MaxSpeedWithin, check::MinSpeedWithin,
                 check::SpeedReducedWithin, check::SpeedIncreasedWithin,
                 check::StopsAtEnd, check::TruncatedNear, check::Smoothness,
                 check::ShapeSimilarity>;

/// The "type" tag used in JSON, e.g. "min_clearance".
std::string check_type_name(const CheckSpec& spec);

/// Throws FormatError on an unknown type, missing field, negative tolerance
/// or zero direction.
CheckSpec check_from_json(const Json& doc);
Json to_json(const CheckSpec& spec);

/// A check names an object the scene does not have.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CheckResult {
  CheckSpec spec;
  bool pass = false;
  double measured = 0;  // NaN when there was nothing to measure
};

struct Report {
  std::vector<CheckResult> results;
  bool pass() const;
};

Json to_json(const Report& report);

/// Samples used by the resampled checks.
inline constexpr int kVerifyResampleCount = 100;

/// Pure. Throws ConfigError listing every label missing from the scene.
Report evaluate(const Trajectory& original, const Trajectory& adapted,
                const Scene& scene, std::span<const CheckSpec> checks);

}  // namespace trajadapt

#endif  // TRAJADAPT_VERIFY_HPP_
