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

#ifndef TRAJADAPT_DATASET_HPP_
#define TRAJADAPT_DATASET_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trajadapt/json_io.hpp"
#include "trajadapt/llm_client.hpp"
#include "trajadapt/session.hpp"
#include "trajadapt/trajectory.hpp"
#include "trajadapt/verify.hpp"

namespace trajadapt {

enum class TrajKind { kLine, kArc, kZigzag };

/// Seeded generator for a sample's initial trajectory.
struct TrajSpec {
  TrajKind kind = TrajKind::kLine;
  Vec3 start;
  Vec3 goal;
  int n = 2;
  double sag = 0;        // arc: peak offset at mid-path
  double amplitude = 0;  // zigzag
  double periods = 0;    // zigzag
  double noise_std = 0;  // interior waypoints only
  std::uint64_t seed = 0;
  double v0 = 1;

  friend bool operator==(const TrajSpec&, const TrajSpec&) = default;
};

/// Lateral direction used by arc and zigzag: the part of +Y perpendicular to
/// the chord, or of +X when the chord runs along Y. Unit length.
Vec3 lateral_direction(const Vec3& start, const Vec3& goal);

/// Deterministic for a fixed spec. Endpoints equal start/goal exactly and
/// every speed is v0. Throws ConfigError on an invalid spec.
Trajectory generate_trajectory(const TrajSpec& spec);

TrajSpec traj_spec_from_json(const Json& doc);
Json to_json(const TrajSpec& spec);

enum class Category { kCartesian, kSpeed, kObjectRelative, kNumeric, kCompound };
inline constexpr std::array<Category, 5> kAllCategories = {
    Category::kCartesian, Category::kSpeed, Category::kObjectRelative,
    Category::kNumeric, Category::kCompound};
std::string_view to_string(Category c);
std::optional<Category> parse_category(std::string_view name);

struct Sample {
  std::string id;
  std::string instruction;
  Scene scene;
  TrajSpec traj_spec;
  std::vector<CheckSpec> checks;
  std::optional<std::string> fixture_id;
  Category category = Category::kCartesian;
  std::optional<std::string> note;

  /// Mock-transport key: fixture_id, else id.
  std::string fixture_key() const { return fixture_id.value_or(id); }
  friend bool operator==(const Sample&, const Sample&) = default;
};

Sample sample_from_json(const Json& doc);
Json to_json(const Sample& sample);

/// A corpus record is malformed. what() names the line and field.
class CorpusError : public std::runtime_error {
 public:
  CorpusError(int line, const std::string& message)
      : std::runtime_error("corpus line " + std::to_string(line) + ": " +
                           message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// One JSON object per line; blank lines are skipped. Validates record
/// fields, nonempty checks, and id uniqueness.
std::vector<Sample> parse_corpus(std::string_view text);
std::vector<Sample> load_corpus(const std::filesystem::path& path);
std::string dump_corpus(std::span<const Sample> samples);

/// Applies a reference transform chain such as
/// [{"op": "translate_blend", "offset": [20, 0, 0], "mode": "fix_start"}].
/// Object-relative ops name a scene label. Throws ConfigError on bad input.
Trajectory apply_transform_chain(const Json& chain, const Trajectory& traj,
                                 const Scene& scene);

struct SampleResult {
  std::string id;
  Category category = Category::kCartesian;
  bool passed = false;
  int checks_passed = 0;
  int checks_total = 0;
  SessionState state = SessionState::kFailed;
  int iterations = 0;
  std::optional<std::string> error;
  std::optional<Report> report;
};

struct CategoryTally {
  int passed = 0;
  int total = 0;
  double rate() const { return total == 0 ? 0.0 : double(passed) / total; }
};

struct EvalReport {
  std::vector<SampleResult> samples;  // corpus order
  std::vector<std::pair<Category, CategoryTally>> categories;
  CategoryTally overall;
  double wall_clock_seconds = 0;
};

/// Serialized report; timing is optional so reports can be compared.
Json to_json(const EvalReport& report, bool include_timing = true);

struct EvalOptions {
  SessionConfig session;  // fixture_id is set per sample
  int jobs = 0;           // 0: hardware concurrency
};

/// Runs every sample through a session, approving the first successful
/// proposal, then scores the approved trajectory. Per-sample failures are
/// recorded and never abort the batch.
EvalReport run_eval(std::span<const Sample> corpus,
                    std::shared_ptr<const LlmClient> client,
                    const EvalOptions& options = {});
EvalReport run_eval(std::span<const Sample> corpus, const LlmConfig& llm,
                    const EvalOptions& options = {});

}  // namespace trajadapt

#endif  // TRAJADAPT_DATASET_HPP_
