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

// Golden script corpus: data/golden/<name>.ads with a first line
//   # oracle: {"op": ..., ...}
// naming the direct transform the script must reproduce, and a frozen
// <name>.expected.json written by golden_regen from that oracle.

#ifndef TRAJADAPT_TESTS_GOLDEN_SUPPORT_HPP_
#define TRAJADAPT_TESTS_GOLDEN_SUPPORT_HPP_

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "trajadapt/dataset.hpp"
#include "trajadapt/json_io.hpp"
#include "trajadapt/trajectory.hpp"

namespace trajadapt::testing {

inline std::filesystem::path data_dir() { return TRAJADAPT_DATA_DIR; }
inline std::filesystem::path golden_dir() { return data_dir() / "golden"; }

struct GoldenCase {
  std::string name;
  std::string source;
  Json oracle_step;
  std::filesystem::path expected_path;
};

inline std::vector<GoldenCase> load_golden_cases() {
  std::vector<GoldenCase> out;
  for (const auto& entry : std::filesystem::directory_iterator(golden_dir())) {
    if (entry.path().extension() != ".ads") continue;
    GoldenCase c;
    c.name = entry.path().stem().string();
    c.source = read_text_file(entry.path().string());
    const std::string tag = "# oracle:";
    const auto eol = c.source.find('\n');
    const std::string first = c.source.substr(0, eol);
    if (first.rfind(tag, 0) != 0) {
      throw std::runtime_error(c.name + ": missing oracle header");
    }
    c.oracle_step = Json::parse(first.substr(tag.size()));
    c.expected_path = golden_dir() / (c.name + ".expected.json");
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

inline Trajectory golden_input() {
  return load_trajectory_file((golden_dir() / "input.traj.json").string());
}

inline Scene golden_scene() {
  return load_scene_file((golden_dir() / "scene.json").string());
}

inline Trajectory run_oracle(const GoldenCase& c) {
  return apply_transform_chain(Json::array({c.oracle_step}), golden_input(),
                               golden_scene());
}

/// Largest absolute component difference; infinity on a length mismatch.
inline double max_component_diff(const Trajectory& a, const Trajectory& b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max({worst, std::abs(a[i].x - b[i].x),
                      std::abs(a[i].y - b[i].y), std::abs(a[i].z - b[i].z),
                      std::abs(a[i].v - b[i].v)});
  }
  return worst;
}

}  // namespace trajadapt::testing

#endif  // TRAJADAPT_TESTS_GOLDEN_SUPPORT_HPP_
