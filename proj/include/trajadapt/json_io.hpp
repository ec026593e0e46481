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

// Trajectory file:  {"waypoints": [[x, y, z, v], ...]}
// Scene file:       {"objects": [{"label": s, "position": [x, y, z]}],
//                    "description": s}   (description optional)

#ifndef TRAJADAPT_JSON_IO_HPP_
#define TRAJADAPT_JSON_IO_HPP_

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "trajadapt/trajectory.hpp"

namespace trajadapt {

using Json = nlohmann::json;

/// Malformed file or document. The message names the offending field.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Trajectory& traj);
Json to_json(const Scene& scene);
Json to_json(const Vec3& v);

Trajectory trajectory_from_json(const Json& doc);
Scene scene_from_json(const Json& doc);
Vec3 vec3_from_json(const Json& doc, const std::string& field);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     const std::string& contents);

Json load_json_file(const std::filesystem::path& path);
Trajectory load_trajectory_file(const std::filesystem::path& path);
Scene load_scene_file(const std::filesystem::path& path);

/// Shortest decimal text that round-trips the double ("1", "2.5", "1e-07").
std::string format_number(double value);

}  // namespace trajadapt

#endif  // TRAJADAPT_JSON_IO_HPP_
