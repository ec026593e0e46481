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

#include "trajadapt/json_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

namespace trajadapt {

namespace {

double number_at(const Json& arr, std::size_t i, const std::string& field) {
  if (!arr[i].is_number()) {
    throw FormatError(field + "[" + std::to_string(i) + "] must be a number");
  }
  return arr[i].get<double>();
}

}  // namespace

std::string format_number(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) return "nan";
  return std::string(buf.data(), end);
}

Json to_json(const Vec3& v) { return Json::array({v.x, v.y, v.z}); }

Json to_json(const Trajectory& traj) {
  Json wps = Json::array();
  for (const auto& w : traj.waypoints()) {
    wps.push_back(Json::array({w.x, w.y, w.z, w.v}));
  }
  return Json{{"waypoints", std::move(wps)}};
}

Json to_json(const Scene& scene) {
  Json objects = Json::array();
  for (const auto& obj : scene.objects()) {
    objects.push_back({{"label", obj.label}, {"position", to_json(obj.position)}});
  }
  Json doc{{"objects", std::move(objects)}};
  if (scene.description()) doc["description"] = *scene.description();
  return doc;
}

Vec3 vec3_from_json(const Json& doc, const std::string& field) {
  if (!doc.is_array() || doc.size() != 3) {
    throw FormatError(field + " must be an array of 3 numbers");
  }
  return {number_at(doc, 0, field), number_at(doc, 1, field),
          number_at(doc, 2, field)};
}

Trajectory trajectory_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("waypoints")) {
    throw FormatError("trajectory: missing field 'waypoints'");
  }
  const Json& wps = doc.at("waypoints");
  if (!wps.is_array()) throw FormatError("trajectory: 'waypoints' must be an array");
  std::vector<Waypoint> out;
  out.reserve(wps.size());
  for (std::size_t i = 0; i < wps.size(); ++i) {
    const std::string field = "waypoints[" + std::to_string(i) + "]";
    const Json& w = wps[i];
    if (!w.is_array() || w.size() != 4) {
      throw FormatError("trajectory: " + field + " must be [x, y, z, v]");
    }
    out.push_back({number_at(w, 0, field), number_at(w, 1, field),
                   number_at(w, 2, field), number_at(w, 3, field)});
  }
  try {
    return Trajectory(std::move(out));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("trajectory: ") + e.what());
  }
}

Scene scene_from_json(const Json& doc) {
  if (!doc.is_object()) throw FormatError("scene: expected an object");
  std::vector<SceneObject> objects;
  if (doc.contains("objects")) {
    const Json& objs = doc.at("objects");
    if (!objs.is_array()) throw FormatError("scene: 'objects' must be an array");
    for (std::size_t i = 0; i < objs.size(); ++i) {
      const std::string field = "objects[" + std::to_string(i) + "]";
      const Json& o = objs[i];
      if (!o.is_object() || !o.contains("label") || !o.at("label").is_string()) {
        throw FormatError("scene: " + field + ".label must be a string");
      }
      if (!o.contains("position")) {
        throw FormatError("scene: " + field + ".position is missing");
      }
      objects.push_back({o.at("label").get<std::string>(),
                         vec3_from_json(o.at("position"), field + ".position")});
    }
  }
  std::optional<std::string> description;
  if (doc.contains("description") && !doc.at("description").is_null()) {
    if (!doc.at("description").is_string()) {
      throw FormatError("scene: 'description' must be a string");
    }
    description = doc.at("description").get<std::string>();
  }
  try {
    return Scene(std::move(objects), std::move(description));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("scene: ") + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot write " + path.string());
  out << contents;
}

Json load_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

Trajectory load_trajectory_file(const std::filesystem::path& path) {
  return trajectory_from_json(load_json_file(path));
}

Scene load_scene_file(const std::filesystem::path& path) {
  return scene_from_json(load_json_file(path));
}

}  // namespace trajadapt
