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

#include "trajadapt/prompt.hpp"

#include <algorithm>
#include <cctype>

#include "trajadapt/json_io.hpp"
#include "trajadapt/script/builtins.hpp"

namespace trajadapt {

namespace {

constexpr std::string_view kPreamble =
    "You are an intelligent assistant that modifies robotic trajectories as "
    "per instruction of a user. Your task is to generate a JSON object with "
    "the following contents:\n"
    "1) A high-level plan on what points need to be changed based on the "
    "instruction. Think step by step.\n"
    "2) AdaptScript code that changes the waypoints in accordance with the "
    "high-level plan. AdaptScript is the restricted Python-like language "
    "described under LANGUAGE SUBSET.\n";

constexpr std::string_view kFunctions =
    "FUNCTIONS AVAILABLE:\n"
    "detect_objects(object_name): returns [x, y, z] coordinates if the object "
    "is present, else returns None\n"
    "get_trajectory(): returns the trajectory as a list of [x, y, z, "
    "velocity]\n";

constexpr std::string_view kCoordinateSystem =
    "The positive X axis is left, Negative X axis is right\n"
    "The positive Y axis is front, Negative Y axis is back\n"
    "The positive Z axis is up, Negative Z axis is down.\n";

constexpr std::string_view kRules =
    "RULES:\n"
    "1. Use only the given functions for getting required data, do not "
    "implement dummy functions.\n"
    "2. Shift the points gradually if needed to ensure a smooth trajectory.\n"
    "3. Deduce from instruction if the goal point should be changed.\n"
    "4. Waypoints can be added or removed. Ensure that waypoints do not "
    "violate any constraints.\n"
    "5. Intermediate waypoints shall be modified to ensure a smooth "
    "trajectory.\n"
    "6. Store the new trajectory in a variable called modified_trajectory\n"
    "7. If required, the changes in the velocity should be with respect to "
    "the original velocity, and velocity changes shall be smooth.\n";

constexpr std::string_view kGrammar =
    "Write the code in AdaptScript, an indentation-based subset of Python "
    "(4 spaces per level, no tabs):\n"
    "- Statements: assignment (x = expr, x[i] = expr, x[i][j] = expr), "
    "for loops over range(...) only, if/elif/else, and expression "
    "statements such as calls.\n"
    "- Expressions: numbers, strings, True/False/None, list literals [a, b], "
    "indexing x[i] (negative indices count from the end), slices x[i:j], "
    "arithmetic + - * / % **, comparisons < <= > >= == != (no chaining), "
    "and/or/not, calls to the builtin functions below, list.append(x) and "
    "list.extend(xs).\n"
    "- Not available: def, while, import, lambda, classes, dictionaries, "
    "tuples, comprehensions, break/continue, 'is', 'in' outside a for header, "
    "keyword arguments, augmented assignment (+=), and any attribute access "
    "other than .append/.extend. Test for a missing object with == None.\n"
    "- All numbers are floating point; list indices must be whole numbers.\n"
    "- Lists are shared by reference as in Python; get_trajectory() returns a "
    "fresh copy on every call.\n";

constexpr std::string_view kOutputStructure =
    "OUTPUT STRUCTURE:\n"
    "{\n"
    "\"high_level_plan\": \"Provide the details here\",\n"
    "\"code\": \"Generate the AdaptScript code here as a single string\"\n"
    "}\n"
    "\n"
    "The functions detect_objects() and get_trajectory() and the other "
    "builtin functions are predefined and should NOT be implemented. Just "
    "use these functions as they are. The code should focus on using these "
    "functions and the logic around them, without providing any dummy "
    "implementation for them.\n";

constexpr std::string_view kExamples =
    "IN-CONTEXT EXAMPLES OF HIGH-LEVEL PLANS:\n"
    "EXAMPLE 1:\n"
    "Instruction: Go left\n"
    "High-level plan:\n"
    "1) Shift the goal position left.\n"
    "2) Keep the start position the same\n"
    "3) modify the points in the middle to ensure a gradual and smooth change "
    "in the trajectory preserving the shape of the trajectory.\n"
    "\n"
    "EXAMPLE 2:\n"
    "Instruction: Walk further away from the box/ walk closer to the box\n"
    "High-level plan:\n"
    "1) Keep the goal position the same\n"
    "2) Keep the starting position the same.\n"
    "3) Identify the location of the box. Iterate over all the intermediate "
    "points increasing/decreasing their distance from the box.\n"
    "4) Ensure that the shape of the trajectory is preserved. Smoothen the "
    "trajectory to remove abrupt changes\n";

std::string environment_section(const PromptRequest& req) {
  if (req.overrides.environment) return *req.overrides.environment;
  if (req.scene.description() && !req.scene.description()->empty()) {
    return *req.scene.description();
  }
  std::string out;
  for (const auto& obj : req.scene.objects()) {
    out += obj.label + " at [" + format_number(obj.position.x) + ", " +
           format_number(obj.position.y) + ", " +
           format_number(obj.position.z) + "]\n";
  }
  return out;
}

void ensure_newline(std::string& s) {
  if (!s.empty() && s.back() != '\n') s += '\n';
}

}  // namespace

std::string_view default_coordinate_system() { return kCoordinateSystem; }

std::string language_subset_text() {
  std::string out = "LANGUAGE SUBSET:\n";
  out += kGrammar;
  out += "BUILTIN FUNCTIONS:\n";
  for (const auto& b : script::builtin_table()) {
    out += "- ";
    out += b.signature;
    out += ": ";
    out += b.summary;
    out += '\n';
  }
  return out;
}

std::string build_prompt(const PromptRequest& req) {
  if (req.instruction.empty()) {
    throw std::invalid_argument("instruction must be nonempty");
  }
  std::string out;
  out += kPreamble;
  out += '\n';
  out += kFunctions;
  out += '\n';
  out += "COORDINATE SYSTEM:\n";
  std::string coords = req.overrides.coordinate_system
                           ? *req.overrides.coordinate_system
                           : std::string(kCoordinateSystem);
  ensure_newline(coords);
  out += coords;
  out += '\n';
  std::string env = environment_section(req);
  if (!env.empty()) {
    ensure_newline(env);
    out += "ENVIRONMENT DESCRIPTION:\n";
    out += env;
    out += '\n';
  }
  out += kRules;
  out += '\n';
  out += language_subset_text();
  out += '\n';
  out += kOutputStructure;
  out += '\n';
  out += kExamples;
  out += '\n';
  if (!req.feedback_history.empty()) {
    out += "FEEDBACK:\n";
    out +=
        "Earlier proposals for this instruction were reviewed. Revise the "
        "plan and the code so that every item below is addressed together "
        "with the original instruction.\n";
    for (std::size_t i = 0; i < req.feedback_history.size(); ++i) {
      out += std::to_string(i + 1) + ". Original instruction: \"" +
             req.instruction + "\"\n   Feedback: " + req.feedback_history[i] +
             "\n";
    }
    out += '\n';
  }
  out +=
      "Return valid AdaptScript code and a high-level plan according to the "
      "following instruction:\n";
  out += req.instruction;
  return out;
}

// ---- response parsing --------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// Drops a ```lang ... ``` wrapper around the whole text.
std::string_view strip_fences(std::string_view s) {
  s = trim(s);
  if (s.substr(0, 3) != "```") return s;
  const auto eol = s.find('\n');
  if (eol == std::string_view::npos) return s;
  s.remove_prefix(eol + 1);
  s = trim(s);
  if (s.size() >= 3 && s.substr(s.size() - 3) == "```") {
    s.remove_suffix(3);
  }
  return trim(s);
}

bool starts_with(std::string_view s, std::size_t i, std::string_view p) {
  return s.substr(i, p.size()) == p;
}

// Finds the first balanced {...}, skipping braces inside '...', "..." and
// triple-quoted strings.
std::optional<std::string_view> first_object(std::string_view s) {
  const auto open = s.find('{');
  if (open == std::string_view::npos) return std::nullopt;
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '"' || c == '\'') {
      const bool triple = starts_with(s, i, std::string(3, c));
      const std::string closer = triple ? std::string(3, c) : std::string(1, c);
      std::size_t j = i + closer.size();
      while (j < s.size() && !starts_with(s, j, closer)) {
        j += (s[j] == '\\') ? 2 : 1;
      }
      if (j >= s.size()) return std::nullopt;
      i = j + closer.size() - 1;
    } else if (c == '{') {
      ++depth;
    } else if (c == '}') {
      if (--depth == 0) return s.substr(open, i - open + 1);
    }
  }
  return std::nullopt;
}

void append_escaped(std::string& out, char c) {
  switch (c) {
    case '"': out += "\\\""; break;
    case '\n': out += "\\n"; break;
    case '\r': out += "\\r"; break;
    case '\t': out += "\\t"; break;
    default: out += c;
  }
}

// Rewrites the loose dialect (single or triple quotes, raw line breaks in
// strings) into strict JSON. Strict JSON passes through unchanged.
std::string normalize_loose_json(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c != '"' && c != '\'') {
      out += c;
      continue;
    }
    const bool triple = starts_with(s, i, std::string(3, c));
    const std::string closer = triple ? std::string(3, c) : std::string(1, c);
    std::size_t j = i + closer.size();
    out += '"';
    while (j < s.size() && !starts_with(s, j, closer)) {
      if (s[j] == '\\' && j + 1 < s.size()) {
        const char e = s[j + 1];
        if (e == '\'') {
          out += '\'';
        } else if (e == '"' || e == '\\' || e == '/' || e == 'b' || e == 'f' ||
                   e == 'n' || e == 'r' || e == 't' || e == 'u') {
          out += '\\';
          out += e;
        } else {
          out += "\\\\";
          out += e;
        }
        j += 2;
        continue;
      }
      append_escaped(out, s[j]);
      ++j;
    }
    out += '"';
    i = j + closer.size() - 1;
  }
  return out;
}

std::string plan_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& item : v) {
      if (!item.is_string()) return {};
      if (!out.empty()) out += '\n';
      out += item.get<std::string>();
    }
    return out;
  }
  return {};
}

}  // namespace

ProposalText parse_response(std::string_view text) {
  const std::string raw(text);
  const std::string_view body = strip_fences(text);
  const auto object = first_object(body);
  if (!object) {
    throw ResponseParseError("response contains no {...} object", raw);
  }
  Json doc;
  try {
    doc = Json::parse(*object);
  } catch (const Json::parse_error&) {
    try {
      doc = Json::parse(normalize_loose_json(*object));
    } catch (const Json::parse_error& e) {
      throw ResponseParseError(
          std::string("response object is not valid JSON: ") + e.what(), raw);
    }
  }
  if (!doc.is_object()) {
    throw ResponseParseError("response is not an object", raw);
  }
  if (!doc.contains("high_level_plan")) {
    throw ResponseParseError("response is missing key 'high_level_plan'", raw);
  }
  const Json* code = nullptr;
  for (const char* key : {"code", "python_code", "Python code"}) {
    if (doc.contains(key)) {
      code = &doc.at(key);
      break;
    }
  }
  if (code == nullptr) {
    throw ResponseParseError("response is missing key 'code'", raw);
  }
  if (!code->is_string()) {
    throw ResponseParseError("'code' must be a string", raw);
  }
  ProposalText out;
  out.high_level_plan = std::string(trim(plan_text(doc.at("high_level_plan"))));
  out.code = std::string(strip_fences(code->get<std::string>()));
  out.raw = raw;
  if (out.high_level_plan.empty()) {
    throw ResponseParseError("'high_level_plan' is empty", raw);
  }
  if (out.code.empty()) throw ResponseParseError("'code' is empty", raw);
  return out;
}

}  // namespace trajadapt
