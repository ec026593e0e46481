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

#include "trajadapt/dataset.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <thread>

#include "trajadapt/transforms.hpp"

namespace trajadapt {

// ---- trajectory generation ---------------------------------------------------

namespace {

// Portable standard normal: std::normal_distribution is implementation
// defined, so Box-Muller over the (portable) 64-bit Mersenne Twister.
class Gaussian {
 public:
  explicit Gaussian(std::uint64_t seed) : rng_(seed) {}
  double operator()() {
    if (spare_) {
      const double s = *spare_;
      spare_.reset();
      return s;
    }
    double u1 = 0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    return r * std::cos(a);
  }

 private:
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  std::mt19937_64 rng_;
  std::optional<double> spare_;
};

}  // namespace

Vec3 lateral_direction(const Vec3& start, const Vec3& goal) {
  const Vec3 chord = goal - start;
  const double len = chord.norm();
  if (len == 0.0) return {0, 1, 0};
  const Vec3 c = (1.0 / len) * chord;
  for (const Vec3& axis : {Vec3{0, 1, 0}, Vec3{1, 0, 0}}) {
    const Vec3 perp = axis - axis.dot(c) * c;
    if (perp.norm() > 1e-9) return (1.0 / perp.norm()) * perp;
  }
  return {0, 0, 1};
}

Trajectory generate_trajectory(const TrajSpec& spec) {
  if (spec.n < 2) throw ConfigError("traj_spec: n must be >= 2");
  if (!spec.start.finite() || !spec.goal.finite()) {
    throw ConfigError("traj_spec: start and goal must be finite");
  }
  if (!(spec.noise_std >= 0) || !std::isfinite(spec.noise_std)) {
    throw ConfigError("traj_spec: noise_std must be >= 0");
  }
  if (!(spec.v0 >= 0) || !std::isfinite(spec.v0)) {
    throw ConfigError("traj_spec: v0 must be >= 0");
  }
  if (!std::isfinite(spec.sag) || !std::isfinite(spec.amplitude) ||
      !std::isfinite(spec.periods)) {
    throw ConfigError("traj_spec: shape parameters must be finite");
  }
  const Vec3 lateral = lateral_direction(spec.start, spec.goal);
  Gaussian noise(spec.seed);
  std::vector<Waypoint> wps(static_cast<std::size_t>(spec.n));
  for (int i = 0; i < spec.n; ++i) {
    const double t = static_cast<double>(i) / (spec.n - 1);
    Vec3 p = spec.start + t * (spec.goal - spec.start);
    switch (spec.kind) {
      case TrajKind::kLine:
        break;
      case TrajKind::kArc:
        p = p + (4.0 * t * (1.0 - t) * spec.sag) * lateral;
        break;
      case TrajKind::kZigzag:
        p = p + (spec.amplitude *
                 std::sin(2.0 * std::numbers::pi * spec.periods * t)) *
                    lateral;
        break;
    }
    if (i == 0) p = spec.start;
    if (i == spec.n - 1) p = spec.goal;
    if (i > 0 && i < spec.n - 1 && spec.noise_std > 0) {
      const double nx = noise();
      const double ny = noise();
      const double nz = noise();
      p = p + spec.noise_std * Vec3{nx, ny, nz};
    }
    wps[static_cast<std::size_t>(i)] = {p.x, p.y, p.z, spec.v0};
  }
  return Trajectory(std::move(wps));
}

namespace {

const Json& field(const Json& doc, const char* name, const std::string& where) {
  if (!doc.contains(name)) {
    throw FormatError(where + ": missing field '" + name + "'");
  }
  return doc.at(name);
}

double number(const Json& doc, const char* name, const std::string& where) {
  const Json& v = field(doc, name, where);
  if (!v.is_number()) {
    throw FormatError(where + ": field '" + name + "' must be a number");
  }
  return v.get<double>();
}

double number_or(const Json& doc, const char* name, const std::string& where,
                 double fallback) {
  return doc.contains(name) ? number(doc, name, where) : fallback;
}

int integer(const Json& doc, const char* name, const std::string& where) {
  const Json& v = field(doc, name, where);
  if (!v.is_number_integer()) {
    throw FormatError(where + ": field '" + name + "' must be an integer");
  }
  return v.get<int>();
}

std::string string_field(const Json& doc, const char* name,
                         const std::string& where) {
  const Json& v = field(doc, name, where);
  if (!v.is_string() || v.get<std::string>().empty()) {
    throw FormatError(where + ": field '" + name +
                      "' must be a nonempty string");
  }
  return v.get<std::string>();
}

}  // namespace

TrajSpec traj_spec_from_json(const Json& doc) {
  const std::string w = "traj_spec";
  if (!doc.is_object()) throw FormatError(w + " must be an object");
  TrajSpec s;
  const std::string kind = string_field(doc, "kind", w);
  if (kind == "line") {
    s.kind = TrajKind::kLine;
  } else if (kind == "arc") {
    s.kind = TrajKind::kArc;
    s.sag = number(doc, "sag", w);
  } else if (kind == "zigzag") {
    s.kind = TrajKind::kZigzag;
    s.amplitude = number(doc, "amplitude", w);
    s.periods = number(doc, "periods", w);
  } else {
    throw FormatError(w + ": field 'kind' must be line, arc or zigzag");
  }
  s.start = vec3_from_json(field(doc, "start", w), w + ".start");
  s.goal = vec3_from_json(field(doc, "goal", w), w + ".goal");
  s.n = integer(doc, "n", w);
  s.noise_std = number_or(doc, "noise_std", w, 0.0);
  if (doc.contains("seed")) {
    const Json& seed = doc.at("seed");
    if (!seed.is_number_unsigned() && !seed.is_number_integer()) {
      throw FormatError(w + ": field 'seed' must be an integer");
    }
    s.seed = seed.get<std::uint64_t>();
  }
  s.v0 = number_or(doc, "v0", w, 1.0);
  return s;
}

Json to_json(const TrajSpec& s) {
  Json j;
  switch (s.kind) {
    case TrajKind::kLine:
      j["kind"] = "line";
      break;
    case TrajKind::kArc:
      j["kind"] = "arc";
      j["sag"] = s.sag;
      break;
    case TrajKind::kZigzag:
      j["kind"] = "zigzag";
      j["amplitude"] = s.amplitude;
      j["periods"] = s.periods;
      break;
  }
  j["start"] = to_json(s.start);
  j["goal"] = to_json(s.goal);
  j["n"] = s.n;
  j["noise_std"] = s.noise_std;
  j["seed"] = s.seed;
  j["v0"] = s.v0;
  return j;
}

// ---- corpus ------------------------------------------------------------------

std::string_view to_string(Category c) {
  switch (c) {
    case Category::kCartesian: return "cartesian";
    case Category::kSpeed: return "speed";
    case Category::kObjectRelative: return "object_relative";
    case Category::kNumeric: return "numeric";
    case Category::kCompound: return "compound";
  }
  return "?";
}

std::optional<Category> parse_category(std::string_view name) {
  for (Category c : kAllCategories) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

Sample sample_from_json(const Json& doc) {
  const std::string w = "sample";
  if (!doc.is_object()) throw FormatError("record must be an object");
  Sample s;
  s.id = string_field(doc, "id", w);
  s.instruction = string_field(doc, "instruction", w);
  try {
    s.scene = scene_from_json(field(doc, "scene", w));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("field 'scene': ") + e.what());
  }
  s.traj_spec = traj_spec_from_json(field(doc, "traj_spec", w));
  const Json& checks = field(doc, "checks", w);
  if (!checks.is_array() || checks.empty()) {
    throw FormatError("field 'checks' must be a nonempty array");
  }
  for (std::size_t i = 0; i < checks.size(); ++i) {
    try {
      s.checks.push_back(check_from_json(checks[i]));
    } catch (const FormatError& e) {
      throw FormatError("field 'checks[" + std::to_string(i) + "]': " +
                        e.what());
    }
  }
  if (doc.contains("fixture_id") && !doc.at("fixture_id").is_null()) {
    s.fixture_id = string_field(doc, "fixture_id", w);
  }
  const auto cat = parse_category(string_field(doc, "category", w));
  if (!cat) throw FormatError("field 'category' has an unknown value");
  s.category = *cat;
  if (doc.contains("note")) s.note = string_field(doc, "note", w);
  return s;
}

Json to_json(const Sample& s) {
  Json j;
  j["id"] = s.id;
  j["instruction"] = s.instruction;
  j["category"] = to_string(s.category);
  j["scene"] = to_json(s.scene);
  j["traj_spec"] = to_json(s.traj_spec);
  Json checks = Json::array();
  for (const auto& c : s.checks) checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  if (s.fixture_id) j["fixture_id"] = *s.fixture_id;
  if (s.note) j["note"] = *s.note;
  return j;
}

std::vector<Sample> parse_corpus(std::string_view text) {
  std::vector<Sample> out;
  std::set<std::string> ids;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    Json doc;
    try {
      doc = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw CorpusError(line_no, std::string("invalid JSON: ") + e.what());
    }
    Sample s;
    try {
      s = sample_from_json(doc);
      generate_trajectory(s.traj_spec);
    } catch (const std::exception& e) {
      throw CorpusError(line_no, e.what());
    }
    if (!ids.insert(s.id).second) {
      throw CorpusError(line_no, "duplicate id '" + s.id + "'");
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Sample> load_corpus(const std::filesystem::path& path) {
  return parse_corpus(read_text_file(path));
}

std::string dump_corpus(std::span<const Sample> samples) {
  std::string out;
  for (const auto& s : samples) {
    out += to_json(s).dump();
    out += '\n';
  }
  return out;
}

// ---- reference transforms ----------------------------------------------------

namespace {

Vec3 center_of(const Json& step, const Scene& scene, const std::string& w) {
  if (step.contains("label")) {
    const std::string label = string_field(step, "label", w);
    const auto p = scene.find(label);
    if (!p) throw ConfigError(w + ": unknown label '" + label + "'");
    return *p;
  }
  return vec3_from_json(field(step, "center", w), w + ".center");
}

bool flag(const Json& step, const char* name, const std::string& w) {
  const Json& v = field(step, name, w);
  if (!v.is_boolean()) {
    throw FormatError(w + ": field '" + name + "' must be a boolean");
  }
  return v.get<bool>();
}

Trajectory apply_step(const Json& step, const Trajectory& t,
                      const Scene& scene, const std::string& w) {
  const std::string op = string_field(step, "op", w);
  if (op == "translate_blend") {
    const auto mode =
        parse_blend_mode(step.contains("mode") ? string_field(step, "mode", w)
                                               : std::string("uniform"));
    if (!mode) throw ConfigError(w + ": unknown blend mode");
    return translate_blend(
        t, vec3_from_json(field(step, "offset", w), w + ".offset"), *mode);
  }
  if (op == "radial_rescale") {
    return radial_rescale(t, center_of(step, scene, w),
                          number(step, "factor", w),
                          flag(step, "preserve_endpoints", w));
  }
  if (op == "enforce_min_distance") {
    return enforce_min_distance(t, center_of(step, scene, w),
                                number(step, "d", w));
  }
  if (op == "scale_speed_near") {
    return scale_speed_near(t, center_of(step, scene, w),
                            number(step, "radius", w),
                            number(step, "factor", w), flag(step, "absolute", w));
  }
  if (op == "scale_speed") {
    const double f = number(step, "factor", w);
    if (!(f >= 0)) throw ConfigError(w + ": factor must be >= 0");
    std::vector<Waypoint> wps(t.waypoints().begin(), t.waypoints().end());
    for (auto& p : wps) p.v *= f;
    return Trajectory(std::move(wps));
  }
  if (op == "truncate_at_nearest") {
    return truncate_at_nearest(t, center_of(step, scene, w),
                               integer(step, "ramp", w));
  }
  if (op == "append_spiral") {
    return append_spiral(t, number(step, "max_radius", w),
                         number(step, "turns", w), integer(step, "n_points", w));
  }
  if (op == "extend") {
    // Continues past the goal along the final segment's heading.
    const double dist = number(step, "distance", w);
    const int n = integer(step, "n", w);
    if (!(dist > 0) || n < 1) throw ConfigError(w + ": bad extend parameters");
    const Waypoint last = t.back();
    const Vec3 heading = last.position() - t[t.size() - 2].position();
    if (heading.norm() == 0) throw ConfigError(w + ": zero-length last segment");
    const Vec3 u = (1.0 / heading.norm()) * heading;
    std::vector<Waypoint> wps(t.waypoints().begin(), t.waypoints().end());
    for (int j = 1; j <= n; ++j) {
      Waypoint p = last;
      p.set_position(last.position() + (dist * j / n) * u);
      wps.push_back(p);
    }
    return Trajectory(std::move(wps));
  }
  if (op == "smooth") return smooth(t, integer(step, "window", w));
  if (op == "resample") return resample(t, integer(step, "n", w));
  throw ConfigError(w + ": unknown op '" + op + "'");
}

}  // namespace

Trajectory apply_transform_chain(const Json& chain, const Trajectory& traj,
                                 const Scene& scene) {
  if (!chain.is_array()) throw ConfigError("transform chain must be an array");
  Trajectory t = traj;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const std::string w = "step " + std::to_string(i);
    try {
      t = apply_step(chain[i], t, scene, w);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
  }
  return t;
}

// ---- batch evaluation --------------------------------------------------------

namespace {

SampleResult eval_one(const Sample& sample,
                      const std::shared_ptr<const LlmClient>& client,
                      const SessionConfig& base) {
  SampleResult r;
  r.id = sample.id;
  r.category = sample.category;
  r.checks_total = static_cast<int>(sample.checks.size());
  try {
    SessionConfig cfg = base;
    cfg.fixture_id = sample.fixture_key();
    Session session = Session::start(sample.id, sample.instruction,
                                     sample.scene,
                                     generate_trajectory(sample.traj_spec),
                                     client, cfg);
    if (session.state() == SessionState::kProposed) {
      session.submit_verdict(Verdict::approve());
    }
    r.state = session.state();
    r.iterations = static_cast<int>(session.iterations().size());
    if (session.state() != SessionState::kApproved) {
      const auto err = session.latest_error();
      r.error = err ? err->kind + ": " + err->message
                    : std::string("session did not reach a proposal");
      return r;
    }
    Report rep = evaluate(session.original(), *session.final_trajectory(),
                          sample.scene, sample.checks);
    r.checks_passed = static_cast<int>(
        std::count_if(rep.results.begin(), rep.results.end(),
                      [](const CheckResult& c) { return c.pass; }));
    r.passed = rep.pass();
    r.report = std::move(rep);
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

}  // namespace

EvalReport run_eval(std::span<const Sample> corpus,
                    std::shared_ptr<const LlmClient> client,
                    const EvalOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  EvalReport report;
  report.samples.resize(corpus.size());

  int jobs = options.jobs > 0
                 ? options.jobs
                 : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(1, corpus.size())));

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      report.samples[i] = eval_one(corpus[i], client, options.session);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  for (Category c : kAllCategories) {
    CategoryTally tally;
    for (const auto& s : report.samples) {
      if (s.category != c) continue;
      ++tally.total;
      if (s.passed) ++tally.passed;
    }
    if (tally.total > 0) report.categories.emplace_back(c, tally);
    report.overall.total += tally.total;
    report.overall.passed += tally.passed;
  }
  report.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

EvalReport run_eval(std::span<const Sample> corpus, const LlmConfig& llm,
                    const EvalOptions& options) {
  return run_eval(corpus, make_client(llm), options);
}

Json to_json(const EvalReport& report, bool include_timing) {
  Json samples = Json::array();
  for (const auto& s : report.samples) {
    Json j = {{"id", s.id},
              {"category", to_string(s.category)},
              {"passed", s.passed},
              {"checks_passed", s.checks_passed},
              {"checks_total", s.checks_total},
              {"state", to_string(s.state)},
              {"iterations", s.iterations}};
    j["error"] = s.error ? Json(*s.error) : Json(nullptr);
    if (s.report) j["checks"] = to_json(*s.report)["checks"];
    samples.push_back(std::move(j));
  }
  Json cats = Json::object();
  for (const auto& [c, t] : report.categories) {
    cats[std::string(to_string(c))] = {
        {"passed", t.passed}, {"total", t.total}, {"rate", t.rate()}};
  }
  Json out = {{"samples", std::move(samples)},
              {"categories", std::move(cats)},
              {"overall",
               {{"passed", report.overall.passed},
                {"total", report.overall.total},
                {"rate", report.overall.rate()}}}};
  if (include_timing) out["wall_clock_seconds"] = report.wall_clock_seconds;
  return out;
}

}  // namespace trajadapt
