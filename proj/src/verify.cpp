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

#include "trajadapt/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "trajadapt/transforms.hpp"

namespace trajadapt {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// ---- JSON helpers ------------------------------------------------------------

double num(const Json& doc, const char* field, const std::string& type) {
  if (!doc.contains(field)) {
    throw FormatError(type + ": missing field '" + field + "'");
  }
  const Json& v = doc.at(field);
  if (!v.is_number()) {
    throw FormatError(type + ": field '" + field + "' must be a number");
  }
  const double d = v.get<double>();
  if (!std::isfinite(d)) {
    throw FormatError(type + ": field '" + field + "' must be finite");
  }
  return d;
}

double num_or(const Json& doc, const char* field, const std::string& type,
              double fallback) {
  return doc.contains(field) ? num(doc, field, type) : fallback;
}

double nonneg(double v, const char* field, const std::string& type) {
  if (v < 0) throw FormatError(type + ": field '" + field + "' must be >= 0");
  return v;
}

double positive(double v, const char* field, const std::string& type) {
  if (!(v > 0)) throw FormatError(type + ": field '" + field + "' must be > 0");
  return v;
}

std::string label(const Json& doc, const std::string& type) {
  if (!doc.contains("label") || !doc.at("label").is_string() ||
      doc.at("label").get<std::string>().empty()) {
    throw FormatError(type + ": field 'label' must be a nonempty string");
  }
  return doc.at("label").get<std::string>();
}

Vec3 direction(const Json& doc, const std::string& type) {
  if (!doc.contains("dir")) throw FormatError(type + ": missing field 'dir'");
  const Vec3 d = vec3_from_json(doc.at("dir"), type + ".dir");
  if (d.norm() == 0.0) throw FormatError(type + ": 'dir' must be nonzero");
  return d;
}

// ---- evaluation helpers --------------------------------------------------------

Vec3 unit(const Vec3& d) { return (1.0 / d.norm()) * d; }

Vec3 object(const Scene& scene, const std::string& name) {
  const auto p = scene.find(name);
  if (!p) throw ConfigError("unknown label: " + name);  // pre-checked
  return *p;
}

// Speeds of the waypoints within radius of center.
std::vector<double> speeds_within(const Trajectory& t, const Vec3& c,
                                  double radius) {
  std::vector<double> out;
  for (const auto& w : t.waypoints()) {
    if (distance(w.position(), c) <= radius) out.push_back(w.v);
  }
  return out;
}

std::optional<double> mean(const std::vector<double>& v) {
  if (v.empty()) return std::nullopt;
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double mean_projection(const Trajectory& t, const Vec3& d) {
  double s = 0;
  for (const auto& w : t.waypoints()) s += w.position().dot(d);
  return s / static_cast<double>(t.size());
}

double bbox_diagonal(const Trajectory& t) {
  Vec3 lo = t.front().position();
  Vec3 hi = lo;
  for (const auto& w : t.waypoints()) {
    lo = {std::min(lo.x, w.x), std::min(lo.y, w.y), std::min(lo.z, w.z)};
    hi = {std::max(hi.x, w.x), std::max(hi.y, w.y), std::max(hi.z, w.z)};
  }
  return distance(lo, hi);
}

std::optional<std::string> label_of(const CheckSpec& spec) {
  return std::visit(
      [](const auto& c) -> std::optional<std::string> {
        if constexpr (requires { c.label; }) {
          return c.label;
        } else {
          return std::nullopt;
        }
      },
      spec);
}

}  // namespace

std::string check_type_name(const CheckSpec& spec) {
  return std::visit(
      Overloaded{
          [](const check::StartFixed&) { return "start_fixed"; },
          [](const check::GoalFixed&) { return "goal_fixed"; },
          [](const check::GoalDisplaced&) { return "goal_displaced"; },
          [](const check::DirectionalShift&) { return "directional_shift"; },
          [](const check::MinClearance&) { return "min_clearance"; },
          [](const check::MaxSpeedWithin&) { return "max_speed_within"; },
          [](const check::MinSpeedWithin&) { return "min_speed_within"; },
          [](const check::SpeedReducedWithin&) {
            return "speed_reduced_within";
          },
          [](const check::SpeedIncreasedWithin&) {
            return "speed_increased_within";
          },
          [](const check::StopsAtEnd&) { return "stops_at_end"; },
          [](const check::TruncatedNear&) { return "truncated_near"; },
          [](const check::Smoothness&) { return "smoothness"; },
          [](const check::ShapeSimilarity&) { return "shape_similarity"; },
      },
      spec);
}

CheckSpec check_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("type") || !doc.at("type").is_string()) {
    throw FormatError("check: missing string field 'type'");
  }
  const std::string t = doc.at("type").get<std::string>();
  if (t == "start_fixed") {
    return check::StartFixed{nonneg(num_or(doc, "tol", t, 1e-6), "tol", t)};
  }
  if (t == "goal_fixed") {
    return check::GoalFixed{nonneg(num_or(doc, "tol", t, 1e-6), "tol", t)};
  }
  if (t == "goal_displaced") {
    return check::GoalDisplaced{direction(doc, t), num(doc, "amount", t),
                                nonneg(num(doc, "tol", t), "tol", t)};
  }
  if (t == "directional_shift") {
    return check::DirectionalShift{direction(doc, t), num(doc, "min_amount", t)};
  }
  if (t == "min_clearance") {
    return check::MinClearance{label(doc, t), nonneg(num(doc, "d", t), "d", t),
                               nonneg(num_or(doc, "tol", t, 0), "tol", t)};
  }
  if (t == "max_speed_within") {
    return check::MaxSpeedWithin{label(doc, t),
                                 positive(num(doc, "radius", t), "radius", t),
                                 num(doc, "vmax", t)};
  }
  if (t == "min_speed_within") {
    return check::MinSpeedWithin{label(doc, t),
                                 positive(num(doc, "radius", t), "radius", t),
                                 num(doc, "vmin", t)};
  }
  if (t == "speed_reduced_within") {
    return check::SpeedReducedWithin{
        label(doc, t), positive(num(doc, "radius", t), "radius", t)};
  }
  if (t == "speed_increased_within") {
    return check::SpeedIncreasedWithin{
        label(doc, t), positive(num(doc, "radius", t), "radius", t)};
  }
  if (t == "stops_at_end") {
    return check::StopsAtEnd{nonneg(num_or(doc, "vtol", t, 1e-9), "vtol", t)};
  }
  if (t == "truncated_near") {
    return check::TruncatedNear{label(doc, t),
                                nonneg(num_or(doc, "tol", t, 1e-6), "tol", t)};
  }
  if (t == "smoothness") {
    return check::Smoothness{
        nonneg(num(doc, "max_roughness", t), "max_roughness", t)};
  }
  if (t == "shape_similarity") {
    return check::ShapeSimilarity{nonneg(num(doc, "eps_rel", t), "eps_rel", t)};
  }
  throw FormatError("check: unknown type '" + t + "'");
}

Json to_json(const CheckSpec& spec) {
  Json j = {{"type", check_type_name(spec)}};
  std::visit(
      Overloaded{
          [&](const check::StartFixed& c) { j["tol"] = c.tol; },
          [&](const check::GoalFixed& c) { j["tol"] = c.tol; },
          [&](const check::GoalDisplaced& c) {
            j["dir"] = to_json(c.dir);
            j["amount"] = c.amount;
            j["tol"] = c.tol;
          },
          [&](const check::DirectionalShift& c) {
            j["dir"] = to_json(c.dir);
            j["min_amount"] = c.min_amount;
          },
          [&](const check::MinClearance& c) {
            j["label"] = c.label;
            j["d"] = c.d;
            j["tol"] = c.tol;
          },
          [&](const check::MaxSpeedWithin& c) {
            j["label"] = c.label;
            j["radius"] = c.radius;
            j["vmax"] = c.vmax;
          },
          [&](const check::MinSpeedWithin& c) {
            j["label"] = c.label;
            j["radius"] = c.radius;
            j["vmin"] = c.vmin;
          },
          [&](const check::SpeedReducedWithin& c) {
            j["label"] = c.label;
            j["radius"] = c.radius;
          },
          [&](const check::SpeedIncreasedWithin& c) {
            j["label"] = c.label;
            j["radius"] = c.radius;
          },
          [&](const check::StopsAtEnd& c) { j["vtol"] = c.vtol; },
          [&](const check::TruncatedNear& c) {
            j["label"] = c.label;
            j["tol"] = c.tol;
          },
          [&](const check::Smoothness& c) {
            j["max_roughness"] = c.max_roughness;
          },
          [&](const check::ShapeSimilarity& c) { j["eps_rel"] = c.eps_rel; },
      },
      spec);
  return j;
}

bool Report::pass() const {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

Json to_json(const Report& report) {
  Json checks = Json::array();
  for (const auto& r : report.results) {
    checks.push_back({{"spec", to_json(r.spec)},
                      {"pass", r.pass},
                      {"measured", std::isfinite(r.measured)
                                       ? Json(r.measured)
                                       : Json(nullptr)}});
  }
  return {{"pass", report.pass()}, {"checks", std::move(checks)}};
}

Report evaluate(const Trajectory& original, const Trajectory& adapted,
                const Scene& scene, std::span<const CheckSpec> checks) {
  std::string missing;
  for (const auto& c : checks) {
    const auto l = label_of(c);
    if (l && !scene.find(*l)) {
      if (!missing.empty()) missing += ", ";
      missing += *l;
    }
  }
  if (!missing.empty()) throw ConfigError("unknown label(s): " + missing);

  // Resampled copies are built lazily; most checks do not need them.
  std::optional<Trajectory> orig_k;
  std::optional<Trajectory> adapt_k;
  auto resampled = [&]() {
    if (!orig_k) {
      orig_k = resample(original, kVerifyResampleCount);
      adapt_k = resample(adapted, kVerifyResampleCount);
    }
  };

  Report report;
  report.results.reserve(checks.size());
  for (const auto& spec : checks) {
    CheckResult r{spec, false, kNaN};
    std::visit(
        Overloaded{
            [&](const check::StartFixed& c) {
              r.measured =
                  distance(adapted.front().position(), original.front().position());
              r.pass = r.measured <= c.tol;
            },
            [&](const check::GoalFixed& c) {
              r.measured =
                  distance(adapted.back().position(), original.back().position());
              r.pass = r.measured <= c.tol;
            },
            [&](const check::GoalDisplaced& c) {
              const Vec3 target =
                  original.back().position() + c.amount * unit(c.dir);
              r.measured = distance(adapted.back().position(), target);
              r.pass = r.measured <= c.tol;
            },
            [&](const check::DirectionalShift& c) {
              resampled();
              const Vec3 d = unit(c.dir);
              r.measured = mean_projection(*adapt_k, d) - mean_projection(*orig_k, d);
              r.pass = r.measured >= c.min_amount;
            },
            [&](const check::MinClearance& c) {
              r.measured = nearest_index(adapted, object(scene, c.label)).distance;
              r.pass = r.measured >= c.d - c.tol;
            },
            [&](const check::MaxSpeedWithin& c) {
              const auto v =
                  speeds_within(adapted, object(scene, c.label), c.radius);
              if (v.empty()) return;
              r.measured = *std::max_element(v.begin(), v.end());
              r.pass = r.measured <= c.vmax;
            },
            [&](const check::MinSpeedWithin& c) {
              const auto v =
                  speeds_within(adapted, object(scene, c.label), c.radius);
              if (v.empty()) return;
              r.measured = *std::min_element(v.begin(), v.end());
              r.pass = r.measured >= c.vmin;
            },
            [&](const check::SpeedReducedWithin& c) {
              const Vec3 o = object(scene, c.label);
              const auto a = mean(speeds_within(adapted, o, c.radius));
              const auto b = mean(speeds_within(original, o, c.radius));
              if (!a || !b) return;
              r.measured = *a - *b;
              r.pass = *a < *b;
            },
            [&](const check::SpeedIncreasedWithin& c) {
              const Vec3 o = object(scene, c.label);
              const auto a = mean(speeds_within(adapted, o, c.radius));
              const auto b = mean(speeds_within(original, o, c.radius));
              if (!a || !b) return;
              r.measured = *a - *b;
              r.pass = *a > *b;
            },
            [&](const check::StopsAtEnd& c) {
              r.measured = adapted.back().v;
              r.pass = r.measured <= c.vtol;
            },
            [&](const check::TruncatedNear& c) {
              const Vec3 o = object(scene, c.label);
              r.measured = distance(adapted.back().position(), o);
              r.pass = r.measured <= nearest_index(original, o).distance + c.tol;
            },
            [&](const check::Smoothness& c) {
              resampled();
              r.measured = roughness(*adapt_k);
              r.pass = r.measured <= c.max_roughness;
            },
            [&](const check::ShapeSimilarity& c) {
              resampled();
              const double f = discrete_frechet(*orig_k, *adapt_k);
              const double diag = bbox_diagonal(original);
              r.measured = diag > 0 ? f / diag : f;
              r.pass = f <= c.eps_rel * diag;
            },
        },
        spec);
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace trajadapt
