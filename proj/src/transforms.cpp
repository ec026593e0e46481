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

#include "trajadapt/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace trajadapt {

namespace {

constexpr int kClearanceRounds = 5;

std::vector<Waypoint> copy_waypoints(const Trajectory& traj) {
  return {traj.waypoints().begin(), traj.waypoints().end()};
}

double blend_weight(BlendMode mode, double s) {
  switch (mode) {
    case BlendMode::kUniform:
      return 1.0;
    case BlendMode::kFixStart:
      return s;
    case BlendMode::kFixGoal:
      return 1.0 - s;
    case BlendMode::kFixBoth:
      return 4.0 * s * (1.0 - s);
  }
  return 1.0;
}

void require_finite(const Vec3& v, const char* what) {
  if (!v.finite()) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

// Moves every waypoint closer than `min_distance` onto the sphere. Returns
// true if anything moved.
bool project_outside(std::vector<Waypoint>& wps, const Vec3& center,
                     double min_distance) {
  bool moved = false;
  for (auto& w : wps) {
    const Vec3 rel = w.position() - center;
    const double dist = rel.norm();
    if (dist >= min_distance) continue;
    const Vec3 dir = dist > 0.0 ? (1.0 / dist) * rel : Vec3{1.0, 0.0, 0.0};
    w.set_position(center + min_distance * dir);
    moved = true;
  }
  return moved;
}

}  // namespace

double chord_length(const Trajectory& traj) {
  double total = 0.0;
  for (std::size_t i = 1; i < traj.size(); ++i) {
    total += distance(traj[i - 1].position(), traj[i].position());
  }
  return total;
}

std::vector<double> arc_length_params(const Trajectory& traj) {
  const std::size_t n = traj.size();
  std::vector<double> s(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    s[i] = s[i - 1] + distance(traj[i - 1].position(), traj[i].position());
  }
  const double total = s.back();
  if (total > 0.0) {
    for (auto& v : s) v /= total;
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = static_cast<double>(i) / static_cast<double>(n - 1);
    }
  }
  s.back() = 1.0;
  return s;
}

NearestWaypoint nearest_index(const Trajectory& traj, const Vec3& point) {
  NearestWaypoint best{0, distance(traj[0].position(), point)};
  for (std::size_t i = 1; i < traj.size(); ++i) {
    const double d = distance(traj[i].position(), point);
    if (d < best.distance) best = {i, d};
  }
  return best;
}

Trajectory smooth(const Trajectory& traj, int window) {
  if (window < 1 || window % 2 == 0) {
    throw std::invalid_argument("smoothing window must be odd and >= 1, got " +
                                std::to_string(window));
  }
  const std::size_t n = traj.size();
  const std::size_t half = static_cast<std::size_t>(window / 2);
  std::vector<Waypoint> out = copy_waypoints(traj);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const std::size_t h = std::min({half, i, n - 1 - i});
    Waypoint acc{};
    for (std::size_t j = i - h; j <= i + h; ++j) {
      acc.x += traj[j].x;
      acc.y += traj[j].y;
      acc.z += traj[j].z;
      acc.v += traj[j].v;
    }
    const double count = static_cast<double>(2 * h + 1);
    out[i] = {acc.x / count, acc.y / count, acc.z / count,
              std::max(0.0, acc.v / count)};
  }
  return Trajectory(std::move(out));
}

double roughness(const Trajectory& traj) {
  const std::size_t n = traj.size();
  if (n < 3) {
    throw std::invalid_argument("roughness needs at least 3 waypoints");
  }
  const double mean_chord = chord_length(traj) / static_cast<double>(n - 1);
  if (mean_chord == 0.0) return 0.0;
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const Vec3 second = traj[i + 1].position() - 2.0 * traj[i].position() +
                        traj[i - 1].position();
    worst = std::max(worst, second.norm());
  }
  return worst / mean_chord;
}

double discrete_frechet(const Trajectory& a, const Trajectory& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  // Row-major coupling table; cell (i, j) holds the best coupling cost of
  // the prefixes a[0..i], b[0..j].
  std::vector<double> table(n * m);
  auto at = [&](std::size_t i, std::size_t j) -> double& {
    return table[i * m + j];
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double d = distance(a[i].position(), b[j].position());
      if (i == 0 && j == 0) {
        at(i, j) = d;
      } else if (i == 0) {
        at(i, j) = std::max(at(0, j - 1), d);
      } else if (j == 0) {
        at(i, j) = std::max(at(i - 1, 0), d);
      } else {
        const double prev =
            std::min({at(i - 1, j), at(i - 1, j - 1), at(i, j - 1)});
        at(i, j) = std::max(prev, d);
      }
    }
  }
  return at(n - 1, m - 1);
}

Trajectory resample(const Trajectory& traj, int n) {
  if (n < 2) {
    throw std::invalid_argument("resample count must be >= 2, got " +
                                std::to_string(n));
  }
  const std::vector<double> s = arc_length_params(traj);
  std::vector<Waypoint> out;
  out.reserve(static_cast<std::size_t>(n));
  out.push_back(traj.front());
  for (int j = 1; j + 1 < n; ++j) {
    const double t = static_cast<double>(j) / static_cast<double>(n - 1);
    // First parameter strictly above t; the segment [k, k+1] has s[k] <= t.
    const auto upper = std::upper_bound(s.begin(), s.end(), t);
    const std::size_t hi = std::clamp<std::size_t>(
        static_cast<std::size_t>(upper - s.begin()), 1, s.size() - 1);
    const std::size_t lo = hi - 1;
    const double span = s[hi] - s[lo];
    const double alpha = span > 0.0 ? (t - s[lo]) / span : 0.0;
    const Waypoint& a = traj[lo];
    const Waypoint& b = traj[hi];
    out.push_back({a.x + alpha * (b.x - a.x), a.y + alpha * (b.y - a.y),
                   a.z + alpha * (b.z - a.z),
                   std::max(0.0, a.v + alpha * (b.v - a.v))});
  }
  out.push_back(traj.back());
  return Trajectory(std::move(out));
}

Trajectory translate_blend(const Trajectory& traj, const Vec3& offset,
                           BlendMode mode) {
  require_finite(offset, "offset");
  const std::vector<double> s = arc_length_params(traj);
  std::vector<Waypoint> out = copy_waypoints(traj);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double w = blend_weight(mode, s[i]);
    if (w == 0.0) continue;  // keeps pinned endpoints bit-identical
    out[i].set_position(out[i].position() + w * offset);
  }
  return Trajectory(std::move(out));
}

Trajectory radial_rescale(const Trajectory& traj, const Vec3& center,
                          double factor, bool preserve_endpoints) {
  require_finite(center, "center");
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw std::invalid_argument("rescale factor must be positive");
  }
  const std::vector<double> s = arc_length_params(traj);
  std::vector<Waypoint> out = copy_waypoints(traj);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double taper = preserve_endpoints ? 4.0 * s[i] * (1.0 - s[i]) : 1.0;
    if (taper == 0.0) continue;
    const Vec3 p = out[i].position();
    const Vec3 displacement = (factor - 1.0) * (p - center);
    out[i].set_position(p + taper * displacement);
  }
  return Trajectory(std::move(out));
}

Trajectory enforce_min_distance(const Trajectory& traj, const Vec3& center,
                                double min_distance) {
  require_finite(center, "center");
  if (!(min_distance >= 0.0) || !std::isfinite(min_distance)) {
    throw std::invalid_argument("minimum distance must be finite and >= 0");
  }
  std::vector<Waypoint> current = copy_waypoints(traj);
  for (int round = 0; round < kClearanceRounds; ++round) {
    if (!project_outside(current, center, min_distance)) {
      return Trajectory(std::move(current));
    }
    current = copy_waypoints(smooth(Trajectory(std::move(current)), 3));
  }
  project_outside(current, center, min_distance);
  return Trajectory(std::move(current));
}

double speed_falloff(double rho) {
  if (rho <= 1.0) return 1.0;
  if (rho >= 2.0) return 0.0;
  return 0.5 * (1.0 + std::cos(std::numbers::pi * (rho - 1.0)));
}

Trajectory scale_speed_near(const Trajectory& traj, const Vec3& center,
                            double radius, double factor, bool absolute) {
  require_finite(center, "center");
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("speed radius must be positive");
  }
  if (!(factor >= 0.0) || !std::isfinite(factor)) {
    throw std::invalid_argument("speed factor must be finite and >= 0");
  }
  std::vector<Waypoint> out = copy_waypoints(traj);
  for (auto& w : out) {
    const double g = speed_falloff(distance(w.position(), center) / radius);
    if (g == 0.0) continue;
    const double v =
        absolute ? w.v + g * (factor - w.v) : w.v * (1.0 + g * (factor - 1.0));
    w.v = std::max(0.0, v);
  }
  return Trajectory(std::move(out));
}

Trajectory truncate_at_nearest(const Trajectory& traj, const Vec3& center,
                               int ramp) {
  require_finite(center, "center");
  if (ramp < 1) {
    throw std::invalid_argument("ramp must be >= 1, got " +
                                std::to_string(ramp));
  }
  const std::size_t k = nearest_index(traj, center).index;
  if (k == 0) {
    Waypoint first = traj[0];
    Waypoint second = traj[1];
    first.v = 0.0;
    second.v = 0.0;
    return Trajectory({first, second});
  }
  std::vector<Waypoint> out(traj.waypoints().begin(),
                            traj.waypoints().begin() +
                                static_cast<std::ptrdiff_t>(k + 1));
  const std::size_t span = std::min(static_cast<std::size_t>(ramp), k);
  for (std::size_t i = k + 1 - span; i <= k; ++i) {
    out[i].v *= static_cast<double>(k - i) / static_cast<double>(span);
  }
  return Trajectory(std::move(out));
}

Trajectory append_spiral(const Trajectory& traj, double max_radius,
                         double turns, int n_points) {
  if (!(max_radius > 0.0) || !std::isfinite(max_radius)) {
    throw std::invalid_argument("spiral radius must be positive");
  }
  if (!(turns > 0.0) || !std::isfinite(turns)) {
    throw std::invalid_argument("spiral turns must be positive");
  }
  if (n_points < 4) {
    throw std::invalid_argument("spiral needs at least 4 points, got " +
                                std::to_string(n_points));
  }
  std::vector<Waypoint> out = copy_waypoints(traj);
  const Waypoint goal = traj.back();
  const double sweep = 2.0 * std::numbers::pi * turns;
  for (int j = 1; j <= n_points; ++j) {
    const double theta = static_cast<double>(j) * sweep / n_points;
    const double r = max_radius * theta / sweep;
    out.push_back({goal.x + r * std::cos(theta), goal.y + r * std::sin(theta),
                   goal.z, goal.v});
  }
  return Trajectory(std::move(out));
}

}  // namespace trajadapt
