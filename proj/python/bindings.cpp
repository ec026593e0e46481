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

// Thin bindings: structured values cross the boundary as JSON text and are
// decoded by the pure-Python wrapper in trajadapt/__init__.py.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trajadapt/dataset.hpp"
#include "trajadapt/json_io.hpp"
#include "trajadapt/prompt.hpp"
#include "trajadapt/render.hpp"
#include "trajadapt/script/interpreter.hpp"
#include "trajadapt/script/parser.hpp"
#include "trajadapt/transforms.hpp"
#include "trajadapt/verify.hpp"

namespace py = pybind11;
using namespace trajadapt;

namespace {

Trajectory traj_of(const std::string& text) {
  return trajectory_from_json(Json::parse(text));
}

Scene scene_of(const std::string& text) {
  return text.empty() ? Scene() : scene_from_json(Json::parse(text));
}

std::string dump(const Trajectory& t) { return to_json(t).dump(); }

Vec3 vec_of(const std::vector<double>& v) {
  if (v.size() != 3) throw std::invalid_argument("expected 3 numbers");
  return {v[0], v[1], v[2]};
}

std::string run_script_json(const std::string& source,
                            const std::string& scene,
                            const std::string& traj, std::int64_t budget) {
  script::SandboxLimits limits;
  limits.step_budget = budget;
  const auto out = script::run_script(source, scene_of(scene), traj_of(traj),
                                      limits);
  Json j;
  j["ok"] = out.ok();
  if (out.ok()) {
    j["trajectory"] = to_json(*out.modified);
  } else {
    j["error"] = {{"kind", script::to_string(out.error->kind)},
                  {"message", out.error->message},
                  {"line", out.error->line}};
  }
  return j.dump();
}

std::string eval_json(const std::string& corpus, const std::string& fixtures,
                      int jobs) {
  LlmConfig llm;
  llm.transport = Transport::kMock;
  llm.fixtures_dir = fixtures;
  EvalOptions opts;
  opts.jobs = jobs;
  return to_json(run_eval(load_corpus(corpus), llm, opts), false).dump();
}

std::string evaluate_json(const std::string& orig, const std::string& adapted,
                          const std::string& scene, const std::string& checks) {
  std::vector<CheckSpec> specs;
  for (const auto& c : Json::parse(checks)) specs.push_back(check_from_json(c));
  return to_json(evaluate(traj_of(orig), traj_of(adapted), scene_of(scene),
                          specs))
      .dump();
}

std::string parse_response_json(const std::string& text) {
  const ProposalText p = parse_response(text);
  return Json{{"high_level_plan", p.high_level_plan}, {"code", p.code}}.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "trajadapt native core";

  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<ResponseParseError>(m, "ResponseParseError",
                                             PyExc_ValueError);

  m.def("run_script", &run_script_json, py::arg("source"), py::arg("scene"),
        py::arg("trajectory"), py::arg("step_budget") = 1'000'000);
  m.def("check_syntax", [](const std::string& source) {
    try {
      script::parse_source(source);
      return std::string();
    } catch (const script::ScriptException& e) {
      return e.error().describe();
    }
  });

  m.def("translate_blend", [](const std::string& t, std::vector<double> off,
                              const std::string& mode) {
    const auto bm = parse_blend_mode(mode);
    if (!bm) throw std::invalid_argument("unknown blend mode: " + mode);
    return dump(translate_blend(traj_of(t), vec_of(off), *bm));
  });
  m.def("smooth", [](const std::string& t, int window) {
    return dump(smooth(traj_of(t), window));
  });
  m.def("resample", [](const std::string& t, int n) {
    return dump(resample(traj_of(t), n));
  });
  m.def("enforce_min_distance",
        [](const std::string& t, std::vector<double> c, double d) {
          return dump(enforce_min_distance(traj_of(t), vec_of(c), d));
        });
  m.def("truncate_at_nearest",
        [](const std::string& t, std::vector<double> c, int ramp) {
          return dump(truncate_at_nearest(traj_of(t), vec_of(c), ramp));
        });
  m.def("append_spiral",
        [](const std::string& t, double r, double turns, int n) {
          return dump(append_spiral(traj_of(t), r, turns, n));
        });
  m.def("discrete_frechet", [](const std::string& a, const std::string& b) {
    return discrete_frechet(traj_of(a), traj_of(b));
  });
  m.def("nearest_index", [](const std::string& t, std::vector<double> p) {
    const auto r = nearest_index(traj_of(t), vec_of(p));
    return py::make_tuple(r.index, r.distance);
  });

  m.def("build_prompt",
        [](const std::string& instruction, const std::string& scene,
           std::vector<std::string> feedback) {
          return build_prompt({instruction, scene_of(scene), std::move(feedback), {}});
        },
        py::arg("instruction"), py::arg("scene") = "",
        py::arg("feedback") = std::vector<std::string>{});
  m.def("parse_response", &parse_response_json);
  m.def("evaluate", &evaluate_json);
  m.def("run_eval_mock", &eval_json, py::arg("corpus"), py::arg("fixtures"),
        py::arg("jobs") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("corpus_ids", [](const std::string& path) {
    std::vector<std::string> ids;
    for (const auto& s : load_corpus(path)) ids.push_back(s.id);
    return ids;
  });
  m.def("render_svg", [](const std::string& orig, const std::string& adapted,
                         const std::string& scene) {
    std::optional<Trajectory> ad;
    if (!adapted.empty()) ad = traj_of(adapted);
    return render_svg(traj_of(orig), ad, scene_of(scene));
  });
}
