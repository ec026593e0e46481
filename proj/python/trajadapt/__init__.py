# Copyright 2026 The trajadapt Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Python access to the trajadapt core.

Trajectories are lists of [x, y, z, v]; scenes are dicts in the scene file
format ({"objects": [{"label": ..., "position": [x, y, z]}]}).
"""

import json

from . import _core
from ._core import FormatError, ResponseParseError

__all__ = [
    "FormatError",
    "ResponseParseError",
    "ScriptFailure",
    "append_spiral",
    "build_prompt",
    "check_syntax",
    "corpus_ids",
    "discrete_frechet",
    "enforce_min_distance",
    "evaluate",
    "nearest_index",
    "parse_response",
    "render_svg",
    "resample",
    "run_eval_mock",
    "run_script",
    "smooth",
    "translate_blend",
    "truncate_at_nearest",
]


class ScriptFailure(RuntimeError):
    """A script ended with a sandbox error; `kind`, `line` as reported."""

    def __init__(self, kind, message, line):
        super().__init__(f"{kind} error (line {line}): {message}")
        self.kind = kind
        self.line = line


def _t(traj):
    return json.dumps({"waypoints": [list(map(float, w)) for w in traj]})


def _s(scene):
    return "" if scene is None else json.dumps(scene)


def _out(text):
    return json.loads(text)["waypoints"]


def run_script(source, trajectory, scene=None, step_budget=1_000_000):
    """Runs AdaptScript; returns the modified trajectory or raises ScriptFailure."""
    res = json.loads(_core.run_script(source, _s(scene), _t(trajectory), step_budget))
    if not res["ok"]:
        err = res["error"]
        raise ScriptFailure(err["kind"], err["message"], err["line"])
    return res["trajectory"]["waypoints"]


def check_syntax(source):
    """Empty string if the script parses, else the error description."""
    return _core.check_syntax(source)


def translate_blend(traj, offset, mode="uniform"):
    return _out(_core.translate_blend(_t(traj), list(offset), mode))


def smooth(traj, window):
    return _out(_core.smooth(_t(traj), window))


def resample(traj, n):
    return _out(_core.resample(_t(traj), n))


def enforce_min_distance(traj, center, d):
    return _out(_core.enforce_min_distance(_t(traj), list(center), d))


def truncate_at_nearest(traj, center, ramp):
    return _out(_core.truncate_at_nearest(_t(traj), list(center), ramp))


def append_spiral(traj, max_radius, turns, n_points):
    return _out(_core.append_spiral(_t(traj), max_radius, turns, n_points))


def discrete_frechet(a, b):
    return _core.discrete_frechet(_t(a), _t(b))


def nearest_index(traj, point):
    return _core.nearest_index(_t(traj), list(point))


def build_prompt(instruction, scene=None, feedback=()):
    return _core.build_prompt(instruction, _s(scene), list(feedback))


def parse_response(text):
    return json.loads(_core.parse_response(text))


def evaluate(original, adapted, scene, checks):
    return json.loads(_core.evaluate(_t(original), _t(adapted), _s(scene), json.dumps(checks)))


def run_eval_mock(corpus, fixtures, jobs=0):
    """Mock-transport batch evaluation; returns the report without timing."""
    return json.loads(_core.run_eval_mock(str(corpus), str(fixtures), jobs))


def corpus_ids(path):
    return _core.corpus_ids(str(path))


def render_svg(original, adapted=None, scene=None):
    return _core.render_svg(_t(original), "" if adapted is None else _t(adapted), _s(scene))
