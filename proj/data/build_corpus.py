#!/usr/bin/env python3
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
"""Writes corpus.jsonl, fixtures/<id>.0.resp.txt and fixtures/<id>.reference.json.

Each sample carries the instruction, scene, trajectory generator spec and the
authored compliance checks; the fixture is a canned model answer (plan plus
AdaptScript) and the reference is an independent transform chain that must
satisfy the same checks.

Scale: paths run from (0, 0, 0) to (0, 100, 0) in 51 waypoints at speed 1
unless stated otherwise. +X is left, +Y front, +Z up.

Usage: python3 data/build_corpus.py   (rewrites files next to this script)
"""

import json
import pathlib
import textwrap

HERE = pathlib.Path(__file__).resolve().parent
FIX = HERE / "fixtures"


def line(start=(0, 0, 0), goal=(0, 100, 0), n=51, noise=0.0, seed=1, v0=1.0):
    return {"kind": "line", "start": list(start), "goal": list(goal), "n": n,
            "noise_std": noise, "seed": seed, "v0": v0}


def arc(sag, start=(0, 0, 0), goal=(0, 100, 0), n=51, noise=0.0, seed=1, v0=1.0):
    spec = line(start, goal, n, noise, seed, v0)
    spec.update(kind="arc", sag=sag)
    return spec


def scene(*objects, description=None):
    out = {"objects": [{"label": l, "position": list(p)} for l, p in objects]}
    if description:
        out["description"] = description
    return out


def code(text):
    return textwrap.dedent(text).strip("\n")


# Response framings seen from chat models; the parser accepts all of them.
def strict(plan, src):
    return json.dumps({"high_level_plan": plan, "code": src}, indent=2) + "\n"


def fenced(plan, src):
    return "Here is the plan and the code.\n\n```json\n" + strict(plan, src) + "```\n"


def paper_style(plan, src):
    # Single-quoted keys, the paper's literal 'Python code' key, and a
    # triple-quoted multi-line string.
    return ("{\n'high_level_plan': " + json.dumps(plan) + ",\n"
            "'Python code': \"\"\"\n" + src + "\n\"\"\"\n}\n")


SAMPLES = []


def sample(id, category, instruction, traj, scn, checks, plan, src, reference,
           framing=strict, note=None):
    rec = {"id": id, "instruction": instruction, "category": category,
           "scene": scn, "traj_spec": traj, "checks": checks, "fixture_id": id}
    if note:
        rec["note"] = note
    SAMPLES.append((rec, framing(plan, code(src)), reference))


START = {"type": "start_fixed", "tol": 1e-6}
GOAL = {"type": "goal_fixed", "tol": 1e-6}
SMOOTH = {"type": "smoothness", "max_roughness": 0.5}
PROBE_NOTE = ("speed checks use the {} as a probe region; the instruction "
              "does not mention it")

# ---- Appendix A: adaptation without objects ------------------------------------

sample(
    "go_left", "cartesian", "Go left", line(noise=0.1, seed=7),
    scene(("box", (30, 50, 0))),
    [START, {"type": "directional_shift", "dir": [1, 0, 0], "min_amount": 5}, SMOOTH],
    "1) Shift the goal position left (+X).\n2) Keep the start position the same.\n"
    "3) Shift intermediate points by a fraction that grows along the path so the "
    "change is gradual and the shape is preserved.",
    """
    traj = get_trajectory()
    n = len(traj)
    shift = 20
    modified_trajectory = []
    for i in range(n):
        s = i / (n - 1)
        p = traj[i]
        modified_trajectory.append([p[0] + shift * s, p[1], p[2], p[3]])
    """,
    [{"op": "translate_blend", "offset": [20, 0, 0], "mode": "fix_start"}],
    note="vague amount: only the direction is checked")

sample(
    "go_right", "cartesian", "Go right", arc(10),
    scene(),
    [START, {"type": "directional_shift", "dir": [-1, 0, 0], "min_amount": 5}, SMOOTH],
    "1) Shift the goal position right (-X).\n2) Keep the start position the same.\n"
    "3) Blend the shift along the path length so it grows smoothly from the start.",
    """
    traj = get_trajectory()
    s = arc_length_params(traj)
    for i in range(len(traj)):
        traj[i][0] = traj[i][0] - 20 * s[i]
    modified_trajectory = traj
    """,
    [{"op": "translate_blend", "offset": [-20, 0, 0], "mode": "fix_start"}],
    framing=fenced, note="vague amount: only the direction is checked")

sample(
    "move_to_top", "cartesian", "Move to the top", line(),
    scene(("table", (10, 60, 0))),
    [START, {"type": "directional_shift", "dir": [0, 0, 1], "min_amount": 5}, SMOOTH],
    "1) Keep the start position the same.\n2) Raise the goal position (+Z).\n"
    "3) Raise intermediate points gradually so the trajectory climbs smoothly.",
    """
    modified_trajectory = translate_blend(get_trajectory(), [0, 0, 20], "fix_start")
    """,
    [{"op": "translate_blend", "offset": [0, 0, 20], "mode": "fix_start"}],
    note="Appendix A lists this command although the LaTTe subset drops 'top'")

sample(
    "go_to_bottom", "cartesian", "Go to the bottom",
    line(start=(0, 0, 30), goal=(0, 100, 30)),
    scene(),
    [START, {"type": "directional_shift", "dir": [0, 0, -1], "min_amount": 5}, SMOOTH],
    "1) Keep the start position the same.\n2) Lower the goal position (-Z).\n"
    "3) Lower intermediate points gradually, preserving the shape.",
    """
    traj = get_trajectory()
    n = len(traj)
    for i in range(1, n):
        traj[i][2] = traj[i][2] - 20 * i / (n - 1)
    modified_trajectory = traj
    """,
    [{"op": "translate_blend", "offset": [0, 0, -20], "mode": "fix_start"}])

sample(
    "stay_on_bottom", "cartesian", "Stay on the bottom",
    line(goal=(0, 100, 20)),
    scene(),
    [START, GOAL, {"type": "directional_shift", "dir": [0, 0, -1], "min_amount": 5}],
    "1) Keep the start and goal positions the same.\n"
    "2) Identify the lowest z-coordinate in the current trajectory.\n"
    "3) Modify all intermediate waypoints to have this lowest z-coordinate, ensuring "
    "the robot stays at the bottom.\n"
    "4) Smoothen the trajectory to ensure gradual changes and avoid abrupt transitions.",
    """
    traj = get_trajectory()
    n = len(traj)
    low = traj[0][2]
    for i in range(n):
        if traj[i][2] < low:
            low = traj[i][2]
    for i in range(1, n - 1):
        traj[i][2] = low
    modified_trajectory = smooth_trajectory(traj, 5)
    """,
    [{"op": "translate_blend", "offset": [0, 0, -20], "mode": "fix_both"},
     {"op": "smooth", "window": 5}],
    note="the goal stays where it is, so the drop is only checked on average")

sample(
    "faster_middle", "speed", "Go faster in the middle of the trajectory", line(),
    scene(("lamp", (10, 50, 0))),
    [START, GOAL, {"type": "shape_similarity", "eps_rel": 1e-9},
     {"type": "speed_increased_within", "label": "lamp", "radius": 20},
     {"type": "min_speed_within", "label": "lamp", "radius": 20, "vmin": 1.5}],
    "1) Keep every position unchanged.\n"
    "2) Increase the velocity smoothly towards the middle of the trajectory, up to "
    "twice the original speed at the midpoint.\n"
    "3) Leave the velocity at the start and the goal unchanged.",
    """
    traj = get_trajectory()
    n = len(traj)
    for i in range(n):
        s = i / (n - 1)
        traj[i][3] = traj[i][3] * (1 + 4 * s * (1 - s))
    modified_trajectory = traj
    """,
    [{"op": "scale_speed_near", "center": [0, 50, 0], "radius": 15, "factor": 2,
      "absolute": False}],
    note=PROBE_NOTE.format("lamp beside the midpoint"))

sample(
    "spiral_near_goal", "cartesian", "Execute a spiral path when near the goal position",
    line(), scene(),
    [START, {"type": "goal_displaced", "dir": [1, 0, 0], "amount": 5, "tol": 1e-6}],
    "1) Retrieve the trajectory and identify the goal position.\n"
    "2) After the goal, append an outward spiral around it with two turns and a "
    "maximum radius of 5 in the horizontal plane.\n"
    "3) Keep the goal velocity along the spiral.",
    """
    modified_trajectory = append_spiral(get_trajectory(), 5, 2, 40)
    """,
    [{"op": "append_spiral", "max_radius": 5, "turns": 2, "n_points": 40}],
    note="two full turns end the spiral on the +X side of the goal")

sample(
    "further_after_goal", "numeric", "Go further by a distance of 20 after reaching the goal",
    line(), scene(),
    [START, {"type": "goal_displaced", "dir": [0, 1, 0], "amount": 20, "tol": 1e-6}],
    "1) Keep the existing trajectory unchanged up to the goal.\n"
    "2) Compute the heading of the last segment.\n"
    "3) Append waypoints continuing along that heading for a distance of 20, at the "
    "goal velocity.",
    """
    traj = get_trajectory()
    last = traj[-1]
    prev = traj[-2]
    d = dist3(last, prev)
    dx = (last[0] - prev[0]) / d
    dy = (last[1] - prev[1]) / d
    dz = (last[2] - prev[2]) / d
    steps = 10
    for j in range(1, steps + 1):
        a = 20 * j / steps
        traj.append([last[0] + dx * a, last[1] + dy * a, last[2] + dz * a, last[3]])
    modified_trajectory = traj
    """,
    [{"op": "extend", "distance": 20, "n": 10}])

# ---- Appendix A: adaptation with objects ---------------------------------------

sample(
    "reach_sofa_stop", "object_relative", "Reach near the sofa and stop", line(),
    scene(("sofa", (-5, 70, 0)), ("person", (20, 20, 0))),
    [START, {"type": "stops_at_end", "vtol": 1e-9},
     {"type": "truncated_near", "label": "sofa", "tol": 1e-6}],
    "1) Detect the position of the sofa.\n"
    "2) Find the waypoint closest to the sofa and drop every later waypoint.\n"
    "3) Ramp the velocity down to zero over the last few waypoints.",
    """
    sofa = detect_objects("sofa")
    modified_trajectory = truncate_at_nearest(get_trajectory(), sofa, 5)
    """,
    [{"op": "truncate_at_nearest", "label": "sofa", "ramp": 5}])

sample(
    "larger_distance_person", "object_relative", "Walk at a larger distance from the person",
    line(), scene(("person", (-4, 50, 0))),
    [START, GOAL, {"type": "min_clearance", "label": "person", "d": 6, "tol": 0},
     SMOOTH],
    "1) Keep the start and goal positions the same.\n"
    "2) Identify the location of the person.\n"
    "3) Push the waypoints that pass close to the person outward so that none is "
    "closer than 10.\n"
    "4) Smoothen the trajectory to remove abrupt changes.",
    """
    person = detect_objects("person")
    modified_trajectory = enforce_min_distance(get_trajectory(), person, 10)
    """,
    [{"op": "enforce_min_distance", "label": "person", "d": 10}],
    note="vague amount: requires 1.5 times the original clearance of 4")

sample(
    "slower_near_box", "speed", "Go slower when near to the box", line(),
    scene(("box", (3, 50, 0))),
    [START, GOAL, {"type": "shape_similarity", "eps_rel": 1e-9},
     {"type": "speed_reduced_within", "label": "box", "radius": 10}],
    "1) Keep every position unchanged.\n2) Detect the box.\n"
    "3) Halve the velocity near the box and blend smoothly back to the original "
    "speed further away.",
    """
    box = detect_objects("box")
    modified_trajectory = scale_speed_near(get_trajectory(), box, 10, 0.5, False)
    """,
    [{"op": "scale_speed_near", "label": "box", "radius": 10, "factor": 0.5,
      "absolute": False}],
    framing=paper_style)

sample(
    "faster_near_person", "speed", "Go faster in the vicinity of the person",
    line(noise=0.2, seed=11), scene(("person", (-5, 40, 0))),
    [START, GOAL, {"type": "speed_increased_within", "label": "person", "radius": 10}],
    "1) Keep the positions unchanged.\n2) Detect the person.\n"
    "3) Increase the speed of waypoints within 10 of the person, tapering smoothly "
    "to the original speed.",
    """
    person = detect_objects("person")
    traj = get_trajectory()
    for i in range(len(traj)):
        d = dist3(traj[i], person)
        if d < 10:
            traj[i][3] = traj[i][3] * 1.8
        elif d < 20:
            w = (20 - d) / 10
            traj[i][3] = traj[i][3] * (1 + 0.8 * w)
    modified_trajectory = traj
    """,
    [{"op": "scale_speed_near", "label": "person", "radius": 10, "factor": 2,
      "absolute": False}])

sample(
    "distance_20_person", "numeric", "Walk at a distance of at least 20 from the person",
    line(), scene(("person", (8, 50, 0))),
    [START, GOAL, {"type": "min_clearance", "label": "person", "d": 20, "tol": 1e-6}],
    "1) Keep the start and goal positions the same.\n2) Detect the person.\n"
    "3) Move every waypoint closer than 20 to the person radially outward onto the "
    "circle of radius 20.",
    """
    person = detect_objects("person")
    traj = get_trajectory()
    for i in range(len(traj)):
        d = dist3(traj[i], person)
        if d < 20:
            for k in range(3):
                traj[i][k] = person[k] + (traj[i][k] - person[k]) * 20 / d
    modified_trajectory = traj
    """,
    [{"op": "enforce_min_distance", "label": "person", "d": 20}])

sample(
    "speed_5_box", "numeric", "Traverse at a speed of 5 in the vicinity of the box",
    line(), scene(("box", (-3, 60, 0))),
    [START, GOAL,
     {"type": "min_speed_within", "label": "box", "radius": 10, "vmin": 4.999999},
     {"type": "max_speed_within", "label": "box", "radius": 10, "vmax": 5.000001}],
    "1) Keep the positions unchanged.\n2) Detect the box.\n"
    "3) Set the speed to 5 within 10 of the box and blend back to the original "
    "speed over the next 10 units.",
    """
    box = detect_objects("box")
    modified_trajectory = scale_speed_near(get_trajectory(), box, 10, 5, True)
    """,
    [{"op": "scale_speed_near", "label": "box", "radius": 10, "factor": 5,
      "absolute": True}])

# ---- Appendix A: compound instructions -----------------------------------------

sample(
    "person_distance_box_slower", "compound",
    "Walk at a larger distance from the person, and go slower when near the box",
    line(), scene(("person", (-4, 30, 0)), ("box", (3, 75, 0))),
    [START, GOAL, {"type": "min_clearance", "label": "person", "d": 8, "tol": 1e-6},
     {"type": "speed_reduced_within", "label": "box", "radius": 10}],
    "1) Detect the person and the box.\n"
    "2) Push the waypoints near the person outward to a clearance of 10 and smooth "
    "the result.\n"
    "3) Halve the velocity near the box with a smooth transition.\n"
    "4) Keep the start and goal positions the same.",
    """
    person = detect_objects("person")
    box = detect_objects("box")
    traj = enforce_min_distance(get_trajectory(), person, 10)
    modified_trajectory = scale_speed_near(traj, box, 10, 0.5, False)
    """,
    [{"op": "enforce_min_distance", "label": "person", "d": 10},
     {"op": "scale_speed_near", "label": "box", "radius": 10, "factor": 0.5,
      "absolute": False}],
    framing=fenced, note="vague amount: requires twice the original clearance of 4")

sample(
    "left_10_speed_2", "compound", "Go to the left by 10 at a speed of 2", line(),
    scene(("box", (0, 50, 0))),
    [START, {"type": "goal_displaced", "dir": [1, 0, 0], "amount": 10, "tol": 1e-6},
     {"type": "min_speed_within", "label": "box", "radius": 1000, "vmin": 1.999999},
     {"type": "max_speed_within", "label": "box", "radius": 1000, "vmax": 2.000001}],
    "1) Keep the start position the same.\n2) Shift the goal left by 10.\n"
    "3) Shift intermediate points proportionally to their position along the path.\n"
    "4) Set the speed of every waypoint to 2.",
    """
    traj = translate_blend(get_trajectory(), [10, 0, 0], "fix_start")
    for i in range(len(traj)):
        traj[i][3] = 2
    modified_trajectory = traj
    """,
    [{"op": "translate_blend", "offset": [10, 0, 0], "mode": "fix_start"},
     {"op": "scale_speed", "factor": 2}],
    note=PROBE_NOTE.format("box with a radius covering the whole path"))

sample(
    "reach_red_mug", "compound", "Shift the trajectory gradually to reach the red mug",
    line(), scene(("red mug", (15, 100, 0)), ("box", (-10, 40, 0))),
    [START, {"type": "goal_displaced", "dir": [1, 0, 0], "amount": 15, "tol": 1e-6},
     {"type": "truncated_near", "label": "red mug", "tol": 1e-6}, SMOOTH],
    "1) Detect the red mug.\n2) Keep the start position the same.\n"
    "3) Move the goal onto the mug and shift intermediate points gradually along the "
    "path.",
    """
    mug = detect_objects("red mug")
    traj = get_trajectory()
    goal = traj[-1]
    offset = [mug[0] - goal[0], mug[1] - goal[1], mug[2] - goal[2]]
    modified_trajectory = translate_blend(traj, offset, "fix_start")
    """,
    [{"op": "translate_blend", "offset": [15, 0, 0], "mode": "fix_start"}])

# ---- numeric examples and generated-HLP instructions -----------------------------

sample(
    "go_left_20", "numeric", "Go left by 20", line(),
    scene(("chair", (-10, 30, 0))),
    [START, {"type": "goal_displaced", "dir": [1, 0, 0], "amount": 20, "tol": 1e-6},
     SMOOTH],
    "1) Shift the goal position left by 20.\n2) Keep the start position the same.\n"
    "3) Modify the points in the middle for a gradual and smooth change that "
    "preserves the shape of the trajectory.",
    """
    traj = get_trajectory()
    n = len(traj)
    modified_trajectory = []
    for i in range(n):
        w = i / (n - 1)
        modified_trajectory.append([traj[i][0] + 20 * w, traj[i][1], traj[i][2], traj[i][3]])
    """,
    [{"op": "translate_blend", "offset": [20, 0, 0], "mode": "fix_start"}])

sample(
    "keep_10_box", "numeric", "Keep at least 10 distance from the box",
    line(noise=0.2, seed=3), scene(("box", (3, 50, 0))),
    [START, GOAL, {"type": "min_clearance", "label": "box", "d": 10, "tol": 1e-6}],
    "1) Keep the goal and start positions the same.\n2) Identify the box.\n"
    "3) Move the waypoints closer than 10 to the box outward and smooth, repeating "
    "until the clearance holds.",
    """
    box = detect_objects("box")
    modified_trajectory = enforce_min_distance(get_trajectory(), box, 10)
    """,
    [{"op": "enforce_min_distance", "label": "box", "d": 10}],
    framing=paper_style)

sample(
    "left_20_keep_10_box", "compound",
    "Go left by 20 keeping a distance of at least 10 from the box", line(),
    scene(("box", (12, 50, 0))),
    [START, {"type": "goal_displaced", "dir": [1, 0, 0], "amount": 20, "tol": 1e-6},
     {"type": "min_clearance", "label": "box", "d": 10, "tol": 1e-6}],
    "1) Keep the start position the same and shift the goal left by 20, blending "
    "the shift along the path.\n"
    "2) Detect the box and push the shifted waypoints that come closer than 10 "
    "outward.\n3) Smooth the result.",
    """
    box = detect_objects("box")
    traj = translate_blend(get_trajectory(), [20, 0, 0], "fix_start")
    modified_trajectory = enforce_min_distance(traj, box, 10)
    """,
    [{"op": "translate_blend", "offset": [20, 0, 0], "mode": "fix_start"},
     {"op": "enforce_min_distance", "label": "box", "d": 10}])

sample(
    "stop_near_box", "object_relative", "Stop when you reach near the box", line(),
    scene(("box", (3, 62, 0))),
    [START, {"type": "stops_at_end", "vtol": 1e-9},
     {"type": "truncated_near", "label": "box", "tol": 1e-6}],
    "1) Detect the position of the box using the detect_objects function.\n"
    "2) Retrieve the current trajectory using the get_trajectory function.\n"
    "3) Identify the point in the trajectory that is closest to the box.\n"
    "4) Modify the trajectory to stop at this closest point, removing any subsequent "
    "points.\n5) Ensure the trajectory remains smooth up to the stopping point.",
    """
    box = detect_objects("box")
    traj = get_trajectory()
    best = 0
    best_d = dist3(traj[0], box)
    for i in range(1, len(traj)):
        d = dist3(traj[i], box)
        if d < best_d:
            best_d = d
            best = i
    modified_trajectory = traj[0:best + 1]
    ramp = 5
    for k in range(ramp):
        idx = best - k
        if idx >= 0:
            modified_trajectory[idx][3] = modified_trajectory[idx][3] * k / ramp
    """,
    [{"op": "truncate_at_nearest", "label": "box", "ramp": 5}])

sample(
    "spiral_radius_2", "numeric", "Execute a spiral of max radius 2 after reaching the goal",
    line(), scene(),
    [START, {"type": "goal_displaced", "dir": [1, 0, 0], "amount": 2, "tol": 1e-6}],
    "1) Retrieve the current trajectory using the get_trajectory() function.\n"
    "2) Identify the goal position from the trajectory.\n"
    "3) After reaching the goal position, add waypoints to create a spiral trajectory "
    "with a maximum radius of 2 units.\n"
    "4) Ensure the spiral is smooth and gradually increases in radius.\n"
    "5) Maintain the velocity similar to the goal position for the spiral trajectory.",
    """
    traj = get_trajectory()
    goal = traj[-1]
    turns = 2
    n_points = 40
    max_r = 2
    pi = 3.141592653589793
    modified_trajectory = traj
    for j in range(1, n_points + 1):
        theta = 2 * pi * turns * j / n_points
        r = max_r * theta / (2 * pi * turns)
        modified_trajectory.append([goal[0] + r * cos(theta), goal[1] + r * sin(theta), goal[2], goal[3]])
    """,
    [{"op": "append_spiral", "max_radius": 2, "turns": 2, "n_points": 40}],
    note="two full turns end the spiral on the +X side of the goal")

sample(
    "further_person_slower_box", "compound",
    "Walk further away from the person and go slower near the box", line(),
    scene(("person", (5, 40, 0)), ("box", (-3, 75, 0)),
          description="An office corridor. A person stands near the middle of the "
                      "corridor and a box lies further ahead."),
    [START, GOAL, {"type": "min_clearance", "label": "person", "d": 6, "tol": 0},
     {"type": "speed_reduced_within", "label": "box", "radius": 10}],
    "1) Detect the position of the person and the box using the detect_objects() "
    "function.\n"
    "2) Retrieve the current trajectory using the get_trajectory() function.\n"
    "3) Iterate over the trajectory points and increase their distance from the "
    "person while maintaining the overall shape of the trajectory.\n"
    "4) Identify the points in the trajectory that are near the box and reduce their "
    "velocity to ensure the robot goes slower near the box.\n"
    "5) Ensure the trajectory remains smooth by adjusting intermediate points "
    "gradually.\n"
    "6) Store the modified trajectory in a variable called modified_trajectory.",
    """
    person = detect_objects("person")
    box = detect_objects("box")
    traj = get_trajectory()
    n = len(traj)
    for i in range(1, n - 1):
        d = dist3(traj[i], person)
        if d < 15:
            w = 1 - d / 15
            for k in range(2):
                traj[i][k] = person[k] + (traj[i][k] - person[k]) * (1 + w)
    traj = smooth_trajectory(traj, 3)
    for i in range(n):
        if dist3(traj[i], box) < 10:
            traj[i][3] = traj[i][3] * 0.5
    modified_trajectory = traj
    """,
    [{"op": "enforce_min_distance", "label": "person", "d": 8},
     {"op": "scale_speed_near", "label": "box", "radius": 10, "factor": 0.5,
      "absolute": False}],
    note="vague amount: requires 1.2 times the original clearance of 5")

# ---- LaTTe-style instructions from the dataset description ----------------------

sample(
    "move_front", "cartesian", "Move to the front", arc(8),
    scene(),
    [START, {"type": "directional_shift", "dir": [0, 1, 0], "min_amount": 5}, SMOOTH],
    "1) Keep the start position the same.\n2) Move the goal forward (+Y).\n"
    "3) Shift the intermediate points forward gradually along the path.",
    """
    modified_trajectory = translate_blend(get_trajectory(), [0, 20, 0], "fix_start")
    """,
    [{"op": "translate_blend", "offset": [0, 20, 0], "mode": "fix_start"}])

sample(
    "go_slower", "speed", "Go slower", arc(10),
    scene(("box", (0, 50, 0))),
    [START, GOAL, {"type": "shape_similarity", "eps_rel": 1e-9},
     {"type": "speed_reduced_within", "label": "box", "radius": 1000}],
    "1) Keep every position unchanged.\n2) Reduce the velocity of every waypoint "
    "to 60 percent of the original.",
    """
    traj = get_trajectory()
    for i in range(len(traj)):
        traj[i][3] = traj[i][3] * 0.6
    modified_trajectory = traj
    """,
    [{"op": "scale_speed", "factor": 0.5}],
    note=PROBE_NOTE.format("box with a radius covering the whole path"))

sample(
    "closer_to_sofa", "object_relative", "Drive closer to the sofa", line(),
    scene(("sofa", (6, 60, 0))),
    [START, GOAL, {"type": "directional_shift", "dir": [1, 0, 0], "min_amount": 1}],
    "1) Keep the goal position the same.\n2) Keep the starting position the same.\n"
    "3) Identify the location of the sofa. Iterate over all the intermediate points "
    "decreasing their distance from the sofa.\n"
    "4) Ensure that the shape of the trajectory is preserved.",
    """
    sofa = detect_objects("sofa")
    modified_trajectory = radial_rescale(get_trajectory(), sofa, 0.5, True)
    """,
    [{"op": "radial_rescale", "label": "sofa", "factor": 0.6, "preserve_endpoints": True}],
    note="closeness is checked as a mean shift towards the sofa's side")

sample(
    "further_from_box", "object_relative", "Stay further away from box", line(),
    scene(("box", (3, 50, 0))),
    [START, GOAL, {"type": "min_clearance", "label": "box", "d": 4, "tol": 0}],
    "1) Keep the goal position the same\n2) Keep the starting position the same.\n"
    "3) Identify the location of the box. Iterate over all the intermediate points "
    "increasing their distance from the box.\n"
    "4) Ensure that the shape of the trajectory is preserved. Smoothen the "
    "trajectory to remove abrupt changes",
    """
    box = detect_objects("box")
    modified_trajectory = radial_rescale(get_trajectory(), box, 1.5, True)
    """,
    [{"op": "radial_rescale", "label": "box", "factor": 1.8, "preserve_endpoints": True}],
    note="vague amount: requires 4/3 of the original clearance of 3")

# ---- feedback-loop and repair fixtures (not corpus samples) --------------------

EXTRA = {
    # First answer moves the whole path (start included); the reviewer asks to
    # keep the start, and the second answer does.
    "feedback_go_left.0": strict(
        "1) Shift every waypoint left by 20, including the start and the goal.",
        code("""
        traj = get_trajectory()
        for i in range(len(traj)):
            traj[i][0] = traj[i][0] + 20
        modified_trajectory = traj
        """)),
    "feedback_go_left.1": strict(
        "1) Keep the start position the same.\n2) Shift the goal left by 20.\n"
        "3) Blend the shift gradually along the path.",
        code("""
        modified_trajectory = translate_blend(get_trajectory(), [20, 0, 0], "fix_start")
        """)),
    # Malformed first answer, valid second answer.
    "repair_response.0": "Sure! I would shift the goal to the left and keep the start.\n",
    "repair_response.1": strict(
        "1) Keep the start.\n2) Shift the goal left by 20 gradually.",
        code("""
        modified_trajectory = translate_blend(get_trajectory(), [20, 0, 0], "fix_start")
        """)),
    # Script that never stores its result, then a fixed script.
    "repair_missing_output.0": strict(
        "1) Shift the goal left by 20 gradually.",
        code("""
        traj = translate_blend(get_trajectory(), [20, 0, 0], "fix_start")
        """)),
    "repair_missing_output.1": strict(
        "1) Shift the goal left by 20 gradually.",
        code("""
        modified_trajectory = translate_blend(get_trajectory(), [20, 0, 0], "fix_start")
        """)),
    # Script that exhausts the step budget, then a fixed script.
    "repair_budget.0": strict(
        "1) Loop until done.",
        code("""
        x = 0
        for i in range(1000000000):
            x = x + 1
        modified_trajectory = get_trajectory()
        """)),
    "repair_budget.1": strict(
        "1) Keep the trajectory unchanged.",
        "modified_trajectory = get_trajectory()"),
    # Identity policy for any instruction.
    "identity.0": strict(
        "1) Keep the trajectory unchanged.",
        "modified_trajectory = get_trajectory()"),
}


def main():
    FIX.mkdir(exist_ok=True)
    ids = set()
    with open(HERE / "corpus.jsonl", "w") as f:
        for rec, response, reference in SAMPLES:
            assert rec["id"] not in ids, rec["id"]
            ids.add(rec["id"])
            f.write(json.dumps(rec) + "\n")
            (FIX / f"{rec['id']}.0.resp.txt").write_text(response)
            (FIX / f"{rec['id']}.reference.json").write_text(
                json.dumps(reference, indent=2) + "\n")
    for key, text in EXTRA.items():
        (FIX / f"{key}.resp.txt").write_text(text)
    print(f"{len(SAMPLES)} samples, {len(EXTRA)} extra fixtures")


if __name__ == "__main__":
    main()
