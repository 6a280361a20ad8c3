#!/usr/bin/env python3
"""Writes the seeded Carla plan corpus under data/carla/plans."""
import argparse
import json
import random
from pathlib import Path

TASKS = [
    ("go straight through the intersection", "go_straight"),
    ("turn left at the intersection", "turn_left"),
    ("turn right at the intersection", "turn_right"),
    ("park at the curb", "park"),
    ("make a U-turn at the traffic light", "u_turn_light"),
    ("make a U-turn at the stop sign intersection", "u_turn_sign"),
    ("follow the lane", "follow_lane"),
    ("cross the intersection", "cross_intersection"),
]
SENSORS = ["pedestrian_observed()", "car_observed()", "stop_sign_observed()", "red_light_observed()",
           "green_light_observed()"]
HALT = ["stop()", "stop()", "stop()", "velocity_publisher(0, 0)", "velocity_publisher(5, -1)"]
MOVE = ["velocity_publisher(10, 0)", "velocity_publisher(8, 0)", "velocity_publisher(5, 1)",
        "velocity_publisher(3, 1)", "velocity_publisher(5, -1)", "velocity_publisher(5, 0)"]


def condition(rng):
    k = rng.choices([1, 2, 3], weights=[3, 4, 2])[0]
    picked = rng.sample(SENSORS[:4] if rng.random() < 0.8 else SENSORS, k)
    if rng.random() < 0.08:
        return "stop_sign_observed() and car_observed()"
    return " or ".join(picked)


def plan(rng):
    task, fname = rng.choice(TASKS)
    first = rng.choice(HALT) if rng.random() < 0.8 else rng.choice(MOVE)
    other = rng.choice(MOVE) if rng.random() < 0.85 else rng.choice(HALT)
    body = [f"if {condition(rng)}:", f"    {first}"]
    if rng.random() < 0.05:
        body += [f"elif {rng.choice(SENSORS)}:", f"    {rng.choice(HALT + MOVE)}"]
    body += ["else:", f"    {other}"]
    if rng.random() < 0.3:
        body.append("sleep(1)")
    shape = rng.choices(["while", "top", "for"], weights=[6, 3, 1])[0]
    lines = [f"# task: {task}", f"def {fname}():"]
    pad = "    "
    if shape == "while":
        if rng.random() < 0.3:
            lines.append(pad + "velocity_publisher(10, 0)")
        lines.append(pad + "while True:")
        lines += [pad * 2 + b for b in body]
    elif shape == "for":
        lines.append(pad + f"for _ in range({rng.randint(2, 4)}):")
        lines += [pad * 2 + b for b in body]
    else:
        lines += [pad + b for b in body]
    return task, "\n".join(lines) + "\n"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "data" / "carla"))
    ap.add_argument("--seed", type=int, default=2024)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    root = Path(args.out) / "plans"
    for split, n in [("train", 400), ("calib", 400), ("test", 200)]:
        d = root / split
        d.mkdir(parents=True, exist_ok=True)
        for old in d.glob("*.py"):
            old.unlink()
        for i in range(n):
            (d / f"p{i:04d}.py").write_text(plan(rng)[1])
    d = root / "refine"
    d.mkdir(parents=True, exist_ok=True)
    for old in d.glob("*.py"):
        old.unlink()
    rules = [f"c{i:02d}" for i in range(16, 31)]
    tasks = []
    for i in range(50):
        files = []
        for tag in "ab":
            while True:
                _, text = plan(rng)
                if not files or text != (d / files[0]).read_text():
                    break
            name = f"t{i:03d}_{tag}.py"
            (d / name).write_text(text)
            files.append(name)
        tasks.append({"id": f"t{i:03d}", "rule": rng.choice(rules),
                      "plans": [f"plans/refine/{f}" for f in files]})
    (Path(args.out) / "refine_tasks.json").write_text(
        json.dumps({"schema": "plancheck.tasks/1", "tasks": tasks}, indent=2) + "\n")


if __name__ == "__main__":
    main()
