import json
import random

import pytest

import plancheck


def read(path):
    return path.read_text()


def test_parse_round_trip(carla):
    src = read(carla / "fixtures" / "drive_case.py")
    ast = plancheck.parse(src, carla)
    assert isinstance(ast, dict)
    once = plancheck.pretty_print(src)
    assert plancheck.pretty_print(once) == once


def test_syntax_error_has_position():
    with pytest.raises(plancheck.PlancheckError) as info:
        plancheck.parse("def plan():\n    go(\n")
    assert info.value.kind == "SyntaxError"
    assert info.value.line >= 2 and info.value.column >= 1


def test_compile_gives_dot(carla):
    fsa, dot = plancheck.compile_plan(read(carla / "fixtures" / "drive_case.py"), carla, name="drive")
    assert fsa["states"]
    assert dot.startswith("digraph")


def test_fixture_verdicts(carla):
    cases = json.loads(read(carla / "fixtures.json"))["cases"]
    for case in cases:
        v = plancheck.check(read(carla / case["plan"]), carla, spec=case["spec"])
        assert v["holds"] == case["holds"], case


def test_formula_text(carla):
    v = plancheck.check(read(carla / "fixtures" / "drive_case.py"), carla, formula="G (true)")
    assert v["holds"]
    assert plancheck.normalize_formula("G(a -> F b)") == plancheck.normalize_formula("G (a -> (F b))")


def oracle_p_hat(points, z):
    # direct enumeration, independent of the table layout
    def dist(a, b):
        return sum((x - y) ** 2 for x, y in zip(a, b)) ** 0.5

    def centroid(cls):
        rows = [p for p, s, h in points if s == cls and h == cls]
        return [sum(c) / len(rows) for c in zip(*rows)]

    ds, du = dist(z, centroid(1)), dist(z, centroid(0))
    cls, d = (1, ds) if ds < du else (0, du)
    c = centroid(cls)
    within = [s for p, s, _ in points if dist(p, c) <= d]
    opposite = sum(1 for s in within if s != cls)
    return min(1.0, max(0.0, 1.0 - opposite / max(len(within), 1)))


def test_calibration_matches_enumeration():
    rng = random.Random(5)
    points = []
    for i in range(80):
        s = i % 2 if i < 2 else int(rng.random() < 0.7)
        h = s if i < 2 or rng.random() < 0.8 else 1 - s
        points.append(([rng.gauss(0.8 if s else -0.8, 1) for _ in range(3)], s, h))
    table = plancheck.calibrate(*zip(*points))
    assert table.n == 80
    for _ in range(200):
        z = [rng.gauss(0, 2) for _ in range(3)]
        g = plancheck.guarantee(table, z)
        assert 0.0 <= g["p_hat"] <= 1.0
        assert g["p_hat"] == pytest.approx(oracle_p_hat(points, z), abs=1e-12)
    assert plancheck.CalibrationTable.from_json(table.to_json()) == table


def test_degenerate_calibration():
    with pytest.raises(plancheck.PlancheckError) as info:
        plancheck.calibrate([[0.0], [1.0]], [1, 1], [1, 1])
    assert info.value.kind == "DegenerateCalibration"


def test_complies_truth_table():
    assert [plancheck.complies(y, h) for y in (0, 1) for h in (0, 1)] == [True, False, False, True]


def test_refine_datasets():
    cands = [
        {"task": "t", "rule": "r", "plan": "a", "p_hat": 0.9, "complies": True},
        {"task": "t", "rule": "r", "plan": "b", "p_hat": 0.7, "complies": True},
    ]
    sft = plancheck.build_sft(cands, 0.8)
    assert [row["messages"][1]["content"] for row in sft] == ["a"]
    rows, dropped = plancheck.build_dpo([{"id": "t1", "candidates": cands}])
    assert rows[0]["preferred_output"][0]["content"] == "a"
    assert dropped == []
    with pytest.raises(plancheck.PlancheckError):
        plancheck.build_sft(cands, 0.4)


def test_pipeline(tmp_path, data):
    cfg = plancheck.default_config()
    cfg["paths"]["out"] = str(tmp_path)
    base = data.parent
    assert plancheck.run("train", cfg, base)["samples"] > 0
    plancheck.run("calibrate", cfg, base)
    metrics = plancheck.run("verify", cfg, base)
    assert metrics["accuracy"] > metrics["interpreter_accuracy"]
    assert plancheck.report(tmp_path / "verdicts.jsonl") == metrics
    refined = plancheck.run("refine", cfg, base)
    assert refined["candidates"] == 100


def test_bad_config():
    with pytest.raises(plancheck.PlancheckError) as info:
        plancheck.run("train", {"nonsense": 1})
    assert info.value.kind == "FormatError"
