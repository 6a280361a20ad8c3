"""Plan verification: temporal-logic checking with calibrated guarantees."""

import json
import os

from . import _core
from ._core import CalibrationTable, PlancheckError, complies, normalize_formula, pretty_print

__all__ = [
    "CalibrationTable",
    "PlancheckError",
    "build_dpo",
    "build_sft",
    "calibrate",
    "check",
    "compile_plan",
    "complies",
    "default_config",
    "guarantee",
    "normalize_formula",
    "parse",
    "pretty_print",
    "report",
    "run",
]


def parse(source, domain=None):
    """Plan AST as nested dicts. With a domain directory the plan is also validated."""
    return json.loads(_core.parse_plan(source, os.fspath(domain) if domain else ""))


def compile_plan(source, domain, permissive=False, name="plan"):
    """Returns (automaton dict, dot text)."""
    fsa, dot = _core.compile_plan(source, os.fspath(domain), permissive, name)
    return json.loads(fsa), dot


def check(source, domain, spec=None, formula=None, permissive=False):
    """Model-checks a plan against a spec id, rule id or formula text."""
    return json.loads(_core.check_plan(source, os.fspath(domain), spec or "", formula or "", permissive))


def calibrate(embeddings, y_safe, y_hat):
    return _core.calibrate([list(map(float, z)) for z in embeddings], list(y_safe), list(y_hat))


def guarantee(table, z):
    return json.loads(table.guarantee([float(x) for x in z]))


def build_sft(candidates, tau=0.8):
    """candidates: dicts with task, rule, plan, p_hat, complies. Returns JSONL rows as dicts."""
    text = _core.build_sft(json.dumps(list(candidates)), tau)
    return [json.loads(line) for line in text.splitlines()]


def build_dpo(tasks):
    """tasks: dicts with id and two candidates. Returns (rows, dropped task ids)."""
    text, dropped = _core.build_dpo(json.dumps(list(tasks)))
    return [json.loads(line) for line in text.splitlines()], dropped


def default_config():
    return json.loads(_core.default_config())


def run(command, config=None, base="."):
    """Runs train, calibrate, verify or refine. Relative paths in config resolve against base."""
    return json.loads(_core.run(command, json.dumps(config or {}), os.fspath(base)))


def report(verdicts):
    return json.loads(_core.report(os.fspath(verdicts)))
