"""Two-dimensional geometric knapsack: solvers, validators and instance generators."""

import json

from . import _core
from ._core import BudgetExceeded, Error, InvalidArgument, NotExtractable, PreconditionFailed, SchemaError

__all__ = [
    "BudgetExceeded",
    "Error",
    "InvalidArgument",
    "NotExtractable",
    "PreconditionFailed",
    "SchemaError",
    "extract_partition",
    "generate_lowerbound",
    "generate_random",
    "generate_yes_hardness",
    "profit",
    "render_svg",
    "solve",
    "solve_gap",
    "validate",
]


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def validate(packing, containers=False, lcstar=False, eps="1/4"):
    """Validation report {"valid", "violations"} for a packing dict."""
    return json.loads(_core.validate(_dump(packing), containers, lcstar, str(eps)))


def solve(instance, algo="container", c=2, eps="1/4", budget=2000):
    """Packing dict from one of: container, lc_star, nfdh, steinberg, oracle."""
    return json.loads(_core.solve(_dump(instance), algo, c, str(eps), budget))


def solve_gap(instance):
    return json.loads(_core.solve_gap(_dump(instance)))


def generate_random(n, N, seed=0, profile="uniform", rotation=False):
    return json.loads(_core.generate_random(n, N, seed, profile, rotation))


def generate_lowerbound(n):
    """Reference packing of the container lower-bound family; its instance is under "instance"."""
    return json.loads(_core.generate_lowerbound(n))


def generate_yes_hardness(k=9, max_value=1000, distractors=3, seed=0):
    """Yes-instance packing of the hardness construction with its planted split."""
    return json.loads(_core.generate_yes_hardness(k, max_value, distractors, seed))


def extract_partition(packing, k=0):
    return json.loads(_core.extract_partition(_dump(packing), k))


def render_svg(packing, size=600):
    return _core.render_svg(_dump(packing), size)


def profit(packing):
    by_id = {item["id"]: item["p"] for item in packing["instance"]["items"]}
    return sum(by_id[pl["id"]] for pl in packing["placements"])
