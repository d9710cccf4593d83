"""Bundled group configurations."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from ..cartan import CartanError, GroupConfig, config_from_dict, load_config

BUNDLED = (
    "a2",
    "a3",
    "b3",
    "affine-a2-cyclic",
    "hyperbolic-b3-mutation",
    "s5-family",
    "dihedral-infinite",
)

# length bounds used when none is given; finite groups are covered entirely
DEFAULT_LENGTH = {
    "a2": 3,
    "a3": 6,
    "b3": 9,
    "affine-a2-cyclic": 10,
    "hyperbolic-b3-mutation": 8,
    "s5-family": 6,
    "dihedral-infinite": 12,
}


def family_dict(d: int) -> dict:
    """Config dict for the rank ``d + 2`` family with cyclic precedence
    ``p < q_i < r < p`` (arrow ``b -> a`` when ``a`` precedes ``b``)."""
    if d < 1:
        raise CartanError("d must be at least 1")
    qs = [f"q{i}" for i in range(1, d + 1)]
    gens = ["p", *qs, "r"]
    n = len(gens)
    A = [[2 if i == j else -1 for j in range(n)] for i in range(n)]
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            if i != j:
                A[i][j] = 0
    arrows = [[q, "p"] for q in qs] + [["r", q] for q in qs] + [["p", "r"]]
    return {"generators": gens, "cartan": A, "delta": ["1"] * n, "orientation": arrows}


def bundled(name: str, d: int = 1) -> GroupConfig:
    if name == "s5-family":
        return config_from_dict(family_dict(d), f"s5-family-d{d}")
    if name not in BUNDLED:
        raise CartanError(f"unknown bundled config {name!r}")
    raw = json.loads(resources.files(__package__).joinpath(f"{name}.json").read_text())
    return config_from_dict(raw, name)


def resolve(spec: str, d: int = 1) -> GroupConfig:
    """A bundled name (with or without ``.json``) or a path to a config file."""
    path = Path(spec)
    if path.is_file():
        return load_config(path)
    stem = spec[:-5] if spec.endswith(".json") else spec
    if stem in BUNDLED:
        return bundled(stem, d)
    raise CartanError(f"config {spec!r} is neither a file nor a bundled config")


def default_length(config: GroupConfig) -> int:
    base = config.name.split("-d")[0] if config.name.startswith("s5-family") else config.name
    return DEFAULT_LENGTH.get(base, 6)
