"""Cambrian cone walls and the chamber-containment test for fibers.

Nothing geometric is materialized.  A chamber ``wD`` lies on the positive
side of a wall with root ``+beta`` iff ``beta`` is not an inversion of ``w``,
and on the positive side of ``-beta`` iff it is.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cartan import Gen, Orientation, coxeter_word, is_acyclic
from .group import DEFAULT_CAP, CoxeterGroup, Element
from .roots import Root, is_positive, neg
from .sortable import (
    NotSortable,
    _c_scan,
    is_c_sortable,
    is_omega_sortable,
    pi_down_omega,
    support_J,
)


@dataclass(frozen=True)
class ConeSpec:
    defined: dict[int, Root]
    undefined: tuple[int, ...]

    def to_json(self, generators: Sequence[str]) -> dict:
        return {
            "defined": {generators[r]: list(c) for r, c in sorted(self.defined.items())},
            "undefined": [generators[r] for r in self.undefined],
        }


def c_cone_root(W: CoxeterGroup, v: Element, c_word: Sequence[Gen], r: Gen) -> Root:
    """``a_1 ... a_i alpha_r`` where the first unused copy of ``r`` in
    ``c^infinity`` sits after sorting-word letter ``a_i``."""
    cw = W.data.word(c_word)
    r = W.data.index(r)
    if r not in cw:
        raise ValueError("r must occur in the c-word")
    if not is_c_sortable(W, v, cw):
        raise NotSortable("v is not c-sortable")
    positions, letters = _c_scan(W, v, cw)
    used = set(positions)
    n = len(cw)
    p = cw.index(r)
    while p in used:
        p += n
    i = sum(1 for q in positions if q < p)
    prefix = W.from_word(letters[:i])
    return prefix(tuple(int(j == r) for j in range(W.rank)))


def omega_cone_spec(W: CoxeterGroup, v: Element, ori: Orientation) -> ConeSpec:
    if not is_omega_sortable(W, v, ori):
        raise NotSortable("v is not Omega-sortable")
    J = support_J(W, v, ori)
    defined, undefined = {}, []
    for r in range(W.rank):
        K = J | {r}
        if is_acyclic(ori, K):
            defined[r] = c_cone_root(W, v, coxeter_word(ori, K), r)
        else:
            undefined.append(r)
    return ConeSpec(defined, tuple(undefined))


def cone_contains_chamber(W: CoxeterGroup, spec: ConeSpec, w: Element) -> bool:
    inv = W.inversions(w)
    for root in spec.defined.values():
        if is_positive(root):
            if root in inv:
                return False
        elif neg(root) not in inv:
            return False
    return True


@dataclass
class FiberReport:
    ball_size: int
    sortable_count: int
    pairs_checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def fiber_verify(W: CoxeterGroup, ori: Orientation, L: int, cap: int = DEFAULT_CAP) -> FiberReport:
    ball = W.ball(L, cap)
    sortables = [v for v in ball if is_omega_sortable(W, v, ori)]
    specs = [(v, omega_cone_spec(W, v, ori)) for v in sortables]
    report = FiberReport(len(ball), len(sortables))
    for w in ball:
        target = pi_down_omega(W, w, ori)
        hits = 0
        for v, spec in specs:
            inside = cone_contains_chamber(W, spec, w)
            report.pairs_checked += 1
            hits += inside
            if inside != (v == target):
                report.violations.append(
                    {"w": W.word_names(w), "v": W.word_names(v), "in_cone": inside}
                )
        if hits != 1 and len(report.violations) < 50:
            report.violations.append({"w": W.word_names(w), "cones_containing": hits})
    return report


def integer_rank(vectors: Sequence[Sequence[int]]) -> int:
    """Rank by exact row reduction."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank
