"""Cartan data, diagram orientations and the Coxeter elements they define.

Generators are referred to by position (``int``) internally; every public
function that takes generators also accepts their names.

Direction convention: a stored arrow ``(b, a)`` (``b -> a``) means that
``a`` precedes ``b`` in every reduced word of ``c(Omega, J)``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations, product
from pathlib import Path
from typing import Iterable, Iterator, Sequence, Union

Gen = Union[int, str]


class CartanError(ValueError):
    """Invalid Cartan data, orientation or B-matrix."""


class CyclicSubsetError(CartanError):
    """A generator subset that was required to be acyclic is not."""


@dataclass(frozen=True)
class CartanSpec:
    generators: tuple[str, ...]
    matrix: tuple[tuple[int, ...], ...]
    delta: tuple[Fraction, ...] | None = None


def bond_order(product_: int) -> float:
    """Order of ``st`` from the integer ``A[s][t] * A[t][s]``."""
    if product_ >= 4:
        return math.inf
    return {0: 2, 1: 3, 2: 4, 3: 6}[product_]


@dataclass(frozen=True, eq=False)
class CoxeterData:
    """A validated crystallographic, symmetrizable Cartan matrix."""

    generators: tuple[str, ...]
    matrix: tuple[tuple[int, ...], ...]
    delta: tuple[Fraction, ...]

    @property
    def rank(self) -> int:
        return len(self.generators)

    @cached_property
    def edges(self) -> frozenset[frozenset[int]]:
        n = self.rank
        return frozenset(
            frozenset((i, j))
            for i, j in combinations(range(n), 2)
            if self.matrix[i][j] != 0
        )

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        A = self.matrix
        return tuple(
            tuple(j for j in range(self.rank) if j != i and A[i][j] != 0)
            for i in range(self.rank)
        )

    def m(self, s: Gen, t: Gen) -> float:
        i, j = self.index(s), self.index(t)
        if i == j:
            return 1
        return bond_order(self.matrix[i][j] * self.matrix[j][i])

    @cached_property
    def _name_index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.generators)}

    def index(self, s: Gen) -> int:
        if isinstance(s, str):
            try:
                return self._name_index[s]
            except KeyError:
                raise CartanError(f"unknown generator {s!r}") from None
        if isinstance(s, int) and 0 <= s < self.rank:
            return s
        raise CartanError(f"unknown generator {s!r}")

    def subset(self, J: Iterable[Gen]) -> frozenset[int]:
        return frozenset(self.index(s) for s in J)

    def word(self, letters: Iterable[Gen]) -> tuple[int, ...]:
        return tuple(self.index(s) for s in letters)

    def names(self, letters: Iterable[int]) -> list[str]:
        return [self.generators[i] for i in letters]

    def subset_names(self, J: Iterable[int]) -> list[str]:
        return [self.generators[i] for i in sorted(J)]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise CartanError("delta entries must be exact (int, Fraction or 'n/d' string)")
    return Fraction(x)


def _components(A: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(A)
    seen: set[int] = set()
    comps = []
    for start in range(n):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j != i and A[i][j] != 0 and j not in seen:
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def solve_delta(A: Sequence[Sequence[int]]) -> tuple[Fraction, ...]:
    """Smallest positive integer solution of ``d[i]*A[i][j] == d[j]*A[j][i]``,
    one free scale per connected component.

    Entries of ``A`` may be any exact numbers (the B-matrix solver reuses this
    with ``|B|``).  Raises :class:`CartanError` when no solution exists.
    """
    n = len(A)
    d: list[Fraction | None] = [None] * n
    for comp in _components(A):
        d[comp[0]] = Fraction(1)
        stack = [comp[0]]
        while stack:
            i = stack.pop()
            for j in comp:
                if j == i or A[i][j] == 0:
                    continue
                if A[j][i] == 0:
                    raise CartanError("zero-symmetry violated")
                value = d[i] * Fraction(A[i][j]) / Fraction(A[j][i])
                if value <= 0:
                    raise CartanError("not symmetrizable: sign mismatch")
                if d[j] is None:
                    d[j] = value
                    stack.append(j)
                elif d[j] != value:
                    raise CartanError("symmetrizability violated")
        scale = math.lcm(*(d[i].denominator for i in comp))
        ints = [int(d[i] * scale) for i in comp]
        g = math.gcd(*ints)
        for i, v in zip(comp, ints):
            d[i] = Fraction(v // g)
    return tuple(d)  # type: ignore[arg-type]


def validate(spec: CartanSpec) -> CoxeterData:
    """Check Cartan invariants and return :class:`CoxeterData`.

    Raises :class:`CartanError` naming the first violated condition, in the
    order: shape, diagonal, sign, zero-symmetry, symmetrizability,
    non-positive delta.
    """
    gens = tuple(spec.generators)
    n = len(gens)
    if len(set(gens)) != n:
        raise CartanError("generator names are not unique")
    A = spec.matrix
    if len(A) != n or any(len(row) != n for row in A):
        raise CartanError("matrix is not square with side = number of generators")
    for row in A:
        for a in row:
            if not isinstance(a, int) or isinstance(a, bool):
                raise CartanError("Cartan entries must be integers")
    A = tuple(tuple(int(a) for a in row) for row in A)
    for i in range(n):
        if A[i][i] != 2:
            raise CartanError(f"diagonal entry A[{gens[i]}][{gens[i]}] != 2")
    for i, j in product(range(n), repeat=2):
        if i != j and A[i][j] > 0:
            raise CartanError(f"sign condition violated at A[{gens[i]}][{gens[j]}]")
    for i, j in product(range(n), repeat=2):
        if (A[i][j] == 0) != (A[j][i] == 0):
            raise CartanError("zero-symmetry violated")
    if spec.delta is None:
        delta = solve_delta(A)
    else:
        if len(spec.delta) != n:
            raise CartanError("delta must have one entry per generator")
        delta = tuple(_as_fraction(x) for x in spec.delta)
        for i, j in product(range(n), repeat=2):
            if delta[i] * A[i][j] != delta[j] * A[j][i]:
                raise CartanError(
                    f"symmetrizability violated for ({gens[i]}, {gens[j]})"
                )
        if any(x <= 0 for x in delta):
            raise CartanError("delta entries must be positive")
    return CoxeterData(gens, A, delta)


@dataclass(frozen=True)
class Orientation:
    """One direction on every diagram edge; ``(src, dst)`` means ``src -> dst``."""

    data: CoxeterData
    arrows: frozenset[tuple[int, int]]

    def __post_init__(self):
        undirected = [frozenset(a) for a in self.arrows]
        if len(set(undirected)) != len(undirected):
            raise CartanError("an edge carries both directions")
        if set(undirected) != set(self.data.edges):
            raise CartanError("orientation edges differ from the diagram edges")

    @classmethod
    def from_pairs(cls, data: CoxeterData, pairs: Iterable[tuple[Gen, Gen]]) -> Orientation:
        return cls(data, frozenset((data.index(a), data.index(b)) for a, b in pairs))

    @classmethod
    def from_precedence(cls, data: CoxeterData, before: Iterable[tuple[Gen, Gen]]) -> Orientation:
        """Build from pairs ``(a, b)`` meaning "a precedes b", i.e. arrow ``b -> a``."""
        return cls(data, frozenset((data.index(b), data.index(a)) for a, b in before))

    @cached_property
    def successors(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(self.data.rank)]
        for a, b in self.arrows:
            out[a].add(b)
        return tuple(frozenset(s) for s in out)

    def has_arrow(self, a: int, b: int) -> bool:
        return (a, b) in self.arrows

    def pairs(self) -> list[tuple[str, str]]:
        g = self.data.generators
        return sorted((g[a], g[b]) for a, b in self.arrows)

    def is_acyclic(self, J: Iterable[Gen] | None = None) -> bool:
        return is_acyclic(self, J)


def all_orientations(data: CoxeterData) -> Iterator[Orientation]:
    """Every orientation of the diagram, in a fixed order."""
    edges = sorted(tuple(sorted(e)) for e in data.edges)
    for flips in product((False, True), repeat=len(edges)):
        arrows = frozenset((j, i) if f else (i, j) for (i, j), f in zip(edges, flips))
        yield Orientation(data, arrows)


@lru_cache(maxsize=None)
def _acyclic(ori: Orientation, J: frozenset[int]) -> bool:
    remaining = set(J)
    # repeatedly strip vertices with no outgoing arrow inside the set
    while remaining:
        sinks = [v for v in remaining if not (ori.successors[v] & remaining)]
        if not sinks:
            return False
        remaining.difference_update(sinks)
    return True


def is_acyclic(ori: Orientation, J: Iterable[Gen] | None = None) -> bool:
    """True iff the induced oriented subgraph on ``J`` has no directed cycle."""
    Js = frozenset(range(ori.data.rank)) if J is None else ori.data.subset(J)
    return _acyclic(ori, Js)


def _require_acyclic(ori: Orientation, J: frozenset[int]) -> None:
    if not _acyclic(ori, J):
        raise CyclicSubsetError(
            f"{ori.data.subset_names(J)} is not acyclic for this orientation"
        )


@lru_cache(maxsize=None)
def _coxeter_word(ori: Orientation, J: frozenset[int]) -> tuple[int, ...]:
    _require_acyclic(ori, J)
    remaining = set(J)
    word = []
    while remaining:
        # minimal elements: every arrow out of them leaves the set
        v = min(v for v in remaining if not (ori.successors[v] & remaining))
        word.append(v)
        remaining.remove(v)
    return tuple(word)


def coxeter_word(ori: Orientation, J: Iterable[Gen] | None = None) -> tuple[int, ...]:
    """Canonical reduced word for ``c(Omega, J)``: the linear extension of the
    precedence poset that picks the lowest-index available generator first."""
    Js = frozenset(range(ori.data.rank)) if J is None else ori.data.subset(J)
    return _coxeter_word(ori, Js)


def linear_extensions(ori: Orientation, J: Iterable[Gen]) -> Iterator[tuple[int, ...]]:
    Js = ori.data.subset(J)
    _require_acyclic(ori, Js)

    def rec(remaining: frozenset[int], prefix: tuple[int, ...]):
        if not remaining:
            yield prefix
            return
        for v in sorted(remaining):
            if not (ori.successors[v] & remaining):
                yield from rec(remaining - {v}, prefix + (v,))

    yield from rec(Js, ())


def is_linear_extension(ori: Orientation, J: Iterable[Gen], word: Sequence[Gen]) -> bool:
    Js = ori.data.subset(J)
    w = ori.data.word(word)
    if len(w) != len(Js) or set(w) != Js:
        return False
    pos = {v: k for k, v in enumerate(w)}
    return all(pos[b] < pos[a] for a, b in ori.arrows if a in Js and b in Js)


def poset_leq(ori: Orientation, J: Iterable[Gen], a: Gen, b: Gen) -> bool:
    """``a <=_J b``: ``a == b`` or a directed path ``b -> ... -> a`` inside ``J``."""
    Js = ori.data.subset(J)
    _require_acyclic(ori, Js)
    a, b = ori.data.index(a), ori.data.index(b)
    if a not in Js or b not in Js:
        raise CartanError("poset_leq arguments must lie in J")
    seen, stack = {b}, [b]
    while stack:
        v = stack.pop()
        if v == a:
            return True
        for u in ori.successors[v] & Js:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return False


def acyclic_subsets(ori: Orientation) -> list[frozenset[int]]:
    n = ori.data.rank
    out = []
    for k in range(n + 1):
        for J in combinations(range(n), k):
            Js = frozenset(J)
            if _acyclic(ori, Js):
                out.append(Js)
    return out


# --------------------------------------------------------------------------
# B-matrices


def from_b_matrix(
    B: Sequence[Sequence[int]],
    delta_hint: Sequence | None = None,
    generators: Sequence[str] | None = None,
) -> tuple[CartanSpec, Orientation]:
    """Cartan data and orientation of a skew-symmetrizable integer matrix.

    Off-diagonal Cartan entries are ``-|B[i][j]|``; an edge is directed
    ``i <- j`` (stored arrow ``j -> i``) whenever ``B[i][j] > 0``.
    """
    n = len(B)
    if any(len(row) != n for row in B):
        raise CartanError("B-matrix is not square")
    if any(not isinstance(b, int) or isinstance(b, bool) for row in B for b in row):
        raise CartanError("B-matrix entries must be integers")
    if any(B[i][i] != 0 for i in range(n)):
        raise CartanError("B-matrix is not skew-symmetrizable: nonzero diagonal")
    for i, j in product(range(n), repeat=2):
        if i != j and (B[i][j] > 0) != (B[j][i] < 0):
            raise CartanError("B-matrix is not skew-symmetrizable: sign pattern")
    absB = [[abs(b) for b in row] for row in B]
    try:
        d = solve_delta(absB)
    except CartanError as exc:
        raise CartanError(f"B-matrix is not skew-symmetrizable ({exc})") from None
    if delta_hint is not None:
        hint = tuple(_as_fraction(x) for x in delta_hint)
        if len(hint) != n or any(x <= 0 for x in hint) or any(
            hint[i] * B[i][j] != -hint[j] * B[j][i]
            for i, j in product(range(n), repeat=2)
        ):
            raise CartanError("B-matrix is inconsistent with the delta hint")
        d = hint
    gens = tuple(generators) if generators is not None else tuple(f"s{i + 1}" for i in range(n))
    A = tuple(
        tuple(2 if i == j else -abs(B[i][j]) for j in range(n)) for i in range(n)
    )
    spec = CartanSpec(gens, A, d)
    data = validate(spec)
    arrows = frozenset((j, i) for i, j in product(range(n), repeat=2) if B[i][j] > 0)
    return spec, Orientation(data, arrows)


# --------------------------------------------------------------------------
# configuration files


@dataclass(frozen=True)
class GroupConfig:
    name: str
    data: CoxeterData
    orientation: Orientation
    raw: dict

    @property
    def digest(self) -> str:
        import hashlib

        blob = json.dumps(self.raw, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]


def config_from_dict(raw: dict, name: str = "config") -> GroupConfig:
    gens = raw.get("generators")
    delta = raw.get("delta")
    if delta is not None:
        delta = [Fraction(str(x)) for x in delta]
    if "b_matrix" in raw:
        if "cartan" in raw or "orientation" in raw:
            raise CartanError("'b_matrix' replaces 'cartan' and 'orientation'")
        _, ori = from_b_matrix(raw["b_matrix"], delta, gens)
        return GroupConfig(name, ori.data, ori, raw)
    if gens is None or "cartan" not in raw:
        raise CartanError("config needs 'generators' and 'cartan' (or 'b_matrix')")
    data = validate(CartanSpec(tuple(gens), tuple(tuple(r) for r in raw["cartan"]), delta))
    ori = Orientation.from_pairs(data, [tuple(p) for p in raw.get("orientation", [])])
    return GroupConfig(name, data, ori, raw)


def load_config(path: str | Path) -> GroupConfig:
    p = Path(path)
    try:
        raw = json.loads(p.read_text())
    except json.JSONDecodeError as exc:
        raise CartanError(f"{p}: invalid JSON ({exc})") from None
    return config_from_dict(raw, p.stem)
