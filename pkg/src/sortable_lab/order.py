"""Weak-order lattice operations and inversion-set reconstruction."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .group import DEFAULT_CAP, CoxeterGroup, Element
from .roots import Root, in_positive_span, is_positive, simple_action


class NotAnInversionSet(ValueError):
    pass


class PeelStuck(NotAnInversionSet):
    """Nonempty remainder with no simple root in it."""


class NegativeRootProduced(NotAnInversionSet):
    pass


@dataclass(frozen=True)
class Joined:
    element: Element


@dataclass(frozen=True)
class NoJoinWithinBound:
    """No upper bound exists inside ``ball(bound)``; says nothing beyond it."""

    bound: int


JoinResult = Joined | NoJoinWithinBound


def meet(W: CoxeterGroup, u: Element, v: Element) -> Element:
    prefix = []
    while u.length and v.length:
        s = next((i for i in range(W.rank) if u.is_left_descent(i) and v.is_left_descent(i)), None)
        if s is None:
            break
        prefix.append(s)
        u = W.lmul(s, u)
        v = W.lmul(s, v)
    return W.from_word(prefix)


def meet_all(W: CoxeterGroup, A: Iterable[Element]) -> Element:
    items = list(A)
    if not items:
        raise ValueError("meet of an empty set")
    out = items[0]
    for x in items[1:]:
        out = meet(W, out, x)
    return out


def join_all_bounded(
    W: CoxeterGroup, A: Iterable[Element], L: int, cap: int = DEFAULT_CAP
) -> JoinResult:
    """Join of ``A`` if some upper bound lies in ``ball(L)``.

    The meet of all upper bounds found in the ball is the join: the true
    join sits below any of them, hence inside the ball too.
    """
    items = list(A)
    if not items:
        return Joined(W.identity())
    if L < max(x.length for x in items):
        raise ValueError("length bound is below the inputs' lengths")
    need = frozenset().union(*(W.inversions(x) for x in items))
    floor = max(len(need), max(x.length for x in items))
    uppers = [
        x for x in W.ball(L, cap)
        if x.length >= floor and need <= W.inversions(x)
    ]
    if not uppers:
        return NoJoinWithinBound(L)
    return Joined(meet_all(W, uppers))


def join_bounded(W: CoxeterGroup, u: Element, v: Element, L: int, cap: int = DEFAULT_CAP) -> JoinResult:
    return join_all_bounded(W, (u, v), L, cap)


# --------------------------------------------------------------------------
# inversion sets


def reconstruct(W: CoxeterGroup, I: Iterable[Sequence[int]]) -> Element:
    """The unique ``w`` with ``inv(w) == I``; raises :class:`NotAnInversionSet`."""
    data = W.data
    remaining = {tuple(x) for x in I}
    if any(not is_positive(x) for x in remaining):
        raise NegativeRootProduced("input contains a non-positive root")
    word = []
    while remaining:
        s = next((i for i in range(W.rank) if _is_simple(remaining, i)), None)
        if s is None:
            raise PeelStuck(f"no simple root among {len(remaining)} remaining roots")
        alpha = tuple(int(j == s) for j in range(W.rank))
        remaining.discard(alpha)
        moved = {simple_action(data, s, x) for x in remaining}
        if any(not is_positive(x) for x in moved):
            raise NegativeRootProduced(f"peeling {data.generators[s]} produced a negative root")
        remaining = moved
        word.append(s)
    return W.from_word(word)


def _is_simple(roots: set, i: int) -> bool:
    n = len(next(iter(roots)))
    return tuple(int(j == i) for j in range(n)) in roots


def is_inversion_set(W: CoxeterGroup, I: Iterable[Sequence[int]]) -> bool:
    try:
        reconstruct(W, I)
    except NotAnInversionSet:
        return False
    return True


def spanning_triples(universe: Iterable[Root]) -> list[tuple[Root, Root, Root]]:
    """All ``(r, s, t)`` with ``s`` strictly inside the positive span of ``r, t``.

    Both orders ``(r, t)`` and ``(t, r)`` are listed.
    """
    roots = sorted(set(universe))
    planes: dict[tuple[int, ...], set[Root]] = {}
    for r, t in combinations(roots, 2):
        key = _plane_key(r, t)
        if key is not None:
            planes.setdefault(key, set()).update((r, t))
    out = []
    for members in planes.values():
        if len(members) < 3:
            continue
        ordered = sorted(members)
        for r, t in combinations(ordered, 2):
            for s in ordered:
                if s != r and s != t and in_positive_span(r, t, s):
                    out.append((r, s, t))
                    out.append((t, s, r))
    out.sort()
    return out


def _plane_key(x: Sequence[int], y: Sequence[int]) -> tuple[int, ...] | None:
    """Normalized Plucker coordinates of ``span(x, y)``; None if degenerate."""
    n = len(x)
    p = [x[i] * y[j] - x[j] * y[i] for i in range(n) for j in range(i + 1, n)]
    g = gcd(*p)
    if g == 0:
        return None
    lead = next(c for c in p if c)
    if lead < 0:
        g = -g
    return tuple(c // g for c in p)


def triple_condition_check(
    I: Iterable[Sequence[int]],
    universe: Iterable[Root] | None = None,
    triples: Sequence[tuple[Root, Root, Root]] | None = None,
) -> bool:
    """No triple ``r, s, t`` meets ``I`` in exactly ``{s}`` or ``{r, t}``.

    Pass precomputed ``triples`` to check many sets against one universe.
    """
    Iset = {tuple(x) for x in I}
    if triples is None:
        if universe is None:
            raise ValueError("need a universe or precomputed triples")
        universe = set(universe) | Iset
        triples = spanning_triples(universe)
    return find_triple_violation(Iset, triples) is None


def find_triple_violation(I: set, triples) -> tuple[Root, Root, Root] | None:
    for r, s, t in triples:
        rin, sin, tin = r in I, s in I, t in I
        if sin and not rin and not tin:
            return (r, s, t)
        if rin and tin and not sin:
            return (r, s, t)
    return None
