"""Omega-sorting: the family L(w, Omega), layer sequences, sortability,
the downward projections, alignment conditions and factorizations.

All functions take the group ``W`` explicitly next to the orientation.
Generator subsets are ``frozenset[int]``.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .cartan import (
    CartanError,
    CartanSpec,
    Gen,
    Orientation,
    acyclic_subsets,
    config_from_dict,
    coxeter_word,
    is_acyclic,
    is_linear_extension,
    validate,
)
from .group import DEFAULT_CAP, CoxeterGroup, Element
from .order import spanning_triples
from .roots import Root, omega, reflections_commute


class NonUniqueMaximum(AssertionError):
    """The sortable elements below ``w`` have no unique maximum."""


class HypothesisNotSatisfied(ValueError):
    pass


class TooManyTerms(RuntimeError):
    pass


class NotSortable(ValueError):
    pass


# --------------------------------------------------------------------------
# L(w, Omega) and J(w, Omega)


@lru_cache(maxsize=None)
def _acyclic_nonempty(ori: Orientation) -> tuple[frozenset[int], ...]:
    return tuple(J for J in acyclic_subsets(ori) if J)


def coxeter_leq(W: CoxeterGroup, ori: Orientation, J: Iterable[Gen], w: Element) -> bool:
    """``c(Omega, J) <= w``."""
    return W.word_is_prefix(coxeter_word(ori, J), w)


def enumerate_L(W: CoxeterGroup, w: Element, ori: Orientation) -> list[frozenset[int]]:
    """Every acyclic ``J`` with ``c(Omega, J) <= w``, including the empty set."""
    out = [frozenset()]
    for J in _acyclic_nonempty(ori):
        if len(J) <= w.length and W.word_is_prefix(coxeter_word(ori, J), w):
            out.append(J)
    return out


def support_J(
    W: CoxeterGroup, w: Element, ori: Orientation, order: Sequence[int] | None = None
) -> frozenset[int]:
    """``J(w, Omega)`` by greedy augmentation.

    ``order`` fixes the scan order of candidate generators (ascending index
    by default); the result does not depend on it.
    """
    scan = list(range(W.rank)) if order is None else list(order)
    J: frozenset[int] = frozenset()
    grown = True
    while grown:
        grown = False
        for s in scan:
            if s in J:
                continue
            K = J | {s}
            if is_acyclic(ori, K) and W.word_is_prefix(coxeter_word(ori, K), w):
                J = K
                grown = True
    return J


@dataclass
class AntimatroidReport:
    ground: frozenset
    family: list[frozenset]
    axiom1: bool
    axiom2: bool
    graded_chains: bool
    closure: bool
    witness: dict | None = None
    maximum: frozenset | None = None

    @property
    def ok(self) -> bool:
        return self.axiom1 and self.axiom2

    @property
    def conditions_agree(self) -> bool:
        return (self.axiom1 and self.axiom2) == (
            self.axiom1 and self.graded_chains and self.closure
        )


def verify_antimatroid(family: Iterable[Iterable], ground: Iterable) -> AntimatroidReport:
    """Check axioms (1), (2) and, independently, the chain and closure conditions."""
    fam = sorted({frozenset(X) for X in family}, key=lambda X: (len(X), sorted(X)))
    famset = set(fam)
    E = frozenset(ground)
    witness: dict = {}

    axiom1 = frozenset() in famset
    if not axiom1:
        witness.setdefault("axiom1", "empty set missing")

    axiom2 = True
    for Y in fam:
        for Z in fam:
            if not Z <= Y and not any(Y | {x} in famset for x in Z - Y):
                axiom2 = False
                witness.setdefault("axiom2", {"Y": sorted(Y), "Z": sorted(Z)})
                break
        if not axiom2:
            break

    graded = True
    for Y in fam:
        for Z in fam:
            if Y <= Z and not _has_chain(Y, Z, famset):
                graded = False
                witness.setdefault("chain", {"Y": sorted(Y), "Z": sorted(Z)})
                break
        if not graded:
            break

    closure = True
    for X in fam:
        ups = [y for y in E - X if X | {y} in famset]
        for y, z in combinations(ups, 2):
            if X | {y, z} not in famset:
                closure = False
                witness.setdefault("closure", {"X": sorted(X), "y": y, "z": z})
                break
        if not closure:
            break

    report = AntimatroidReport(E, fam, axiom1, axiom2, graded, closure, witness or None)
    if report.ok:
        maximal = [X for X in fam if not any(X < Y for Y in fam)]
        if len(maximal) == 1:
            report.maximum = maximal[0]
        else:
            report.witness = {"maximal": [sorted(X) for X in maximal]}
    return report


def _has_chain(Y: frozenset, Z: frozenset, famset: set) -> bool:
    layer = {Y}
    while layer:
        if Z in layer:
            return True
        layer = {X | {x} for X in layer for x in Z - X if X | {x} in famset}
    return False


def coxeter_element(W: CoxeterGroup, ori: Orientation, J: Iterable[Gen]) -> Element:
    return W.from_word(coxeter_word(ori, J))


# --------------------------------------------------------------------------
# sorting words


@dataclass(frozen=True)
class SortingWord:
    word: tuple[int, ...]
    layers: tuple[frozenset[int], ...]

    @property
    def nested(self) -> bool:
        return all(b <= a for a, b in zip(self.layers, self.layers[1:]))


def omega_sorting_word(
    W: CoxeterGroup, w: Element, ori: Orientation, extension: Sequence[Gen] | None = None
) -> SortingWord:
    """Layers ``J_1, J_2, ...`` and the word listing each ``c(Omega, J_i)``.

    Each layer is spelled by the canonical linear extension, or by the order
    it inherits from ``extension`` (a total order of generators) if given.
    """
    rank = None if extension is None else {s: k for k, s in enumerate(W.data.word(extension))}
    word: list[int] = []
    layers = []
    while w.length:
        J = support_J(W, w, ori)
        if rank is None:
            cw = coxeter_word(ori, J)
        else:
            cw = tuple(sorted(J, key=rank.__getitem__))
            if not is_linear_extension(ori, J, cw):
                raise CartanError("extension does not restrict to a linear extension of a layer")
        word.extend(cw)
        layers.append(J)
        w = W.strip_prefix(cw, w)
    return SortingWord(tuple(word), tuple(layers))


def is_omega_sortable(W: CoxeterGroup, w: Element, ori: Orientation) -> bool:
    return omega_sorting_word(W, w, ori).nested


def _c_scan(W: CoxeterGroup, w: Element, c_word: Sequence[int]):
    """Greedy scan of ``c^infinity``; returns (taken positions, letters)."""
    n = len(c_word)
    if n == 0 or len(set(c_word)) != n:
        raise ValueError("c-word must list distinct generators")
    positions, letters = [], []
    p = 0
    idle = 0
    while w.length:
        s = c_word[p % n]
        if w.is_left_descent(s):
            positions.append(p)
            letters.append(s)
            w = W.lmul(s, w)
            idle = 0
        else:
            idle += 1
            if idle > n:
                raise ValueError("element does not lie in the parabolic of the c-word")
        p += 1
    return positions, letters


def c_sorting_word(W: CoxeterGroup, w: Element, c_word: Sequence[Gen]) -> SortingWord:
    """The lexicographically first reduced subword of ``(s_1...s_n)^infinity``."""
    cw = W.data.word(c_word)
    positions, letters = _c_scan(W, w, cw)
    n = len(cw)
    blocks: dict[int, set[int]] = {}
    for p, s in zip(positions, letters):
        blocks.setdefault(p // n, set()).add(s)
    nblocks = (positions[-1] // n + 1) if positions else 0
    layers = tuple(frozenset(blocks.get(k, ())) for k in range(nblocks))
    return SortingWord(tuple(letters), layers)


def is_c_sortable(W: CoxeterGroup, w: Element, c_word: Sequence[Gen]) -> bool:
    return c_sorting_word(W, w, c_word).nested


# --------------------------------------------------------------------------
# projections


def pi_down_omega(W: CoxeterGroup, w: Element, ori: Orientation) -> Element:
    """``pi(w) = c(Omega, J) pi(c(Omega, J)^{-1} w_J)`` with ``J = J(w, Omega)``."""
    word: list[int] = []
    while w.length:
        J = support_J(W, w, ori)
        cw = coxeter_word(ori, J)
        word.extend(cw)
        w = W.strip_prefix(cw, W.parabolic_proj(w, J))
    return W.from_word(word)


def pi_down_c(W: CoxeterGroup, w: Element, c_word: Sequence[Gen]) -> Element:
    """Stepwise projection for an acyclic orientation given by a Coxeter word.

    Letter ``s_i`` joins ``J`` when ``w >= c(J) s_i``; then recurse on
    ``(c(J)^{-1} w)_J`` with the c-word restricted to ``J``.
    """
    cw = W.data.word(c_word)
    prefix: list[int] = []
    while w.length and cw:
        J: list[int] = []
        for s in cw:
            if W.word_is_prefix(J + [s], w):
                J.append(s)
        if not J:
            break
        prefix.extend(J)
        w = W.parabolic_proj(W.strip_prefix(J, w), J)
        Jset = set(J)
        cw = tuple(s for s in cw if s in Jset)
    return W.from_word(prefix)


def max_sortable_below(W: CoxeterGroup, w: Element, ori: Orientation) -> Element:
    """Brute force: the maximum of the sortable elements in ``[e, w]``."""
    below = [u for u in W.lower_interval(w) if is_omega_sortable(W, u, ori)]
    top = max(below, key=lambda u: u.length)
    invs = W.inversions(top)
    if any(not W.inversions(u) <= invs for u in below):
        raise NonUniqueMaximum(f"no unique maximal sortable element below {W.word_names(w)}")
    return top


# --------------------------------------------------------------------------
# No Chains


def no_chains_hypothesis(ori: Orientation, P: frozenset[int], Q: frozenset[int]) -> tuple[int, int] | None:
    """A pair ``(p, q)`` with paths ``p ~> q`` in ``P+{q}`` and ``q ~> p`` in ``Q+{p}``."""

    def reach(src: int, dst: int, inside: frozenset[int]) -> bool:
        seen, stack = {src}, [src]
        while stack:
            v = stack.pop()
            if v == dst:
                return True
            for u in ori.successors[v] & inside:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return False

    for p in sorted(P):
        for q in sorted(Q):
            if reach(p, q, P | {q}) and reach(q, p, Q | {p}):
                return p, q
    return None


def check_no_chains(
    W: CoxeterGroup, P: Iterable[Gen], Q: Iterable[Gen], ori: Orientation, L: int,
    cap: int = DEFAULT_CAP,
) -> bool:
    """True iff nothing in ``ball(L)`` lies above both ``c(Omega, P)`` and ``c(Omega, Q)``."""
    Ps, Qs = W.data.subset(P), W.data.subset(Q)
    if not Ps or not Qs or Ps & Qs:
        raise HypothesisNotSatisfied("P and Q must be nonempty and disjoint")
    if not (is_acyclic(ori, Ps) and is_acyclic(ori, Qs)):
        raise HypothesisNotSatisfied("P and Q must be acyclic")
    if no_chains_hypothesis(ori, Ps, Qs) is None:
        raise HypothesisNotSatisfied("no p in P, q in Q with the required oriented paths")
    need = W.inversions(coxeter_element(W, ori, Ps)) | W.inversions(coxeter_element(W, ori, Qs))
    return not any(need <= W.inversions(x) for x in W.ball(L, cap) if x.length >= len(need))


def no_chains_instances(ori: Orientation) -> list[tuple[frozenset[int], frozenset[int]]]:
    acyc = _acyclic_nonempty(ori)
    out = []
    for P in acyc:
        for Q in acyc:
            if not (P & Q) and no_chains_hypothesis(ori, P, Q) is not None:
                out.append((P, Q))
    return out


# --------------------------------------------------------------------------
# alignment


@dataclass
class AlignmentVerdict:
    holds: bool
    witness: tuple | None = None


def alignment_word_condition(W: CoxeterGroup, word: Sequence[Gen], ori: Orientation) -> AlignmentVerdict:
    """For ``i < j``: ``omega(beta_i, beta_j) >= 0``, strictly unless ``t_i, t_j`` commute."""
    w = W.data.word(word)
    if not W.is_reduced(w):
        raise ValueError("word is not reduced")
    betas = W.inversion_list(w)
    data = W.data
    for i, j in combinations(range(len(betas)), 2):
        val = omega(ori, betas[i], betas[j])
        if val < 0 or (val == 0 and not reflections_commute(data, betas[i], betas[j])):
            return AlignmentVerdict(False, (i, j, betas[i], betas[j], val))
    return AlignmentVerdict(True)


ALLOWED_PATTERNS = ((0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1), (0, 0, 1))


def aligned_triples(ori: Orientation, universe: Iterable[Root]) -> list[tuple[Root, Root, Root]]:
    """Spanning triples ``(r, s, t)`` of the universe with ``omega(r, t) >= 0``."""
    return [tr for tr in spanning_triples(universe) if omega(ori, tr[0], tr[2]) >= 0]


def alignment_inversion_condition(
    W: CoxeterGroup,
    w: Element,
    ori: Orientation,
    universe: Iterable[Root] | None = None,
    triples: Sequence[tuple[Root, Root, Root]] | None = None,
) -> AlignmentVerdict:
    """Five-pattern condition on ``inv(w)`` over a finite root universe."""
    inv = W.inversions(w)
    if triples is None:
        if universe is None:
            raise ValueError("need a universe or precomputed triples")
        triples = aligned_triples(ori, set(universe) | inv)
    for r, s, t in triples:
        pattern = (int(r in inv), int(s in inv), int(t in inv))
        if pattern not in ALLOWED_PATTERNS:
            return AlignmentVerdict(False, (r, s, t, pattern))
    return AlignmentVerdict(True)


# --------------------------------------------------------------------------
# the rank d+2 family


def family_group(d: int) -> tuple[CoxeterGroup, Orientation]:
    """Generators ``p, q1..qd, r``; the ``q_i`` commute, every other pair has
    ``A = -1``; precedence ``p < q_i < r < p``."""
    from .configs import family_dict

    if d < 1:
        raise ValueError("d must be at least 1")
    cfg = config_from_dict(family_dict(d), f"s5-family-d{d}")
    return CoxeterGroup(cfg.data), cfg.orientation


def counterexample_family(d: int, universe_length: int = 6) -> dict:
    W, ori = family_group(d)
    data = W.data
    word = tuple(range(d + 2))
    w = W.from_word(word)
    betas = W.inversion_list(word)
    labels = ["beta1"] + [f"beta2^{i}" for i in range(1, d + 1)] + ["beta3"]
    omega_matrix = {
        f"{labels[i]},{labels[j]}": omega(ori, betas[i], betas[j])
        for i, j in combinations(range(len(betas)), 2)
    }
    universe = {x for u in W.ball(universe_length) for x in W.inversions(u)}
    sw = omega_sorting_word(W, w, ori)
    return {
        "d": d,
        "generators": list(data.generators),
        "word": data.names(word),
        "inversion_roots": dict(zip(labels, [list(b) for b in betas])),
        "omega": omega_matrix,
        "J": data.subset_names(support_J(W, w, ori)),
        "layers": [data.subset_names(J) for J in sw.layers],
        "sortable": sw.nested,
        "word_condition": alignment_word_condition(W, word, ori),
        "inversion_condition": alignment_inversion_condition(W, w, ori, universe),
        "universe_size": len(universe),
    }


def remark_group(X: int, Y: int, Z: int) -> tuple[CoxeterGroup, Orientation]:
    """Rank 3, symmetric Cartan entries ``-X, -Y, -Z`` (all ``>= 2``), cyclic
    precedence ``p < q < r < p``."""
    if min(X, Y, Z) < 2:
        raise ValueError("X, Y, Z must be at least 2")
    A = ((2, -X, -Y), (-X, 2, -Z), (-Y, -Z, 2))
    data = validate(CartanSpec(("p", "q", "r"), A, (Fraction(1),) * 3))
    ori = Orientation.from_precedence(data, [("p", "q"), ("q", "r"), ("r", "p")])
    return CoxeterGroup(data), ori


# --------------------------------------------------------------------------
# factorizations


@dataclass
class FactorizationPolynomial:
    terms: Counter = field(default_factory=Counter)

    def dominant(self) -> tuple[int, ...]:
        return max(self.terms)

    def monomials(self) -> list[str]:
        out = []
        for comp, mult in sorted(self.terms.items(), reverse=True):
            mono = " ".join(f"x{i + 1}^{k}" if k != 1 else f"x{i + 1}" for i, k in enumerate(comp))
            out.append(f"{mult}*{mono or '1'}" if mult != 1 else (mono or "1"))
        return out


def factorization_polynomial(
    W: CoxeterGroup, w: Element, ori: Orientation, max_terms: int = 100_000
) -> FactorizationPolynomial:
    """All length-additive factorizations into nonempty acyclic Coxeter elements."""
    memo: dict[Element, Counter] = {}
    total = 0

    def rec(x: Element) -> Counter:
        nonlocal total
        if x in memo:
            return memo[x]
        if x.length == 0:
            return Counter({(): 1})
        out: Counter = Counter()
        for J in enumerate_L(W, x, ori)[1:]:
            rest = rec(W.strip_prefix(coxeter_word(ori, J), x))
            for comp, m in rest.items():
                out[(len(J),) + comp] += m
        total += sum(out.values())
        if total > max_terms:
            raise TooManyTerms(max_terms)
        memo[x] = out
        return out

    return FactorizationPolynomial(rec(w))


# --------------------------------------------------------------------------
# randomized greedy check


def greedy_orders(rank: int, trials: int, seed: int) -> list[list[int]]:
    rng = random.Random(seed)
    orders = []
    for _ in range(trials):
        o = list(range(rank))
        rng.shuffle(o)
        orders.append(o)
    return orders
