"""Named exhaustive checks over one configuration and one length bound.

Every check iterates over all orientations of the diagram (acyclic-only
checks skip the cyclic ones) and over every element of ``ball(L)``.  Random
inputs come from a single seeded generator per check, so results depend only
on (config, L, seed, trials).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

from .cartan import (
    CartanError,
    GroupConfig,
    Orientation,
    acyclic_subsets,
    all_orientations,
    coxeter_word,
    from_b_matrix,
    is_acyclic,
    linear_extensions,
    poset_leq,
)
from .cones import cone_contains_chamber, fiber_verify, integer_rank, omega_cone_spec
from .group import DEFAULT_CAP, CoxeterGroup, Element
from .order import (
    Joined,
    is_inversion_set,
    join_all_bounded,
    meet,
    meet_all,
    reconstruct,
    spanning_triples,
    triple_condition_check,
)
from .roots import K_pair, omega, path_expansion, reflection_of_word, simple_root
from .sortable import (
    aligned_triples,
    alignment_inversion_condition,
    alignment_word_condition,
    c_sorting_word,
    check_no_chains,
    enumerate_L,
    factorization_polynomial,
    greedy_orders,
    is_c_sortable,
    max_sortable_below,
    no_chains_instances,
    omega_sorting_word,
    pi_down_c,
    pi_down_omega,
    support_J,
    verify_antimatroid,
)

PAIR_SAMPLE = 20_000
MEET_SAMPLE = 2_000


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: object = None
    timing_ms: float | None = None
    values: dict = field(default_factory=dict)

    def to_json(self, timing: bool = False) -> dict:
        out = {"name": self.name, "pass": self.passed, "witness": self.witness}
        out["timing_ms"] = round(self.timing_ms, 3) if timing and self.timing_ms is not None else None
        if self.values:
            out["values"] = self.values
        return out


class _Found(Exception):
    def __init__(self, witness):
        self.witness = witness


CHECKS: dict[str, tuple[str, Callable]] = {}


def check(name: str, module: str):
    def deco(fn):
        CHECKS[name] = (module, fn)
        return fn

    return deco


SUITES = ("cartan", "roots", "group", "order", "sortable", "cones")


def resolve_suite(suite: str) -> list[str]:
    """``all``, a module name, or a comma-separated list of check names."""
    if suite == "all":
        return list(CHECKS)
    if suite in SUITES:
        return [n for n, (mod, _) in CHECKS.items() if mod == suite]
    names = [s.strip() for s in suite.split(",") if s.strip()]
    unknown = [n for n in names if n not in CHECKS]
    if unknown or not names:
        raise KeyError(f"unknown suite or check: {', '.join(unknown) or suite!r}")
    return names


class Harness:
    def __init__(
        self,
        config: GroupConfig,
        L: int,
        cap: int = DEFAULT_CAP,
        seed: int = 0,
        trials: int = 20,
        subsets: int = 500,
    ):
        self.config = config
        self.W = CoxeterGroup(config.data)
        self.L = L
        self.cap = cap
        self.seed = seed
        self.trials = trials
        self.subsets = subsets
        own = config.orientation
        self.orientations = [own] + [o for o in all_orientations(config.data) if o != own]
        self.ball = self.W.ball(L, cap)
        self._sw: dict = {}
        self._pi: dict = {}

    # -- shared helpers -----------------------------------------------------

    @property
    def acyclic(self) -> list[Orientation]:
        return [o for o in self.orientations if o.is_acyclic()]

    def names(self, w: Element) -> list[str]:
        return self.W.word_names(w)

    def label(self, ori: Orientation) -> list[list[str]]:
        return [list(p) for p in ori.pairs()]

    def sorting(self, ori: Orientation, w: Element):
        key = (ori, w)
        sw = self._sw.get(key)
        if sw is None:
            sw = self._sw[key] = omega_sorting_word(self.W, w, ori)
        return sw

    def sortable(self, ori: Orientation, w: Element) -> bool:
        return self.sorting(ori, w).nested

    def pi(self, ori: Orientation, w: Element) -> Element:
        key = (ori, w)
        p = self._pi.get(key)
        if p is None:
            p = self._pi[key] = pi_down_omega(self.W, w, ori)
        return p

    def rng(self, name: str) -> random.Random:
        return random.Random(f"{self.seed}:{name}")

    def pairs(self, items: list, name: str, limit: int = PAIR_SAMPLE) -> Iterable[tuple]:
        n = len(items)
        if n * n <= limit:
            return [(a, b) for a in items for b in items]
        rng = self.rng(name)
        return [(items[rng.randrange(n)], items[rng.randrange(n)]) for _ in range(limit)]

    def random_subsets(self, items: list, name: str, count: int, max_size: int = 4) -> list[list]:
        rng = self.rng(name)
        return [
            [items[rng.randrange(len(items))] for _ in range(rng.randint(1, max_size))]
            for _ in range(count)
        ]

    def all_subsets(self) -> list[frozenset[int]]:
        n = self.W.rank
        return [frozenset(c) for k in range(n + 1) for c in combinations(range(n), k)]

    def universe(self, L: int | None = None) -> set:
        ball = self.ball if L is None else self.W.ball(min(L, self.L), self.cap)
        return {x for w in ball for x in self.W.inversions(w)}

    # -- running ------------------------------------------------------------

    def run(self, names: Iterable[str]) -> list[CheckResult]:
        return [self.run_one(n) for n in names]

    def run_one(self, name: str) -> CheckResult:
        _, fn = CHECKS[name]
        values: dict = {}
        t0 = time.perf_counter()
        try:
            fn(self, values)
            witness = None
        except _Found as found:
            witness = found.witness
        elapsed = (time.perf_counter() - t0) * 1000
        return CheckResult(name, witness is None, witness, elapsed, values)


def fail(**witness):
    raise _Found(witness)


# --------------------------------------------------------------------------
# cartan


@check("coxeter-element-invariance", "cartan")
def _coxeter_element_invariance(h: Harness, values: dict) -> None:
    count = 0
    for ori in h.orientations:
        for J in acyclic_subsets(ori):
            if len(J) > 6:
                continue
            target = h.W.from_word(coxeter_word(ori, J))
            for ext in linear_extensions(ori, J):
                count += 1
                w = h.W.from_word(ext)
                if w != target or w.length != len(J):
                    fail(orientation=h.label(ori), extension=h.W.data.names(ext))
    values["extensions"] = count


@check("acyclic-monotone", "cartan")
def _acyclic_monotone(h: Harness, values: dict) -> None:
    for ori in h.orientations:
        for J in h.all_subsets():
            if is_acyclic(ori, J):
                continue
            for s in range(h.W.rank):
                if is_acyclic(ori, J | {s}):
                    fail(orientation=h.label(ori), J=h.W.data.subset_names(J), added=h.W.data.generators[s])


@check("b-matrix-validate", "cartan")
def _b_matrix_validate(h: Harness, values: dict) -> None:
    data = h.W.data
    n = data.rank
    for ori in h.orientations:
        B = [[0] * n for _ in range(n)]
        for src, dst in ori.arrows:
            B[dst][src] = abs(data.matrix[dst][src])
            B[src][dst] = -abs(data.matrix[src][dst])
        spec, back = from_b_matrix(B, generators=data.generators)
        if spec.matrix != data.matrix or back.arrows != ori.arrows:
            fail(orientation=h.label(ori), b_matrix=B)
        # breaking skew-symmetry on one edge must be rejected
        if n >= 2 and data.edges:
            i, j = sorted(next(iter(sorted(data.edges, key=sorted))))
            bad = [row[:] for row in B]
            bad[i][j] = bad[j][i] = abs(B[i][j]) or 1
            try:
                from_b_matrix(bad, generators=data.generators)
            except CartanError:
                continue
            fail(orientation=h.label(ori), accepted=bad)


# --------------------------------------------------------------------------
# roots


@check("form-invariance", "roots")
def _form_invariance(h: Harness, values: dict) -> None:
    data = h.W.data
    simples = [simple_root(data, i) for i in range(h.W.rank)]
    for x, y in combinations(simples, 2):
        if K_pair(data, x, y) != K_pair(data, y, x):
            fail(x=list(x), y=list(y), reason="K not symmetric")
    for g in h.W.ball(min(h.L, 6), h.cap):
        for x in simples:
            for y in simples:
                if K_pair(data, g(x), g(y)) != K_pair(data, x, y):
                    fail(g=h.names(g), x=list(x), y=list(y))


def _small_acyclic(h: Harness, ori: Orientation, limit: int = 5):
    for J in acyclic_subsets(ori):
        if J and len(J) <= limit:
            for ext in linear_extensions(ori, J):
                yield J, ext


@check("path-expansion", "roots")
def _path_expansion(h: Harness, values: dict) -> None:
    count = 0
    for ori in h.orientations:
        for J, ext in _small_acyclic(h, ori):
            count += 1
            if path_expansion(ori, J, ext) != reflection_of_word(h.W.data, ext):
                fail(orientation=h.label(ori), extension=h.W.data.names(ext))
    values["extensions"] = count


@check("coeff-at-least-one", "roots")
def _coeff_at_least_one(h: Harness, values: dict) -> None:
    for ori in h.orientations:
        for J, ext in _small_acyclic(h, ori):
            beta = path_expansion(ori, J, ext)
            last = ext[-1]
            for r in J:
                if poset_leq(ori, J, r, last) and beta[r] < 1:
                    fail(orientation=h.label(ori), extension=h.W.data.names(ext), r=h.W.data.generators[r])


@check("omega-skew", "roots")
def _omega_skew(h: Harness, values: dict) -> None:
    roots = sorted(h.universe(min(h.L, 6)))
    values["roots"] = len(roots)
    for ori in h.orientations:
        for x in roots:
            if omega(ori, x, x) != 0:
                fail(orientation=h.label(ori), x=list(x))
        for x, y in combinations(roots, 2):
            if omega(ori, x, y) + omega(ori, y, x) != 0:
                fail(orientation=h.label(ori), x=list(x), y=list(y))


# --------------------------------------------------------------------------
# group


@check("length-equals-inversions", "group")
def _length_equals_inversions(h: Harness, values: dict) -> None:
    for w in h.ball:
        if len(h.W.inversions(w)) != w.length:
            fail(w=h.names(w), length=w.length, inversions=len(h.W.inversions(w)))


@check("canonical-words-reduced", "group")
def _canonical_words_reduced(h: Harness, values: dict) -> None:
    for w in h.ball:
        word = h.W.canonical_word(w)
        back = h.W.from_word(word)
        if back != w or back.length != len(word) or len(word) != w.length:
            fail(w=h.names(w))


@check("weak-order-crosscheck", "group")
def _weak_order_crosscheck(h: Harness, values: dict) -> None:
    pairs = h.pairs(h.ball, "weak-order-crosscheck")
    values["pairs"] = len(pairs)
    for u, v in pairs:
        if h.W.weak_leq(u, v) != (h.W.inversions(u) <= h.W.inversions(v)):
            fail(u=h.names(u), v=h.names(v))


@check("above-below", "group")
def _above_below(h: Harness, values: dict) -> None:
    count = 0
    for s in range(h.W.rank):
        # u with s not a left descent keeps s*u inside the ball only up to L-1
        below = [u for u in h.ball if not u.is_left_descent(s) and u.length < h.L]
        for u, v in h.pairs(below, f"above-below:{s}", PAIR_SAMPLE // h.W.rank):
            count += 1
            su, sv = h.W.lmul(s, u), h.W.lmul(s, v)
            if h.W.weak_leq(u, v) != h.W.weak_leq(su, sv):
                fail(s=h.W.data.generators[s], u=h.names(u), v=h.names(v))
    values["pairs"] = count


@check("parabolic-order-preserving", "group")
def _parabolic_order_preserving(h: Harness, values: dict) -> None:
    # covers suffice: the weak order is generated by them
    subsets = h.all_subsets()
    for w in h.ball:
        if w.length >= h.L:
            continue
        for s in range(h.W.rank):
            if w.is_right_descent(s):
                continue
            ws = h.W.rmul(w, s)
            for J in subsets:
                if not h.W.weak_leq(h.W.parabolic_proj(w, J), h.W.parabolic_proj(ws, J)):
                    fail(u=h.names(w), w=h.names(ws), J=h.W.data.subset_names(J))


# --------------------------------------------------------------------------
# order


@check("meet-brute-force", "order")
def _meet_brute_force(h: Harness, values: dict) -> None:
    ball = h.W.ball(min(h.L, 8), h.cap)
    pairs = h.pairs(ball, "meet-brute-force", MEET_SAMPLE)
    values["pairs"] = len(pairs)
    for u, v in pairs:
        common = h.W.inversions(u) & h.W.inversions(v)
        lower = [x for x in ball if h.W.inversions(x) <= common]
        top = max(lower, key=lambda x: x.length)
        if any(not h.W.inversions(x) <= h.W.inversions(top) for x in lower) or meet(h.W, u, v) != top:
            fail(u=h.names(u), v=h.names(v))


@check("meet-laws", "order")
def _meet_laws(h: Harness, values: dict) -> None:
    rng = h.rng("meet-laws")
    n = len(h.ball)
    for _ in range(min(PAIR_SAMPLE // 4, n * n * n)):
        a, b, c = (h.ball[rng.randrange(n)] for _ in range(3))
        if meet(h.W, a, a) != a:
            fail(law="idempotence", a=h.names(a))
        if meet(h.W, a, b) != meet(h.W, b, a):
            fail(law="commutativity", a=h.names(a), b=h.names(b))
        if meet(h.W, meet(h.W, a, b), c) != meet(h.W, a, meet(h.W, b, c)):
            fail(law="associativity", a=h.names(a), b=h.names(b), c=h.names(c))


@check("para-hom", "order")
def _para_hom(h: Harness, values: dict) -> None:
    joined = 0
    subsets = h.all_subsets()
    for A in h.random_subsets(h.ball, "para-hom", h.subsets):
        m = meet_all(h.W, A)
        j = join_all_bounded(h.W, A, h.L, h.cap)
        joined += isinstance(j, Joined)
        for J in subsets:
            AJ = [h.W.parabolic_proj(a, J) for a in A]
            if meet_all(h.W, AJ) != h.W.parabolic_proj(m, J):
                fail(op="meet", A=[h.names(a) for a in A], J=h.W.data.subset_names(J))
            if isinstance(j, Joined):
                jJ = join_all_bounded(h.W, AJ, h.L, h.cap)
                if not isinstance(jJ, Joined) or jJ.element != h.W.parabolic_proj(j.element, J):
                    fail(op="join", A=[h.names(a) for a in A], J=h.W.data.subset_names(J))
    values["joined"] = joined


@check("reconstruct-roundtrip", "order")
def _reconstruct_roundtrip(h: Harness, values: dict) -> None:
    for w in h.ball:
        if reconstruct(h.W, h.W.inversions(w)) != w:
            fail(w=h.names(w))


@check("pilkington", "order")
def _pilkington(h: Harness, values: dict) -> None:
    triples = spanning_triples(h.universe())
    rng = h.rng("pilkington")
    seen: set[frozenset] = set()
    for w in h.ball:
        inv = sorted(h.W.inversions(w))
        if len(inv) > 12:
            continue
        if len(inv) <= 8:
            cands = (frozenset(c) for k in range(len(inv) + 1) for c in combinations(inv, k))
        else:
            cands = (frozenset(x for x in inv if rng.random() < 0.5) for _ in range(256))
        for I in cands:
            if I in seen:
                continue
            seen.add(I)
            if is_inversion_set(h.W, I) != triple_condition_check(I, triples=triples):
                fail(I=[list(x) for x in sorted(I)])
    values["subsets"] = len(seen)
    values["triples"] = len(triples)


# --------------------------------------------------------------------------
# sortable


@check("antimatroid", "sortable")
def _antimatroid(h: Harness, values: dict) -> None:
    for ori in h.orientations:
        for w in h.ball:
            rep = verify_antimatroid(enumerate_L(h.W, w, ori), range(h.W.rank))
            if not (rep.ok and rep.graded_chains and rep.closure and rep.conditions_agree):
                fail(orientation=h.label(ori), w=h.names(w), report=rep.witness)
            if rep.maximum != support_J(h.W, w, ori):
                fail(orientation=h.label(ori), w=h.names(w), reason="maximum differs from J(w)")


@check("greedy-invariance", "sortable")
def _greedy_invariance(h: Harness, values: dict) -> None:
    orders = greedy_orders(h.W.rank, h.trials, h.seed)
    for ori in h.orientations:
        for w in h.ball:
            J = support_J(h.W, w, ori)
            for order in orders:
                if support_J(h.W, w, ori, order) != J:
                    fail(orientation=h.label(ori), w=h.names(w), order=h.W.data.names(order))


@check("layer-structure", "sortable")
def _layer_structure(h: Harness, values: dict) -> None:
    for ori in h.orientations:
        for w in h.ball:
            sw = h.sorting(ori, w)
            if h.W.from_word(sw.word) != w or len(sw.word) != w.length:
                fail(orientation=h.label(ori), w=h.names(w), reason="word")
            x = w
            for J in sw.layers:
                fam = enumerate_L(h.W, x, ori)
                if J not in fam or any(not K <= J for K in fam):
                    fail(orientation=h.label(ori), w=h.names(w), layer=h.W.data.subset_names(J))
                x = h.W.strip_prefix(coxeter_word(ori, J), x)


@check("pi-down", "sortable")
def _pi_down(h: Harness, values: dict) -> None:
    for ori in h.orientations:
        for w in h.ball:
            p = h.pi(ori, w)
            tag = dict(orientation=h.label(ori), w=h.names(w))
            if not h.W.weak_leq(p, w):
                fail(**tag, reason="not below")
            if h.pi(ori, p) != p:
                fail(**tag, reason="not idempotent")
            if (p == w) != h.sortable(ori, w):
                fail(**tag, reason="fixed points")
            if w.length < h.L:
                for s in range(h.W.rank):
                    if not w.is_right_descent(s):
                        up = h.W.rmul(w, s)
                        if not h.W.weak_leq(p, h.pi(ori, up)):
                            fail(**tag, above=h.names(up), reason="order")


@check("maximal-sortable", "sortable")
def _maximal_sortable(h: Harness, values: dict) -> None:
    for ori in h.orientations:
        for w in h.ball:
            if h.pi(ori, w) != max_sortable_below(h.W, w, ori):
                fail(orientation=h.label(ori), w=h.names(w))


@check("sortable-count", "sortable")
def _sortable_count(h: Harness, values: dict) -> None:
    counts = []
    for ori in h.orientations:
        direct = sum(h.sortable(ori, w) for w in h.ball)
        brute = sum(max_sortable_below(h.W, w, ori) == w for w in h.ball)
        counts.append({"orientation": h.label(ori), "acyclic": ori.is_acyclic(), "count": direct})
        if direct != brute:
            fail(orientation=h.label(ori), direct=direct, brute_force=brute)
    values["ball_size"] = len(h.ball)
    values["counts"] = counts


@check("sublattice", "sortable")
def _sublattice(h: Harness, values: dict) -> None:
    for ori in h.orientations:
        sortables = [w for w in h.ball if h.sortable(ori, w)]
        for A in h.random_subsets(sortables, f"sublattice:{h.label(ori)}", h.subsets):
            m = meet_all(h.W, A)
            if not h.sortable(ori, m):
                fail(orientation=h.label(ori), op="meet", A=[h.names(a) for a in A])
            j = join_all_bounded(h.W, A, h.L, h.cap)
            if isinstance(j, Joined) and not h.sortable(ori, j.element):
                fail(orientation=h.label(ori), op="join", A=[h.names(a) for a in A])


@check("quotient-lattice", "sortable")
def _quotient_lattice(h: Harness, values: dict) -> None:
    for ori in h.orientations:
        for A in h.random_subsets(h.ball, f"quotient-lattice:{h.label(ori)}", h.subsets):
            PA = [h.pi(ori, a) for a in A]
            if h.pi(ori, meet_all(h.W, A)) != meet_all(h.W, PA):
                fail(orientation=h.label(ori), op="meet", A=[h.names(a) for a in A])
            j = join_all_bounded(h.W, A, h.L, h.cap)
            if isinstance(j, Joined):
                jp = join_all_bounded(h.W, PA, h.L, h.cap)
                if not isinstance(jp, Joined) or jp.element != h.pi(ori, j.element):
                    fail(orientation=h.label(ori), op="join", A=[h.names(a) for a in A])


@check("same-as-acyclic", "sortable")
def _same_as_acyclic(h: Harness, values: dict) -> None:
    for ori in h.acyclic:
        cw = coxeter_word(ori)
        for w in h.ball:
            a = omega_sorting_word(h.W, w, ori, cw)
            b = c_sorting_word(h.W, w, cw)
            if a.word != b.word or a.nested != b.nested:
                fail(orientation=h.label(ori), w=h.names(w), omega=h.W.data.names(a.word), c=h.W.data.names(b.word))
            if pi_down_c(h.W, w, cw) != h.pi(ori, w):
                fail(orientation=h.label(ori), w=h.names(w), reason="projections differ")
    values["acyclic_orientations"] = len(h.acyclic)


@check("para-and-acyclic", "sortable")
def _para_and_acyclic(h: Harness, values: dict) -> None:
    for ori in h.orientations:
        for w in h.ball:
            J = support_J(h.W, w, ori)
            rhs = h.W.in_parabolic(w, J) and (not J or is_c_sortable(h.W, w, coxeter_word(ori, J)))
            if rhs != h.sortable(ori, w):
                fail(orientation=h.label(ori), w=h.names(w))


@check("sortable-restriction", "sortable")
def _sortable_restriction(h: Harness, values: dict) -> None:
    subsets = h.all_subsets()
    for ori in h.orientations:
        for v in h.ball:
            if not h.sortable(ori, v):
                continue
            for I in subsets:
                vI = h.W.parabolic_proj(v, I)
                if not h.sortable(ori, vI):
                    fail(orientation=h.label(ori), v=h.names(v), I=h.W.data.subset_names(I))


@check("alignment-forward", "sortable")
def _alignment_forward(h: Harness, values: dict) -> None:
    L = min(h.L, 6)
    universe = h.universe(L)
    values["universe_size"] = len(universe)
    for ori in h.acyclic:
        triples = aligned_triples(ori, universe)
        for v in h.W.ball(L, h.cap):
            if not h.sortable(ori, v):
                continue
            word = h.sorting(ori, v).word
            if not alignment_word_condition(h.W, word, ori).holds:
                fail(orientation=h.label(ori), v=h.names(v), condition="word")
            if not alignment_inversion_condition(h.W, v, ori, triples=triples).holds:
                fail(orientation=h.label(ori), v=h.names(v), condition="inversions")


@check("alignment-implication", "sortable")
def _alignment_implication(h: Harness, values: dict) -> None:
    L = min(h.L, 6)
    universe = h.universe()
    values["universe_size"] = len(universe)
    count = 0
    for ori in h.orientations:
        triples = aligned_triples(ori, universe)
        for word in h.W.reduced_words(L):
            if not alignment_word_condition(h.W, word, ori).holds:
                continue
            count += 1
            w = h.W.from_word(word)
            verdict = alignment_inversion_condition(h.W, w, ori, triples=triples)
            if not verdict.holds:
                fail(orientation=h.label(ori), word=h.W.data.names(word), triple=[list(x) for x in verdict.witness[:3]])
    values["words_with_word_condition"] = count


@check("no-chains", "sortable")
def _no_chains(h: Harness, values: dict) -> None:
    count = 0
    for ori in h.orientations:
        for P, Q in no_chains_instances(ori):
            count += 1
            if not check_no_chains(h.W, P, Q, ori, h.L, h.cap):
                fail(orientation=h.label(ori), P=h.W.data.subset_names(P), Q=h.W.data.subset_names(Q))
    values["instances"] = count


@check("factorization-dominant", "sortable")
def _factorization_dominant(h: Harness, values: dict) -> None:
    for ori in h.orientations:
        for w in h.W.ball(min(h.L, 8), h.cap):
            if not w.length:
                continue
            poly = factorization_polynomial(h.W, w, ori)
            comp = tuple(len(J) for J in h.sorting(ori, w).layers)
            if poly.dominant() != comp or poly.terms[comp] != 1:
                fail(orientation=h.label(ori), w=h.names(w), dominant=list(poly.dominant()))


# --------------------------------------------------------------------------
# cones


@check("fibers", "cones")
def _fibers(h: Harness, values: dict) -> None:
    for ori in h.orientations:
        rep = fiber_verify(h.W, ori, h.L, h.cap)
        if not rep.ok:
            fail(orientation=h.label(ori), violation=rep.violations[0])


@check("cone-rank", "cones")
def _cone_rank(h: Harness, values: dict) -> None:
    for ori in h.acyclic:
        for v in h.ball:
            if h.sortable(ori, v):
                spec = omega_cone_spec(h.W, v, ori)
                if spec.undefined or integer_rank(list(spec.defined.values())) != h.W.rank:
                    fail(orientation=h.label(ori), v=h.names(v))


@check("cone-self-containment", "cones")
def _cone_self_containment(h: Harness, values: dict) -> None:
    for ori in h.orientations:
        for v in h.ball:
            if h.sortable(ori, v) and not cone_contains_chamber(h.W, omega_cone_spec(h.W, v, ori), v):
                fail(orientation=h.label(ori), v=h.names(v))
