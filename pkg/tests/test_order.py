from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import Oracle, type_a3, type_b3
from sortable_lab.order import (
    Joined,
    NegativeRootProduced,
    NoJoinWithinBound,
    PeelStuck,
    is_inversion_set,
    join_all_bounded,
    join_bounded,
    meet,
    meet_all,
    reconstruct,
    spanning_triples,
    triple_condition_check,
)


def test_meet_examples(cfg):
    _, W = cfg("a2")
    f = W.from_word
    e = W.identity()
    w = f(["s1", "s2", "s1"])
    assert meet(W, w, e) == e and meet(W, w, w) == w
    assert meet(W, f(["s1", "s2"]), f(["s2", "s1"])) == e
    assert meet(W, w, f(["s1", "s2"])) == f(["s1", "s2"])
    with pytest.raises(ValueError):
        meet_all(W, [])


def test_join_examples(cfg):
    _, W = cfg("a2")
    f = W.from_word
    u = f(["s1", "s2"])
    assert join_bounded(W, u, W.identity(), 3) == Joined(u)
    assert join_bounded(W, W.gen("s1"), W.gen("s2"), 3) == Joined(f(["s1", "s2", "s1"]))
    _, D = cfg("dihedral-infinite")
    assert join_bounded(D, D.gen("s"), D.gen("t"), 12) == NoJoinWithinBound(12)
    with pytest.raises(ValueError):
        join_bounded(W, W.gen("s1"), u, 1)


def test_reconstruct_examples(cfg):
    _, W = cfg("a2")
    assert reconstruct(W, []) == W.identity()
    assert reconstruct(W, {(0, 1), (1, 1)}) == W.from_word(["s2", "s1"])
    with pytest.raises(PeelStuck):
        reconstruct(W, {(1, 0), (0, 1)})
    with pytest.raises(PeelStuck):
        reconstruct(W, {(1, 1)})
    with pytest.raises(NegativeRootProduced):
        reconstruct(W, {(1, 0), (2, 0)})
    with pytest.raises(NegativeRootProduced):
        reconstruct(W, {(-1, 0)})
    assert not is_inversion_set(W, {(1, 0), (0, 1)})


def test_triple_condition_examples(cfg):
    _, W = cfg("a2")
    universe = {(1, 0), (0, 1), (1, 1)}
    assert triple_condition_check(set(), universe)
    assert not triple_condition_check({(1, 0), (0, 1)}, universe)
    for w in W.ball(3):
        assert triple_condition_check(W.inversions(w), universe)
    triples = spanning_triples(universe)
    assert ((1, 0), (1, 1), (0, 1)) in triples and ((0, 1), (1, 1), (1, 0)) in triples
    with pytest.raises(ValueError):
        triple_condition_check(set())


@pytest.mark.parametrize("name, model", [("a3", type_a3()), ("b3", type_b3())])
def test_meet_and_join_match_brute_force_lattice(cfg, name, model):
    c, W = cfg(name)
    oracle = Oracle(model, c.orientation.pairs())
    ball = W.ball(20)
    img = {w: oracle.word(W.word_names(w)) for w in ball}
    for u in ball[::3]:
        for v in ball:
            lower = [x for x in ball if oracle.leq(img[x], img[u]) and oracle.leq(img[x], img[v])]
            upper = [x for x in ball if oracle.leq(img[u], img[x]) and oracle.leq(img[v], img[x])]
            glb = max(lower, key=lambda x: x.length)
            lub = min(upper, key=lambda x: x.length)
            assert meet(W, u, v) == glb
            assert join_bounded(W, u, v, 20) == Joined(lub)


def test_all_subsets_of_b3_positive_roots(cfg):
    """Inversion sets are exactly the sets passing the triple test."""
    _, W = cfg("b3")
    universe = sorted({x for w in W.ball(20) for x in W.inversions(w)})
    assert len(universe) == 9
    triples = spanning_triples(universe)
    inversion_sets = {W.inversions(w) for w in W.ball(20)}
    for mask in range(1 << len(universe)):
        I = frozenset(r for k, r in enumerate(universe) if mask >> k & 1)
        assert is_inversion_set(W, I) == (I in inversion_sets)
        assert triple_condition_check(I, triples=triples) == (I in inversion_sets)


WORDS = st.lists(st.integers(0, 2), max_size=8)
NAMES = ["b3", "hyperbolic-b3-mutation", "affine-a2-cyclic"]


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(NAMES), WORDS, WORDS, WORDS)
def test_meet_laws(cfg, name, a, b, c_):
    _, W = cfg(name)
    x, y, z = W.from_word(a), W.from_word(b), W.from_word(c_)
    m = meet(W, x, y)
    assert meet(W, x, x) == x
    assert m == meet(W, y, x)
    assert meet(W, m, z) == meet(W, x, meet(W, y, z))
    assert W.weak_leq(m, x) and W.weak_leq(m, y)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(NAMES), WORDS)
def test_reconstruct_roundtrip(cfg, name, word):
    _, W = cfg(name)
    w = W.from_word(word)
    assert reconstruct(W, W.inversions(w)) == w


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(NAMES), st.lists(WORDS, min_size=1, max_size=3), st.sets(st.integers(0, 2)))
def test_parabolic_projection_commutes_with_meet(cfg, name, words, J):
    _, W = cfg(name)
    A = [W.from_word(a) for a in words]
    assert meet_all(W, [W.parabolic_proj(a, J) for a in A]) == W.parabolic_proj(meet_all(W, A), J)
    top = max(a.length for a in A)
    j = join_all_bounded(W, A, top + 4)
    if isinstance(j, Joined):
        assert all(W.weak_leq(a, j.element) for a in A)
        jJ = join_all_bounded(W, [W.parabolic_proj(a, J) for a in A], top + 4)
        assert jJ == Joined(W.parabolic_proj(j.element, J))
