from __future__ import annotations

import pytest

from sortable_lab.cartan import all_orientations, coxeter_word
from sortable_lab.cones import (
    c_cone_root,
    cone_contains_chamber,
    fiber_verify,
    integer_rank,
    omega_cone_spec,
)
from sortable_lab.sortable import NotSortable, is_omega_sortable


def test_identity_cone_is_dominant_chamber(cfg):
    c, W = cfg("hyperbolic-b3-mutation")
    e = W.identity()
    spec = omega_cone_spec(W, e, c.orientation)
    assert spec.defined == {0: (1, 0, 0), 1: (0, 1, 0), 2: (0, 0, 1)}
    assert spec.undefined == ()
    assert cone_contains_chamber(W, spec, e)
    assert not any(cone_contains_chamber(W, spec, w) for w in W.ball(3) if w.length)
    for r in "pqr":
        assert c_cone_root(W, e, ("q", "r", "p"), r) == spec.defined[c.data.index(r)]


def test_worked_example_cones(cfg):
    c, W = cfg("hyperbolic-b3-mutation")
    v = W.from_word(["q", "r", "q"])
    assert c_cone_root(W, v, ("q", "r"), "q") == (0, -1, -2)
    assert c_cone_root(W, v, ("q", "r"), "r") == (0, 0, 1)
    spec = omega_cone_spec(W, v, c.orientation)
    assert spec.to_json(c.data.generators) == {
        "defined": {"q": [0, -1, -2], "r": [0, 0, 1]},
        "undefined": ["p"],
    }
    assert W.inversions(v) == {(0, 1, 0), (0, 1, 1), (0, 1, 2)}
    assert cone_contains_chamber(W, spec, v)


def test_cone_errors(cfg):
    c, W = cfg("a2")
    w = W.from_word(["s2", "s1"])
    with pytest.raises(NotSortable):
        c_cone_root(W, w, ("s1", "s2"), "s1")
    with pytest.raises(NotSortable):
        omega_cone_spec(W, w, c.orientation)
    with pytest.raises(ValueError):
        c_cone_root(W, W.identity(), ("s1",), "s2")


def test_acyclic_cones_are_full_rank(cfg):
    for name in ("a3", "b3"):
        c, W = cfg(name)
        for ori in all_orientations(c.data):
            for v in W.ball(20):
                if is_omega_sortable(W, v, ori):
                    spec = omega_cone_spec(W, v, ori)
                    assert not spec.undefined
                    assert integer_rank(list(spec.defined.values())) == W.rank
                    assert cone_contains_chamber(W, spec, v)


def test_integer_rank():
    assert integer_rank([]) == 0
    assert integer_rank([(1, 2), (2, 4)]) == 1
    assert integer_rank([(0, -1, -2), (0, 0, 1), (1, 0, 0)]) == 3


def test_fibers_single_point():
    from sortable_lab.configs import bundled
    from sortable_lab.group import CoxeterGroup

    c = bundled("a2")
    rep = fiber_verify(CoxeterGroup(c.data), c.orientation, 0)
    assert rep.ok and rep.pairs_checked == 1 and rep.sortable_count == 1


def test_fibers_partition_a3_all_orientations(cfg):
    c, W = cfg("a3")
    for ori in all_orientations(c.data):
        rep = fiber_verify(W, ori, 6)
        assert rep.ok and rep.ball_size == 24 and rep.sortable_count == 14


def test_fibers_partition_cyclic_b_matrix_group(cfg):
    c, W = cfg("hyperbolic-b3-mutation")
    rep = fiber_verify(W, c.orientation, 8)
    assert rep.ok and rep.ball_size == 303


def test_c_cone_root_matches_acyclic_spec(cfg):
    c, W = cfg("b3")
    ori = c.orientation
    cw = coxeter_word(ori)
    for v in W.ball(20):
        if is_omega_sortable(W, v, ori):
            spec = omega_cone_spec(W, v, ori)
            for r in range(3):
                assert spec.defined[r] == c_cone_root(W, v, cw, r)
