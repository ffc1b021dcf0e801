"""Frame geometry, coordinate construction, and extraction."""

from __future__ import annotations

import pytest

from burling import (
    BurlingSet,
    Frame,
    FrameFamily,
    build_frames,
    extract_burling,
    frames_intersect,
    horizontal_constraints,
    horizontal_order,
    induced_graph,
    intersection_graph,
    verify_strict,
    vertical_order,
)
from burling.errors import ContractError, InputError


def fig3_set():
    return BurlingSet(
        "abcdef",
        prec=[("e", "c")],
        adj=[("b", "a"), ("c", "a"), ("d", "a"), ("f", "d")],
    )


def fig3_family():
    return FrameFamily(
        [
            Frame("a", 0, 12, 0, 28),
            Frame("b", 10, 20, 2, 6),
            Frame("c", 10, 20, 8, 16),
            Frame("d", 10, 20, 18, 26),
            Frame("e", 15, 18, 10, 14),
            Frame("f", 18, 24, 20, 24),
        ]
    )


def test_frame_validation():
    Frame("x", 0, 1, 0, 1)
    with pytest.raises(InputError):
        Frame("x", 1, 1, 0, 2)
    with pytest.raises(InputError):
        Frame("x", 0, 1, 3, 2)
    with pytest.raises(InputError):
        Frame("x", 0, 1, 0, 1.5)


def test_family_rejects_duplicate_ids():
    with pytest.raises(InputError):
        FrameFamily([Frame("x", 0, 1, 0, 1), Frame("x", 2, 3, 2, 3)])


def test_family_rejects_corner_on_frame():
    # corner (4, 2) of the second frame lies on the right edge of the first
    with pytest.raises(InputError):
        FrameFamily([Frame("x", 0, 4, 0, 4), Frame("y", 4, 8, 2, 6)])
    # sharing a full corner point counts too
    with pytest.raises(InputError):
        FrameFamily([Frame("x", 0, 4, 0, 4), Frame("y", 4, 8, 4, 8)])


def test_family_accepts_shared_coordinate_values():
    # equal left or right values are fine as long as no corner touches
    fam = fig3_family()
    assert len(fam) == 6
    assert [f.id for f in fam] == list("abcdef")


def test_frames_intersect_cases():
    a = Frame("a", 0, 4, 0, 6)
    b = Frame("b", 1, 6, 1, 5)  # crosses out of a
    c = Frame("c", 1, 3, 1, 5)  # nested in a
    d = Frame("d", 10, 11, 0, 1)  # far away
    assert frames_intersect(a, b) and frames_intersect(b, a)
    assert not frames_intersect(a, c)
    assert not frames_intersect(a, d)
    # diagonal overlap: boundaries cross even though neither nests
    e = Frame("e", 2, 8, 3, 9)
    assert frames_intersect(Frame("f", 0, 4, 0, 5), e)


def test_verify_strict_crossing_pair():
    fam = FrameFamily([Frame(0, 0, 4, 0, 6), Frame(1, 1, 6, 1, 5)])
    assert verify_strict(fam).ok


def test_verify_strict_pair_violation():
    fam = FrameFamily([Frame(0, 0, 4, 0, 4), Frame(1, 1, 5, 1, 5)])
    rep = verify_strict(fam)
    assert not rep.ok
    assert rep.violations[0].check == "pair-pattern"


def test_verify_strict_triple_violation():
    fam = FrameFamily(
        [Frame(0, 0, 4, 0, 6), Frame(1, 1, 6, 1, 5), Frame(2, 2, 3, 2, 4)]
    )
    rep = verify_strict(fam)
    assert [v.check for v in rep.violations] == ["triple-pattern"]
    assert rep.violations[0].witness == (0, 1, 2)


def test_horizontal_order_crossing_pair():
    b = BurlingSet("xy", adj=[("x", "y")])
    assert horizontal_order(b) == {"x": (2, 4), "y": (1, 3)}


def test_horizontal_order_nested_pair():
    b = BurlingSet("xy", prec=[("x", "y")])
    assert horizontal_order(b) == {"x": (2, 3), "y": (1, 4)}


def test_vertical_order_crossing_pair():
    b = BurlingSet("xy", adj=[("x", "y")])
    assert vertical_order(b) == {"x": (2, 3), "y": (1, 4)}


def test_vertical_order_star():
    b = BurlingSet(["p1", "p2", "r"], adj=[("p1", "r"), ("p2", "r")])
    assert vertical_order(b) == {"r": (1, 6), "p1": (2, 3), "p2": (4, 5)}


def test_build_frames_singleton():
    fam = build_frames(BurlingSet("x"))
    f = fam.frames[0]
    assert (f.l, f.r, f.b, f.t) == (1, 2, 1, 2)


def test_build_frames_crossing_pair():
    fam = build_frames(BurlingSet("xy", adj=[("x", "y")]))
    coords = {f.id: (f.l, f.r, f.b, f.t) for f in fam}
    assert coords == {"y": (1, 3, 1, 4), "x": (2, 4, 2, 3)}


def test_build_frames_nested_pair():
    fam = build_frames(BurlingSet("xy", prec=[("x", "y")]))
    coords = {f.id: (f.l, f.r, f.b, f.t) for f in fam}
    assert coords == {"y": (1, 4, 1, 4), "x": (2, 3, 2, 3)}


def test_extract_fig3_family():
    assert extract_burling(fig3_family()) == fig3_set()


def test_extract_rejects_non_strict():
    fam = FrameFamily([Frame(0, 0, 4, 0, 4), Frame(1, 1, 5, 1, 5)])
    with pytest.raises(InputError):
        extract_burling(fam)


def test_intersection_graph_fig3():
    g = intersection_graph(fig3_family())
    edges = sorted((u, v) for u in range(g.n) for v in g.adj[u] if u < v)
    assert edges == [(0, 1), (0, 2), (0, 3), (3, 5)]
    assert g.adj == induced_graph(fig3_set()).adj


def test_round_trip_both_modes():
    b = fig3_set()
    for linear in (False, True):
        fam = build_frames(b, linear=linear)
        assert verify_strict(fam).ok
        assert extract_burling(fam) == b
        # coordinates stay in the compact 1..2|S| band per axis
        for f in fam:
            assert 1 <= f.l < f.r <= 2 * 6
            assert 1 <= f.b < f.t <= 2 * 6


def test_linear_mode_constraint_budget():
    b = fig3_set()
    full = horizontal_constraints(b, linear=False)
    lin = horizontal_constraints(b, linear=True)
    assert set(lin) <= set(full)
    r = len(b.prec) + len(b.adj)
    assert len(lin) <= 6 * (len(b.elements) + r)


def test_horizontal_cycle_is_contract_error():
    bad = BurlingSet("xy", prec=[("x", "y"), ("y", "x")])
    with pytest.raises(ContractError):
        horizontal_order(bad)


def test_vertical_multi_parent_is_contract_error():
    bad = BurlingSet("xyz", prec=[("x", "y"), ("x", "z")])
    with pytest.raises(ContractError):
        vertical_order(bad)
