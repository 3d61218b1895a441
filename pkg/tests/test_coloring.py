import json

import pytest

from weylgrid.coloring import (
    face_of_component,
    kappa,
    kappa_table,
    verify_theorem_2_1,
    verify_theorem_5_1,
)
from weylgrid.gridposet import GridPoset, GridVertex, semistandard_poset
from weylgrid.ideallattice import chain_interval_decomposition, enumerate_lattice
from weylgrid.rootsys import Color, RootSystemId
from weylgrid.weylsf import chi

SYSTEMS = [s.value for s in RootSystemId]


def lattice(sys, lam, order="ba"):
    return enumerate_lattice(semistandard_poset(sys, lam, order))


def kappa_by_definition(p, t):
    """Top of the highest-numbered chain that t does not contain."""
    missing = [k for k in range(p.num_chains) if any(not t >> i & 1 for i in p.chains[k])]
    top = max(p.chains[missing[-1]], key=lambda i: p.vertices[i].y)
    return top, p.vertices[top].color


@pytest.mark.parametrize("sys", SYSTEMS)
def test_kappa_matches_definition(sys):
    l = lattice(sys, (1, 1))
    p = l.poset
    for t in l.elements:
        if t == l.top:
            with pytest.raises(ValueError):
                kappa(l, None, t)
        else:
            assert kappa(l, None, t) == kappa_by_definition(p, t)


def test_kappa_at_bottom_is_last_chain():
    l = lattice("G2", (1, 0))
    p = l.poset
    assert kappa(l, None, 0)[0] == p.periphery[-1]
    assert kappa_table(l)[l.index[l.top]] is None


@pytest.mark.parametrize("sys", SYSTEMS)
@pytest.mark.parametrize("order", ["ba", "ab"])
def test_face_partition_holds(sys, order):
    rep = verify_theorem_5_1(lattice(sys, (2, 1), order))
    assert rep.passed, rep.to_json()
    assert [c.name for c in rep.checks] == ["v_well_formed", "face_is_face", "kappa_partition"]


def test_face_example():
    l = lattice("A2", (1, 1))
    t = 0
    v, gamma = kappa(l, None, t)
    dec = chain_interval_decomposition(l, t, gamma)
    spec = face_of_component(dec, t, v)
    assert all(s >> v & 1 for s in spec.face)
    assert spec.face | spec.sub_face == frozenset(dec.members)
    assert not spec.face & spec.sub_face


@pytest.mark.parametrize("sys", SYSTEMS)
def test_splitting_prediction(sys):
    l = lattice(sys, (1, 2))
    rep, prediction = verify_theorem_2_1(l, sys)
    assert rep.passed, rep.to_json()
    assert prediction == chi(sys, (1, 2)).chi


# -- negative controls ----------------------------------------------------------


def test_corrupted_kappa_is_caught():
    l = lattice("C2", (1, 1))
    table = kappa_table(l)
    caught_by_2_1 = 0
    for k, x in enumerate(table):
        if x is None:
            continue
        flipped = {k: x[1].other}
        # the face partition pins kappa down on every element
        assert not verify_theorem_5_1(l, kappa_override=flipped).passed
        rep, _ = verify_theorem_2_1(l, "C2", kappa_override=flipped)
        caught_by_2_1 += not rep["kappa_sub_face"].passed
    # the sub-face condition is weaker, but still sees most corruptions
    assert caught_by_2_1 >= len(l) - 2


def test_max_property_breaker_fails_face_partition():
    # two alpha vertices on separate diagonals: both maximal, same color
    p = GridPoset([GridVertex(0, 0, Color.ALPHA), GridVertex(2, 0, Color.ALPHA)])
    rep = verify_theorem_5_1(enumerate_lattice(p))
    assert not rep.passed
    assert rep["kappa_partition"].witnesses


@pytest.mark.parametrize("sys", ["A2", "C2", "G2"])
def test_single_color_flip_fails_face_partition(sys):
    p = semistandard_poset(sys, (1, 1))
    for i, u in enumerate(p.vertices):
        vs = list(p.vertices)
        vs[i] = GridVertex(u.x, u.y, u.color.other)
        rep = verify_theorem_5_1(enumerate_lattice(GridPoset(vs)))
        assert not rep.passed


def test_report_json_shape():
    rep = verify_theorem_5_1(lattice("A1xA1", (1, 1)))
    data = json.loads(rep.to_json())
    assert {c["status"] for c in data["checks"]} == {"pass"}
