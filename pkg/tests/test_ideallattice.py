import itertools
import json
import math

import networkx as nx
import pytest

from oracles import brute_force_ideals, count_ideals
from weylgrid.gridposet import GridPoset, GridVertex, semistandard_poset
from weylgrid.ideallattice import (
    DecompositionError,
    LatticeTooLarge,
    chain_interval_decomposition,
    component,
    component_stats,
    enumerate_lattice,
    is_diamond_colored,
    is_M_structured,
    to_dot,
    weight,
)
from weylgrid.rootsys import Color, RootSystemId

SYSTEMS = [s.value for s in RootSystemId]


def nx_weights(l):
    """Weights from networkx connected components, independent of the union-find."""
    out = {}
    for color in Color:
        g = nx.Graph()
        g.add_nodes_from(l.elements)
        g.add_edges_from((l.elements[lo], l.elements[hi]) for lo, hi, v in l.covers
                         if l.poset.vertices[v].color is color)
        for comp in nx.connected_components(g):
            sizes = [bin(e).count("1") for e in comp]
            lo, hi = min(sizes), max(sizes)
            for e in comp:
                out.setdefault(e, [0, 0])[color.index] = 2 * (bin(e).count("1") - lo) - (hi - lo)
    return {e: tuple(w) for e, w in out.items()}


@pytest.mark.parametrize("sys", SYSTEMS)
@pytest.mark.parametrize("lam", [(1, 0), (0, 1), (1, 1)])
def test_elements_match_brute_force(sys, lam):
    p = semistandard_poset(sys, lam)
    l = enumerate_lattice(p)
    assert sorted(l.elements) == brute_force_ideals(p)
    assert l.bottom == 0 and l.top == p.full_mask


@pytest.mark.parametrize("sys,lam,size", [
    ("A2", (2, 2), 27), ("C2", (2, 2), 81), ("G2", (2, 2), 729), ("A1xA1", (3, 3), 16),
    ("A2", (1, 0), 3), ("G2", (0, 1), 14),
])
def test_sizes_match_independent_count(sys, lam, size):
    p = semistandard_poset(sys, lam)
    assert len(enumerate_lattice(p)) == size == count_ideals(p)


def test_covers_add_one_vertex():
    l = enumerate_lattice(semistandard_poset("C2", (1, 1)))
    for lo, hi, v in l.covers:
        assert l.elements[hi] == l.elements[lo] | (1 << v)
        assert not l.elements[lo] >> v & 1
    # every element but the bottom is reached by some cover
    assert {hi for _, hi, _ in l.covers} == set(range(1, len(l)))


def test_cap():
    with pytest.raises(LatticeTooLarge):
        enumerate_lattice(semistandard_poset("G2", (2, 2)), cap=100)


def test_empty_poset():
    l = enumerate_lattice(GridPoset([]))
    assert len(l) == 1 and l.weights == ((0, 0),)


@pytest.mark.parametrize("sys", SYSTEMS)
@pytest.mark.parametrize("order", ["ba", "ab"])
def test_weights_match_networkx(sys, order):
    l = enumerate_lattice(semistandard_poset(sys, (2, 1), order))
    ref = nx_weights(l)
    assert {e: tuple(weight(l, e)) for e in l.elements} == ref


def test_a2_fundamental_example():
    # J(P(1,0)) for A2 is a 3-chain: weights (1,0) -> (-1,1) -> (0,-1) from top down
    l = enumerate_lattice(semistandard_poset("A2", (1, 0)))
    by_rank = sorted(l.elements, key=l.rank)
    assert [tuple(weight(l, e)) for e in by_rank] == [(0, -1), (-1, 1), (1, 0)]
    stats = component_stats(l, by_rank[0])
    assert stats[Color.BETA].length == 1 and stats[Color.ALPHA].length == 0


@pytest.mark.parametrize("sys", SYSTEMS)
def test_m_structured_and_diamond(sys):
    l = enumerate_lattice(semistandard_poset(sys, (1, 2)))
    assert is_M_structured(l, sys) == (True, None)
    assert is_diamond_colored(l) == (True, None)


def test_m_structured_detects_wrong_cartan():
    # A2 lattice read with G2's Cartan matrix is not G2-structured
    l = enumerate_lattice(semistandard_poset("A2", (1, 1)))
    ok, witness = is_M_structured(l, "G2")
    assert not ok and witness is not None


def test_component_is_color_connected():
    l = enumerate_lattice(semistandard_poset("G2", (1, 1)))
    for e in l.elements[:50]:
        for color in Color:
            comp = set(component(l, e, color))
            assert e in comp
            for lo, hi, v in l.covers:
                if l.edge_color(v) is color:
                    assert (l.elements[lo] in comp) == (l.elements[hi] in comp)


@pytest.mark.parametrize("sys", SYSTEMS)
def test_chain_interval_decomposition(sys):
    l = enumerate_lattice(semistandard_poset(sys, (2, 1)))
    for color in Color:
        for lab in l.components[color]:
            t = l.elements[lab]
            dec = chain_interval_decomposition(l, t, color)
            members = set(dec.members)
            assert members == set(component(l, t, color))
            shape = dec.shape
            assert len(members) == math.prod(n + 1 for n in shape)
            coords = {dec.phi(s) for s in members}
            assert coords == set(itertools.product(*(range(s + 1) for s in shape)))
            for s in members:
                assert dec.element(dec.phi(s)) == s
            # phi is an order isomorphism onto the product order
            for s, u in itertools.combinations(list(members)[:40], 2):
                sub = s & u == s
                prod = all(x <= y for x, y in zip(dec.phi(s), dec.phi(u)))
                assert sub == prod


def test_decomposition_of_two_disjoint_chains():
    p = GridPoset([GridVertex(0, 0, Color.BETA), GridVertex(2, 0, Color.BETA)])
    l = enumerate_lattice(p)
    # each beta chain contributes an interval, so this is the 2x2 square and succeeds
    dec = chain_interval_decomposition(l, 0, Color.BETA)
    assert dec.shape == (1, 1)
    # asking for alpha intervals on an all-beta poset leaves a one-point component
    assert chain_interval_decomposition(l, 0, Color.ALPHA).shape in ((), (0,), (0, 0))
    assert issubclass(DecompositionError, AssertionError)


def test_json_and_dot_export():
    l = enumerate_lattice(semistandard_poset("A2", (1, 0)))
    data = json.loads(l.to_json())
    assert len(data["elements"]) == 3
    assert sorted(c[2] for c in data["covers"]) == ["alpha", "beta"]
    assert all(int(h, 16) in l.index for h in data["elements"])
    dot = to_dot(l, weights=True)
    assert dot.startswith("digraph") and dot.count("->") == 2
    assert "blue" in dot and "red" in dot
