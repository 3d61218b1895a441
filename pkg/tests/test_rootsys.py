import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from weylgrid.rootsys import (
    RHO,
    Color,
    RootSystemId,
    Weight,
    cartan_matrix,
    pair,
    positive_coroot_pairings,
    simple_reflection,
    simple_roots,
    weyl_group,
)

SYSTEMS = list(RootSystemId)


def brute_force_group(sys):
    """Closure by multiplying numpy matrices over all words up to length 12."""
    gens = [np.array(simple_reflection(sys, i).matrix) for i in (0, 1)]
    found = {tuple(map(tuple, np.eye(2, dtype=int)))}
    for n in range(1, 13):
        for word in itertools.product((0, 1), repeat=n):
            m = np.eye(2, dtype=int)
            for i in word:
                m = m @ gens[i]
            found.add(tuple(map(tuple, m)))
    return found


def test_closed_enumeration():
    assert [s.value for s in RootSystemId] == ["A1xA1", "A2", "C2", "G2"]
    with pytest.raises(ValueError):
        RootSystemId.parse("B3")


@pytest.mark.parametrize("sys,alpha,beta", [
    ("A2", (2, -1), (-1, 2)),
    ("G2", (2, -1), (-3, 2)),
    ("A1xA1", (2, 0), (0, 2)),
    ("C2", (2, -1), (-2, 2)),
])
def test_simple_roots_are_cartan_rows(sys, alpha, beta):
    assert simple_roots(sys) == (Weight(*alpha), Weight(*beta))


@pytest.mark.parametrize("sys", SYSTEMS)
def test_cartan_invariants(sys):
    m = cartan_matrix(sys)
    assert m[0][0] == m[1][1] == 2
    assert m[0][0] * m[1][1] - m[0][1] * m[1][0] > 0


def test_reflection_examples():
    assert simple_reflection("A2", Color.ALPHA)((1, 0)) == (-1, 1)
    for sys in SYSTEMS:
        assert simple_reflection(sys, "alpha")((0, 1)) == (0, 1)
    assert simple_reflection("G2", "beta")((0, 1)) == (3, -1)


@pytest.mark.parametrize("sys,order", [("A1xA1", 4), ("A2", 6), ("C2", 8), ("G2", 12)])
def test_weyl_group_order_matches_brute_force(sys, order):
    W = weyl_group(sys)
    assert len(W) == order
    assert {w.matrix for w in W} == brute_force_group(sys)


@pytest.mark.parametrize("sys", SYSTEMS)
def test_weyl_group_structure(sys):
    W = weyl_group(sys)
    mats = {w.matrix for w in W}
    assert ((1, 0), (0, 1)) in mats
    for w in W:
        assert w.determinant == (-1) ** w.length
        for v in W:
            assert w.compose(v).matrix in mats
    for i in (0, 1):
        s = simple_reflection(sys, i)
        assert s.determinant == -1
        assert s.compose(s).is_identity


def test_pairing_examples():
    simple_a, simple_b = (1, 0), (0, 1)
    from weylgrid.rootsys import CorootPairing
    assert pair(CorootPairing(*simple_a), (5, -2)) == 5
    assert pair(CorootPairing(*simple_b), (5, -2)) == -2
    assert max(pair(p, RHO) for p in positive_coroot_pairings("G2")) == 5


@pytest.mark.parametrize("sys,lam_plus_rho_values", [
    ("A1xA1", lambda a, b: [a + 1, b + 1]),
    ("C2", lambda a, b: [a + 1, b + 1, a + b + 2, a + 2 * b + 3]),
    ("G2", lambda a, b: [a + 1, b + 1, a + b + 2, a + 2 * b + 3, a + 3 * b + 4, 2 * a + 3 * b + 5]),
])
def test_coroot_pairings_reproduce_closed_form(sys, lam_plus_rho_values):
    for a, b in itertools.product(range(4), repeat=2):
        got = sorted(pair(p, (a + 1, b + 1)) for p in positive_coroot_pairings(sys))
        assert got == sorted(lam_plus_rho_values(a, b))


@pytest.mark.parametrize("sys,expected", [
    ("A1xA1", [1, 1]), ("A2", [1, 1, 2]), ("C2", [1, 1, 2, 3]), ("G2", [1, 1, 2, 3, 4, 5]),
])
def test_rho_pairing_multiset(sys, expected):
    ps = positive_coroot_pairings(sys)
    assert sorted(pair(p, RHO) for p in ps) == expected
    n = len(weyl_group(sys))
    assert len(ps) == (2 if sys == "A1xA1" else n // 2)


@pytest.mark.parametrize("sys", SYSTEMS)
@given(mu=st.tuples(st.integers(-20, 20), st.integers(-20, 20)))
def test_transported_pairing_agrees(sys, mu):
    # <w mu, w alpha_i^vee> == <mu, alpha_i^vee> for every w
    for w in weyl_group(sys):
        winv = w.inverse()
        for i in (0, 1):
            transported = pair(type(positive_coroot_pairings(sys)[0])(*winv.matrix[i]), w(mu))
            assert transported == mu[i]
