"""Rank-two root system data.

Weights are integer pairs over the fundamental weights (omega_alpha, omega_beta).
The simple root alpha is always the short one.  Everything here is exact
integer / rational arithmetic; no Euclidean geometry is ever materialized,
only Cartan integers and coroot pairings.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

__all__ = [
    "RootSystemId",
    "Color",
    "Weight",
    "RHO",
    "CorootPairing",
    "WeylGroupElement",
    "cartan_matrix",
    "simple_roots",
    "simple_reflection",
    "weyl_group",
    "positive_roots",
    "positive_coroot_pairings",
    "pair",
    "height2",
    "EQ1_EXPONENTS",
]


class RootSystemId(str, enum.Enum):
    A1xA1 = "A1xA1"
    A2 = "A2"
    C2 = "C2"
    G2 = "G2"

    @classmethod
    def parse(cls, name: "str | RootSystemId") -> "RootSystemId":
        if isinstance(name, cls):
            return name
        try:
            return cls(name)
        except ValueError:
            raise ValueError(f"unknown root system {name!r}; expected one of "
                             f"{[s.value for s in cls]}") from None


class Color(str, enum.Enum):
    """Simple-root labels; used both as vertex colors and edge colors."""

    ALPHA = "alpha"
    BETA = "beta"

    @property
    def index(self) -> int:
        return 0 if self is Color.ALPHA else 1

    @property
    def other(self) -> "Color":
        return Color.BETA if self is Color.ALPHA else Color.ALPHA

    @classmethod
    def parse(cls, name: "str | Color") -> "Color":
        if isinstance(name, cls):
            return name
        aliases = {"a": cls.ALPHA, "alpha": cls.ALPHA, "b": cls.BETA, "beta": cls.BETA}
        try:
            return aliases[str(name).lower()]
        except KeyError:
            raise ValueError(f"unknown color {name!r}") from None


class Weight(NamedTuple):
    """An element of the weight lattice in fundamental-weight coordinates."""

    m_alpha: int
    m_beta: int

    def __add__(self, other):  # type: ignore[override]
        return Weight(self.m_alpha + other[0], self.m_beta + other[1])

    def __sub__(self, other):
        return Weight(self.m_alpha - other[0], self.m_beta - other[1])

    def __neg__(self):
        return Weight(-self.m_alpha, -self.m_beta)

    def scale(self, k: int) -> "Weight":
        return Weight(k * self.m_alpha, k * self.m_beta)

    @property
    def is_dominant(self) -> bool:
        return self.m_alpha >= 0 and self.m_beta >= 0


RHO = Weight(1, 1)

_OFF_DIAGONAL = {
    RootSystemId.A1xA1: (0, 0),
    RootSystemId.A2: (-1, -1),
    RootSystemId.C2: (-1, -2),
    RootSystemId.G2: (-1, -3),
}


def cartan_matrix(sys: "RootSystemId | str") -> tuple[tuple[int, int], tuple[int, int]]:
    """Rows indexed by (alpha, beta): entry (i, j) is <alpha_i, alpha_j^vee>."""
    sys = RootSystemId.parse(sys)
    ab, ba = _OFF_DIAGONAL[sys]
    return ((2, ab), (ba, 2))


def simple_roots(sys: "RootSystemId | str") -> tuple[Weight, Weight]:
    m = cartan_matrix(sys)
    return Weight(*m[0]), Weight(*m[1])


Matrix2 = tuple[tuple[int, int], tuple[int, int]]


def _matmul(x: Matrix2, y: Matrix2) -> Matrix2:
    return (
        (x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
        (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]),
    )


def _det(x: Matrix2) -> int:
    return x[0][0] * x[1][1] - x[0][1] * x[1][0]


_IDENTITY: Matrix2 = ((1, 0), (0, 1))


@dataclass(frozen=True)
class WeylGroupElement:
    """A Weyl group element acting on weight coordinates (column vectors).

    Equality and hashing use the action matrix only; ``word`` is one
    minimal-length expression in the simple reflections (0 = s_alpha,
    1 = s_beta), applied right to left.
    """

    matrix: Matrix2
    word: tuple[int, ...] = ()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeylGroupElement) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def determinant(self) -> int:
        return _det(self.matrix)

    def __call__(self, mu) -> Weight:
        (a, b), (c, d) = self.matrix
        return Weight(a * mu[0] + b * mu[1], c * mu[0] + d * mu[1])

    def compose(self, other: "WeylGroupElement") -> "WeylGroupElement":
        """``self`` after ``other``."""
        return WeylGroupElement(_matmul(self.matrix, other.matrix), self.word + other.word)

    def inverse(self) -> "WeylGroupElement":
        (a, b), (c, d) = self.matrix
        det = _det(self.matrix)
        # det is +-1 so the adjugate divided by det stays integral
        inv = ((d * det, -b * det), (-c * det, a * det))
        return WeylGroupElement(inv, tuple(reversed(self.word)))

    @property
    def is_identity(self) -> bool:
        return self.matrix == _IDENTITY


def simple_reflection(sys: "RootSystemId | str", index: "int | Color | str") -> WeylGroupElement:
    """s_i(mu) = mu - <mu, alpha_i^vee> alpha_i, as an integer matrix."""
    i = index if isinstance(index, int) else Color.parse(index).index
    root = simple_roots(sys)[i]
    rows = [[1, 0], [0, 1]]
    # column i of the matrix picks up -alpha_i
    rows[0][i] -= root[0]
    rows[1][i] -= root[1]
    return WeylGroupElement(((rows[0][0], rows[0][1]), (rows[1][0], rows[1][1])), (i,))


WEYL_GROUP_BOUND = 100


@lru_cache(maxsize=None)
def weyl_group(sys: "RootSystemId | str") -> tuple[WeylGroupElement, ...]:
    """All elements by breadth-first closure, so each stored word is minimal.

    Raises RuntimeError if the closure exceeds ``WEYL_GROUP_BOUND`` elements.
    """
    sys = RootSystemId.parse(sys)
    gens = [simple_reflection(sys, 0), simple_reflection(sys, 1)]
    identity = WeylGroupElement(_IDENTITY, ())
    seen = {identity.matrix: identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                sw = s.compose(w)
                if sw.matrix not in seen:
                    seen[sw.matrix] = sw
                    nxt.append(sw)
                    if len(seen) > WEYL_GROUP_BOUND:
                        raise RuntimeError(f"Weyl group closure for {sys.value} exceeded "
                                           f"{WEYL_GROUP_BOUND} elements")
        frontier = nxt
    return tuple(sorted(seen.values(), key=lambda w: (w.length, w.word)))


def _to_simple_root_coords(sys: RootSystemId, mu) -> tuple[Fraction, Fraction]:
    """Solve mu = k_alpha * alpha + k_beta * beta exactly."""
    (a, b), (c, d) = cartan_matrix(sys)
    det = Fraction(a * d - b * c)
    # row vector k with k @ M = mu
    return ((mu[0] * d - mu[1] * c) / det, (mu[1] * a - mu[0] * b) / det)


def is_positive_root(sys: "RootSystemId | str", mu) -> bool:
    k = _to_simple_root_coords(RootSystemId.parse(sys), mu)
    return k[0] >= 0 and k[1] >= 0 and (k[0], k[1]) != (0, 0)


@lru_cache(maxsize=None)
def positive_roots(sys: "RootSystemId | str") -> tuple[Weight, ...]:
    """Positive roots in omega-coordinates, as W-images of simple roots."""
    sys = RootSystemId.parse(sys)
    found = set()
    for w in weyl_group(sys):
        for root in simple_roots(sys):
            r = w(root)
            if is_positive_root(sys, r):
                found.add(r)
    return tuple(sorted(found, key=lambda r: (sum(_to_simple_root_coords(sys, r)), r)))


class CorootPairing(NamedTuple):
    """The functional mu -> c_alpha * m_alpha + c_beta * m_beta."""

    c_alpha: int
    c_beta: int


def pair(p: CorootPairing, mu) -> int:
    return p.c_alpha * mu[0] + p.c_beta * mu[1]


@lru_cache(maxsize=None)
def positive_coroot_pairings(sys: "RootSystemId | str") -> tuple[CorootPairing, ...]:
    """One pairing per positive root alpha: mu -> <mu, alpha^vee>.

    For alpha = w(alpha_i) we have <mu, alpha^vee> = <w^-1 mu, alpha_i^vee>,
    i.e. the i-th row of the matrix of w^-1.
    """
    sys = RootSystemId.parse(sys)
    by_root: dict[Weight, CorootPairing] = {}
    for w in weyl_group(sys):
        winv = w.inverse().matrix
        for i, root in enumerate(simple_roots(sys)):
            image = w(root)
            if is_positive_root(sys, image):
                p = CorootPairing(*winv[i])
                prev = by_root.setdefault(image, p)
                if prev != p:
                    raise AssertionError(f"inconsistent coroot for root {image}")
    return tuple(sorted(set(by_root.values()), key=lambda p: (pair(p, RHO), p)))


def height2(sys: "RootSystemId | str", mu) -> int:
    """2<mu, rho^vee>: the sum of all positive coroot pairings of mu."""
    return sum(pair(p, mu) for p in positive_coroot_pairings(sys))


# Closed-form exponent tables as linear forms (c_a, c_b, c_0) -> c_a*a + c_b*b + c_0.
# Kept separate from the generic computation above on purpose; the two are
# cross-checked in the tests.
EQ1_EXPONENTS: dict[RootSystemId, tuple[tuple[tuple[int, int, int], ...], tuple[int, ...]]] = {
    RootSystemId.A1xA1: (((1, 0, 1), (0, 1, 1)), (1, 1)),
    RootSystemId.A2: (((1, 0, 1), (0, 1, 1), (1, 1, 2)), (1, 1, 2)),
    RootSystemId.C2: (((1, 0, 1), (0, 1, 1), (1, 1, 2), (1, 2, 3)), (1, 1, 2, 3)),
    RootSystemId.G2: (
        ((1, 0, 1), (0, 1, 1), (1, 1, 2), (1, 2, 3), (1, 3, 4), (2, 3, 5)),
        (1, 1, 2, 3, 4, 5),
    ),
}
