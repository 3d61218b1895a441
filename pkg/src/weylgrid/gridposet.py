"""Two-color grid posets embedded in the integer plane.

A poset is a set of colored lattice points.  Everything else is derived
from coordinates:

* chains are the occupied diagonals ``x - y = const``, numbered 1..m by
  increasing ``x - y`` (upper-left to lower-right);
* covers are consecutive vertices along a diagonal (the chain step, possibly
  spanning a gap in the drawing) together with unit ``(-1, +1)`` steps from
  one diagonal up into the diagonal on its left.

Vertices are indexed in a fixed topological order (by ``(y, x)``), which is
also the bit order used for order ideals.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

import networkx as nx

from weylgrid import _figures
from weylgrid.rootsys import Color, RootSystemId

__all__ = [
    "GridVertex",
    "GridPoset",
    "Lambda2",
    "FundamentalOrder",
    "ValidationReport",
    "CompositionError",
    "validate",
    "max_property",
    "decompose",
    "compose",
    "color_isomorphic",
    "fundamental_poset",
    "semistandard_poset",
    "gluing_offsets",
    "figure_poset",
]


class CompositionError(ValueError):
    """Raised when translated parts collide or glue into an invalid poset."""


@dataclass(frozen=True, order=True)
class GridVertex:
    x: int
    y: int
    color: Color

    @property
    def xy(self) -> tuple[int, int]:
        return (self.x, self.y)


class Lambda2(tuple):
    """A dominant weight (a, b) given as a pair of nonnegative integers."""

    def __new__(cls, a: int, b: int):
        if a < 0 or b < 0:
            raise ValueError(f"lambda must be nonnegative, got ({a}, {b})")
        return super().__new__(cls, (int(a), int(b)))

    @property
    def a(self) -> int:
        return self[0]

    @property
    def b(self) -> int:
        return self[1]

    @classmethod
    def parse(cls, value) -> "Lambda2":
        if isinstance(value, str):
            parts = value.replace("(", "").replace(")", "").split(",")
            if len(parts) != 2:
                raise ValueError(f"expected 'a,b', got {value!r}")
            return cls(int(parts[0]), int(parts[1]))
        a, b = value
        return cls(a, b)


class FundamentalOrder(str, enum.Enum):
    BETA_ALPHA = "ba"
    ALPHA_BETA = "ab"

    @classmethod
    def parse(cls, value) -> "FundamentalOrder":
        if isinstance(value, cls):
            return value
        aliases = {"ba": cls.BETA_ALPHA, "beta_alpha": cls.BETA_ALPHA,
                   "ab": cls.ALPHA_BETA, "alpha_beta": cls.ALPHA_BETA}
        try:
            return aliases[str(value).lower()]
        except KeyError:
            raise ValueError(f"unknown order {value!r}; expected 'ba' or 'ab'") from None


class GridPoset:
    """An immutable two-color grid poset given by colored plane points."""

    def __init__(self, vertices: Iterable):
        verts = []
        for v in vertices:
            if isinstance(v, GridVertex):
                verts.append(v)
            else:
                x, y, c = v
                verts.append(GridVertex(int(x), int(y), Color.parse(c)))
        verts.sort(key=lambda v: (v.y, v.x))
        seen = set()
        for v in verts:
            if v.xy in seen:
                raise ValueError(f"duplicate vertex position {v.xy}")
            seen.add(v.xy)
        self.vertices: tuple[GridVertex, ...] = tuple(verts)
        self._index = {v.xy: i for i, v in enumerate(self.vertices)}

        diagonals = sorted({v.x - v.y for v in self.vertices})
        self._diag_rank = {d: k + 1 for k, d in enumerate(diagonals)}
        self.chain_of: tuple[int, ...] = tuple(self._diag_rank[v.x - v.y] for v in self.vertices)
        self.num_chains = len(diagonals)
        chains: list[list[int]] = [[] for _ in diagonals]
        for i, c in enumerate(self.chain_of):
            chains[c - 1].append(i)
        # already bottom-to-top because vertices are sorted by y
        self.chains: tuple[tuple[int, ...], ...] = tuple(tuple(ch) for ch in chains)

        up: list[list[int]] = [[] for _ in self.vertices]
        down: list[list[int]] = [[] for _ in self.vertices]
        for ch in self.chains:
            for lo, hi in zip(ch, ch[1:]):
                up[lo].append(hi)
                down[hi].append(lo)
        for i, v in enumerate(self.vertices):
            j = self._index.get((v.x - 1, v.y + 1))
            if j is not None:
                up[i].append(j)
                down[j].append(i)
        self.up_covers: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(u)) for u in up)
        self.down_covers: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(d)) for d in down)
        self.down_mask: tuple[int, ...] = tuple(sum(1 << j for j in d) for d in down)
        self.up_mask: tuple[int, ...] = tuple(sum(1 << j for j in u) for u in up)

    # -- basic accessors -------------------------------------------------

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[GridVertex]:
        return iter(self.vertices)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GridPoset) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return f"GridPoset({len(self)} vertices, {self.num_chains} chains)"

    def index(self, xy: tuple[int, int]) -> int:
        return self._index[xy]

    def color(self, i: int) -> Color:
        return self.vertices[i].color

    @property
    def full_mask(self) -> int:
        return (1 << len(self.vertices)) - 1

    @cached_property
    def periphery(self) -> tuple[int, ...]:
        """Index of z_k, the top of chain C_k, for k = 1..m."""
        return tuple(ch[-1] for ch in self.chains)

    @cached_property
    def chain_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << i for i in ch) for ch in self.chains)

    @cached_property
    def chain_colors(self) -> tuple[Color, ...]:
        return tuple(self.vertices[ch[0]].color for ch in self.chains)

    def covers(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(len(self)) for j in self.up_covers[i]]

    @cached_property
    def below_mask(self) -> tuple[int, ...]:
        """Strict down-set of every vertex, as a bitmask."""
        out = [0] * len(self)
        for i in range(len(self)):
            m = 0
            for j in self.down_covers[i]:
                m |= (1 << j) | out[j]
            out[i] = m
        return tuple(out)

    def leq(self, i: int, j: int) -> bool:
        return i == j or bool(self.below_mask[j] >> i & 1)

    def maximal(self, mask: int | None = None) -> list[int]:
        """Maximal vertices of the induced subposet on ``mask``."""
        mask = self.full_mask if mask is None else mask
        return [i for i in _bits(mask) if not self.up_mask[i] & mask]

    def minimal(self, mask: int | None = None) -> list[int]:
        mask = self.full_mask if mask is None else mask
        return [i for i in _bits(mask) if not self.down_mask[i] & mask]

    def is_ideal(self, mask: int) -> bool:
        return all(self.down_mask[i] & ~mask == 0 for i in _bits(mask))

    def restrict(self, mask: int) -> "GridPoset":
        return GridPoset(self.vertices[i] for i in _bits(mask))

    def translate(self, dx: int, dy: int) -> "GridPoset":
        return GridPoset(GridVertex(v.x + dx, v.y + dy, v.color) for v in self.vertices)

    def normalized(self) -> "GridPoset":
        """Translate so the anchor (lowest, then leftmost vertex) sits at the origin."""
        if not self.vertices:
            return self
        ax, ay = self.anchor
        return self.translate(-ax, -ay)

    @property
    def anchor(self) -> tuple[int, int]:
        return self.vertices[0].xy

    @cached_property
    def components(self) -> tuple[int, ...]:
        """Connected-component label per vertex (undirected Hasse diagram)."""
        label = [-1] * len(self)
        cur = 0
        for s in range(len(self)):
            if label[s] >= 0:
                continue
            stack = [s]
            label[s] = cur
            while stack:
                i = stack.pop()
                for j in self.up_covers[i] + self.down_covers[i]:
                    if label[j] < 0:
                        label[j] = cur
                        stack.append(j)
            cur += 1
        return tuple(label)

    # -- serialization ---------------------------------------------------

    def to_dict(self) -> dict:
        return {"vertices": [{"x": v.x, "y": v.y, "color": v.color.value} for v in self.vertices]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "GridPoset":
        return cls((v["x"], v["y"], v["color"]) for v in data["vertices"])

    @classmethod
    def from_json(cls, text: str) -> "GridPoset":
        return cls.from_dict(json.loads(text))

    def to_networkx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        for i, v in enumerate(self.vertices):
            g.add_node(i, color=v.color.value)
        g.add_edges_from(self.covers())
        return g


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- validation ------------------------------------------------------------


@dataclass
class ValidationReport:
    failures: list[tuple[str, object]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def fail(self, axiom: str, witness: object) -> None:
        self.failures.append((axiom, witness))


def validate(p: GridPoset) -> ValidationReport:
    """Check the chain-function and two-color-function axioms."""
    rep = ValidationReport()
    xy = [v.xy for v in p.vertices]
    for u, v in p.covers():
        if p.chain_of[u] != p.chain_of[v] and p.chain_of[u] != p.chain_of[v] + 1:
            rep.fail("cover_chain_step", (xy[u], xy[v]))
    # derived cover edges must be Hasse covers: no edge implied by a longer path
    for u, v in p.covers():
        for w in p.down_covers[v]:
            if w != u and p.leq(u, w):
                rep.fail("redundant_cover", (xy[u], xy[v]))
                break
    for k, ch in enumerate(p.chains, start=1):
        colors = {p.vertices[i].color for i in ch}
        if len(colors) > 1:
            rep.fail("chain_color_constant", (k, [xy[i] for i in ch]))
    comp = p.components
    for u in range(len(p)):
        for v in range(len(p)):
            if (comp[u] == comp[v] and p.chain_of[u] == p.chain_of[v] + 1
                    and p.vertices[u].color == p.vertices[v].color):
                rep.fail("adjacent_chain_colors", (xy[u], xy[v]))
    for i in range(len(p)):
        if len(p.up_covers[i]) > 2 or len(p.down_covers[i]) > 2:
            rep.fail("cover_degree", xy[i])
    if sorted(set(p.chain_of)) != list(range(1, p.num_chains + 1)):
        rep.fail("chain_surjective", sorted(set(p.chain_of)))
    return rep


def max_property(p: GridPoset) -> tuple[bool, object]:
    """Return ``(holds, witness)``; the witness is None when the property holds."""
    maxima = p.maximal()
    for u in maxima:
        if p.chain_of[u] > 2:
            return False, ("maximal_chain_index", p.vertices[u].xy, p.chain_of[u])
    for i, u in enumerate(maxima):
        for v in maxima[i + 1:]:
            if p.vertices[u].color == p.vertices[v].color:
                return False, ("maximal_same_color", p.vertices[u].xy, p.vertices[v].xy)
    return True, None


# -- decomposition -----------------------------------------------------------


def _splits(p: GridPoset, ideal: int) -> bool:
    rest = p.full_mask & ~ideal
    for pick in (p.maximal, p.minimal):
        lo = max(p.chain_of[u] for u in pick(ideal))
        hi = min(p.chain_of[v] for v in pick(rest))
        if lo > hi:
            return False
    return True


def _first_split(p: GridPoset) -> int | None:
    """Smallest admissible proper ideal; ties broken by the smallest bitmask."""
    n = len(p)
    layer = {0}
    for _ in range(1, n):
        nxt = set()
        for ideal in layer:
            for i in range(n):
                if not ideal >> i & 1 and p.down_mask[i] & ~ideal == 0:
                    nxt.add(ideal | 1 << i)
        for ideal in sorted(nxt):
            if _splits(p, ideal):
                return ideal
        layer = nxt
    return None


def decompose(p: GridPoset) -> list[GridPoset]:
    """Finest decomposition P_1 <| P_2 <| ... <| P_k, bottom part first."""
    parts = []
    while len(p):
        ideal = _first_split(p)
        if ideal is None:
            parts.append(p)
            break
        parts.append(p.restrict(ideal))
        p = p.restrict(p.full_mask & ~ideal)
    return parts


def color_isomorphic(p: GridPoset, q: GridPoset) -> bool:
    """Isomorphic as posets with vertex colors (not just up to translation)."""
    if len(p) != len(q):
        return False
    if p.normalized() == q.normalized():
        return True
    return nx.is_isomorphic(p.to_networkx(), q.to_networkx(),
                            node_match=lambda a, b: a["color"] == b["color"])


def compose(parts: Sequence[GridPoset], offsets: Sequence[tuple[int, int]],
            check: bool = True) -> GridPoset:
    """Union of translated parts.

    With ``check`` the result must validate and its finest decomposition must
    reproduce the finest decompositions of the parts, in order.
    """
    if len(parts) != len(offsets):
        raise ValueError("need one offset per part")
    verts: dict[tuple[int, int], GridVertex] = {}
    for part, (dx, dy) in zip(parts, offsets):
        for v in part.translate(dx, dy):
            if v.xy in verts:
                raise CompositionError(f"translated parts overlap at {v.xy}")
            verts[v.xy] = v
    result = GridPoset(verts.values())
    if check:
        rep = validate(result)
        if not rep.ok:
            raise CompositionError(f"composed poset is invalid: {rep.failures[:3]}")
        expected = [q for part in parts for q in decompose(part)]
        got = decompose(result)
        if len(got) != len(expected) or not all(
                color_isomorphic(a, b) for a, b in zip(got, expected)):
            raise CompositionError("composed poset does not decompose into the given parts")
    return result


# -- fundamental and semistandard posets --------------------------------------


@lru_cache(maxsize=None)
def _figure(sys: RootSystemId, order: FundamentalOrder) -> GridPoset:
    table = _figures.BETA_ALPHA_22 if order is FundamentalOrder.BETA_ALPHA else _figures.ALPHA_BETA_22
    return GridPoset(table[sys.value])


def figure_poset(sys, order) -> GridPoset:
    """The drawn lambda = (2, 2) semistandard poset, in drawing coordinates."""
    return _figure(RootSystemId.parse(sys), FundamentalOrder.parse(order))


@lru_cache(maxsize=None)
def _figure_parts(sys: RootSystemId, order: FundamentalOrder) -> tuple[GridPoset, ...]:
    parts = decompose(_figure(sys, order))
    if len(parts) != 4:
        raise AssertionError(f"{sys.value} {order.value} figure has {len(parts)} parts, expected 4")
    return tuple(parts)


def fundamental_poset(sys, which) -> GridPoset:
    """P(1,0) or P(0,1), normalized so its anchor is the origin."""
    sys = RootSystemId.parse(sys)
    which = tuple(which)
    parts = _figure_parts(sys, FundamentalOrder.BETA_ALPHA)
    if which == (0, 1):
        return parts[0].normalized()
    if which == (1, 0):
        return parts[3].normalized()
    raise ValueError(f"fundamental weight must be (1,0) or (0,1), got {which}")


@dataclass(frozen=True)
class GluingOffsets:
    """Anchor displacements read off a drawn (2, 2) poset.

    ``first_step``: between consecutive copies of the lower fundamental poset;
    ``junction``: from the last lower copy to the first upper copy;
    ``second_step``: between consecutive copies of the upper fundamental poset.
    """

    first_step: tuple[int, int]
    junction: tuple[int, int]
    second_step: tuple[int, int]


def _sub(p, q) -> tuple[int, int]:
    return (p[0] - q[0], p[1] - q[1])


@lru_cache(maxsize=None)
def gluing_offsets(sys, order) -> GluingOffsets:
    sys = RootSystemId.parse(sys)
    order = FundamentalOrder.parse(order)
    q = [part.anchor for part in _figure_parts(sys, order)]
    return GluingOffsets(_sub(q[1], q[0]), _sub(q[2], q[1]), _sub(q[3], q[2]))


@lru_cache(maxsize=None)
def _semistandard(sys: RootSystemId, a: int, b: int, order: FundamentalOrder) -> GridPoset:
    p10 = fundamental_poset(sys, (1, 0))
    p01 = fundamental_poset(sys, (0, 1))
    if order is FundamentalOrder.BETA_ALPHA:
        lower, n_lower, upper, n_upper = p01, b, p10, a
    else:
        lower, n_lower, upper, n_upper = p10, a, p01, b
    off = gluing_offsets(sys, order)
    parts, offsets = [], []
    pos = (0, 0)
    for k in range(n_lower):
        if k:
            pos = (pos[0] + off.first_step[0], pos[1] + off.first_step[1])
        parts.append(lower)
        offsets.append(pos)
    for k in range(n_upper):
        if k:
            pos = (pos[0] + off.second_step[0], pos[1] + off.second_step[1])
        elif n_lower:
            pos = (pos[0] + off.junction[0], pos[1] + off.junction[1])
        parts.append(upper)
        offsets.append(pos)
    result = compose(parts, offsets, check=False)
    rep = validate(result)
    if not rep.ok:
        raise AssertionError(f"semistandard poset {sys.value} ({a},{b}) {order.value} invalid: "
                             f"{rep.failures[:3]}")
    ok, witness = max_property(result)
    if not ok:
        raise AssertionError(f"semistandard poset {sys.value} ({a},{b}) {order.value} "
                             f"lacks the max property: {witness}")
    return result


def semistandard_poset(sys, lam, order="ba") -> GridPoset:
    """P^{ba}(lambda) or P^{ab}(lambda) by gluing fundamental posets."""
    lam = Lambda2.parse(lam)
    return _semistandard(RootSystemId.parse(sys), lam.a, lam.b, FundamentalOrder.parse(order))
