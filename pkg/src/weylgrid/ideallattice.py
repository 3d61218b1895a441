"""The diamond-colored distributive lattice J_color(P) of a grid poset.

Order ideals are Python ints used as bitsets over the poset's vertex order.
Elements are enumerated rank by rank, so element ``k`` always has rank
``popcount`` non-decreasing in ``k`` and the order is deterministic.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterator

from weylgrid.gridposet import GridPoset
from weylgrid.rootsys import Color, RootSystemId, Weight, simple_roots

__all__ = [
    "DEFAULT_ELEMENT_CAP",
    "LatticeTooLarge",
    "ColoredLattice",
    "ComponentStats",
    "ChainIntervalDecomposition",
    "enumerate_lattice",
    "component",
    "component_stats",
    "weight",
    "is_M_structured",
    "is_diamond_colored",
    "chain_interval_decomposition",
    "to_dot",
]

DEFAULT_ELEMENT_CAP = 10**6


class LatticeTooLarge(RuntimeError):
    pass


def popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class ComponentStats:
    rho: int
    length: int

    @property
    def delta(self) -> int:
        return self.length - self.rho

    @property
    def m(self) -> int:
        return 2 * self.rho - self.length


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            if ri < rj:
                self.parent[rj] = ri
            else:
                self.parent[ri] = rj


class ColoredLattice:
    """All order ideals of ``poset`` with color-labelled covers.

    ``elements[k]`` is a bitmask; ``covers`` lists ``(k_lo, k_hi, vertex)``
    where ``vertex`` is the index of the added poset vertex.
    """

    def __init__(self, poset: GridPoset, elements: list[int], covers: list[tuple[int, int, int]]):
        self.poset = poset
        self.elements: tuple[int, ...] = tuple(elements)
        self.index = {e: k for k, e in enumerate(self.elements)}
        self.covers: tuple[tuple[int, int, int], ...] = tuple(covers)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __repr__(self) -> str:
        return f"ColoredLattice({len(self)} elements over {len(self.poset)} vertices)"

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.poset.full_mask

    def rank(self, x: int) -> int:
        return popcount(x)

    def edge_color(self, vertex: int) -> Color:
        return self.poset.vertices[vertex].color

    @cached_property
    def up_edges(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per element: ``(target, vertex)`` pairs of its upper covers."""
        out: list[list[tuple[int, int]]] = [[] for _ in self.elements]
        for lo, hi, v in self.covers:
            out[lo].append((hi, v))
        return tuple(tuple(x) for x in out)

    @cached_property
    def component_labels(self) -> dict[Color, tuple[int, ...]]:
        """Union-find over covers of each color; label = smallest member index."""
        labels = {}
        for color in Color:
            uf = _UnionFind(len(self))
            for lo, hi, v in self.covers:
                if self.poset.vertices[v].color is color:
                    uf.union(lo, hi)
            labels[color] = tuple(uf.find(k) for k in range(len(self)))
        return labels

    @cached_property
    def components(self) -> dict[Color, dict[int, tuple[int, ...]]]:
        """Per color: label -> member element indices (ascending)."""
        out: dict[Color, dict[int, tuple[int, ...]]] = {}
        for color, labels in self.component_labels.items():
            groups: dict[int, list[int]] = {}
            for k, lab in enumerate(labels):
                groups.setdefault(lab, []).append(k)
            out[color] = {lab: tuple(ks) for lab, ks in groups.items()}
        return out

    @cached_property
    def _component_range(self) -> dict[Color, dict[int, tuple[int, int]]]:
        out = {}
        for color, groups in self.components.items():
            out[color] = {}
            for lab, ks in groups.items():
                sizes = [popcount(self.elements[k]) for k in ks]
                out[color][lab] = (min(sizes), max(sizes))
        return out

    def stats(self, k: int, color: Color) -> ComponentStats:
        lab = self.component_labels[color][k]
        lo, hi = self._component_range[color][lab]
        return ComponentStats(popcount(self.elements[k]) - lo, hi - lo)

    @cached_property
    def weights(self) -> tuple[Weight, ...]:
        return tuple(Weight(self.stats(k, Color.ALPHA).m, self.stats(k, Color.BETA).m)
                     for k in range(len(self)))

    # -- export --------------------------------------------------------------

    def to_dict(self) -> dict:
        width = max(1, (len(self.poset) + 3) // 4)
        return {
            "elements": [format(e, f"0{width}x") for e in self.elements],
            "covers": [[lo, hi, self.edge_color(v).value] for lo, hi, v in self.covers],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def enumerate_lattice(p: GridPoset, cap: int = DEFAULT_ELEMENT_CAP) -> ColoredLattice:
    """Rank-by-rank single-vertex extension with hash deduplication."""
    n = len(p)
    elements = [0]
    index = {0: 0}
    covers = []
    layer = [0]
    while layer:
        nxt = []
        for ideal in layer:
            lo = index[ideal]
            for v in range(n):
                if not ideal >> v & 1 and p.down_mask[v] & ~ideal == 0:
                    t = ideal | (1 << v)
                    hi = index.get(t)
                    if hi is None:
                        hi = len(elements)
                        if hi >= cap:
                            raise LatticeTooLarge(f"more than {cap} order ideals")
                        index[t] = hi
                        elements.append(t)
                        nxt.append(t)
                    covers.append((lo, hi, v))
        layer = nxt
    return ColoredLattice(p, elements, covers)


def component(l: ColoredLattice, x: int, color) -> list[int]:
    """comp_i(x) as a list of order ideals (bitmasks)."""
    color = Color.parse(color)
    k = l.index[x]
    lab = l.component_labels[color][k]
    return [l.elements[j] for j in l.components[color][lab]]


def component_stats(l: ColoredLattice, x: int) -> dict[Color, ComponentStats]:
    k = l.index[x]
    return {c: l.stats(k, c) for c in Color}


def weight(l: ColoredLattice, x: int) -> Weight:
    return l.weights[l.index[x]]


def is_M_structured(l: ColoredLattice, sys) -> tuple[bool, object]:
    """wt(s) + alpha_i == wt(t) on every i-colored cover s -> t."""
    roots = simple_roots(sys)
    for lo, hi, v in l.covers:
        c = l.edge_color(v)
        if l.weights[lo] + roots[c.index] != l.weights[hi]:
            return False, (l.elements[lo], l.elements[hi], c.value)
    return True, None


def is_diamond_colored(l: ColoredLattice) -> tuple[bool, object]:
    """On every diamond s -> t1, t2 -> u, opposite edges carry equal colors."""
    edge = {(lo, hi): v for lo, hi, v in l.covers}
    for s in range(len(l)):
        outs = l.up_edges[s]
        for i, (t1, v1) in enumerate(outs):
            for t2, v2 in outs[i + 1:]:
                u = l.index.get(l.elements[t1] | l.elements[t2])
                if u is None:
                    return False, ("missing_join", l.elements[t1], l.elements[t2])
                upper1, upper2 = edge.get((t1, u)), edge.get((t2, u))
                if upper1 is None or upper2 is None:
                    return False, ("missing_edge", l.elements[s], l.elements[u])
                if (l.edge_color(v1) is not l.edge_color(upper2)
                        or l.edge_color(v2) is not l.edge_color(upper1)):
                    return False, ("diamond", l.elements[s], l.elements[u])
    return True, None


# -- product-of-chains structure -----------------------------------------------


@dataclass(frozen=True)
class ChainIntervalDecomposition:
    """For element ``t`` and ``color``: the maximal intervals I_j, one per
    color chain of the poset (possibly empty), and the component they span."""

    t: int
    color: Color
    chain_ids: tuple[int, ...]
    intervals: tuple[tuple[int, ...], ...]
    interval_masks: tuple[int, ...]
    members: tuple[int, ...]

    def phi(self, s: int) -> tuple[int, ...]:
        """Coordinates of ``s`` in the product: how many of I_j's vertices it holds."""
        return tuple(popcount(s & m) for m in self.interval_masks)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(iv) for iv in self.intervals)

    def element(self, coords) -> int:
        """Inverse of phi."""
        base = self.t & ~self._union
        for iv, c in zip(self.intervals, coords):
            for v in iv[:c]:
                base |= 1 << v
        return base

    @cached_property
    def _union(self) -> int:
        u = 0
        for m in self.interval_masks:
            u |= m
        return u


class DecompositionError(AssertionError):
    pass


def _largest_interval(p: GridPoset, t: int, chain: tuple[int, ...]) -> tuple[int, ...]:
    best: tuple[int, ...] = ()
    n = len(chain)
    for i in range(n):
        mask = 0
        for j in range(i, n):
            mask |= 1 << chain[j]
            if j - i + 1 <= len(best):
                continue
            if p.is_ideal(t | mask) and p.is_ideal(t & ~mask):
                best = chain[i:j + 1]
    return best


def chain_interval_decomposition(l: ColoredLattice, t: int, gamma,
                                 verify: bool = True) -> ChainIntervalDecomposition:
    """Maximal intervals per gamma-chain and the isomorphism phi onto the product.

    With ``verify``, phi is checked to be a bijection onto the full product of
    chains that preserves and reflects order; a failure raises
    ``DecompositionError``.
    """
    gamma = Color.parse(gamma)
    p = l.poset
    chain_ids = tuple(k for k, c in enumerate(p.chain_colors) if c is gamma)
    intervals = tuple(_largest_interval(p, t, p.chains[k]) for k in chain_ids)
    masks = tuple(sum(1 << v for v in iv) for iv in intervals)
    members = tuple(component(l, t, gamma))
    dec = ChainIntervalDecomposition(t, gamma, chain_ids, intervals, masks, members)
    if verify:
        _verify_phi(l, dec)
    return dec


def _verify_phi(l: ColoredLattice, dec: ChainIntervalDecomposition) -> None:
    p = l.poset
    images = {}
    for s in dec.members:
        coords = dec.phi(s)
        for iv, m, c in zip(dec.intervals, dec.interval_masks, coords):
            # s & I_j must be an initial segment of the interval
            if s & m != sum(1 << v for v in iv[:c]):
                raise DecompositionError(f"s & I_j is not a down-set of I_j for s={s:#x}")
        if s & ~dec._union != dec.t & ~dec._union:
            raise DecompositionError(f"element {s:#x} differs from t outside the intervals")
        if coords in images:
            raise DecompositionError(f"phi is not injective at {coords}")
        images[coords] = s
    full = set(product(*(range(len(iv) + 1) for iv in dec.intervals)))
    if set(images) != full:
        raise DecompositionError(f"phi misses {len(full - set(images))} product points")
    for coords, s in images.items():
        if not p.is_ideal(s):
            raise DecompositionError(f"{s:#x} is not an order ideal")
    # order: inclusion on members vs componentwise order on coordinates
    if len(dec.members) <= 400:
        items = list(images.items())
        for ca, sa in items:
            for cb, sb in items:
                if (sa & ~sb == 0) != all(x <= y for x, y in zip(ca, cb)):
                    raise DecompositionError(f"phi does not preserve order at {ca}, {cb}")
    else:
        # covers of the component correspond to unit steps of the product
        member_set = set(dec.members)
        for s in dec.members:
            k = l.index[s]
            for hi, v in l.up_edges[k]:
                if l.edge_color(v) is dec.color and l.elements[hi] in member_set:
                    ca, cb = dec.phi(s), dec.phi(l.elements[hi])
                    diff = [y - x for x, y in zip(ca, cb)]
                    if sorted(diff) != [0] * (len(diff) - 1) + [1]:
                        raise DecompositionError(f"cover {s:#x} is not a unit product step")


_DOT_STYLE = {Color.ALPHA: ("blue", "solid", "\u03b1"), Color.BETA: ("red", "dashed", "\u03b2")}


def to_dot(l: ColoredLattice, weights: bool = False) -> str:
    """Graphviz DOT: alpha edges solid blue, beta edges dashed red."""
    lines = ["digraph J {", "  rankdir=BT;", "  node [shape=point];"]
    for k, e in enumerate(l.elements):
        label = f"{l.weights[k].m_alpha},{l.weights[k].m_beta}" if weights else ""
        if label:
            lines.append(f'  n{k} [shape=plaintext, label="{label}"];')
        else:
            lines.append(f"  n{k};")
    for lo, hi, v in l.covers:
        c = l.edge_color(v)
        hue, style, mark = _DOT_STYLE[c]
        lines.append(f'  n{lo} -> n{hi} [color={hue}, style={style}, label="{mark}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
