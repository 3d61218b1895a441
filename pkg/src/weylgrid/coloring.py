"""Vertex-coloring of lattice elements and the sub-face verifiers.

For a non-maximal order ideal t, v(t) is the top z_k of the last chain C_k
not contained in t, and kappa(t) is its color.  The verifiers here check,
element by element, that kappa carves every one-color component into a
face and its complement exactly as required for the splitting argument.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping

from weylgrid.gridposet import GridPoset
from weylgrid.ideallattice import (
    ColoredLattice,
    ChainIntervalDecomposition,
    DecompositionError,
    chain_interval_decomposition,
    is_M_structured,
    popcount,
)
from weylgrid.rootsys import Color, Weight
from weylgrid.weylsf import GroupRingElement, chi, is_w_invariant, wgf

__all__ = [
    "Check",
    "Report",
    "kappa",
    "kappa_table",
    "FaceSpec",
    "face_of_component",
    "verify_theorem_5_1",
    "verify_theorem_2_1",
    "component_rank_symmetric",
]


@dataclass
class Check:
    name: str
    passed: bool | None
    witnesses: list = field(default_factory=list)

    @property
    def status(self) -> str:
        return {True: "pass", False: "fail", None: "skipped"}[self.passed]

    def to_dict(self) -> dict:
        return {"name": self.name, "pass": self.passed, "status": self.status,
                "witnesses": [_jsonable(w) for w in self.witnesses]}


def _jsonable(w):
    if isinstance(w, (Color,)):
        return w.value
    if isinstance(w, (list, tuple)):
        return [_jsonable(x) for x in w]
    if isinstance(w, dict):
        return {str(k): _jsonable(v) for k, v in w.items()}
    if isinstance(w, (int, float, str, bool)) or w is None:
        return w
    return str(w)


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, witnesses: list, max_witnesses: int = 10) -> Check:
        c = Check(name, not witnesses, witnesses[:max_witnesses])
        self.checks.append(c)
        return c

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {"checks": [c.to_dict() for c in self.checks]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _v_of(p: GridPoset, t: int) -> int:
    for k in range(p.num_chains - 1, -1, -1):
        if p.chain_masks[k] & ~t:
            return p.periphery[k]
    raise ValueError("v(t) is undefined at the maximal element")


def kappa(l: ColoredLattice, p: GridPoset | None, t: int) -> tuple[int, Color]:
    """(index of v(t), color of v(t)) for a non-maximal ideal t."""
    p = l.poset if p is None else p
    if t == p.full_mask:
        raise ValueError("kappa is undefined at the maximal element")
    v = _v_of(p, t)
    return v, p.vertices[v].color


def kappa_table(l: ColoredLattice) -> tuple[tuple[int, Color] | None, ...]:
    """kappa for every element (None at max); memoized on the lattice."""
    cached = getattr(l, "_kappa_table", None)
    if cached is None:
        top = l.top
        cached = tuple(None if e == top else kappa(l, None, e) for e in l.elements)
        l._kappa_table = cached
    return cached


def _decomposition(l: ColoredLattice, k: int, color: Color) -> ChainIntervalDecomposition:
    """Decomposition of comp_color(elements[k]), cached per component."""
    cache = l.__dict__.setdefault("_decomp_cache", {})
    lab = l.component_labels[color][k]
    dec = cache.get((lab, color))
    if dec is None:
        dec = chain_interval_decomposition(l, l.elements[lab], color)
        cache[(lab, color)] = dec
    return dec


@dataclass(frozen=True)
class FaceSpec:
    decomposition: ChainIntervalDecomposition
    factor: int
    face: frozenset[int]

    @property
    def sub_face(self) -> frozenset[int]:
        return frozenset(self.decomposition.members) - self.face


def face_of_component(dec: ChainIntervalDecomposition, t: int, v: int) -> FaceSpec:
    """F = {s in comp : v in s}, checked to be the face 'coordinate j maximal'.

    ``v`` is v(t); it must lie in the interval I_j of its own chain.
    """
    for j, iv in enumerate(dec.intervals):
        if v in iv:
            break
    else:
        raise DecompositionError(f"v(t) = vertex {v} lies in no interval I_j")
    face = frozenset(s for s in dec.members if s >> v & 1)
    top = len(dec.intervals[j])
    expected = frozenset(s for s in dec.members if dec.phi(s)[j] == top)
    if face != expected or not face:
        raise DecompositionError(f"{{s : v(t) in s}} is not the face of factor {j}")
    return FaceSpec(dec, j, face)


def verify_theorem_5_1(l: ColoredLattice, p: GridPoset | None = None,
                       kappa_override: Mapping[int, Color] | None = None) -> Report:
    """Within comp_gamma(t), gamma = kappa(t), the non-max elements with
    kappa = gamma are exactly the complement of the face F.

    ``kappa_override`` maps element index -> color and replaces kappa's color
    on those elements (used for negative controls).
    """
    p = l.poset if p is None else p
    table = kappa_table(l)
    colors = [None if x is None else x[1] for x in table]
    if kappa_override:
        for k, c in kappa_override.items():
            colors[k] = Color.parse(c)
    top = l.top
    rep = Report()
    wellformed, face_errors, partition = [], [], []
    for k, e in enumerate(l.elements):
        if table[k] is None:
            continue
        v = table[k][0]
        if e >> v & 1 or not p.is_ideal(e | p.chain_masks[p.chain_of[v] - 1]):
            wellformed.append(e)
    seen = set()
    for k, e in enumerate(l.elements):
        if table[k] is None:
            continue
        v, gamma = table[k][0], colors[k]
        lab = l.component_labels[gamma][k]
        if (lab, gamma, v) in seen:
            continue
        seen.add((lab, gamma, v))
        try:
            dec = _decomposition(l, k, gamma)
            spec = face_of_component(dec, e, v)
        except DecompositionError as exc:
            face_errors.append((e, gamma.value, str(exc)))
            continue
        for s in dec.members:
            if s == top:
                continue
            in_face = s in spec.face
            has_gamma = colors[l.index[s]] is gamma
            if in_face == has_gamma:
                partition.append((e, s, gamma.value))
    rep.add("v_well_formed", wellformed)
    rep.add("face_is_face", face_errors)
    rep.add("kappa_partition", partition)
    return rep


def component_rank_symmetric(l: ColoredLattice) -> list:
    """Witnesses: components whose rank-size sequence is not a palindrome."""
    bad = []
    for color, groups in l.components.items():
        for lab, ks in groups.items():
            sizes = [popcount(l.elements[k]) for k in ks]
            lo = min(sizes)
            counts = Counter(s - lo for s in sizes)
            seq = [counts[i] for i in range(max(sizes) - lo + 1)]
            if seq != seq[::-1]:
                bad.append((color.value, l.elements[lab], seq))
    return bad


def _is_sub_face(dec: ChainIntervalDecomposition, subset: frozenset[int]) -> int | None:
    """Factor q whose face complement equals ``subset``, or None."""
    members = dec.members
    for q, iv in enumerate(dec.intervals):
        top = len(iv)
        complement = frozenset(s for s in members if dec.phi(s)[q] != top)
        if complement == subset:
            return q
    return None


def verify_theorem_2_1(l: ColoredLattice, sys,
                       kappa_override: Mapping[int, Color] | None = None
                       ) -> tuple[Report, GroupRingElement]:
    """Check the splitting hypotheses and return the predicted WGF."""
    rep = Report()
    ok, witness = is_M_structured(l, sys)
    rep.add("M_structured", [] if ok else [witness])
    rep.add("components_rank_symmetric", component_rank_symmetric(l))
    w = wgf(l)
    ok, witness = is_w_invariant(sys, w)
    rep.add("wgf_w_invariant", [] if ok else [witness])

    S = [k for k in range(len(l))
         if l.stats(k, Color.ALPHA).delta == 0 and l.stats(k, Color.BETA).delta == 0]
    rep.add("S_dominant", [l.elements[k] for k in S if not l.weights[k].is_dominant])

    table = kappa_table(l)
    colors = [None if x is None else x[1] for x in table]
    if kappa_override:
        for k, c in kappa_override.items():
            colors[k] = Color.parse(c)
    in_s = set(S)
    undefined = [l.elements[k] for k in range(len(l)) if k not in in_s and colors[k] is None]
    rep.add("kappa_defined", undefined)

    product_errors, subface_errors = [], []
    seen = set()
    for k in range(len(l)):
        if k in in_s or colors[k] is None:
            continue
        i = colors[k]
        lab = l.component_labels[i][k]
        if (lab, i) in seen:
            continue
        seen.add((lab, i))
        try:
            dec = _decomposition(l, k, i)
        except DecompositionError as exc:
            product_errors.append((l.elements[k], i.value, str(exc)))
            continue
        subset = frozenset(s for s in dec.members
                           if l.index[s] not in in_s and colors[l.index[s]] is i)
        if _is_sub_face(dec, subset) is None:
            subface_errors.append((l.elements[k], i.value))
    rep.add("kappa_components_product_of_chains", product_errors)
    rep.add("kappa_sub_face", subface_errors)

    prediction = GroupRingElement()
    for k in S:
        mu = l.weights[k]
        if mu.is_dominant:
            prediction = prediction + chi(sys, mu).chi
    return rep, prediction
