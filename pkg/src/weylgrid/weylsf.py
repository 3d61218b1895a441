"""The group ring Z[Lambda] at rank two and Weyl bialternants.

Elements are finitely supported integer functions on weights.  Characters
are computed as exact quotients of alternants by leading-term elimination
under the total order (2<mu, rho^vee>, m_alpha, m_beta).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from weylgrid.rootsys import (
    RHO,
    RootSystemId,
    Weight,
    WeylGroupElement,
    height2,
    positive_coroot_pairings,
    positive_roots,
    pair,
    weyl_group,
)

__all__ = [
    "GroupRingElement",
    "CharacterResult",
    "DivisionError",
    "act",
    "alternate",
    "weyl_denominator",
    "weyl_denominator_product",
    "term_key",
    "chi",
    "wgf",
    "is_w_invariant",
    "weyl_dimension",
]


class DivisionError(ArithmeticError):
    """Alternant division left a remainder; impossible for dominant weights."""


class GroupRingElement:
    """Immutable sum of c * e^mu with no stored zero coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: "Mapping | Iterable" = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Weight, int] = {}
        for mu, c in items:
            mu = Weight(*mu)
            acc[mu] = acc.get(mu, 0) + c
        self._terms = {mu: c for mu, c in acc.items() if c}
        self._hash = None

    @classmethod
    def monomial(cls, mu, coeff: int = 1) -> "GroupRingElement":
        return cls({Weight(*mu): coeff})

    @classmethod
    def one(cls) -> "GroupRingElement":
        return cls.monomial((0, 0))

    @property
    def terms(self) -> dict[Weight, int]:
        return dict(self._terms)

    def support(self) -> set[Weight]:
        return set(self._terms)

    def coeff(self, mu) -> int:
        return self._terms.get(Weight(*mu), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = GroupRingElement.monomial((0, 0), other)
        return isinstance(other, GroupRingElement) and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        acc = dict(self._terms)
        for mu, c in other._terms.items():
            acc[mu] = acc.get(mu, 0) + c
        return GroupRingElement(acc)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement({mu: -c for mu, c in self._terms.items()})

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self + (-other)

    def __mul__(self, other) -> "GroupRingElement":
        if isinstance(other, int):
            return GroupRingElement({mu: c * other for mu, c in self._terms.items()})
        acc: dict[Weight, int] = {}
        for mu, c in self._terms.items():
            for nu, d in other._terms.items():
                key = Weight(mu[0] + nu[0], mu[1] + nu[1])
                acc[key] = acc.get(key, 0) + c * d
        return GroupRingElement(acc)

    __rmul__ = __mul__

    def dimension(self) -> int:
        """Sum of coefficients (evaluation at e^mu = 1)."""
        return sum(self._terms.values())

    def sorted_terms(self, sys) -> list[tuple[Weight, int]]:
        return sorted(self._terms.items(), key=lambda kv: term_key(sys, kv[0]))

    def to_json(self, sys) -> str:
        """Canonical JSON, sorted by the division term order."""
        return json.dumps([{"weight": [mu[0], mu[1]], "coeff": c}
                           for mu, c in self.sorted_terms(sys)])

    @classmethod
    def from_json(cls, text: str) -> "GroupRingElement":
        return cls((tuple(t["weight"]), t["coeff"]) for t in json.loads(text))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = [f"{c}*e^({mu[0]},{mu[1]})" for mu, c in sorted(self._terms.items())]
        return " + ".join(parts)


def act(w: WeylGroupElement, f: GroupRingElement) -> GroupRingElement:
    return GroupRingElement((w(mu), c) for mu, c in f.terms.items())


def alternate(sys, f: GroupRingElement) -> GroupRingElement:
    """The alternation sum over W of det(w) * w.f."""
    acc: dict[Weight, int] = {}
    for w in weyl_group(sys):
        d = w.determinant
        for mu, c in f.terms.items():
            key = w(mu)
            acc[key] = acc.get(key, 0) + d * c
    return GroupRingElement(acc)


@lru_cache(maxsize=None)
def weyl_denominator(sys) -> GroupRingElement:
    return alternate(sys, GroupRingElement.monomial(RHO))


def weyl_denominator_product(sys) -> GroupRingElement:
    """e^rho times the product over positive roots of (1 - e^{-alpha})."""
    out = GroupRingElement.monomial(RHO)
    for root in positive_roots(sys):
        out = out * GroupRingElement({(0, 0): 1, (-root[0], -root[1]): -1})
    return out


def term_key(sys, mu) -> tuple[int, int, int]:
    return (height2(sys, mu), mu[0], mu[1])


@dataclass(frozen=True)
class CharacterResult:
    chi: GroupRingElement
    lam: Weight

    @property
    def dimension(self) -> int:
        return self.chi.dimension()


def _divide(sys, numerator: GroupRingElement, denominator: GroupRingElement) -> GroupRingElement:
    """Exact quotient by leading-term elimination; raises on a remainder."""
    key = lambda mu: term_key(sys, mu)  # noqa: E731
    den = denominator.terms
    den_lead = max(den, key=key)
    den_low = min(den, key=key)
    lead_c = den[den_lead]
    rem = numerator.terms
    if not rem:
        return GroupRingElement()
    # the lowest quotient term is forced: low(num) - low(den)
    floor = key(Weight(*min(rem, key=key)) - den_low)
    quotient: dict[Weight, int] = {}
    while rem:
        mu = max(rem, key=key)
        c = rem[mu]
        if c % lead_c:
            raise DivisionError(f"coefficient {c} at {mu} not divisible by {lead_c}")
        q_mu = mu - den_lead
        if key(q_mu) < floor:
            raise DivisionError(f"nonzero remainder: leading term {c}*e^{tuple(mu)}")
        q_c = c // lead_c
        quotient[q_mu] = q_c
        for nu, d in den.items():
            k = Weight(q_mu[0] + nu[0], q_mu[1] + nu[1])
            v = rem.get(k, 0) - q_c * d
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return GroupRingElement(quotient)


@lru_cache(maxsize=None)
def _chi(sys: RootSystemId, lam: Weight) -> CharacterResult:
    numerator = alternate(sys, GroupRingElement.monomial(lam + RHO))
    denominator = weyl_denominator(sys)
    q = _divide(sys, numerator, denominator)
    if q * denominator != numerator:
        raise DivisionError("quotient times denominator does not reproduce the numerator")
    return CharacterResult(q, lam)


def chi(sys, lam) -> CharacterResult:
    """The Weyl bialternant for a dominant weight ``lam``."""
    sys = RootSystemId.parse(sys)
    lam = Weight(*lam)
    if not lam.is_dominant:
        raise ValueError(f"weight {tuple(lam)} is not dominant")
    return _chi(sys, lam)


def wgf(l) -> GroupRingElement:
    """Weight generating function of a ColoredLattice."""
    acc: dict[Weight, int] = {}
    for mu in l.weights:
        acc[mu] = acc.get(mu, 0) + 1
    return GroupRingElement(acc)


def is_w_invariant(sys, f: GroupRingElement) -> tuple[bool, object]:
    for w in weyl_group(sys):
        if act(w, f) != f:
            return False, w.word
    return True, None


def weyl_dimension(sys, lam) -> int:
    """Product over positive coroots of <lam+rho, a^vee> / <rho, a^vee>."""
    num = den = 1
    shifted = Weight(*lam) + RHO
    for p in positive_coroot_pairings(sys):
        num *= pair(p, shifted)
        den *= pair(p, RHO)
    if num % den:
        raise ArithmeticError("Weyl dimension is not an integer")
    return num // den
