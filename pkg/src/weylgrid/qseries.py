"""Rank generating functions and their quotient-of-products closed forms."""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from weylgrid.rootsys import (
    EQ1_EXPONENTS,
    RHO,
    RootSystemId,
    Weight,
    pair,
    positive_coroot_pairings,
)

__all__ = [
    "QPolynomial",
    "rgf",
    "eq1_exponents",
    "eq1_rgf",
    "general_rgf",
    "quotient_of_products",
    "is_symmetric",
    "is_unimodal",
    "factored_form",
]


class QPolynomial(tuple):
    """Integer coefficients a_0, a_1, ..., a_l with no trailing zeros."""

    def __new__(cls, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return super().__new__(cls, cs)

    @property
    def degree(self) -> int:
        return len(self) - 1

    def __call__(self, q: int) -> int:
        out = 0
        for c in reversed(self):
            out = out * q + c
        return out

    def __add__(self, other: "QPolynomial") -> "QPolynomial":  # type: ignore[override]
        n = max(len(self), len(other))
        return QPolynomial((self[i] if i < len(self) else 0) + (other[i] if i < len(other) else 0)
                           for i in range(n))

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(-c for c in self)

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return self + (-QPolynomial(other))

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":  # type: ignore[override]
        if not self or not other:
            return QPolynomial()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self):
            if a:
                for j, b in enumerate(other):
                    out[i + j] += a * b
        return QPolynomial(out)

    def divmod(self, divisor: "QPolynomial") -> tuple["QPolynomial", "QPolynomial"]:
        """Long division over Z; the divisor's leading coefficient must be +-1."""
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        lead = divisor[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must have a unit leading coefficient")
        rem = list(self)
        n = len(divisor)
        quot = [0] * max(len(rem) - n + 1, 0)
        for k in range(len(rem) - n, -1, -1):
            c = rem[k + n - 1] * lead
            quot[k] = c
            if c:
                for j, d in enumerate(divisor):
                    rem[k + j] -= c * d
        return QPolynomial(quot), QPolynomial(rem)

    def exact_div(self, divisor: "QPolynomial") -> "QPolynomial":
        q, r = self.divmod(divisor)
        if r:
            raise ArithmeticError(f"nonzero remainder {list(r)} dividing by {list(divisor)}")
        return q

    def to_list(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"QPolynomial({list(self)})"


def one_minus_q_pow(n: int) -> QPolynomial:
    if n <= 0:
        raise ValueError(f"exponent must be positive, got {n}")
    return QPolynomial([1] + [0] * (n - 1) + [-1])


def quotient_of_products(numerator: Sequence[int], denominator: Sequence[int]) -> QPolynomial:
    """prod (1 - q^n) / prod (1 - q^d), dividing one factor at a time exactly."""
    out = QPolynomial([1])
    for n in numerator:
        out = out * one_minus_q_pow(n)
    for d in denominator:
        out = out.exact_div(one_minus_q_pow(d))
    return out


def rgf(l) -> QPolynomial:
    """Coefficient i counts the order ideals of cardinality i."""
    sizes = np.fromiter((bin(e).count("1") for e in l.elements), dtype=np.int64,
                        count=len(l.elements))
    return QPolynomial(np.bincount(sizes).tolist())


def eq1_exponents(sys, lam) -> tuple[list[int], list[int]]:
    """Numerator and denominator exponents from the hardcoded closed-form tables."""
    a, b = lam
    forms, den = EQ1_EXPONENTS[RootSystemId.parse(sys)]
    return [ca * a + cb * b + c0 for ca, cb, c0 in forms], list(den)


def eq1_rgf(sys, lam) -> QPolynomial:
    num, den = eq1_exponents(sys, lam)
    return quotient_of_products(num, den)


def general_exponents(sys, lam) -> tuple[list[int], list[int]]:
    """<lam + rho, a^vee> and <rho, a^vee> over positive coroots a^vee."""
    shifted = Weight(*lam) + RHO
    pairings = positive_coroot_pairings(sys)
    return [pair(p, shifted) for p in pairings], [pair(p, RHO) for p in pairings]


def general_rgf(sys, lam) -> QPolynomial:
    num, den = general_exponents(sys, lam)
    return quotient_of_products(num, den)


def is_symmetric(p: Sequence[int]) -> bool:
    return list(p) == list(reversed(p))


def is_unimodal(p: Sequence[int]) -> bool:
    cs = list(p)
    i = 0
    while i + 1 < len(cs) and cs[i] <= cs[i + 1]:
        i += 1
    while i + 1 < len(cs) and cs[i] >= cs[i + 1]:
        i += 1
    return i >= len(cs) - 1


def factored_form(sys, lam) -> str:
    num, den = eq1_exponents(sys, lam)
    top = "".join(f"(1-q^{n})" for n in num)
    bottom = "".join(f"(1-q^{d})" for d in den)
    return f"{top} / {bottom}"
