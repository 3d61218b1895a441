"""Planar coordinates of the lambda = (2, 2) semistandard posets.

Each entry lists ``(x, y, color)`` with color ``"a"`` (alpha) or ``"b"`` (beta),
in the same plane coordinates the standard drawings use.  The fundamental
posets and the gluing displacements are read off these at import time of
:mod:`weylgrid.gridposet`.
"""
from __future__ import annotations

# beta-alpha order: b copies of P(0,1) below a copies of P(1,0)
BETA_ALPHA_22 = {
    "A1xA1": [
        (0, 2, "b"), (1, 3, "b"),
        (3, 2, "a"), (4, 3, "a"),
    ],
    "A2": [
        (0, 2, "b"), (1, 3, "b"),
        (1, 1, "a"), (2, 2, "a"), (3, 3, "a"), (4, 4, "a"),
        (4, 2, "b"), (5, 3, "b"),
    ],
    "C2": [
        (0, 3, "b"), (2, 5, "b"),
        (0, 1, "a"), (1, 2, "a"), (2, 3, "a"), (3, 4, "a"), (4, 5, "a"), (5, 6, "a"),
        (1, 0, "b"), (3, 2, "b"), (5, 4, "b"), (6, 5, "b"),
        (6, 3, "a"), (7, 4, "a"),
    ],
    "G2": [
        (2, 0, "b"), (1, 1, "a"), (2, 2, "a"), (1, 3, "b"), (3, 3, "a"),
        (5, 3, "b"), (0, 4, "a"), (2, 4, "b"), (4, 4, "a"), (1, 5, "a"),
        (5, 5, "a"), (9, 5, "a"), (2, 6, "a"), (4, 6, "b"), (6, 6, "a"),
        (8, 6, "b"), (1, 7, "b"), (3, 7, "a"), (5, 7, "b"), (7, 7, "a"),
        (11, 7, "a"), (4, 8, "a"), (8, 8, "a"), (10, 8, "b"), (5, 9, "a"),
        (7, 9, "b"), (9, 9, "a"), (4, 10, "b"), (6, 10, "a"), (10, 10, "a"),
        (9, 11, "b"), (8, 12, "a"),
    ],
}

# alpha-beta order: a copies of P(1,0) below b copies of P(0,1)
ALPHA_BETA_22 = {
    "A1xA1": [
        (0, 2, "a"), (1, 3, "a"),
        (3, 2, "b"), (4, 3, "b"),
    ],
    "A2": [
        (0, 2, "a"), (1, 3, "a"),
        (1, 1, "b"), (2, 2, "b"), (3, 3, "b"), (4, 4, "b"),
        (4, 2, "a"), (5, 3, "a"),
    ],
    "C2": [
        (0, 2, "a"), (1, 3, "a"),
        (1, 1, "b"), (2, 2, "b"), (4, 4, "b"), (6, 6, "b"),
        (2, 0, "a"), (3, 1, "a"), (4, 2, "a"), (5, 3, "a"), (6, 4, "a"), (7, 5, "a"),
        (5, 1, "b"), (7, 3, "b"),
    ],
    "G2": [
        (0, 5, "a"), (2, 7, "a"),
        (1, 4, "b"), (3, 6, "b"), (6, 9, "b"), (9, 12, "b"),
        (1, 2, "a"), (2, 3, "a"), (3, 4, "a"), (4, 5, "a"), (5, 6, "a"),
        (6, 7, "a"), (7, 8, "a"), (8, 9, "a"), (9, 10, "a"), (10, 11, "a"),
        (2, 1, "b"), (4, 3, "b"), (6, 5, "b"), (7, 6, "b"), (9, 8, "b"), (10, 9, "b"),
        (3, 0, "a"), (5, 2, "a"), (6, 3, "a"), (7, 4, "a"), (8, 5, "a"),
        (9, 6, "a"), (10, 7, "a"), (11, 8, "a"),
        (7, 2, "b"), (10, 5, "b"),
    ],
}
