"""Distributive lattice models for rank-two Weyl bialternants.

Builds two-color grid posets and their diamond-colored ideal lattices,
computes Weyl bialternants for A1xA1, A2, C2 and G2 exactly, and checks
that the lattices' weight and rank generating functions agree with them.
"""
from weylgrid.rootsys import Color, RootSystemId, Weight, weyl_group
from weylgrid.gridposet import GridPoset, Lambda2, FundamentalOrder, semistandard_poset, fundamental_poset
from weylgrid.ideallattice import ColoredLattice, enumerate_lattice
from weylgrid.weylsf import GroupRingElement, chi, wgf
from weylgrid.qseries import QPolynomial, rgf, eq1_rgf, general_rgf
from weylgrid.pipeline import verify_instance, verify_matrix, verify_poset

__version__ = "0.1.0"

__all__ = [
    "Color", "RootSystemId", "Weight", "weyl_group",
    "GridPoset", "Lambda2", "FundamentalOrder", "semistandard_poset", "fundamental_poset",
    "ColoredLattice", "enumerate_lattice",
    "GroupRingElement", "chi", "wgf",
    "QPolynomial", "rgf", "eq1_rgf", "general_rgf",
    "verify_instance", "verify_matrix", "verify_poset",
]
