"""The distributive lattice of order ideals as a model for a Weyl character.

Every element of J(P) gets a weight from the lengths of its one-color
components; summing e^weight reproduces the bialternant exactly.

Run:  python demos/02_character_model.py
"""
from collections import Counter

from weylgrid.gridposet import semistandard_poset
from weylgrid.ideallattice import enumerate_lattice, is_M_structured
from weylgrid.weylsf import chi, wgf

system, lam = "G2", (1, 1)
lattice = enumerate_lattice(semistandard_poset(system, lam))
print(lattice)

ok, _ = is_M_structured(lattice, system)
print("each color-i cover moves the weight by the i-th simple root:", ok)

multiplicities = Counter(tuple(w) for w in lattice.weights)
print("dominant weights with multiplicity:")
for mu, n in sorted(multiplicities.items(), reverse=True):
    if mu[0] >= 0 and mu[1] >= 0:
        print(f"  {mu}: {n}")

character = chi(system, lam)
print("dimension from the bialternant:", character.dimension)
print("WGF equals the bialternant:", wgf(lattice) == character.chi)

# Same check for the other gluing order, whose poset is not isomorphic.
other = enumerate_lattice(semistandard_poset(system, lam, "ab"))
print("alpha-then-beta order gives the same WGF:", wgf(other) == character.chi)
