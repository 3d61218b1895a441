"""Counting order ideals by size, against the product of q-integers.

Run:  python demos/03_rank_generating_functions.py
"""
from weylgrid.gridposet import semistandard_poset
from weylgrid.ideallattice import enumerate_lattice
from weylgrid.qseries import eq1_rgf, factored_form, is_symmetric, is_unimodal, rgf
from weylgrid.rootsys import height2

for system in ("A1xA1", "A2", "C2", "G2"):
    lam = (2, 1)
    counted = rgf(enumerate_lattice(semistandard_poset(system, lam)))
    print(f"{system} {lam}: {list(counted)}")
    print(f"  product formula {factored_form(system, lam)}")
    print(f"  agrees: {counted == eq1_rgf(system, lam)}, degree {counted.degree} "
          f"(expected {height2(system, lam)}), symmetric {is_symmetric(counted)}, "
          f"unimodal {is_unimodal(counted)}")

# q -> 1 gives the number of ideals, which is also the dimension
print("G2 (3,3) has", eq1_rgf("G2", (3, 3))(1), "order ideals")
