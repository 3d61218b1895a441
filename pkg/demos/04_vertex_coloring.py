"""The vertex-coloring kappa and what happens when a poset is corrupted.

Run:  python demos/04_vertex_coloring.py
"""
from weylgrid.coloring import kappa_table, verify_theorem_5_1
from weylgrid.gridposet import GridPoset, GridVertex, max_property, semistandard_poset, validate
from weylgrid.ideallattice import enumerate_lattice
from weylgrid.pipeline import verify_poset

p = semistandard_poset("A2", (1, 1))
lattice = enumerate_lattice(p)
print("kappa on each non-maximal ideal of the A2 (1,1) lattice:")
for t, entry in zip(lattice.elements, kappa_table(lattice)):
    if entry is not None:
        vertex, color = entry
        print(f"  {t:04b}  v(t) = {p.vertices[vertex].xy}  kappa = {color.value}")
print(verify_theorem_5_1(lattice).to_json())

# Flip one color.  The poset stops being a valid two-color poset, and the
# verifier notices.
u = p.vertices[0]
mutant = GridPoset([GridVertex(u.x, u.y, u.color.other), *p.vertices[1:]])
print("\nafter flipping", u.xy)
print("  axioms hold:", validate(mutant).ok, " max property:", max_property(mutant)[0])
verdict = verify_poset("A2", (1, 1), mutant)
for name, check in verdict.checks.items():
    print(f"  {check.status:7s} {name}")
