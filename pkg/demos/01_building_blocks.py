"""Draw the fundamental posets of each rank-two system and glue them together.

Run:  python demos/01_building_blocks.py
"""
from weylgrid.gridposet import decompose, fundamental_poset, gluing_offsets, semistandard_poset


def draw(p):
    """ASCII picture: 'a'/'b' for vertex colors, '.' for empty grid points."""
    if not len(p):
        return "(empty)"
    xs = [v.x for v in p.vertices]
    ys = [v.y for v in p.vertices]
    cells = {v.xy: v.color.value[0] for v in p.vertices}
    rows = []
    for y in range(max(ys), min(ys) - 1, -1):
        rows.append(" ".join(cells.get((x, y), ".") for x in range(min(xs), max(xs) + 1)))
    return "\n".join(rows)


for system in ("A1xA1", "A2", "C2", "G2"):
    print(f"=== {system} ===")
    for which in ((1, 0), (0, 1)):
        p = fundamental_poset(system, which)
        print(f"P{which}: {len(p)} vertices, {p.num_chains} chains")
        print(draw(p), "\n")
    print("gluing offsets, beta-then-alpha:", gluing_offsets(system, "ba"))

# Gluing (2,1) in beta-then-alpha order, then taking it apart again.
p = semistandard_poset("C2", (2, 1), "ba")
print("\nC2 (2,1):")
print(draw(p))
print("finest decomposition sizes:", [len(q) for q in decompose(p)])
