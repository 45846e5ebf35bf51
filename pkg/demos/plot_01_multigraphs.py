"""
Multigraphs and their surgeries
===============================

Build the generator families and watch degrees move under consolidation,
splitting off and suppression.
"""

from tcwidth import boundary, consolidate, make_star, make_wall, split_off, suppress

# the 6-wall: rows are paths, rungs alternate between rows
wall = make_wall(6)
print("wall:", wall.num_vertices(), "vertices,", wall.num_edges(), "edges, max degree", wall.max_degree())

# the multistar S_{3,3}: three bundles of three parallel edges into y
star = make_star(3, 3)
print("star: deg(y) =", star.degree("y"))

# merging two leaves keeps every edge that left the pair
pair = {("x", 1), ("x", 2)}
merged = consolidate(star, pair, name="w")
print("boundary of the pair:", len(boundary(star, pair)), "-> degree of w:", merged.degree("w"))

# split off two edges at y: x1-y-x2 becomes a direct x1-x2 edge
e1 = min(star.incident(("x", 1)))
e2 = min(star.incident(("x", 2)))
cut_through = split_off(star, e1, e2)
print("after split_off: deg(y) =", cut_through.degree("y"), " x1-x2 edges:", cut_through.multiplicity(("x", 1), ("x", 2)))

# suppress a degree-two vertex of the wall's top row
corner = next(v for v in sorted(wall.vertices) if wall.degree(v) == 2)
print("suppressing", corner, "->", suppress(wall, corner).num_vertices(), "vertices")
