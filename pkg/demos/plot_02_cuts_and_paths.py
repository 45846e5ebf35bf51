"""
Edge-disjoint paths and minimum cuts
====================================

The number of edge-disjoint paths between two vertices equals the size of
the smallest edge cut separating them. Both sides come back as checkable
objects.
"""

from tcwidth import make_wall, max_edge_disjoint_paths, min_cut_between_sets, min_edge_cut

wall = make_wall(5)
s, t = (1, 3), (5, 3)
paths = max_edge_disjoint_paths(wall, s, t)
cut = min_edge_cut(wall, s, t)
print(f"{len(paths)} edge-disjoint paths, minimum cut of {len(cut)} edges")
for p in paths.paths:
    print("  ", " -> ".join(str(v) for v in p[0::2]))
print("path system checks out:", paths.check(wall), " cut checks out:", cut.check(wall))

# cuts between vertex sets: top-left and bottom-right blocks of degree-3 vertices
deg3 = sorted(v for v in wall.vertices if wall.degree(v) == 3)
a, b = deg3[:6], deg3[-6:]
print("cut between the two blocks:", len(min_cut_between_sets(wall, a, b)))
