"""
Tree-cut decompositions
=======================

Decompose graphs that exclude a clique immersion, measure adhesion and
width, and compare with the exact width of small graphs.
"""

from tcwidth import (
    Immersion,
    MultiGraph,
    adhesion,
    brute_force_tcw,
    build_excluding_clique,
    check_converse,
    complete_graph,
    cycle_graph,
    from_tree_decomposition,
    greedy_td,
    make_star,
    make_wall,
    path_graph,
    td_width,
    width,
)
from tcwidth.multigraph import sorted_ids

# exhaustive, so only for six vertices or fewer
for name, g in [("P6", path_graph(6)), ("C5", cycle_graph(5)), ("K5", complete_graph(5))]:
    print(f"{name}: exact tree-cut width {brute_force_tcw(g)}")

g = make_wall(5)
td = greedy_td(g)
d = from_tree_decomposition(g, td)
print(f"H5 via a width-{td_width(td)} tree decomposition: adhesion {adhesion(g, d)}, width {width(g, d)}")

# three fat edges joined by single edges: high degree, but no K3 immersion
g = MultiGraph.from_pairs([(1, 2)] * 9 + [(2, 3)] + [(3, 4)] * 9 + [(4, 5)] + [(5, 6)] * 9)
d = build_excluding_clique(g, 3)
print(f"fat-edge chain: {len(d.nodes)} nodes, adhesion {adhesion(g, d)}, width {width(g, d)}")
print("  certifies no K3 immersion:", check_converse(g, d, 2))

# a hub with nine edges to each of four leaves: the builder returns the clique instead
out = build_excluding_clique(make_star(9, 4), 3)
if isinstance(out, Immersion):
    print("S_{9,4}: K3 immersion on branch vertices", sorted_ids(out.branch_map.values()))
