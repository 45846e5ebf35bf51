"""
Finding and building immersions
===============================

An exhaustive search decides small instances. The multistar embedding and
the hub construction produce certificates directly, and every certificate
is checked by the verifier.
"""

from tcwidth import (
    clique_from_hub,
    complete_graph,
    cycle_graph,
    embed_in_multistar,
    find_immersion,
    make_star,
    path_graph,
    verify_immersion,
)

k3 = complete_graph(3)
print("K3 in C3:", find_immersion(cycle_graph(3), k3) is not None)
print("K3 in P4:", find_immersion(path_graph(4), k3) is not None)

im = find_immersion(make_star(3, 3), k3, strong=True)
for f, p in sorted(im.path_map.items()):
    print(f"  pattern edge {f}: {p[0]} .. {p[-1]} through {p[2::2][:-1]}")

# any graph with max degree k on n vertices sits inside S_{k,n}
k4 = complete_graph(4)
print("K4 in S_{3,4} by construction:", verify_immersion(embed_in_multistar(k4, 3, 4)))

# four pairwise 9-connected vertices give K3; a bridge gives a small cut instead
hub = clique_from_hub(make_star(9, 4), [("x", i) for i in range(1, 5)], 3)
print("hub construction verified:", verify_immersion(hub))
