"""
Edge sums and one structure step
================================

A graph with a small cut between two high-degree vertices splits into a
grounded edge sum. Composing the two sides gives the graph back.
"""

from tcwidth import (
    BoundedDegree,
    CliqueWitness,
    GroundedSum,
    MultiGraph,
    compose,
    is_grounded,
    is_isomorphic,
    make_star,
    structure_step,
)
from tcwidth.multigraph import sorted_ids

s = make_star(9, 4)
a = s.relabel({v: ("a", v) for v in s.vertices}, {e: ("a", e) for e in s.edge_ids()})
b = s.relabel({v: ("b", v) for v in s.vertices}, {e: ("b", e) for e in s.edge_ids()})
twins = MultiGraph(a.vertices + b.vertices, {**a.edges, **b.edges, "bridge": (("a", "y"), ("b", "y"))})

for name, g in [("one star", s), ("two stars and a bridge", twins), ("a short path", MultiGraph.from_pairs([(1, 2), (2, 3)]))]:
    v = structure_step(g, 3)
    if isinstance(v, GroundedSum):
        print(f"{name}: {v.order}-edge sum, grounded={is_grounded(v.spec)}, recomposes={is_isomorphic(compose(v.spec), g)}")
    elif isinstance(v, CliqueWitness):
        print(f"{name}: K3 immersion on branch vertices {sorted_ids(v.immersion.branch_map.values())}")
    else:
        assert isinstance(v, BoundedDegree)
        print(f"{name}: bounded degree, high-degree vertices {sorted_ids(v.witness)}")
