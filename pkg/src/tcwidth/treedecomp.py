"""Classical (vertex-cut) tree decompositions."""

from __future__ import annotations

from .multigraph import MultiGraph, sort_key
from .trees import DecompositionError, TreeIndexed


class TreeDecomposition(TreeIndexed):
    """Bags may overlap; each vertex must occupy a subtree and each edge a common bag."""

    @classmethod
    def trivial(cls, g: MultiGraph, node=0) -> TreeDecomposition:
        return cls((node,), (), {node: frozenset(g.vertices)})


def verify_td(g: MultiGraph, td: TreeDecomposition) -> bool:
    td.check_ids(g)
    if not td.is_tree():
        return False
    if td.union(td.nodes) != set(g.vertices):
        return False
    for u, v in g.edges.values():
        if not any(u in b and v in b for b in td.bags.values()):
            return False
    adj = td.adjacency()
    for v in g.vertices:
        holders = {t for t in td.nodes if v in td.bag(t)}
        start = next(iter(holders))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in holders and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if seen != holders:
            return False
    return True


def _require(g: MultiGraph, td: TreeDecomposition) -> None:
    if not verify_td(g, td):
        raise DecompositionError("not a tree decomposition of the graph")


def td_width(td: TreeDecomposition) -> int:
    """Largest bag size minus one (never negative)."""
    return max(max((len(td.bag(t)) for t in td.nodes), default=0) - 1, 0)


def normalize_td(g: MultiGraph, td: TreeDecomposition) -> TreeDecomposition:
    """Contract tree edges whose one bag contains the other until none remain."""
    _require(g, td)
    nodes = list(td.nodes)
    edges = {frozenset(e) for e in td.tree_edges}
    bags = {t: td.bag(t) for t in nodes}
    while True:
        hit = None
        for e in sorted(edges, key=lambda e: sorted(map(sort_key, e))):
            a, b = sorted(e, key=sort_key)
            if bags[a] <= bags[b]:
                hit = (a, b)
                break
            if bags[b] <= bags[a]:
                hit = (b, a)
                break
        if hit is None:
            break
        gone, keep = hit
        new_edges = set()
        for e in edges:
            if gone in e:
                (other,) = e - {gone}
                if other != keep:
                    new_edges.add(frozenset((other, keep)))
            else:
                new_edges.add(e)
        edges = new_edges
        nodes.remove(gone)
        del bags[gone]
    tree_edges = tuple(tuple(sorted(e, key=sort_key)) for e in sorted(edges, key=lambda e: sorted(map(sort_key, e))))
    return TreeDecomposition(tuple(nodes), tree_edges, bags)


def greedy_td(g: MultiGraph) -> TreeDecomposition:
    """Min-degree elimination; an upper bound on treewidth, not an optimum."""
    adj = {v: set(g.neighbors(v)) for v in g.vertices}
    remaining = set(g.vertices)
    order: list = []
    bags: list = []
    while remaining:
        v = min(remaining, key=lambda u: (len(adj[u]), sort_key(u)))
        nb = adj.pop(v)
        for a in nb:
            adj[a] |= nb - {a}
            adj[a].discard(v)
        bags.append(frozenset(nb | {v}))
        order.append(v)
        remaining.remove(v)
    if not order:
        return TreeDecomposition((0,), (), {0: frozenset()})
    pos = {v: i for i, v in enumerate(order)}
    edges = []
    roots = []
    for i, v in enumerate(order):
        rest = bags[i] - {v}
        if rest:
            edges.append((i, min(pos[u] for u in rest)))
        else:
            roots.append(i)
    edges += list(zip(roots, roots[1:]))
    return TreeDecomposition(tuple(range(len(order))), tuple(edges), dict(enumerate(bags)))
