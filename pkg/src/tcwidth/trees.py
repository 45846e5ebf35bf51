"""Small helpers for tree-indexed decompositions."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from .multigraph import GraphError, MultiGraph, sort_key, sorted_ids


class DecompositionError(GraphError):
    """A decomposition refers to unknown ids or is used while invalid."""


@dataclass(frozen=True, eq=False)
class TreeIndexed:
    """A tree on ``nodes`` with a vertex set (bag) at every node.

    Nodes without an entry in ``bags`` have empty bags.
    """

    nodes: tuple
    tree_edges: tuple
    bags: Mapping = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "tree_edges", tuple(tuple(e) for e in self.tree_edges))
        object.__setattr__(self, "bags", {t: frozenset(b) for t, b in self.bags.items()})

    def bag(self, t) -> frozenset:
        return self.bags.get(t, frozenset())

    def adjacency(self) -> dict:
        adj: dict = {t: [] for t in self.nodes}
        for a, b in self.tree_edges:
            adj[a].append(b)
            adj[b].append(a)
        for lst in adj.values():
            lst.sort(key=sort_key)
        return adj

    def check_ids(self, g: MultiGraph) -> None:
        known = set(self.nodes)
        if len(known) != len(self.nodes):
            raise DecompositionError("duplicate tree nodes")
        for a, b in self.tree_edges:
            if a not in known or b not in known:
                raise DecompositionError(f"tree edge {a!r}-{b!r} names an unknown node")
        for t, bag in self.bags.items():
            if t not in known:
                raise DecompositionError(f"bag for unknown node {t!r}")
            for v in bag:
                if not g.has_vertex(v):
                    raise DecompositionError(f"bag at {t!r} names unknown vertex {v!r}")

    def is_tree(self) -> bool:
        return is_tree(self.nodes, self.tree_edges)

    def side(self, a, b) -> set:
        """Nodes on ``b``'s side after deleting the tree edge ``ab``."""
        return component_without(self.adjacency(), b, a)

    def branches(self, t) -> list[tuple[object, set]]:
        """``(neighbour, component)`` for every component of the tree minus ``t``."""
        adj = self.adjacency()
        return [(s, component_without(adj, s, t)) for s in adj[t]]

    def union(self, nodes: Iterable) -> set:
        out: set = set()
        for t in nodes:
            out |= self.bag(t)
        return out

    def relabeled(self, mapping: Mapping):
        return type(self)(
            tuple(mapping[t] for t in self.nodes),
            tuple((mapping[a], mapping[b]) for a, b in self.tree_edges),
            {mapping[t]: b for t, b in self.bags.items()},
        )


def is_tree(nodes: Iterable, edges: Iterable) -> bool:
    nodes = list(nodes)
    edges = list(edges)
    if not nodes or len(edges) != len(nodes) - 1:
        return False
    parent = {t: t for t in nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        if a not in parent or b not in parent:
            return False
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def component_without(adj: Mapping, start, removed) -> set:
    """Nodes reachable from ``start`` without passing through ``removed``."""
    comp = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y != removed and y not in comp:
                comp.add(y)
                stack.append(y)
    return comp


def prufer_decode(seq: list[int], n: int) -> list[tuple[int, int]]:
    """Edges of the labeled tree on ``0..n-1`` with Prüfer sequence ``seq``."""
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (i for i in range(n) if degree[i] == 1)
    edges.append((u, v))
    return edges


def graph_as_tree(t: MultiGraph) -> TreeIndexed:
    """View a simple tree given as a :class:`MultiGraph` as a bare indexed tree."""
    nodes = sorted_ids(t.vertices)
    edges = tuple(t.endpoints(e) for e in sorted_ids(t.edge_ids()))
    if not is_tree(nodes, edges):
        raise GraphError("graph is not a tree")
    return TreeIndexed(nodes, edges)
