"""Shared generators and independent oracles for the test suite."""

from __future__ import annotations

import itertools
import random

import networkx as nx
from hypothesis import strategies as st

from tcwidth import MultiGraph
from tcwidth.multigraph import boundary


@st.composite
def multigraphs(draw, min_vertices=1, max_vertices=6, max_edges=9, connected=False):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    if not pairs:
        return MultiGraph(range(1, n + 1))
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=max_edges))
    if connected:
        # a random spanning tree keeps the graph connected
        for v in range(2, n + 1):
            chosen.append((draw(st.integers(1, v - 1)), v))
    return MultiGraph.from_pairs(chosen, range(1, n + 1), start=1)


def random_multigraph(rng: random.Random, n: int, m: int, connected: bool = False) -> MultiGraph:
    pairs = [tuple(rng.sample(range(1, n + 1), 2)) for _ in range(m)] if n > 1 else []
    if connected:
        pairs += [(rng.randint(1, v - 1), v) for v in range(2, n + 1)]
    return MultiGraph.from_pairs(pairs, range(1, n + 1), start=1)


def all_multigraphs(n: int, max_edges: int):
    """Every loopless multigraph on ``1..n`` with at most ``max_edges`` edges (labeled)."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for m in range(max_edges + 1):
        if not pairs and m:
            break
        for chosen in itertools.combinations_with_replacement(pairs, m):
            yield MultiGraph.from_pairs(chosen, range(1, n + 1), start=1)


def _certificate(g: MultiGraph) -> tuple:
    vs = list(g.vertices)
    best = None
    for perm in itertools.permutations(range(len(vs))):
        pos = dict(zip(vs, perm))
        key = tuple(sorted(tuple(sorted((pos[u], pos[v]))) for u, v in g.edges.values()))
        if best is None or key < best:
            best = key
    return (len(vs), best)


def nonisomorphic_multigraphs(n: int, max_edges: int):
    seen = set()
    for g in all_multigraphs(n, max_edges):
        c = _certificate(g)
        if c not in seen:
            seen.add(c)
            yield g


def to_nx(g: MultiGraph) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges.values())
    return h


def brute_min_cut(g: MultiGraph, a, b) -> int:
    """Smallest boundary over all vertex sets containing ``a`` and avoiding ``b``."""
    a, b = set(a), set(b)
    rest = [v for v in g.vertices if v not in a and v not in b]
    best = None
    for r in range(len(rest) + 1):
        for extra in itertools.combinations(rest, r):
            size = len(boundary(g, a | set(extra)))
            best = size if best is None else min(best, size)
    return best


def nonisomorphic_trees(n: int) -> list[MultiGraph]:
    return [MultiGraph.from_pairs(t.edges(), t.nodes(), start=1) for t in nx.nonisomorphic_trees(n)] if n > 1 else [
        MultiGraph([0])
    ]


def simple_paths(g: MultiGraph, s, t, avoid=frozenset()):
    """All vertex-simple paths ``(s, e1, v1, ..., t)`` avoiding ``avoid`` internally."""
    out = []

    def dfs(walk, seen):
        v = walk[-1]
        if v == t:
            out.append(tuple(walk))
            return
        for e, w in g.incident(v).items():
            if w in seen or (w in avoid and w != t):
                continue
            walk.extend((e, w))
            seen.add(w)
            dfs(walk, seen)
            seen.discard(w)
            del walk[-2:]

    dfs([s], {s})
    return out


def brute_has_immersion(host: MultiGraph, pattern: MultiGraph, strong: bool = False) -> bool:
    """Try every injective branch map and every edge-disjoint choice of simple paths."""
    pv = list(pattern.vertices)
    pe = list(pattern.edge_ids())
    for image in itertools.permutations(host.vertices, len(pv)):
        branch = dict(zip(pv, image))
        avoid = frozenset(image) if strong else frozenset()
        options = []
        for f in pe:
            a, b = pattern.endpoints(f)
            options.append(simple_paths(host, branch[a], branch[b], avoid))

        def pick(i, used):
            if i == len(options):
                return True
            for p in options[i]:
                es = set(p[1::2])
                if not es & used and pick(i + 1, used | es):
                    return True
            return False

        if pick(0, set()):
            return True
    return False
