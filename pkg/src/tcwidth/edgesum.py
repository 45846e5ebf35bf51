"""Edge sums and the one-step structure split for graphs without a clique immersion."""

from __future__ import annotations

import itertools
from collections.abc import Mapping
from dataclasses import dataclass, field

from .connectivity import EdgeCut, PathSystem, edge_connectivity, max_edge_disjoint_paths, min_edge_cut
from .multigraph import GraphError, MultiGraph, consolidate, sort_key, sorted_ids


@dataclass(frozen=True, eq=False)
class EdgeSumSpec:
    """Glue ``g1`` and ``g2`` at ``v1``/``v2`` by pairing their incident edges.

    ``pairing`` maps each edge at ``v1`` to an edge at ``v2``. Apart from the
    glue vertices and their edges, the two graphs must use disjoint ids; use
    :meth:`tagged` to namespace arbitrary inputs.
    """

    g1: MultiGraph
    v1: object
    g2: MultiGraph
    v2: object
    pairing: Mapping = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "pairing", dict(self.pairing))
        s1 = self.g1.incident(self.v1)
        s2 = self.g2.incident(self.v2)
        if len(s1) != len(s2):
            raise GraphError("glue vertices have different degrees")
        if set(self.pairing) != set(s1) or set(self.pairing.values()) != set(s2):
            raise GraphError("pairing is not a bijection between the glue stubs")
        if len(set(self.pairing.values())) != len(self.pairing):
            raise GraphError("pairing is not injective")
        rest1 = set(self.g1.vertices) - {self.v1}
        rest2 = set(self.g2.vertices) - {self.v2}
        if rest1 & rest2:
            raise GraphError("the two sides share vertex ids; build the sum with EdgeSumSpec.tagged")
        inner1 = set(self.g1.edge_ids()) - set(s1)
        inner2 = set(self.g2.edge_ids()) - set(s2)
        if inner1 & inner2:
            raise GraphError("the two sides share edge ids; build the sum with EdgeSumSpec.tagged")

    @classmethod
    def tagged(cls, g1: MultiGraph, v1, g2: MultiGraph, v2, pairing: Mapping) -> EdgeSumSpec:
        """Namespace every id as ``(1, id)`` or ``(2, id)`` before gluing."""
        t1 = g1.relabel({v: (1, v) for v in g1.vertices}, {e: (1, e) for e in g1.edge_ids()})
        t2 = g2.relabel({v: (2, v) for v in g2.vertices}, {e: (2, e) for e in g2.edge_ids()})
        return cls(t1, (1, v1), t2, (2, v2), {(1, a): (2, b) for a, b in pairing.items()})

    @property
    def order(self) -> int:
        return len(self.pairing)

    def side(self, i: int) -> tuple[MultiGraph, object]:
        if i == 1:
            return self.g1, self.v1
        if i == 2:
            return self.g2, self.v2
        raise ValueError("side must be 1 or 2")

    def stub_pairs(self, i: int) -> dict:
        """Stub on side ``i`` -> matching stub on the other side."""
        if i == 1:
            return dict(self.pairing)
        return {b: a for a, b in self.pairing.items()}


def compose_with_seams(spec: EdgeSumSpec) -> tuple[MultiGraph, dict]:
    """The composed graph and a map from each seam edge to its stub pair ``(e1, e2)``."""
    g1, g2 = spec.g1, spec.g2
    verts = [v for v in g1.vertices if v != spec.v1] + [v for v in g2.vertices if v != spec.v2]
    s1 = g1.incident(spec.v1)
    s2 = g2.incident(spec.v2)
    edges = {e: p for e, p in g1.edges.items() if e not in s1}
    edges.update((e, p) for e, p in g2.edges.items() if e not in s2)
    base = MultiGraph(verts, edges)
    stubs = sorted(spec.pairing.items(), key=lambda kv: sort_key(kv[0]))
    g, new = base.with_edges([(s1[a], s2[b]) for a, b in stubs])
    return g, dict(zip(new, stubs))


def compose(spec: EdgeSumSpec) -> MultiGraph:
    return compose_with_seams(spec)[0]


def grounding(spec: EdgeSumSpec, i: int) -> tuple[object, PathSystem] | None:
    """First vertex (in id order) receiving ``k`` edge-disjoint paths from the glue vertex."""
    g, v = spec.side(i)
    k = spec.order
    for w in sorted_ids(g.vertices):
        if w == v:
            continue
        if edge_connectivity(g, v, w, limit=k) >= k:
            return w, max_edge_disjoint_paths(g, v, w)
    return None


def is_grounded(spec: EdgeSumSpec) -> bool:
    return grounding(spec, 1) is not None and grounding(spec, 2) is not None


def split_on_cut(g: MultiGraph, cut: EdgeCut) -> EdgeSumSpec:
    """Split ``g`` along ``δ(X)`` into two consolidations glued by the identity pairing."""
    x = set(cut.side)
    rest = set(g.vertices) - x
    if not x or not rest:
        raise GraphError("both sides of the cut must be nonempty")
    v1 = g.fresh_vertex_id()
    v2 = v1 + 1
    g1 = consolidate(g, rest, name=v1)
    g2 = consolidate(g, x, name=v2)
    return EdgeSumSpec(g1, v1, g2, v2, {e: e for e in g1.incident(v1)})


# -- structure step ----------------------------------------------------------


@dataclass(frozen=True)
class BoundedDegree:
    witness: frozenset


@dataclass(frozen=True, eq=False)
class GroundedSum:
    spec: EdgeSumSpec
    cut: EdgeCut

    @property
    def order(self) -> int:
        return self.spec.order


@dataclass(frozen=True, eq=False)
class CliqueWitness:
    immersion: object


StructureVerdict = BoundedDegree | GroundedSum | CliqueWitness


def high_degree_vertices(g: MultiGraph, threshold: int) -> list:
    return sorted_ids(v for v in g.vertices if g.degree(v) >= threshold)


def structure_step(g: MultiGraph, t: int) -> StructureVerdict:
    """Classify ``g`` against the clique size ``t``.

    Pairs of vertices of degree at least ``t²`` are scanned in id order; the
    first pair joined by fewer than ``t²`` edge-disjoint paths is split along
    a minimum cut between them. Otherwise ``t+1`` such vertices yield a K_t
    immersion, and failing that the graph has (t, t²)-bounded degree.
    """
    from .immersion import Immersion, clique_from_hub

    if t < 1:
        raise ValueError("t must be positive")
    thr = t * t
    z = high_degree_vertices(g, thr)
    for u, v in itertools.combinations(z, 2):
        if edge_connectivity(g, u, v, limit=thr) < thr:
            cut = min_edge_cut(g, u, v)
            return GroundedSum(split_on_cut(g, cut), cut)
    if len(z) >= t + 1:
        found = clique_from_hub(g, z[: t + 1], t)
        assert isinstance(found, Immersion), "pairwise connectivity guarantees the clique"
        return CliqueWitness(found)
    return BoundedDegree(frozenset(z))
