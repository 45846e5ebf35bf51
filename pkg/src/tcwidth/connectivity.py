"""Unit-capacity edge connectivity: edge-disjoint paths and minimum edge cuts.

Parallel edges are kept as distinct unit-capacity arcs, so a maximum flow
reads back as concrete edge-id sequences.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .multigraph import GraphError, MultiGraph, boundary, consolidate, sort_key

Path = tuple  # (v0, e1, v1, e2, ..., vk)


def path_vertices(p: Path) -> tuple:
    return p[0::2]


def path_edges(p: Path) -> tuple:
    return p[1::2]


def reverse_path(p: Path) -> Path:
    return tuple(reversed(p))


def remove_cycles(p: Path) -> Path:
    """Shortcut a walk to a vertex-simple path over a subset of its edges."""
    out: list = [p[0]]
    pos = {p[0]: 0}
    for i in range(1, len(p), 2):
        e, v = p[i], p[i + 1]
        if v in pos:
            cut = pos[v]
            for w in out[cut + 1 :: 2]:
                pos.pop(w, None)
            del out[cut + 1 :]
        else:
            out.extend((e, v))
            pos[v] = len(out) - 1
    return tuple(out)


def is_trail(g: MultiGraph, p: Path) -> bool:
    """True if ``p`` is a walk in ``g`` that repeats no edge."""
    if len(p) % 2 == 0 or not g.has_vertex(p[0]):
        return False
    es = path_edges(p)
    if len(set(es)) != len(es):
        return False
    for i in range(1, len(p), 2):
        e = p[i]
        if not g.has_edge(e) or set(g.endpoints(e)) != {p[i - 1], p[i + 1]}:
            return False
    return True


@dataclass(frozen=True)
class PathSystem:
    source: object
    sink: object
    paths: tuple

    def __len__(self) -> int:
        return len(self.paths)

    def check(self, g: MultiGraph) -> bool:
        """Pairwise edge-disjoint trails from source to sink."""
        seen: set = set()
        for p in self.paths:
            if not is_trail(g, p) or p[0] != self.source or p[-1] != self.sink:
                return False
            es = set(path_edges(p))
            if es & seen:
                return False
            seen |= es
        return True


@dataclass(frozen=True)
class EdgeCut:
    source: object
    sink: object
    side: frozenset
    cut_edges: frozenset

    def __len__(self) -> int:
        return len(self.cut_edges)

    def check(self, g: MultiGraph) -> bool:
        src = self.source if isinstance(self.source, frozenset) else {self.source}
        snk = self.sink if isinstance(self.sink, frozenset) else {self.sink}
        return (
            src <= self.side
            and not (snk & self.side)
            and self.cut_edges == frozenset(boundary(g, self.side))
        )


def _require(g: MultiGraph, *vs) -> None:
    for v in vs:
        if not g.has_vertex(v):
            raise GraphError(f"unknown vertex {v!r}")


def _max_flow(g: MultiGraph, s, t, limit: int | None = None) -> tuple[dict, int]:
    """Augmenting-path unit flow. Returns edge -> +1 (first->second endpoint) / -1."""
    flow: dict = {}
    adj = {v: sorted(g.incident(v).items(), key=lambda kv: sort_key(kv[0])) for v in g.vertices}
    value = 0
    while limit is None or value < limit:
        pred = {s: None}
        queue = deque([s])
        while queue and t not in pred:
            x = queue.popleft()
            for e, y in adj[x]:
                if y in pred:
                    continue
                a, _ = g.endpoints(e)
                direction = 1 if x == a else -1
                if flow.get(e, 0) == direction:
                    continue
                pred[y] = (x, e, direction)
                queue.append(y)
        if t not in pred:
            break
        y = t
        while pred[y] is not None:
            x, e, direction = pred[y]
            flow[e] = flow.get(e, 0) + direction
            if flow[e] == 0:
                del flow[e]
            y = x
        value += 1
    return flow, value


def _decompose(g: MultiGraph, flow: dict, s, t) -> list:
    out_edges: dict = {}
    for e, d in flow.items():
        a, b = g.endpoints(e)
        tail, head = (a, b) if d == 1 else (b, a)
        out_edges.setdefault(tail, []).append((e, head))
    for lst in out_edges.values():
        lst.sort(key=lambda eh: sort_key(eh[0]), reverse=True)
    paths = []
    while out_edges.get(s):
        walk: list = [s]
        x = s
        while x != t:
            e, y = out_edges[x].pop()
            walk.extend((e, y))
            x = y
        paths.append(remove_cycles(tuple(walk)))
    return paths


def max_edge_disjoint_paths(g: MultiGraph, s, t) -> PathSystem:
    """A maximum family of pairwise edge-disjoint ``s``-``t`` paths."""
    if s == t:
        raise GraphError("source and sink must differ")
    _require(g, s, t)
    flow, _ = _max_flow(g, s, t)
    return PathSystem(s, t, tuple(_decompose(g, flow, s, t)))


def edge_connectivity(g: MultiGraph, s, t, limit: int | None = None) -> int:
    """Number of edge-disjoint ``s``-``t`` paths, optionally capped at ``limit``."""
    if s == t:
        raise GraphError("source and sink must differ")
    _require(g, s, t)
    return _max_flow(g, s, t, limit)[1]


def _residual_side(g: MultiGraph, flow: dict, s) -> set:
    side = {s}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for e, y in g.incident(x).items():
            if y in side:
                continue
            a, _ = g.endpoints(e)
            direction = 1 if x == a else -1
            if flow.get(e, 0) != direction:
                side.add(y)
                queue.append(y)
    return side


def min_edge_cut(g: MultiGraph, s, t) -> EdgeCut:
    """Minimum ``s``-``t`` edge cut; the side is the residual reach of ``s``."""
    if s == t:
        raise GraphError("source and sink must differ")
    _require(g, s, t)
    flow, _ = _max_flow(g, s, t)
    side = frozenset(_residual_side(g, flow, s))
    return EdgeCut(s, t, side, frozenset(boundary(g, side)))


def min_cut_between_sets(g: MultiGraph, a, b) -> EdgeCut:
    """Minimum cut ``δ(U)`` with ``a ⊆ U`` and ``U ∩ b = ∅``.

    ``source``/``sink`` of the returned cut are the sets themselves.
    """
    a, b = frozenset(a), frozenset(b)
    if not a or not b:
        raise GraphError("both terminal sets must be nonempty")
    if a & b:
        raise GraphError("terminal sets overlap")
    za = ("__cut_source__",)
    zb = ("__cut_sink__",)
    h = consolidate(consolidate(g, a, name=za), b, name=zb)
    cut = min_edge_cut(h, za, zb)
    side = frozenset((cut.side - {za}) | a)
    return EdgeCut(a, b, side, frozenset(boundary(g, side)))
