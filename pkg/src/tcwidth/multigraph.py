"""Loopless multigraphs with stable vertex and edge identities.

Every surgery here is pure: it returns a new :class:`MultiGraph` and leaves
its input untouched. Vertex ids and edge ids are opaque hashables; edges
created by a surgery get a fresh integer id.
"""

from __future__ import annotations

import itertools
from collections import Counter
from collections.abc import Hashable, Iterable, Mapping

Vertex = Hashable
EdgeId = Hashable


class GraphError(ValueError):
    """Raised when an operation is applied outside its domain."""


def sort_key(item):
    """Total order over the id types used in this package (ints, strings, tuples)."""
    if isinstance(item, bool):
        return (0, int(item))
    if isinstance(item, int):
        return (0, item)
    if isinstance(item, str):
        return (1, item)
    if isinstance(item, tuple):
        return (2, tuple(sort_key(x) for x in item))
    return (3, repr(item))


def sorted_ids(items: Iterable) -> list:
    return sorted(items, key=sort_key)


def _fresh_int(used: Iterable) -> int:
    ints = [x for x in used if isinstance(x, int) and not isinstance(x, bool)]
    return max(ints, default=-1) + 1


class MultiGraph:
    """An undirected loopless multigraph.

    ``edges`` maps an edge id to its two endpoints. Parallel edges are
    distinct ids over the same endpoint pair.

    Equality is labeled-multigraph equality: same vertex set and the same
    multiset of endpoint pairs. Edge ids are not compared.
    """

    __slots__ = ("_vertices", "_edges", "_inc")

    def __init__(self, vertices: Iterable[Vertex] = (), edges: Mapping[EdgeId, tuple] | None = None):
        self._vertices: dict = dict.fromkeys(vertices)
        self._edges: dict = {}
        self._inc: dict = {v: {} for v in self._vertices}
        for e, (u, v) in (edges or {}).items():
            if u == v:
                raise GraphError(f"edge {e!r} is a loop at {u!r}")
            if u not in self._inc or v not in self._inc:
                raise GraphError(f"edge {e!r} has an undeclared endpoint")
            self._edges[e] = (u, v)
            self._inc[u][e] = v
            self._inc[v][e] = u

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple], vertices: Iterable[Vertex] = (), start: int = 0) -> MultiGraph:
        """Build a graph from endpoint pairs; edge ids are ``start, start+1, ...``."""
        pairs = list(pairs)
        vs = dict.fromkeys(vertices)
        for u, v in pairs:
            vs.setdefault(u)
            vs.setdefault(v)
        return cls(vs, {start + i: p for i, p in enumerate(pairs)})

    # -- queries ---------------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return tuple(self._vertices)

    @property
    def edges(self) -> dict:
        return dict(self._edges)

    def edge_ids(self) -> tuple:
        return tuple(self._edges)

    def num_vertices(self) -> int:
        return len(self._vertices)

    def num_edges(self) -> int:
        return len(self._edges)

    def has_vertex(self, v) -> bool:
        return v in self._vertices

    def has_edge(self, e) -> bool:
        return e in self._edges

    def endpoints(self, e) -> tuple:
        try:
            return self._edges[e]
        except KeyError:
            raise GraphError(f"unknown edge {e!r}") from None

    def other_end(self, e, v):
        u, w = self.endpoints(e)
        if v == u:
            return w
        if v == w:
            return u
        raise GraphError(f"{v!r} is not an endpoint of edge {e!r}")

    def _check_vertex(self, v) -> None:
        if v not in self._vertices:
            raise GraphError(f"unknown vertex {v!r}")

    def incident(self, v) -> dict:
        """Map of edge id -> far endpoint for edges at ``v``."""
        self._check_vertex(v)
        return dict(self._inc[v])

    def degree(self, v) -> int:
        self._check_vertex(v)
        return len(self._inc[v])

    def neighbors(self, v) -> set:
        self._check_vertex(v)
        return set(self._inc[v].values())

    def max_degree(self) -> int:
        return max((len(i) for i in self._inc.values()), default=0)

    def multiplicity(self, u, v) -> int:
        self._check_vertex(u)
        return sum(1 for w in self._inc[u].values() if w == v)

    def edge_multiset(self) -> Counter:
        return Counter(frozenset(p) for p in self._edges.values())

    def components(self) -> list[set]:
        seen: set = set()
        comps = []
        for s in self._vertices:
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self._inc[x].values():
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def fresh_vertex_id(self) -> int:
        return _fresh_int(self._vertices)

    def fresh_edge_id(self) -> int:
        return _fresh_int(self._edges)

    # -- derived graphs --------------------------------------------------

    def subgraph(self, vertices: Iterable) -> MultiGraph:
        """Induced subgraph on ``vertices``."""
        wanted = set(vertices)
        keep = [v for v in self._vertices if v in wanted]
        ks = set(keep)
        return MultiGraph(keep, {e: p for e, p in self._edges.items() if p[0] in ks and p[1] in ks})

    def without_vertices(self, vertices: Iterable) -> MultiGraph:
        drop = set(vertices)
        return self.subgraph(v for v in self._vertices if v not in drop)

    def without_edges(self, edges: Iterable) -> MultiGraph:
        drop = set(edges)
        return MultiGraph(self._vertices, {e: p for e, p in self._edges.items() if e not in drop})

    def with_edges(self, pairs: Iterable[tuple]) -> tuple[MultiGraph, list]:
        """Add edges with fresh ids; returns the new graph and the new ids."""
        edges = dict(self._edges)
        nxt = self.fresh_edge_id()
        new = []
        for u, v in pairs:
            edges[nxt] = (u, v)
            new.append(nxt)
            nxt += 1
        return MultiGraph(self._vertices, edges), new

    def with_vertices(self, vertices: Iterable) -> MultiGraph:
        vs = dict(self._vertices)
        for v in vertices:
            vs.setdefault(v)
        return MultiGraph(vs, self._edges)

    def relabel(self, vertex_map: Mapping | None = None, edge_map: Mapping | None = None) -> MultiGraph:
        vm = vertex_map or {}
        em = edge_map or {}
        vs = [vm.get(v, v) for v in self._vertices]
        if len(set(vs)) != len(vs):
            raise GraphError("vertex relabeling is not injective")
        es = {em.get(e, e): (vm.get(u, u), vm.get(v, v)) for e, (u, v) in self._edges.items()}
        if len(es) != len(self._edges):
            raise GraphError("edge relabeling is not injective")
        return MultiGraph(vs, es)

    def canonical(self) -> tuple[MultiGraph, dict, dict]:
        """Relabel vertices to 1..n and edges to 1..m in sorted order.

        Returns the relabeled graph and the vertex and edge maps used.
        """
        vmap = {v: i for i, v in enumerate(sorted_ids(self._vertices), 1)}
        emap = {e: i for i, e in enumerate(sorted_ids(self._edges), 1)}
        return self.relabel(vmap, emap), vmap, emap

    # -- dunder ----------------------------------------------------------

    def __contains__(self, v) -> bool:
        return v in self._vertices

    def __len__(self) -> int:
        return len(self._vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return set(self._vertices) == set(other._vertices) and self.edge_multiset() == other.edge_multiset()

    __hash__ = None

    def __repr__(self) -> str:
        return f"MultiGraph(n={len(self._vertices)}, m={len(self._edges)})"


# -- primitive queries and surgeries --------------------------------------


def degree(g: MultiGraph, v) -> int:
    return g.degree(v)


def boundary(g: MultiGraph, x: Iterable) -> set:
    """Edges with exactly one endpoint in ``x``."""
    xs = set(x)
    for v in xs:
        g._check_vertex(v)
    return {e for e, (u, v) in g._edges.items() if (u in xs) != (v in xs)}


def consolidate(g: MultiGraph, x: Iterable, name=None) -> MultiGraph:
    """Identify ``x`` to a single vertex, deleting edges inside ``x``.

    The new vertex is ``name`` if given, otherwise a fresh integer id. Edges
    of the boundary keep their ids and are re-attached to the new vertex.
    """
    xs = set(x)
    if not xs:
        raise GraphError("cannot consolidate an empty vertex set")
    for v in xs:
        g._check_vertex(v)
    if name is None:
        name = g.fresh_vertex_id()
    elif name in g._vertices and name not in xs:
        raise GraphError(f"consolidated vertex name {name!r} is already in use")
    verts = [v for v in g._vertices if v not in xs] + [name]
    edges = {}
    for e, (u, v) in g._edges.items():
        iu, iv = u in xs, v in xs
        if iu and iv:
            continue
        edges[e] = (name if iu else u, name if iv else v)
    return MultiGraph(verts, edges)


def split_off(g: MultiGraph, e1, e2) -> MultiGraph:
    """Replace edges ``xy`` and ``yz`` by a single fresh edge ``xz``."""
    if e1 == e2:
        raise GraphError("cannot split off an edge with itself")
    a = set(g.endpoints(e1))
    b = set(g.endpoints(e2))
    common = a & b
    if len(common) != 1:
        raise GraphError("edges must share exactly one endpoint")
    (x,) = a - common
    (z,) = b - common
    if x == z:
        raise GraphError("splitting off would create a loop")
    h = g.without_edges((e1, e2))
    return h.with_edges([(x, z)])[0]


def suppress(g: MultiGraph, v) -> MultiGraph:
    """Remove a vertex of degree at most two.

    A degree-two vertex with distinct neighbours ``a, b`` is replaced by a
    fresh edge ``ab``; with both edges to the same neighbour the resulting
    loop is dropped. Degree zero or one: the vertex (and its edge) is deleted.
    """
    inc = g.incident(v)
    if len(inc) > 2:
        raise GraphError(f"cannot suppress {v!r} of degree {len(inc)}")
    h = g.without_vertices([v])
    if len(inc) == 2:
        a, b = inc.values()
        if a != b:
            h = h.with_edges([(a, b)])[0]
    return h


# -- generators -------------------------------------------------------------


def make_wall(r: int) -> MultiGraph:
    """The r-wall on vertices ``(i, j)``, row ``i`` and column ``j`` from 1 to r.

    Rows are horizontal paths; ``(i, j)(i+1, j)`` is an edge when ``i`` and
    ``j`` are both odd or both even.
    """
    if r < 1:
        raise GraphError("wall size must be at least 1")
    verts = [(i, j) for i in range(1, r + 1) for j in range(1, r + 1)]
    pairs = [((i, j), (i, j + 1)) for i in range(1, r + 1) for j in range(1, r)]
    pairs += [((i, j), (i + 1, j)) for i in range(1, r) for j in range(1, r + 1) if i % 2 == j % 2]
    return MultiGraph.from_pairs(pairs, verts)


def make_star(l: int, n: int) -> MultiGraph:
    """``l`` parallel edges from each of ``("x", 1) .. ("x", n)`` to ``"y"``."""
    if l < 1 or n < 1:
        raise GraphError("multistar parameters must be positive")
    xs = [("x", i) for i in range(1, n + 1)]
    pairs = [(x, "y") for x in xs for _ in range(l)]
    return MultiGraph.from_pairs(pairs, xs + ["y"])


def complete_graph(n: int) -> MultiGraph:
    """K_n on vertices 1..n with edge ids 1..m."""
    return MultiGraph.from_pairs(itertools.combinations(range(1, n + 1), 2), range(1, n + 1), start=1)


def cycle_graph(n: int) -> MultiGraph:
    """C_n on vertices 1..n (n >= 2; n = 2 gives a doubled edge)."""
    if n < 2:
        raise GraphError("a cycle needs at least two vertices")
    return MultiGraph.from_pairs([(i, i % n + 1) for i in range(1, n + 1)], range(1, n + 1), start=1)


def path_graph(n: int) -> MultiGraph:
    """P_n on vertices 1..n."""
    return MultiGraph.from_pairs([(i, i + 1) for i in range(1, n)], range(1, n + 1), start=1)


# -- isomorphism ------------------------------------------------------------


def is_isomorphic(g: MultiGraph, h: MultiGraph) -> bool:
    """Exact multigraph isomorphism by backtracking (small graphs only).

    Candidates are pruned by degree and by multiplicity against every
    already-mapped vertex.
    """
    return find_isomorphism(g, h) is not None


def find_isomorphism(g: MultiGraph, h: MultiGraph) -> dict | None:
    if g.num_vertices() != h.num_vertices() or g.num_edges() != h.num_edges():
        return None
    if sorted(g.degree(v) for v in g.vertices) != sorted(h.degree(v) for v in h.vertices):
        return None
    gm = g.edge_multiset()
    hm = h.edge_multiset()

    def mult(m, a, b):
        return m.get(frozenset((a, b)), 0)

    order = sorted(g.vertices, key=lambda v: (-g.degree(v), sort_key(v)))
    hverts = list(h.vertices)
    mapping: dict = {}
    used: set = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in hverts:
            if w in used or h.degree(w) != g.degree(v):
                continue
            if any(mult(gm, v, a) != mult(hm, w, b) for a, b in mapping.items()):
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return dict(mapping) if extend(0) else None
