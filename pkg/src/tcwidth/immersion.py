"""Immersion certificates: verification, exhaustive search and constructions."""

from __future__ import annotations

from dataclasses import dataclass, field

from .connectivity import (
    EdgeCut,
    Path,
    max_edge_disjoint_paths,
    min_edge_cut,
    path_edges,
    path_vertices,
    remove_cycles,
    reverse_path,
)
from .edgesum import EdgeSumSpec, compose_with_seams, grounding, is_grounded
from .multigraph import GraphError, MultiGraph, boundary, complete_graph, make_star, sort_key, sorted_ids


class ImmersionError(GraphError):
    """A certificate refers to ids that do not exist."""


class SearchBudgetExceeded(RuntimeError):
    """The exhaustive search gave up before reaching a verdict."""


@dataclass(frozen=True, eq=False)
class Immersion:
    host: MultiGraph
    pattern: MultiGraph
    branch_map: dict = field(default_factory=dict)
    path_map: dict = field(default_factory=dict)

    def branch_vertices(self) -> set:
        return set(self.branch_map.values())


def _oriented(p: Path, start) -> Path:
    if p[0] == start:
        return p
    if p[-1] == start:
        return reverse_path(p)
    raise GraphError(f"path does not start or end at {start!r}")


def _check_ids(im: Immersion) -> None:
    for x, v in im.branch_map.items():
        if not im.pattern.has_vertex(x):
            raise ImmersionError(f"branch map names unknown pattern vertex {x!r}")
        if not im.host.has_vertex(v):
            raise ImmersionError(f"branch map names unknown host vertex {v!r}")
    for f, p in im.path_map.items():
        if not im.pattern.has_edge(f):
            raise ImmersionError(f"path map names unknown pattern edge {f!r}")
        for v in path_vertices(p):
            if not im.host.has_vertex(v):
                raise ImmersionError(f"path for {f!r} visits unknown host vertex {v!r}")
        for e in path_edges(p):
            if not im.host.has_edge(e):
                raise ImmersionError(f"path for {f!r} uses unknown host edge {e!r}")


def _is_path(g: MultiGraph, p: Path) -> bool:
    vs = path_vertices(p)
    if len(set(vs)) != len(vs):
        return False
    return all(set(g.endpoints(p[i])) == {p[i - 1], p[i + 1]} for i in range(1, len(p), 2))


def verify_immersion(im: Immersion, strong: bool = False) -> bool:
    """Check injectivity, endpoint agreement and edge-disjointness.

    With ``strong`` the composite paths must also avoid branch vertices
    internally. Raises :class:`ImmersionError` for dangling ids.
    """
    _check_ids(im)
    h, g = im.pattern, im.host
    if set(im.branch_map) != set(h.vertices) or set(im.path_map) != set(h.edge_ids()):
        return False
    branch = list(im.branch_map.values())
    if len(set(branch)) != len(branch):
        return False
    used: set = set()
    bset = set(branch)
    for f, p in im.path_map.items():
        x, y = h.endpoints(f)
        ends = {im.branch_map[x], im.branch_map[y]}
        if len(p) < 3 or {p[0], p[-1]} != ends or not _is_path(g, p):
            return False
        es = set(path_edges(p))
        if es & used:
            return False
        used |= es
        if strong and bset & set(path_vertices(p)[1:-1]):
            return False
    return True


def identity_immersion(g: MultiGraph) -> Immersion:
    return Immersion(g, g, {v: v for v in g.vertices}, {e: (u, e, v) for e, (u, v) in g.edges.items()})


def compose_immersions(outer: Immersion, inner: Immersion) -> Immersion:
    """Chain ``H -> S`` (outer) with ``S -> G`` (inner) into an immersion of H in G."""
    if outer.host is not inner.pattern and outer.host != inner.pattern:
        raise GraphError("outer host and inner pattern differ")
    branch = {x: inner.branch_map[s] for x, s in outer.branch_map.items()}
    paths = {}
    for f, p in outer.path_map.items():
        walk: list = [inner.branch_map[p[0]]]
        for i in range(1, len(p), 2):
            seg = _oriented(inner.path_map[p[i]], walk[-1])
            walk.extend(seg[1:])
        paths[f] = remove_cycles(tuple(walk))
    return Immersion(inner.host, outer.pattern, branch, paths)


# -- exhaustive search -------------------------------------------------------


class _Search:
    def __init__(self, host: MultiGraph, pattern: MultiGraph, strong: bool, budget: int):
        self.g = host
        self.h = pattern
        self.strong = strong
        self.budget = budget
        self.nodes = 0
        self.free = {e: True for e in host.edge_ids()}
        # per vertex: neighbour -> sorted edge ids
        self.adj: dict = {}
        for v in host.vertices:
            nb: dict = {}
            for e, w in host.incident(v).items():
                nb.setdefault(w, []).append(e)
            for lst in nb.values():
                lst.sort(key=sort_key)
            self.adj[v] = nb
        self.resdeg = {v: host.degree(v) for v in host.vertices}
        self.order = sorted(pattern.vertices, key=lambda x: (-pattern.degree(x), sort_key(x)))
        pos = {x: i for i, x in enumerate(self.order)}
        # edges routed right after their later endpoint is placed
        self.edges_at: list = [[] for _ in self.order]
        for f, (a, b) in sorted(pattern.edges.items(), key=lambda kv: sort_key(kv[0])):
            self.edges_at[max(pos[a], pos[b])].append(f)
        self.pending = {x: pattern.degree(x) for x in pattern.vertices}
        self.branch: dict = {}
        self.used_hosts: set = set()
        self.internal: dict = {}
        self.paths: dict = {}

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExceeded(f"search exceeded {self.budget} nodes")

    def _free_edge(self, u, w):
        for e in self.adj[u].get(w, ()):
            if self.free[e]:
                return e
        return None

    def simple_paths(self, a, b):
        """Simple paths a -> b in the residual graph, shortest first."""
        n = self.g.num_vertices()
        blocked = self.used_hosts if self.strong else set()
        for length in range(1, n):
            yield from self._paths_of_length(a, b, length, blocked)

    def _paths_of_length(self, a, b, length, blocked):
        walk = [a]
        on = {a}

        def rec(u, remaining):
            if remaining == 0:
                if u == b:
                    yield tuple(walk)
                return
            for w in self.adj[u]:
                if w in on:
                    continue
                if w == b and remaining != 1:
                    continue
                if w != b and (remaining == 1 or w in blocked):
                    continue
                e = self._free_edge(u, w)
                if e is None:
                    continue
                walk.extend((e, w))
                on.add(w)
                yield from rec(w, remaining - 1)
                on.discard(w)
                del walk[-2:]

        yield from rec(a, length)

    def _take(self, p: Path, f) -> None:
        for e in path_edges(p):
            self.free[e] = False
        self.resdeg[p[0]] -= 1
        self.resdeg[p[-1]] -= 1
        for v in path_vertices(p)[1:-1]:
            self.resdeg[v] -= 2
            self.internal[v] = self.internal.get(v, 0) + 1
        x, y = self.h.endpoints(f)
        self.pending[x] -= 1
        self.pending[y] -= 1
        self.paths[f] = p

    def _give(self, p: Path, f) -> None:
        for e in path_edges(p):
            self.free[e] = True
        self.resdeg[p[0]] += 1
        self.resdeg[p[-1]] += 1
        for v in path_vertices(p)[1:-1]:
            self.resdeg[v] += 2
            self.internal[v] -= 1
            if not self.internal[v]:
                del self.internal[v]
        x, y = self.h.endpoints(f)
        self.pending[x] += 1
        self.pending[y] += 1
        del self.paths[f]

    def _feasible(self) -> bool:
        return all(self.pending[x] <= self.resdeg[v] for x, v in self.branch.items())

    def route(self, i: int, j: int) -> bool:
        fs = self.edges_at[i]
        if j == len(fs):
            return self.place(i + 1)
        f = fs[j]
        x, y = self.h.endpoints(f)
        for p in self.simple_paths(self.branch[x], self.branch[y]):
            self.tick()
            self._take(p, f)
            if self._feasible() and self.route(i, j + 1):
                return True
            self._give(p, f)
        return False

    def place(self, i: int) -> bool:
        if i == len(self.order):
            return True
        x = self.order[i]
        need = self.h.degree(x)
        for v in sorted_ids(self.g.vertices):
            if v in self.used_hosts or self.resdeg[v] < need:
                continue
            if self.strong and v in self.internal:
                continue
            self.tick()
            self.branch[x] = v
            self.used_hosts.add(v)
            if self._feasible() and self.route(i, 0):
                return True
            del self.branch[x]
            self.used_hosts.discard(v)
        return False


def find_immersion(
    host: MultiGraph, pattern: MultiGraph, strong: bool = False, budget: int = 200_000
) -> Immersion | None:
    """Exhaustive immersion search for small instances.

    Returns a verified certificate, or ``None`` when no immersion exists.
    Raises :class:`SearchBudgetExceeded` if more than ``budget`` search
    nodes would be needed; that outcome is never reported as ``None``.
    """
    if pattern.num_vertices() > host.num_vertices():
        return None
    s = _Search(host, pattern, strong, budget)
    if not s.place(0):
        return None
    im = Immersion(host, pattern, dict(s.branch), dict(s.paths))
    assert verify_immersion(im, strong)
    return im


# -- constructions -------------------------------------------------------------


def embed_in_multistar(h: MultiGraph, k: int, n: int) -> Immersion:
    """Immerse ``h`` in the multistar S_{k,n}.

    Pattern vertices go to ``("x", 1), ("x", 2), ...`` in id order; edge ``uv``
    becomes ``x_u - y - x_v`` over two unused parallel edges.
    """
    if h.max_degree() > k:
        raise GraphError(f"pattern has maximum degree {h.max_degree()} > {k}")
    if h.num_vertices() > n:
        raise GraphError(f"pattern has {h.num_vertices()} vertices > {n}")
    star = make_star(k, n)
    branch = {x: ("x", i) for i, x in enumerate(sorted_ids(h.vertices), 1)}
    spare = {b: sorted_ids(star.incident(b)) for b in branch.values()}
    paths = {}
    for f, (a, b) in sorted(h.edges.items(), key=lambda kv: sort_key(kv[0])):
        xa, xb = branch[a], branch[b]
        paths[f] = (xa, spare[xa].pop(0), "y", spare[xb].pop(0), xb)
    return Immersion(star, h, branch, paths)


def clique_from_hub(g: MultiGraph, x, t: int) -> Immersion | EdgeCut:
    """Immerse K_t using ``t+1`` pairwise highly edge-connected vertices.

    The last vertex of ``x`` (in id order) plays the hub side ``y``; a new
    vertex joined by ``t`` parallel edges to each other member of ``x`` must
    send ``t²`` edge-disjoint paths to ``y``. If it cannot, the returned
    cut has fewer than ``t²`` edges and separates two members of ``x``.
    """
    xs = sorted_ids(set(x))
    if len(xs) != t + 1:
        raise GraphError(f"expected {t + 1} terminals, got {len(xs)}")
    *tops, y = xs
    hub = ("__hub__",)
    aux = g.with_vertices([hub]).with_edges([(hub, xi) for xi in tops for _ in range(t)])[0]
    paths = max_edge_disjoint_paths(aux, hub, y)
    if len(paths) < t * t:
        cut = min_edge_cut(aux, hub, y)
        side = frozenset(cut.side - {hub})
        source = next(xi for xi in tops if xi in side)
        return EdgeCut(source, y, side, frozenset(boundary(g, side)))
    star = make_star(t, t)
    branch = {("x", i): xi for i, xi in enumerate(tops, 1)}
    branch["y"] = y
    by_start: dict = {}
    for p in paths.paths:
        by_start.setdefault(p[2], []).append(p[2:])
    star_paths = {}
    for i, xi in enumerate(tops, 1):
        for e, p in zip(sorted_ids(star.incident(("x", i))), by_start[xi]):
            star_paths[e] = p
    inner = Immersion(g, star, branch, star_paths)
    return compose_immersions(embed_in_multistar(complete_graph(t), t, t), inner)


def _restrict_path(p: Path, keep: set, glue, seam_stub: dict) -> Path:
    walk: list = [p[0] if p[0] in keep else glue]
    for i in range(1, len(p), 2):
        e, w = p[i], p[i + 1]
        if e in seam_stub:
            walk.extend((seam_stub[e], w if w in keep else glue))
        elif w in keep:
            walk.extend((e, w))
    return remove_cycles(tuple(walk))


def project_across_sum(spec: EdgeSumSpec, im: Immersion, t: int) -> tuple[int, Immersion]:
    """Move a K_t immersion in a k-edge sum (t > k) to one of the summands.

    Composite paths are restricted to the chosen side; excursions to the far
    side collapse onto the glue vertex, which also replaces a lone far
    branch vertex. The result is a weak immersion in general.
    """
    k = spec.order
    if t <= k:
        raise GraphError(f"need t > k, got t={t}, k={k}")
    _, seams = compose_with_seams(spec)
    sides = {1: set(spec.g1.vertices) - {spec.v1}, 2: set(spec.g2.vertices) - {spec.v2}}
    z = im.branch_vertices()
    far_count = {1: len(z & sides[2]), 2: len(z & sides[1])}
    candidates = [i for i in (1, 2) if far_count[i] <= 1]
    if not candidates:
        raise GraphError("branch vertices are spread over both sides")
    side = min(candidates, key=lambda i: (far_count[i], i))
    g, glue = spec.side(side)
    keep = sides[side]
    seam_stub = {s: pair[side - 1] for s, pair in seams.items()}
    branch = {x: (v if v in keep else glue) for x, v in im.branch_map.items()}
    paths = {f: _restrict_path(p, keep, glue, seam_stub) for f, p in im.path_map.items()}
    return side, Immersion(g, im.pattern, branch, paths)


def lift_across_sum(spec: EdgeSumSpec, im: Immersion, side: int | None = None) -> Immersion:
    """Carry an immersion in one summand of a grounded sum into the composed graph.

    Each pass through the glue vertex crosses the seam and is rerouted along
    the far side's grounding paths, which meet at the far anchor vertex; a
    branch vertex at the glue vertex moves to that anchor.
    """
    if side is None:
        if im.host is spec.g1:
            side = 1
        elif im.host is spec.g2:
            side = 2
        else:
            side = 1 if spec.v1 in im.host and im.host == spec.g1 else 2
    g, glue = spec.side(side)
    if im.host is not g and im.host != g:
        raise GraphError("immersion host is not a summand of the edge sum")
    if not is_grounded(spec):
        raise GraphError("edge sum is not grounded")
    if not verify_immersion(im):
        raise GraphError("immersion is not valid")
    composed, seams = compose_with_seams(spec)
    far = 2 if side == 1 else 1
    anchor, ground = grounding(spec, far)
    to_far = spec.stub_pairs(side)
    seam_of = {pair[side - 1]: s for s, pair in seams.items()}
    # far stub -> path from its far endpoint to the anchor
    route = {p[1]: p[2:] for p in ground.paths}

    paths = {}
    for f, p in im.path_map.items():
        walk: list = [anchor if p[0] == glue else p[0]]
        for i in range(1, len(p), 2):
            c, e, w = p[i - 1], p[i], p[i + 1]
            if e not in seam_of:
                walk.extend((e, w))
            elif c == glue:
                back = reverse_path(route[to_far[e]])
                walk.extend(back[1:])
                walk.extend((seam_of[e], w))
            else:
                there = route[to_far[e]]
                walk.extend((seam_of[e], there[0]))
                walk.extend(there[1:])
        paths[f] = remove_cycles(tuple(walk))
    branch = {x: (anchor if v == glue else v) for x, v in im.branch_map.items()}
    return Immersion(composed, im.pattern, branch, paths)
