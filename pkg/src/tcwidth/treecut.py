"""Tree-cut decompositions: adhesion, torsos, 3-centers and width.

Also holds the constructive results built on them: gluing decompositions
across an edge sum, the recursive excluded-clique builder, the converse
certificate, conversion from tree decompositions, hub assembly, the tree
splitting used for wall lower bounds, and an exhaustive width oracle.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .edgesum import BoundedDegree, CliqueWitness, EdgeSumSpec, compose_with_seams, structure_step
from .immersion import Immersion, lift_across_sum, verify_immersion
from .multigraph import GraphError, MultiGraph, _fresh_int, sort_key, sorted_ids, suppress
from .treedecomp import TreeDecomposition, normalize_td, verify_td
from .trees import DecompositionError, TreeIndexed, component_without, graph_as_tree, prufer_decode


class TreeCutDecomposition(TreeIndexed):
    """A tree whose bags form a near-partition of the host's vertices."""

    @classmethod
    def trivial(cls, g: MultiGraph, node=0) -> TreeCutDecomposition:
        return cls((node,), (), {node: frozenset(g.vertices)})

    def node_of(self) -> dict:
        return {v: t for t, bag in self.bags.items() for v in bag}


@dataclass(frozen=True, eq=False)
class Torso:
    graph: MultiGraph
    core: frozenset
    peripheral: frozenset
    by_neighbor: dict


class BudgetError(RuntimeError):
    """Input too large for an exhaustive computation."""


def verify_tcd(g: MultiGraph, d: TreeCutDecomposition) -> bool:
    d.check_ids(g)
    if not d.is_tree():
        return False
    seen: set = set()
    for t in d.nodes:
        bag = d.bag(t)
        if bag & seen:
            return False
        seen |= bag
    return seen == set(g.vertices)


def _require(g: MultiGraph, d: TreeCutDecomposition) -> None:
    if not verify_tcd(g, d):
        raise DecompositionError("not a tree-cut decomposition of the graph")


def edge_cuts(g: MultiGraph, d: TreeCutDecomposition) -> dict:
    """Tree edge -> number of graph edges crossing it."""
    node_of = d.node_of()
    adj = d.adjacency()
    out = {}
    for a, b in d.tree_edges:
        side = component_without(adj, b, a)
        out[(a, b)] = sum(1 for u, v in g.edges.values() if (node_of[u] in side) != (node_of[v] in side))
    return out


def adhesion(g: MultiGraph, d: TreeCutDecomposition) -> int:
    _require(g, d)
    return max(edge_cuts(g, d).values(), default=0)


def torso_at(g: MultiGraph, d: TreeCutDecomposition, node) -> Torso:
    """Consolidate each component of the tree minus ``node`` to one peripheral vertex."""
    _require(g, d)
    if node not in d.nodes:
        raise DecompositionError(f"unknown tree node {node!r}")
    core = d.bag(node)
    if len(d.nodes) == 1:
        return Torso(g, frozenset(g.vertices), frozenset(), {})
    fresh = _fresh_int(g.vertices)
    label = {}
    by_neighbor = {}
    for i, (nbr, comp) in enumerate(d.branches(node)):
        z = fresh + i
        by_neighbor[nbr] = z
        for v in d.union(comp):
            label[v] = z
    verts = [v for v in g.vertices if v in core] + list(by_neighbor.values())
    edges = {}
    for e, (u, v) in g.edges.items():
        a, b = label.get(u, u), label.get(v, v)
        if a != b:
            edges[e] = (a, b)
    return Torso(MultiGraph(verts, edges), frozenset(core), frozenset(by_neighbor.values()), by_neighbor)


def three_center(h: MultiGraph, x, rng=None) -> MultiGraph:
    """Suppress vertices outside ``x`` of degree at most two until none remain.

    The fixed point does not depend on the order; ``rng`` (a
    :class:`random.Random`) picks a random eligible vertex at each step,
    otherwise the smallest id goes first.
    """
    xs = set(x)
    for v in xs:
        if not h.has_vertex(v):
            raise GraphError(f"unknown vertex {v!r}")
    while True:
        eligible = [v for v in h.vertices if v not in xs and h.degree(v) <= 2]
        if not eligible:
            return h
        if rng is None:
            v = min(eligible, key=sort_key)
        else:
            v = rng.choice(sorted_ids(eligible))
        h = suppress(h, v)


def has_bounded_degree(g: MultiGraph, alpha: int, beta: int) -> bool:
    """At most ``alpha`` vertices have degree at least ``beta``."""
    return sum(1 for v in g.vertices if g.degree(v) >= beta) <= alpha


def node_widths(g: MultiGraph, d: TreeCutDecomposition) -> dict:
    """Tree node -> number of vertices in the 3-center of its torso on its bag."""
    _require(g, d)
    out = {}
    for t in d.nodes:
        torso = torso_at(g, d, t)
        out[t] = three_center(torso.graph, torso.core).num_vertices()
    return out


def width(g: MultiGraph, d: TreeCutDecomposition) -> int:
    return max([adhesion(g, d), *node_widths(g, d).values()])


# -- gluing and building ----------------------------------------------------


def _glue_node(d: TreeCutDecomposition, v):
    for t in d.nodes:
        if v in d.bag(t):
            return t
    raise DecompositionError(f"vertex {v!r} is in no bag")


def combine(d1: TreeCutDecomposition, d2: TreeCutDecomposition, spec: EdgeSumSpec) -> TreeCutDecomposition:
    """Decompose the edge sum by joining the two trees at the glue vertices' nodes.

    Nodes are renumbered: ``d1``'s nodes in id order become ``0 .. n1-1`` and
    ``d2``'s follow. Glue vertices are dropped from their bags.
    """
    _require(spec.g1, d1)
    _require(spec.g2, d2)
    t1 = _glue_node(d1, spec.v1)
    t2 = _glue_node(d2, spec.v2)
    m1 = {t: i for i, t in enumerate(sorted_ids(d1.nodes))}
    m2 = {t: i + len(m1) for i, t in enumerate(sorted_ids(d2.nodes))}
    r1, r2 = d1.relabeled(m1), d2.relabeled(m2)
    glue = {spec.v1, spec.v2}
    bags = {t: b - glue for t, b in r1.bags.items()}
    bags.update((t, b - glue) for t, b in r2.bags.items())
    nodes = tuple(sorted(m1.values())) + tuple(sorted(m2.values()))
    edges = r1.tree_edges + r2.tree_edges + ((m1[t1], m2[t2]),)
    return TreeCutDecomposition(nodes, edges, bags)


def _pull_back(im: Immersion, g: MultiGraph, seams: dict) -> Immersion:
    """Rename seam edges of a composed host back to the cut edges of ``g``."""
    back = {s: pair[0] for s, pair in seams.items()}
    paths = {f: tuple(back.get(x, x) if i % 2 else x for i, x in enumerate(p)) for f, p in im.path_map.items()}
    return Immersion(g, im.pattern, dict(im.branch_map), paths)


def build_excluding_clique(g: MultiGraph, t: int) -> TreeCutDecomposition | Immersion:
    """Either a K_t immersion in ``g`` or a decomposition of adhesion below
    ``t²`` whose torsos all have (t, t²)-bounded degree."""
    verdict = structure_step(g, t)
    if isinstance(verdict, BoundedDegree):
        return TreeCutDecomposition.trivial(g)
    if isinstance(verdict, CliqueWitness):
        return verdict.immersion
    spec = verdict.spec
    parts = []
    for i in (1, 2):
        gi, _ = spec.side(i)
        sub = build_excluding_clique(gi, t)
        if isinstance(sub, Immersion):
            lifted = lift_across_sum(spec, sub, side=i)
            _, seams = compose_with_seams(spec)
            im = _pull_back(lifted, g, seams)
            assert verify_immersion(im)
            return im
        parts.append(sub)
    return combine(parts[0], parts[1], spec)


def check_converse(g: MultiGraph, d: TreeCutDecomposition, r: int) -> bool:
    """True certifies that ``g`` has no K_{r+1} immersion."""
    if adhesion(g, d) >= r:
        return False
    return all(has_bounded_degree(torso_at(g, d, t).graph, r, r) for t in d.nodes)


def from_tree_decomposition(g: MultiGraph, td: TreeDecomposition) -> TreeCutDecomposition:
    """Assign every vertex to the smallest node of a normalized tree decomposition holding it."""
    if not verify_td(g, td):
        raise DecompositionError("not a tree decomposition of the graph")
    if not g.is_connected():
        raise GraphError("graph must be connected")
    nt = normalize_td(g, td)
    bags: dict = {t: set() for t in nt.nodes}
    for v in g.vertices:
        home = min((t for t in nt.nodes if v in nt.bag(t)), key=sort_key)
        bags[home].add(v)
    return TreeCutDecomposition(nt.nodes, nt.tree_edges, bags)


def assemble_star(g: MultiGraph, z, parts) -> TreeCutDecomposition:
    """Hang the decompositions of the components of ``g - z`` off a hub whose bag is ``z``.

    ``parts`` is a list of ``(component, decomposition)``. The hub is node 0;
    each part's nodes are renumbered after it, and the hub attaches to the
    part's smallest node.
    """
    z = frozenset(z)
    comps = sorted((frozenset(c) for c in g.without_vertices(z).components()), key=lambda c: sorted(map(sort_key, c)))
    given = sorted((frozenset(c) for c, _ in parts), key=lambda c: sorted(map(sort_key, c)))
    if comps != given:
        raise DecompositionError("parts do not match the components of g - z")
    nodes = [0]
    edges = []
    bags = {0: z}
    nxt = 1
    for comp, d in parts:
        _require(g.subgraph(comp), d)
        mapping = {t: nxt + i for i, t in enumerate(sorted_ids(d.nodes))}
        nxt += len(mapping)
        r = d.relabeled(mapping)
        nodes += sorted(mapping.values())
        edges += list(r.tree_edges)
        edges.append((0, mapping[min(d.nodes, key=sort_key)]))
        bags.update(r.bags)
    return TreeCutDecomposition(tuple(nodes), tuple(edges), bags)


# -- splitting a tree --------------------------------------------------------


@dataclass(frozen=True)
class VertexSplit:
    vertex: object
    components: tuple  # marked nodes of each component of T - v that has any


@dataclass(frozen=True)
class EdgeSplit:
    edge: object
    ends: tuple
    sides: tuple  # marked nodes on each side


def split_tree(tree: MultiGraph, x, k: int, r: int) -> VertexSplit | EdgeSplit:
    """Find a node separating ``k`` marked components, or an edge with ``r`` marks per side."""
    if tree.num_vertices() < 2:
        raise GraphError("tree needs at least two nodes")
    ti = graph_as_tree(tree)
    marks = frozenset(x)
    if len(marks) < k * r:
        raise GraphError(f"need at least {k * r} marked nodes, got {len(marks)}")
    adj = ti.adjacency()

    def marked_components(v):
        comps = [frozenset(component_without(adj, s, v) & marks) for s in adj[v]]
        return tuple(c for c in comps if c)

    if k == 1:
        x0 = min(marks, key=sort_key)
        v = min((u for u in ti.nodes if u != x0), key=sort_key)
        return VertexSplit(v, marked_components(v))
    outdeg = Counter()
    for e in sorted_ids(tree.edge_ids()):
        a, b = tree.endpoints(e)
        side_b = component_without(adj, b, a)
        in_b = len(marks & side_b)
        in_a = len(marks) - in_b
        if in_a >= r and in_b >= r:
            return EdgeSplit(e, (a, b), (marks - side_b, marks & side_b))
        outdeg[a if in_b >= r else b] += 1
    v = next(u for u in ti.nodes if outdeg[u] == 0)
    return VertexSplit(v, marked_components(v))


# -- exhaustive width --------------------------------------------------------


def _set_partitions(items: list):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def _prufer_sequences(total: int, first_empty: int):
    """Prüfer sequences on ``total`` labels where every label from
    ``first_empty`` on occurs at least twice (tree degree at least three)."""
    length = max(total - 2, 0)
    empties = range(first_empty, total)
    counts = Counter()
    seq: list = []

    def missing() -> int:
        return sum(max(0, 2 - counts[j]) for j in empties)

    def rec():
        if len(seq) == length:
            if not missing():
                yield list(seq)
            return
        if missing() > length - len(seq):
            return
        for x in range(total):
            seq.append(x)
            counts[x] += 1
            yield from rec()
            counts[x] -= 1
            seq.pop()

    yield from rec()


def _center_size(verts: list, mult: Counter, core: set) -> int:
    adj = {v: Counter() for v in verts}
    for (a, b), c in mult.items():
        adj[a][b] += c
        adj[b][a] += c
    deg = {v: sum(adj[v].values()) for v in verts}
    alive = set(verts)
    stack = [v for v in verts if v not in core and deg[v] <= 2]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        nbrs = list(adj.pop(v).items())
        alive.discard(v)
        for w, c in nbrs:
            adj[w][v] -= c
            if not adj[w][v]:
                del adj[w][v]
            deg[w] -= c
        if len(nbrs) == 2 and deg[v] == 2:
            (a, _), (b, _) = nbrs
            adj[a][b] += 1
            adj[b][a] += 1
            deg[a] += 1
            deg[b] += 1
        for w, _ in nbrs:
            if w not in core and deg[w] <= 2:
                stack.append(w)
    return len(alive)


def _decomposition_width(pairs: list, node_of: list, bags: list, tree_edges: list, bound: int) -> int:
    """Width of a decomposition over vertex indices, or ``bound`` once it is reached."""
    n_nodes = len(bags)
    adj: list = [[] for _ in range(n_nodes)]
    for a, b in tree_edges:
        adj[a].append(b)
        adj[b].append(a)
    best = 0
    for a, b in tree_edges:
        side = component_without(adj, b, a)
        cut = sum(1 for u, v in pairs if (node_of[u] in side) != (node_of[v] in side))
        if cut >= bound:
            return bound
        best = max(best, cut)
    for t in range(n_nodes):
        branch_of = {}
        for i, s in enumerate(adj[t]):
            for node in component_without(adj, s, t):
                branch_of[node] = i
        core = set(bags[t])
        verts = list(core) + [("z", i) for i in range(len(adj[t]))]
        mult: Counter = Counter()
        for u, v in pairs:
            cu = u if node_of[u] == t else ("z", branch_of[node_of[u]])
            cv = v if node_of[v] == t else ("z", branch_of[node_of[v]])
            if cu != cv:
                mult[(cu, cv)] += 1
        size = _center_size(verts, mult, core)
        if size >= bound:
            return bound
        best = max(best, size)
    return best


def brute_force_tcw(g: MultiGraph, max_vertices: int = 6, empty_bags: bool = True) -> int:
    """Exact tree-cut width by enumeration.

    Every decomposition is a partition of the vertices into nonempty bags
    plus some empty-bag nodes, on a labeled tree. An empty-bag node of tree
    degree one can be deleted and one of degree two contracted without
    changing any cut or any other torso, so only empty-bag nodes of degree
    at least three are enumerated; with ``b`` nonempty bags there are at
    most ``b - 2`` of them. ``empty_bags=False`` skips them altogether.
    """
    n = g.num_vertices()
    if n > max_vertices:
        raise BudgetError(f"{n} vertices exceeds the exhaustive limit of {max_vertices}")
    if n == 0:
        return 0
    index = {v: i for i, v in enumerate(sorted_ids(g.vertices))}
    pairs = [(index[u], index[v]) for u, v in g.edges.values()]
    lower = 1
    best = _decomposition_width(pairs, [0] * n, [list(range(n))], [], n + len(pairs) + 1)
    if best <= lower:
        return best
    for part in _set_partitions(list(range(n))):
        b = len(part)
        if b == 1:
            continue
        node_of = [0] * n
        for i, block in enumerate(part):
            for v in block:
                node_of[v] = i
        for e in range((b - 2 if empty_bags else 0) + 1):
            total = b + e
            bags = part + [[] for _ in range(e)]
            for seq in _prufer_sequences(total, b):
                w = _decomposition_width(pairs, node_of, bags, prufer_decode(seq, total), best)
                if w < best:
                    best = w
                    if best <= lower:
                        return best
    return best
