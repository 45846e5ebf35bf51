import itertools

import pytest
from hypothesis import given, settings, strategies as st

from helpers import brute_has_immersion, multigraphs, nonisomorphic_multigraphs
from tcwidth import (
    EdgeCut,
    EdgeSumSpec,
    GraphError,
    Immersion,
    ImmersionError,
    MultiGraph,
    SearchBudgetExceeded,
    clique_from_hub,
    complete_graph,
    compose,
    compose_immersions,
    cycle_graph,
    embed_in_multistar,
    find_immersion,
    identity_immersion,
    is_grounded,
    lift_across_sum,
    make_star,
    path_graph,
    project_across_sum,
    verify_immersion,
)


def x(i):
    return ("x", i)


def subdivided(g: MultiGraph) -> tuple[MultiGraph, Immersion]:
    """Subdivide every edge once; returns the host and the obvious immersion of ``g``."""
    pairs = []
    paths = {}
    for e, (u, v) in sorted(g.edges.items()):
        m = ("mid", e)
        paths[e] = (u, 2 * e, m, 2 * e + 1, v)
        pairs += [(2 * e, u, m), (2 * e + 1, m, v)]
    host = MultiGraph(list(g.vertices) + [("mid", e) for e in g.edge_ids()], {i: (a, b) for i, a, b in pairs})
    return host, Immersion(host, g, {v: v for v in g.vertices}, paths)


def star_sum(l=3, n=3):
    """Two copies of S_{l,n} glued at x_1 and x_1'."""
    s = make_star(l, n)
    stubs = sorted(s.incident(x(1)))
    return EdgeSumSpec.tagged(s, x(1), s, x(1), {e: e for e in stubs})


class TestVerify:
    def test_identity(self):
        for g in (complete_graph(4), make_star(2, 3), cycle_graph(5)):
            im = identity_immersion(g)
            assert verify_immersion(im) and verify_immersion(im, strong=True)

    def test_subdivision(self):
        host, im = subdivided(complete_graph(4))
        assert verify_immersion(im) and verify_immersion(im, strong=True)

    def test_shared_edge(self):
        host = path_graph(3)
        pattern = MultiGraph.from_pairs([(1, 2), (1, 2)])
        im = Immersion(host, pattern, {1: 1, 2: 2}, {0: (1, 1, 2), 1: (1, 1, 2)})
        assert not verify_immersion(im)

    def test_dangling(self):
        host = path_graph(3)
        pattern = MultiGraph.from_pairs([(1, 2)])
        with pytest.raises(ImmersionError):
            verify_immersion(Immersion(host, pattern, {1: 1, 2: 9}, {0: (1, 1, 2)}))
        with pytest.raises(ImmersionError):
            verify_immersion(Immersion(host, pattern, {1: 1, 2: 2}, {0: (1, 77, 2)}))

    def test_incomplete_is_false(self):
        host = path_graph(3)
        pattern = MultiGraph.from_pairs([(1, 2)])
        assert not verify_immersion(Immersion(host, pattern, {1: 1, 2: 2}, {}))

    def test_non_injective(self):
        host = cycle_graph(3)
        pattern = MultiGraph.from_pairs([(1, 2)])
        assert not verify_immersion(Immersion(host, pattern, {1: 1, 2: 1}, {0: (1, 1, 2, 2, 3, 3, 1)}))

    def test_strong_rejects_branch_on_path(self):
        host = path_graph(3)
        pattern = MultiGraph([1, 2, 3], {0: (1, 3)})
        im = Immersion(host, pattern, {1: 1, 2: 2, 3: 3}, {0: (1, 1, 2, 2, 3)})
        assert verify_immersion(im) and not verify_immersion(im, strong=True)


class TestFind:
    def test_examples(self):
        assert find_immersion(cycle_graph(3), complete_graph(3)) is not None
        assert find_immersion(path_graph(4), complete_graph(3)) is None
        assert find_immersion(make_star(3, 3), complete_graph(3)) is not None

    def test_strong_star(self):
        # the x_i as branch vertices, all routes through the unused y
        im = find_immersion(make_star(3, 3), complete_graph(3), strong=True)
        assert im is not None and verify_immersion(im, strong=True)
        # with single edges only y has degree two or more
        assert find_immersion(make_star(1, 3), complete_graph(3), strong=True) is None

    def test_budget(self):
        with pytest.raises(SearchBudgetExceeded):
            find_immersion(complete_graph(7), complete_graph(6), budget=5)

    @pytest.mark.parametrize("strong", [False, True])
    def test_matches_brute_force(self, strong):
        patterns = [g for g in nonisomorphic_multigraphs(3, 3) if g.num_edges()] + [complete_graph(4)]
        hosts = list(nonisomorphic_multigraphs(4, 5))
        for h in hosts[::3]:
            for p in patterns:
                im = find_immersion(h, p, strong=strong)
                assert (im is not None) == brute_has_immersion(h, p, strong), (h, p)
                if im is not None:
                    assert verify_immersion(im, strong)


class TestMultistar:
    def test_examples(self):
        im = embed_in_multistar(complete_graph(3), 2, 3)
        assert verify_immersion(im)
        trivial = embed_in_multistar(MultiGraph([1]), 1, 1)
        assert verify_immersion(trivial) and trivial.path_map == {}
        assert verify_immersion(embed_in_multistar(MultiGraph.from_pairs([(1, 2), (1, 2)]), 2, 2))

    def test_errors(self):
        with pytest.raises(GraphError):
            embed_in_multistar(complete_graph(4), 2, 4)
        with pytest.raises(GraphError):
            embed_in_multistar(complete_graph(3), 2, 2)

    def test_agrees_with_search(self):
        patterns = [g for g in nonisomorphic_multigraphs(4, 5) if g.num_vertices() <= 4]
        for h in patterns[::4]:
            for k, n in itertools.product(range(1, 5), range(1, 5)):
                if h.max_degree() <= k and h.num_vertices() <= n:
                    assert verify_immersion(embed_in_multistar(h, k, n))
                    assert find_immersion(make_star(k, n), h, budget=2_000_000) is not None


class TestHub:
    def test_star_k3(self):
        im = clique_from_hub(make_star(9, 4), [x(i) for i in range(1, 5)], 3)
        assert isinstance(im, Immersion) and verify_immersion(im)
        assert im.pattern == complete_graph(3)

    def test_star_k2(self):
        im = clique_from_hub(make_star(4, 3), [x(1), x(2), x(3)], 2)
        assert isinstance(im, Immersion) and verify_immersion(im)

    def test_bridged_blocks(self):
        a = complete_graph(5)
        b = complete_graph(5).relabel({v: v + 5 for v in range(1, 6)}, {e: e + 10 for e in range(1, 11)})
        g = MultiGraph(list(a.vertices) + list(b.vertices), {**a.edges, **b.edges, 0: (5, 6)})
        cut = clique_from_hub(g, [1, 2, 7, 8], 3)
        assert isinstance(cut, EdgeCut) and len(cut) < 9 and cut.check(g)
        assert len(cut) == 1

    def test_wrong_size(self):
        with pytest.raises(GraphError):
            clique_from_hub(make_star(9, 4), [x(1), x(2)], 3)


class TestAcrossSums:
    def test_project_identity_side(self):
        spec = star_sum(3, 3)
        g, _ = compose_with_ids(spec)
        # K_2 routed inside side 1 only: one x_2 - y edge
        e = next(e for e, (u, v) in g.edges.items() if {u, v} == {(1, x(2)), (1, "y")})
        im = Immersion(g, complete_graph(2), {1: (1, x(2)), 2: (1, "y")}, {1: ((1, x(2)), e, (1, "y"))})
        side, out = project_across_sum(spec, im, 4)
        assert side == 1 and out.branch_map == im.branch_map and out.path_map == im.path_map
        assert verify_immersion(out)

    def test_project_k4_across_seam(self):
        spec = star_sum(3, 3)
        g = compose(spec)
        im = find_immersion(g, complete_graph(4))
        assert im is not None
        side, out = project_across_sum(spec, im, 4)
        assert verify_immersion(out)
        assert out.host is spec.side(side)[0]

    def test_project_needs_t_above_k(self):
        spec = star_sum(3, 3)
        im = find_immersion(compose(spec), complete_graph(3))
        with pytest.raises(GraphError):
            project_across_sum(spec, im, 3)

    def test_project_strong_input(self):
        spec = star_sum(2, 3)
        g = compose(spec)
        im = find_immersion(g, complete_graph(3), strong=True)
        assert im is not None
        far = set(spec.g2.vertices) - {spec.v2}
        crossing = [v for v in im.branch_vertices() if v in far]
        assert crossing or any(v in far for p in im.path_map.values() for v in p[0::2])
        _, out = project_across_sum(spec, im, 3)
        assert verify_immersion(out)

    def test_lift_star_sum(self):
        spec = star_sum(3, 3)
        assert is_grounded(spec)
        im = find_immersion(spec.g1, complete_graph(3))
        lifted = lift_across_sum(spec, im, side=1)
        assert verify_immersion(lifted)

    def test_lift_avoiding_glue(self):
        spec = star_sum(3, 3)
        g1 = spec.g1
        e = next(e for e, (u, v) in g1.edges.items() if {u, v} == {(1, x(2)), (1, "y")})
        im = Immersion(g1, complete_graph(2), {1: (1, x(2)), 2: (1, "y")}, {1: ((1, x(2)), e, (1, "y"))})
        lifted = lift_across_sum(spec, im, side=1)
        assert lifted.branch_map == im.branch_map and lifted.path_map == im.path_map
        assert verify_immersion(lifted, strong=True)

    def test_lift_rejects_ungrounded(self):
        k13 = MultiGraph.from_pairs([(0, 1), (0, 2), (0, 3)])
        spec = EdgeSumSpec.tagged(k13, 0, k13, 0, {0: 0, 1: 1, 2: 2})
        im = identity_immersion(spec.g1)
        with pytest.raises(GraphError):
            lift_across_sum(spec, im, side=1)

    @given(st.integers(2, 4), st.integers(3, 4), st.integers(1, 2))
    @settings(max_examples=15)
    def test_lift_then_project(self, l, n, t_extra):
        spec = star_sum(l, n)
        k = spec.order
        t = k + t_extra
        im = find_immersion(spec.g1, complete_graph(t), budget=500_000)
        if im is None:
            return
        lifted = lift_across_sum(spec, im, side=1)
        assert verify_immersion(lifted)
        _, back = project_across_sum(spec, lifted, t)
        assert verify_immersion(back)


def compose_with_ids(spec):
    from tcwidth import compose_with_seams

    return compose_with_seams(spec)


@given(multigraphs(max_vertices=4, max_edges=5), multigraphs(max_vertices=3, max_edges=3))
@settings(max_examples=40)
def test_transitivity(g, h):
    try:
        outer = find_immersion(g, h)
    except SearchBudgetExceeded:
        return
    if outer is None:
        return
    for inner_pattern in (complete_graph(2), path_graph(3)):
        try:
            inner = find_immersion(h, inner_pattern)
        except SearchBudgetExceeded:
            continue
        if inner is None:
            continue
        chained = compose_immersions(inner, outer)
        assert verify_immersion(chained)
        assert find_immersion(g, inner_pattern) is not None
