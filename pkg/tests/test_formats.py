from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from helpers import multigraphs
from tcwidth import (
    BoundedDegree,
    CliqueWitness,
    GroundedSum,
    MultiGraph,
    TreeCutDecomposition,
    complete_graph,
    cycle_graph,
    find_immersion,
    make_star,
    make_wall,
    path_graph,
    structure_step,
    verify_immersion,
    verify_tcd,
)
from tcwidth.formats import (
    ParseError,
    read_graph,
    read_immersion,
    read_immersion_header,
    read_tcd,
    read_td,
    same_decomposition,
    write_graph,
    write_immersion,
    write_tcd,
    write_td,
    write_verdict,
)

GOLDEN = Path(__file__).parent / "golden"


def golden(name):
    return (GOLDEN / name).read_bytes().decode("utf-8")


class TestGolden:
    def test_wall(self):
        assert write_graph(make_wall(2)) == golden("wall2.graph")

    def test_star(self):
        assert write_graph(make_star(2, 2)) == golden("star22.graph")

    @pytest.mark.parametrize("name", ["wall2.graph", "star22.graph", "k3.graph"])
    def test_graph_bit_exact(self, name):
        text = golden(name)
        assert write_graph(read_graph(text)) == text

    def test_tcd_bit_exact(self):
        text = golden("path5.tcd")
        d = read_tcd(text, 5)
        assert d.bag(2) == frozenset()
        assert write_tcd(d, 5) == text
        assert verify_tcd(path_graph(5), d)

    def test_td_bit_exact(self):
        text = golden("path3.td")
        assert write_td(read_td(text, 3), 3) == text

    def test_cert_bit_exact(self):
        text = golden("k3_in_k3.cert")
        host = read_graph(golden("k3.graph"))
        assert read_immersion_header(text) == "k3.graph"
        im = read_immersion(text, host, host)
        assert verify_immersion(im, strong=True)
        assert write_immersion(im, "k3.graph") == text

    def test_overlap_parses(self):
        d = read_tcd(golden("overlap.tcd"), 3)
        assert not verify_tcd(path_graph(3), d)


class TestGraphErrors:
    @pytest.mark.parametrize(
        "text, line, col",
        [
            ("", 1, 1),
            ("e 1 2\n", 1, 1),
            ("p graph 2\n", 1, 9),
            ("p graph 2 1\ne 1 3\n", 2, 5),
            ("p graph 2 1\ne 1 1\n", 2, 5),
            ("p graph 2 1\ne 1 x\n", 2, 5),
            ("p graph 2 1\n  v 1 2\n", 2, 3),
            ("p graph 2 2\ne 1 2\n", 2, 1),
            ("p graph 2 1\ne 1 2 3\n", 2, 1),
            ("p graph -2 1\n", 1, 9),
        ],
    )
    def test_positions(self, text, line, col):
        with pytest.raises(ParseError) as info:
            read_graph(text)
        assert (info.value.line, info.value.column) == (line, col)

    def test_comments_and_blank_lines(self):
        g = read_graph("# a triangle\np graph 3 3\n\ne 1 2\n# middle\ne 2 3\ne 1 3\n")
        assert g == complete_graph(3)


class TestDecompositionErrors:
    @pytest.mark.parametrize(
        "text",
        [
            "p tcd 0 3\n",
            "p tcd 2 3\nte 1 3\n",
            "p tcd 2 3\nb 1 4\n",
            "p tcd 2 3\nb 1 1\nb 1 2\n",
            "p tcd 2 3\nb 1 1 1\n",
            "p tcd 2 3\nx 1\n",
            "p td 2 3\n",
        ],
    )
    def test_rejects(self, text):
        with pytest.raises(ParseError):
            read_tcd(text, 3)

    def test_vertex_count_mismatch(self):
        with pytest.raises(ParseError):
            read_tcd("p tcd 1 4\nb 1 1 2 3 4\n", 3)


class TestCertificateErrors:
    def test_header(self):
        with pytest.raises(ParseError):
            read_immersion_header("p immersion\n")

    def test_bad_edge(self):
        host = complete_graph(3)
        with pytest.raises(ParseError) as info:
            read_immersion("p immersion K3\nbv 1 1\ncp 1 9\n", host, host)
        assert info.value.line == 3

    def test_non_walk_is_invalid_not_error(self):
        host = path_graph(4)
        pattern = MultiGraph.from_pairs([(1, 2)], start=1)
        im = read_immersion("p immersion p\nbv 1 1\nbv 2 2\ncp 1 3\n", host, pattern)
        assert not verify_immersion(im)

    def test_reversed_sequence(self):
        host = path_graph(3)
        pattern = MultiGraph.from_pairs([(1, 2)], [1, 2], start=1)
        im = read_immersion("p immersion p\nbv 1 1\nbv 2 3\ncp 1 2 1\n", host, pattern)
        assert verify_immersion(im)


@given(multigraphs(max_vertices=7, max_edges=12))
def test_graph_round_trip(g):
    c, _, _ = g.canonical()
    text = write_graph(g)
    back = read_graph(text)
    assert back == c
    assert write_graph(back) == text


@given(multigraphs(max_vertices=6, max_edges=8, connected=True))
def test_tcd_round_trip(g):
    from tcwidth import from_tree_decomposition, greedy_td

    d = from_tree_decomposition(g, greedy_td(g))
    text = write_tcd(d, g.num_vertices())
    back = read_tcd(text, g.num_vertices())
    assert write_tcd(back, g.num_vertices()) == text
    mapping = {t: i for i, t in enumerate(sorted(d.nodes), 1)}
    assert same_decomposition(back, d.relabeled(mapping))


@given(st.integers(2, 4))
def test_certificate_round_trip(t):
    host = make_star(t, t + 1).canonical()[0]
    pattern = complete_graph(t)
    im = find_immersion(host, pattern)
    text = write_immersion(im, f"K{t}")
    back = read_immersion(text, host, pattern)
    assert back.branch_map == im.branch_map and back.path_map == im.path_map


class TestVerdicts:
    def test_bounded(self):
        v = structure_step(complete_graph(4), 2)
        assert isinstance(v, BoundedDegree)
        assert write_verdict(v, complete_graph(4)) == "verdict bounded-degree\nz\n"

    def test_clique(self):
        g = make_star(9, 4)
        v = structure_step(g, 3)
        assert isinstance(v, CliqueWitness)
        text = write_verdict(v, g, 3)
        head, rest = text.split("\n", 1)
        assert head == "verdict clique"
        c = g.canonical()[0]
        assert verify_immersion(read_immersion(rest, c, complete_graph(3)))

    def test_grounded_sum(self):
        g = cycle_graph(4).with_edges([(1, 2)] * 4 + [(3, 4)] * 4)[0]
        v = structure_step(g, 2)
        assert isinstance(v, GroundedSum)
        lines = write_verdict(v, g).splitlines()
        assert lines[0] == "verdict grounded-sum" and lines[1] == f"order {v.order}"
        i1, i2 = lines.index("graph 1"), lines.index("graph 2")
        g1 = read_graph("\n".join(lines[i1 + 1 : i2]) + "\n")
        assert g1.num_vertices() == v.spec.g1.num_vertices()
        pairs = [ln for ln in lines if ln.startswith("pair ")]
        assert len(pairs) == v.order
