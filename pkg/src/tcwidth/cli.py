"""Command-line front end.

Exit codes: 0 success (or a positive verdict), 1 negative verdict,
2 malformed input, 3 search budget exhausted. Results go to stdout (or
``-o``); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import random
import re
import sys
from pathlib import Path

from .formats import (
    ParseError,
    read_graph,
    read_immersion,
    read_immersion_header,
    read_tcd,
    read_td,
    write_graph,
    write_immersion,
    write_tcd,
)
from .immersion import Immersion, SearchBudgetExceeded, find_immersion, verify_immersion
from .multigraph import GraphError, MultiGraph, complete_graph, make_star, make_wall
from .treecut import (
    BudgetError,
    adhesion,
    brute_force_tcw,
    build_excluding_clique,
    check_converse,
    from_tree_decomposition,
    verify_tcd,
    width,
)
from .treedecomp import verify_td

OK, NO, BAD_INPUT, BUDGET = 0, 1, 2, 3

_BUILTIN = re.compile(r"K([1-9][0-9]*)")


class _Failure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load(path: str, reader, *args):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _Failure(BAD_INPUT, f"{path}: {exc.strerror}") from exc
    try:
        return reader(text, *args)
    except ParseError as exc:
        raise _Failure(BAD_INPUT, f"{path}:{exc.line}:{exc.column}: {exc.args[0].split(': ', 1)[1]}") from exc


def random_multigraph(n: int, m: int, rng: random.Random) -> MultiGraph:
    """``m`` edges with endpoints drawn uniformly from distinct pairs of ``1..n``."""
    if n < 2 and m > 0:
        raise GraphError("need two vertices to place an edge")
    pairs = [tuple(rng.sample(range(1, n + 1), 2)) for _ in range(m)]
    return MultiGraph.from_pairs(pairs, range(1, n + 1), start=1)


def _pattern_for(cert_path: str, ref: str) -> MultiGraph:
    candidate = Path(ref) if Path(ref).is_absolute() else Path(cert_path).parent / ref
    if candidate.is_file():
        return _load(str(candidate), read_graph)
    m = _BUILTIN.fullmatch(ref)
    if m:
        return complete_graph(int(m.group(1)))
    raise _Failure(BAD_INPUT, f"{cert_path}: pattern file {ref!r} not found")


# -- subcommands ---------------------------------------------------------------


def _gen(a) -> tuple[int, str]:
    if a.family == "wall":
        g = make_wall(a.r)
    elif a.family == "star":
        g = make_star(a.l, a.n)
    else:
        g = random_multigraph(a.n, a.m, random.Random(a.seed))
    return OK, write_graph(g)


def _immerse(a) -> tuple[int, str]:
    host = _load(a.host, read_graph)
    pattern = _load(a.pattern, read_graph)
    try:
        im = find_immersion(host, pattern, strong=a.strong, budget=a.budget)
    except SearchBudgetExceeded as exc:
        raise _Failure(BUDGET, f"search budget exhausted: {exc}") from exc
    if im is None:
        return NO, ""
    return OK, write_immersion(im, a.pattern)


def _verify_immersion(a) -> tuple[int, str]:
    host = _load(a.host, read_graph)
    ref = _load(a.cert, read_immersion_header)
    pattern = _pattern_for(a.cert, ref)
    im = _load(a.cert, read_immersion, host, pattern)
    return (OK if verify_immersion(im, strong=a.strong) else NO), ""


def _decompose(a) -> tuple[int, str]:
    g = _load(a.graph, read_graph)
    out = build_excluding_clique(g, a.exclude_clique)
    if isinstance(out, Immersion):
        return OK, write_immersion(out, f"K{a.exclude_clique}")
    return OK, write_tcd(out, g.num_vertices())


def _load_tcd(a):
    g = _load(a.graph, read_graph)
    d = _load(a.tcd, read_tcd, g.num_vertices())
    return g, d


def _width(a) -> tuple[int, str]:
    g, d = _load_tcd(a)
    if not verify_tcd(g, d):
        raise _Failure(NO, f"{a.tcd}: not a tree-cut decomposition of {a.graph}")
    return OK, f"adhesion {adhesion(g, d)}\nwidth {width(g, d)}\n"


def _verify_tcd(a) -> tuple[int, str]:
    g, d = _load_tcd(a)
    return (OK if verify_tcd(g, d) else NO), ""


def _tcw_exact(a) -> tuple[int, str]:
    g = _load(a.graph, read_graph)
    try:
        return OK, f"{brute_force_tcw(g, max_vertices=a.max_vertices)}\n"
    except BudgetError as exc:
        raise _Failure(BUDGET, str(exc)) from exc


def _convert(a) -> tuple[int, str]:
    g = _load(a.graph, read_graph)
    td = _load(a.td, read_td, g.num_vertices())
    if not verify_td(g, td):
        raise _Failure(NO, f"{a.td}: not a tree decomposition of {a.graph}")
    if not g.is_connected():
        raise _Failure(NO, f"{a.graph}: conversion needs a connected graph")
    return OK, write_tcd(from_tree_decomposition(g, td), g.num_vertices())


def _check_converse(a) -> tuple[int, str]:
    g, d = _load_tcd(a)
    if not verify_tcd(g, d):
        raise _Failure(NO, f"{a.tcd}: not a tree-cut decomposition of {a.graph}")
    return (OK if check_converse(g, d, a.r) else NO), ""


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def _nonnegative(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {s}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tcwidth", description="Immersions and tree-cut decompositions.")
    p.add_argument("-o", "--output", help="write the result here instead of stdout")
    # also accepted after the subcommand; SUPPRESS keeps the top-level value when absent
    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("-o", "--output", default=argparse.SUPPRESS, help="write the result here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[out], help="emit a generated graph")
    fam = gen.add_subparsers(dest="family", required=True)
    w = fam.add_parser("wall", parents=[out], help="r-wall")
    w.add_argument("r", type=_positive)
    s = fam.add_parser("star", parents=[out], help="multistar S_{l,n}")
    s.add_argument("l", type=_nonnegative)
    s.add_argument("n", type=_nonnegative)
    r = fam.add_parser("random", parents=[out], help="uniform random loopless multigraph")
    r.add_argument("n", type=_nonnegative)
    r.add_argument("m", type=_nonnegative)
    r.add_argument("--seed", type=int, default=1)
    gen.set_defaults(func=_gen)

    im = sub.add_parser("immerse", parents=[out], help="search for an immersion of a pattern")
    im.add_argument("host")
    im.add_argument("pattern")
    im.add_argument("--strong", action="store_true")
    im.add_argument("--budget", type=_positive, default=200_000)
    im.set_defaults(func=_immerse)

    vi = sub.add_parser("verify-immersion", parents=[out], help="check an immersion certificate")
    vi.add_argument("host")
    vi.add_argument("cert")
    vi.add_argument("--strong", action="store_true")
    vi.set_defaults(func=_verify_immersion)

    dc = sub.add_parser("decompose", parents=[out], help="decomposition excluding a clique, or the clique")
    dc.add_argument("graph")
    dc.add_argument("--exclude-clique", type=_positive, required=True, metavar="T")
    dc.set_defaults(func=_decompose)

    wd = sub.add_parser("width", parents=[out], help="print adhesion and width of a decomposition")
    wd.add_argument("graph")
    wd.add_argument("tcd")
    wd.set_defaults(func=_width)

    vt = sub.add_parser("verify-tcd", parents=[out], help="check a tree-cut decomposition")
    vt.add_argument("graph")
    vt.add_argument("tcd")
    vt.set_defaults(func=_verify_tcd)

    tx = sub.add_parser("tcw-exact", parents=[out], help="exact tree-cut width of a small graph")
    tx.add_argument("graph")
    tx.add_argument("--max-vertices", type=_positive, default=6)
    tx.set_defaults(func=_tcw_exact)

    cv = sub.add_parser("convert", parents=[out], help="tree decomposition to tree-cut decomposition")
    cv.add_argument("graph")
    cv.add_argument("td")
    cv.set_defaults(func=_convert)

    cc = sub.add_parser("check-converse", parents=[out], help="certify absence of a K_{r+1} immersion")
    cc.add_argument("graph")
    cc.add_argument("tcd")
    cc.add_argument("r", type=_nonnegative)
    cc.set_defaults(func=_check_converse)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code else OK
    try:
        code, text = args.func(args)
    except _Failure as exc:
        print(exc, file=sys.stderr)
        return exc.code
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return NO
    if text:
        if args.output:
            Path(args.output).write_text(text, encoding="utf-8", newline="\n")
        else:
            sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())
