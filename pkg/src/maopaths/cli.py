"""Command-line entry point.

Exit status: 0 on success, 1 when a verification fails, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import sys

from .errors import MaoPathsError
from .graph import Graph, min_degree, parse_graph, random_graph, render_graph
from .loose_ends import loose_ends
from .mao import compute_mao, forest_decomposition, tree_system
from .matching_ends import fan_paths, matching_ends, set_paths
from .oracle import check_k_connected_suffix, max_disjoint_paths, verify_internally_disjoint
from .render import render_dot, render_forest, render_ordering, render_paths, render_trace


class UsageError(MaoPathsError):
    kind = "usage"


def _vertex_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a list of integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maopaths",
        description="Maximal adjacency orderings and linear-time vertex-disjoint paths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_graph(name, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("graph", nargs="?", default="-", help="edge-list file (default: stdin)")
        p.add_argument("--start", type=int, default=None,
                       help="first vertex of the ordering (default: vertex 1)")
        p.add_argument("--positions", action="store_true",
                       help="read and write vertices as ordering positions instead of IDs")
        return p

    with_graph("mao", "print the maximal adjacency ordering")
    p = with_graph("forest", "print the forest decomposition")
    p.add_argument("--format", choices=("paths", "dot"), default="paths")

    for name, help in (("loose-ends", "paths from s to the tree roots"),
                       ("paths", "k internally disjoint s-t paths")):
        p = with_graph(name, help)
        p.add_argument("--s", type=int, help="start vertex (default: last in the ordering)")
        p.add_argument("--k", type=int, help="number of paths (default: left-degree of s)")
        if name == "paths":
            p.add_argument("--t", type=int, required=True)
        p.add_argument("--format", choices=("paths", "trace", "dot"), default="paths")

    p = with_graph("fan", "k paths from s to a target set")
    p.add_argument("--s", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--targets", type=_vertex_list, required=True)

    p = with_graph("set", "k disjoint paths from a source set to a target set")
    p.add_argument("--s", type=int, help="default: the last source in the ordering")
    p.add_argument("--k", type=int)
    p.add_argument("--sources", type=_vertex_list, required=True)
    p.add_argument("--targets", type=_vertex_list, required=True)

    p = with_graph("oracle", "maximum number of internally disjoint s-t paths by max flow")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--cap", type=int)

    p = with_graph("verify", "check a paths file against the graph")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--paths", required=True, help="one path per line")

    p = with_graph("suffix-check", "check that the ordering's last vertices are k-connected")
    p.add_argument("--k", type=int, help="default: every k from 1 to the minimum degree")

    p = sub.add_parser("random", help="emit a random G(n, p) graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as f:
        return f.read()


class _Session:
    """Graph, ordering and ID translation shared by the graph subcommands."""

    def __init__(self, args):
        self.args = args
        self.g: Graph = parse_graph(_read(args.graph))
        self.ordering = compute_mao(self.g, 1 if args.start is None else args.start)
        self.fd = forest_decomposition(self.g, self.ordering)

    def to_pos(self, x: int) -> int:
        n = self.g.n
        if not 1 <= x <= n:
            raise UsageError(f"vertex {x} outside 1..{n}")
        return x if self.args.positions else self.ordering.pos[x]

    def name(self, p: int) -> int:
        return p if self.args.positions else self.ordering.vert[p]

    def names(self, path) -> list[int]:
        return [self.name(p) for p in path]

    def s_and_k(self):
        s = self.ordering.n if self.args.s is None else self.to_pos(self.args.s)
        k = self.args.k if self.args.k is not None else self.fd.left_degree(s)
        return s, k

    def tree_system(self):
        s, k = self.s_and_k()
        return tree_system(self.g, self.ordering, self.fd, s, k)


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return _dispatch(args, out)
    except MaoPathsError as exc:
        err.write(f"error: {getattr(exc, 'kind', 'error')}: {exc}\n")
        return 2
    except OSError as exc:
        err.write(f"error: io: {exc}\n")
        return 2


def _dispatch(args, out) -> int:
    cmd = args.command
    if cmd == "random":
        out.write(render_graph(random_graph(args.n, args.p, args.seed)))
        return 0

    ses = _Session(args)
    if cmd == "mao":
        out.write(render_ordering(ses.ordering))
    elif cmd == "forest":
        if args.format == "dot":
            out.write(render_dot(ses.g, ses.ordering, ses.fd, positions=args.positions))
        else:
            out.write(render_forest(ses.g, ses.ordering, ses.fd, args.positions))
    elif cmd == "loose-ends":
        ts = ses.tree_system()
        bundle, trace = loose_ends(ts, record=args.format == "trace")
        _emit(ses, args, out, bundle.paths, trace)
    elif cmd == "paths":
        ts = ses.tree_system()
        result, trace = matching_ends(ts, ses.to_pos(args.t), record=args.format == "trace")
        _emit(ses, args, out, result.ordered(), trace)
    elif cmd == "fan":
        s = ses.ordering.n if args.s is None else ses.to_pos(args.s)
        k = args.k if args.k is not None else len(args.targets)
        targets = [ses.to_pos(x) for x in args.targets]
        paths = fan_paths(ses.g, ses.ordering, s, k, targets, fd=ses.fd)
        out.write(render_paths(ses.names(p) for p in paths))
    elif cmd == "set":
        sources = [ses.to_pos(x) for x in args.sources]
        targets = [ses.to_pos(x) for x in args.targets]
        s = max(sources) if args.s is None else ses.to_pos(args.s)
        k = args.k if args.k is not None else len(sources)
        paths = set_paths(ses.g, ses.ordering, s, k, sources, targets, fd=ses.fd)
        out.write(render_paths(ses.names(p) for p in paths))
    elif cmd == "oracle":
        s, t = ses.to_pos(args.s), ses.to_pos(args.t)
        res = max_disjoint_paths(ses.g, ses.ordering.vert[s], ses.ordering.vert[t], cap=args.cap)
        out.write(f"{res.max_paths}\n")
        pos = ses.ordering.pos
        out.write(render_paths([ses.name(pos[x]) for x in p] for p in res.witness))
    elif cmd == "verify":
        s, t = ses.to_pos(args.s), ses.to_pos(args.t)
        vert = ses.ordering.vert
        paths = []
        for line in _read(args.paths).splitlines():
            if line.strip():
                paths.append([vert[ses.to_pos(x)] for x in _vertex_list(line)])
        verdict = verify_internally_disjoint(ses.g, vert[s], vert[t], paths)
        out.write(verdict.render() + "\n")
        return 0 if verdict else 1
    elif cmd == "suffix-check":
        delta = min_degree(ses.g)
        ks = [args.k] if args.k is not None else list(range(1, delta + 1))
        status = 0
        for k in ks:
            verdict = check_k_connected_suffix(ses.g, ses.ordering, k)
            out.write(f"k={k} {verdict.render()}" + ("" if verdict else f" {verdict.where}") + "\n")
            status = status or (0 if verdict else 1)
        return status
    return 0


def _emit(ses: _Session, args, out, paths, trace) -> None:
    if args.format == "trace":
        out.write(render_trace(trace, ses.name))
    elif args.format == "dot":
        named = [ses.names(p) for p in paths]
        out.write(render_dot(ses.g, ses.ordering, ses.fd, named, positions=args.positions))
    else:
        out.write(render_paths(ses.names(p) for p in paths))


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
