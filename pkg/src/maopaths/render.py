"""Text renderers for orderings, forests, paths, traces and DOT figures."""

from __future__ import annotations

import json

from .graph import Graph
from .mao import ForestDecomposition, MaoOrdering

# Forest styling for the first three forests; later ones fall back to gray.
FOREST_STYLE = {
    1: ("forestgreen", "solid"),
    2: ("red", "dashed"),
    3: ("blue", "dotted"),
}


def render_ordering(ordering: MaoOrdering) -> str:
    return "".join(f"{p} {ordering.vert[p]}\n" for p in range(1, ordering.n + 1))


def forest_rows(g: Graph, ordering: MaoOrdering, fd: ForestDecomposition, positions: bool = False):
    """``(u, v, forest)`` per edge, canonical order in the chosen ID space."""
    pos = ordering.pos
    rows = []
    for a, b in g.edges:
        i = fd.forest_index(pos[a], pos[b])
        if positions:
            a, b = sorted((pos[a], pos[b]))
        rows.append((a, b, i))
    rows.sort()
    return rows


def render_forest(g: Graph, ordering: MaoOrdering, fd: ForestDecomposition, positions: bool = False) -> str:
    return "".join(f"{u} {v} {i}\n" for u, v, i in forest_rows(g, ordering, fd, positions))


def render_paths(paths) -> str:
    return "".join(" ".join(map(str, p)) + "\n" for p in paths)


def render_trace(events, name=int) -> str:
    return "".join(json.dumps(ev.as_record(name)) + "\n" for ev in events)


def render_dot(
    g: Graph,
    ordering: MaoOrdering,
    fd: ForestDecomposition,
    paths=(),
    positions: bool = False,
) -> str:
    """Undirected DOT graph with one edge style per forest; path edges drawn bold.

    ``paths`` are given in the same ID space as the labels.
    """
    on_path = set()
    for p in paths:
        for a, b in zip(p, p[1:]):
            on_path.add((min(a, b), max(a, b)))
    lines = ["graph mao {", "  node [shape=circle];"]
    label = (lambda v: v) if positions else (lambda v: ordering.vert[v])
    for p in range(1, ordering.n + 1):
        v = label(p)
        lines.append(f'  {v} [label="{v}", xlabel="{p}"];')
    for u, v, i in forest_rows(g, ordering, fd, positions):
        color, style = FOREST_STYLE.get(i, ("gray50", "solid"))
        width = 3 if (u, v) in on_path else 1
        lines.append(f'  {u} -- {v} [color={color}, style={style}, penwidth={width}, label="F{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
