"""Simple undirected graphs on vertices 1..n: parsing, rendering, generation."""

from __future__ import annotations

import math
import random
from functools import cached_property
from typing import Iterable

from .errors import (
    DuplicateEdgeError,
    MalformedLineError,
    PreconditionError,
    SelfLoopError,
    VertexRangeError,
)


class Graph:
    """Immutable simple undirected graph with vertex IDs 1..n.

    ``adj[v]`` is the tuple of neighbors of ``v`` in ascending order;
    ``adj[0]`` is an unused empty placeholder so that IDs index directly.
    """

    __slots__ = ("n", "m", "adj", "__dict__")

    def __init__(self, n: int, adj: list[tuple[int, ...]], m: int):
        self.n = n
        self.m = m
        self.adj = adj

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph, rejecting self-loops, duplicates and bad IDs."""
        if n < 1:
            raise PreconditionError(f"vertex count must be positive, got {n}")
        nbrs: list[list[int]] = [[] for _ in range(n + 1)]
        seen = set()
        m = 0
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise PreconditionError(f"edge ({u}, {v}) has a vertex outside 1..{n}")
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise PreconditionError(f"duplicate edge {key}")
            seen.add(key)
            nbrs[u].append(v)
            nbrs[v].append(u)
            m += 1
        return cls(n, [tuple(sorted(a)) for a in nbrs], m)

    @cached_property
    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted canonically."""
        adj = self.adj
        return [(u, v) for u in range(1, self.n + 1) for v in adj[u] if v > u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        a, b = (u, v) if len(self.adj[u]) <= len(self.adj[v]) else (v, u)
        return b in self.adj[a]

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Subgraph induced by ``vertices``, relabelled 1..len in given order."""
        order = list(vertices)
        relabel = {v: i for i, v in enumerate(order, start=1)}
        edges = [
            (relabel[u], relabel[w])
            for u in order
            for w in self.adj[u]
            if w in relabel and relabel[w] > relabel[u]
        ]
        return Graph.from_edges(len(order), edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def min_degree(g: Graph) -> int:
    return min(len(g.adj[v]) for v in range(1, g.n + 1))


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document: a header ``n m`` followed by ``m`` edge lines.

    Blank lines are ignored. Every structural problem raises a subclass of
    :class:`ParseError` carrying the 1-based line number.
    """
    lines = text.splitlines()
    numbered = [(i, ln) for i, ln in enumerate(lines, start=1) if ln.strip()]
    if not numbered:
        raise MalformedLineError(1, "empty document, expected header 'n m'")

    lineno, header = numbered[0]
    n, m = _two_ints(lineno, header)
    if n < 1:
        raise MalformedLineError(lineno, f"vertex count must be positive, got {n}")
    if m < 0:
        raise MalformedLineError(lineno, f"edge count must be nonnegative, got {m}")

    body = numbered[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (lines and len(lines)) or 1
        raise MalformedLineError(where, f"header announces {m} edges, found {len(body)} edge lines")

    nbrs: list[list[int]] = [[] for _ in range(n + 1)]
    seen: dict[tuple[int, int], int] = {}
    for lineno, line in body:
        u, v = _two_ints(lineno, line)
        for x in (u, v):
            if not 1 <= x <= n:
                raise VertexRangeError(lineno, f"vertex {x} outside 1..{n}")
        if u == v:
            raise SelfLoopError(lineno, f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(lineno, f"edge {key[0]} {key[1]} already given on line {seen[key]}")
        seen[key] = lineno
        nbrs[u].append(v)
        nbrs[v].append(u)
    return Graph(n, [tuple(sorted(a)) for a in nbrs], m)


def _two_ints(lineno: int, line: str) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise MalformedLineError(lineno, f"expected two integers, got {line.strip()!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise MalformedLineError(lineno, f"expected two integers, got {line.strip()!r}") from None


def render_graph(g: Graph) -> str:
    """Canonical edge-list text; round-trips through :func:`parse_graph`."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p), deterministic in ``(n, p, seed)``.

    Candidate pairs are visited in canonical order and skipped geometrically,
    so the cost is O(n + m) rather than O(n^2).
    """
    if n < 1:
        raise PreconditionError(f"vertex count must be positive, got {n}")
    if not 0.0 <= p <= 1.0:
        raise PreconditionError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    nbrs: list[list[int]] = [[] for _ in range(n + 1)]
    m = 0
    if p == 1.0:
        for u in range(1, n + 1):
            nbrs[u] = [w for w in range(1, n + 1) if w != u]
        m = n * (n - 1) // 2
    elif p > 0.0:
        # Walk the strict upper triangle row by row; (u, w) with u < w.
        log_q = math.log1p(-p)
        u, w = 1, 1
        rand = rng.random
        pairs = n * (n - 1) // 2
        while u < n:
            skip = math.log1p(-rand()) / log_q
            if skip >= pairs:
                # Tiny p: the jump would overshoot the whole triangle.
                break
            w += 1 + int(skip)
            while w > n and u < n:
                w = w - n + u + 1
                u += 1
            if u < n:
                nbrs[u].append(w)
                nbrs[w].append(u)
                m += 1
        # Row order already leaves every neighbor list ascending.
    return Graph(n, [tuple(a) for a in nbrs], m)
