"""Maximal adjacency orderings, their forest decomposition and tree systems.

Everything past :func:`compute_mao` speaks *positions* 1..n in the ordering;
``MaoOrdering.vert`` and ``MaoOrdering.pos`` translate to and from vertex IDs.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from heapq import heappop, heappush

from .errors import PreconditionError
from .graph import Graph
from .verdict import OK, Verdict, fail


@dataclass(frozen=True)
class MaoOrdering:
    """Bijection between vertex IDs and positions; index 0 of both is unused."""

    pos: tuple[int, ...]
    vert: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.vert) - 1

    @classmethod
    def from_vertices(cls, order) -> MaoOrdering:
        """Ordering whose position ``p`` holds ``order[p - 1]``."""
        vert = (0, *order)
        pos = [0] * len(vert)
        for p, v in enumerate(order, start=1):
            pos[v] = p
        return cls(tuple(pos), vert)

    def to_ids(self, positions) -> list[int]:
        vert = self.vert
        return [vert[p] for p in positions]


def compute_mao(g: Graph, start: int = 1) -> MaoOrdering:
    """Maximum cardinality search from ``start``.

    Among the unplaced vertices with the most placed neighbors the smallest
    vertex ID is taken next. Buckets are indexed by that neighbor count; each
    bucket is a min-heap of IDs with lazy deletion of stale entries.
    """
    n = g.n
    if not 1 <= start <= n:
        raise PreconditionError(f"start vertex {start} outside 1..{n}")
    adj = g.adj
    count = [0] * (n + 1)
    placed = bytearray(n + 1)
    buckets: list[list[int]] = [list(range(1, n + 1))]
    pos = [0] * (n + 1)
    vert = [0]
    top = 0
    v = start
    for p in range(1, n + 1):
        if p > 1:
            while True:
                b = buckets[top]
                if not b:
                    top -= 1
                    continue
                v = heappop(b)
                if not placed[v] and count[v] == top:
                    break
        placed[v] = 1
        pos[v] = p
        vert.append(v)
        for w in adj[v]:
            if not placed[w]:
                d = count[w] + 1
                count[w] = d
                if d == len(buckets):
                    buckets.append([w])
                else:
                    heappush(buckets[d], w)
                if d > top:
                    top = d
    return MaoOrdering(tuple(pos), tuple(vert))


def verify_mao(g: Graph, ordering: MaoOrdering) -> Verdict:
    """Check the maximal adjacency property in O(n + m).

    Position ``v`` must have at least as many neighbors in ``1..v-1`` as any
    later position ``w`` has in ``1..v-1``. On failure ``reason`` names the
    first offending pair of positions.
    """
    n = g.n
    if ordering.n != n:
        return fail(f"ordering covers {ordering.n} vertices, graph has {n}")
    pos, vert, adj = ordering.pos, ordering.vert, g.adj
    count = [0] * (n + 1)  # by position: neighbors among the placed prefix
    buckets: list[list[int]] = [list(range(n, 0, -1))]
    top = 0
    for v in range(1, n + 1):
        # Largest count among unplaced positions w >= v.
        while True:
            b = buckets[top]
            while b and (b[-1] < v or count[b[-1]] != top):
                b.pop()
            if b or top == 0:
                break
            top -= 1
        if count[v] < top:
            w = next(x for x in reversed(buckets[top]) if x > v and count[x] == top)
            return fail(
                f"position {v} has {count[v]} neighbors before it but position {w} has {top}",
                where=(v, w),
            )
        for x in adj[vert[v]]:
            px = pos[x]
            if px > v:
                d = count[px] + 1
                count[px] = d
                if d == len(buckets):
                    buckets.append([px])
                else:
                    buckets[d].append(px)
                if d > top:
                    top = d
    return OK


@dataclass(frozen=True)
class ForestDecomposition:
    """Per position, its left neighbors (positions) in ascending order.

    The edge from ``left[v][i - 1]`` to ``v`` belongs to forest ``F_i``.
    """

    left: tuple[tuple[int, ...], ...]

    def left_degree(self, v: int) -> int:
        return len(self.left[v])

    def forest_index(self, u: int, v: int) -> int:
        """Forest of the edge between positions ``u`` and ``v``."""
        if u > v:
            u, v = v, u
        row = self.left[v]
        i = bisect_left(row, u)
        if i == len(row) or row[i] != u:
            raise KeyError((u, v))
        return i + 1

    def forests(self) -> dict[int, list[tuple[int, int]]]:
        """Nonempty forests as lists of position pairs ``(u, v)`` with ``u < v``."""
        out: dict[int, list[tuple[int, int]]] = {}
        for v in range(1, len(self.left)):
            for i, u in enumerate(self.left[v], start=1):
                out.setdefault(i, []).append((u, v))
        return out


def forest_decomposition(g: Graph, ordering: MaoOrdering) -> ForestDecomposition:
    pos, vert, adj = ordering.pos, ordering.vert, g.adj
    at = pos.__getitem__
    left: list[tuple[int, ...]] = [()]
    for v in range(1, g.n + 1):
        # Sorting short neighbor rows beats a bucketed pass in CPython.
        row = sorted(map(at, adj[vert[v]]))
        left.append(tuple(row[:bisect_left(row, v)]))
    return ForestDecomposition(tuple(left))


@dataclass(frozen=True)
class TreeSystem:
    """Trees ``T_1..T_k`` of the forests containing start position ``s``.

    ``roots[i - 1]`` and ``tops[i - 1]`` bound the position interval of
    ``T_i``; ``left`` is shared with the forest decomposition.
    """

    s: int
    k: int
    roots: tuple[int, ...]
    tops: tuple[int, ...]
    left: tuple[tuple[int, ...], ...]

    def root(self, i: int) -> int:
        return self.roots[i - 1]

    def left_of(self, v: int, i: int) -> int:
        return self.left[v][i - 1]

    def span(self, i: int) -> tuple[int, int]:
        return self.roots[i - 1], self.tops[i - 1]

    def in_tree(self, i: int, v: int) -> bool:
        return self.roots[i - 1] <= v <= self.tops[i - 1]

    def tree_index(self, u: int, v: int) -> int | None:
        """Index ``i <= k`` with edge ``{u, v}`` in ``T_i``, else None."""
        if u > v:
            u, v = v, u
        if v >= len(self.left):
            return None
        row = self.left[v]
        i = bisect_left(row, u)
        if i == len(row) or row[i] != u or i >= self.k:
            return None
        r, top = self.roots[i], self.tops[i]
        return i + 1 if r < v <= top else None

    @property
    def union_size(self) -> int:
        """Number of edges of ``T_1 + ... + T_k`` (the trees are edge-disjoint)."""
        return sum(t - r for r, t in zip(self.roots, self.tops))


def tree_system(
    g: Graph, ordering: MaoOrdering, fd: ForestDecomposition, s: int, k: int
) -> TreeSystem:
    """Roots and position spans of ``T_1..T_k`` for start position ``s``.

    Only positions inside the spans are inspected. The structural invariants
    are checked before returning and an AssertionError signals that the
    ordering was not a maximal adjacency ordering of ``g``.
    """
    left = fd.left
    n = len(left) - 1
    if not 1 < s <= n:
        raise PreconditionError(f"start position s={s} must lie in 2..{n}")
    degree = len(left[s])
    if not 1 <= k <= degree:
        raise PreconditionError(f"k={k} must lie in 1..{degree}, the left-degree of s={s}")

    # r_i is the largest position <= s of left-degree < i.
    roots = [0] * k
    i = k
    v = s
    while i:
        d = len(left[v])
        while i and d < i:
            roots[i - 1] = v
            i -= 1
        v -= 1

    tops = []
    for i in range(1, k + 1):
        r = roots[i - 1]
        w = s + 1
        while w <= n and len(left[w]) >= i and left[w][i - 1] >= r:
            w += 1
        tops.append(w - 1)

    ts = TreeSystem(s, k, tuple(roots), tuple(tops), left)
    verdict = check_tree_system(ts)
    if not verdict:
        raise AssertionError(f"tree system invariant violated: {verdict.reason}")
    return ts


def check_tree_system(ts: TreeSystem) -> Verdict:
    """Linear-time check of the root and interval structure of ``ts``."""
    left, k, s = ts.left, ts.k, ts.s
    prev = 0
    for i in range(1, k + 1):
        r, top = ts.span(i)
        if r <= prev:
            return fail(f"roots not increasing at r_{i}={r}", invariant="roots")
        prev = r
        if len(left[r]) != i - 1:
            return fail(f"root r_{i}={r} has left-degree {len(left[r])}, expected {i - 1}",
                        invariant="root-degree")
        if not r < s <= top:
            return fail(f"span [{r}, {top}] of T_{i} misses s={s}", invariant="span")
        # Every vertex of (r, top] hangs from a vertex of the same interval,
        # so each prefix [r, v] induces a connected subtree.
        for v in range(r + 1, top + 1):
            row = left[v]
            if len(row) < i or not r <= row[i - 1] < v:
                return fail(f"position {v} in span of T_{i} has no F_{i} edge into [{r}, {v})",
                            invariant="interval")
        # The F_i parent walk from s must end at r.
        v = s
        while len(left[v]) >= i:
            v = left[v][i - 1]
        if v != r:
            return fail(f"F_{i} walk from s ends at {v}, not at r_{i}={r}", invariant="root")
    return OK
