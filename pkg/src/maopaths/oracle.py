"""Flow-based local vertex connectivity and standalone path checkers.

The oracle is a plain unit-capacity augmenting-path max flow on the
vertex-split digraph. It shares no code with the sweeps it is used to check.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import PreconditionError
from .graph import Graph, min_degree
from .mao import MaoOrdering
from .verdict import OK, Verdict, fail


@dataclass(frozen=True)
class OracleResult:
    """Maximum number of internally disjoint s-t paths and a witness.

    ``cut`` is a set of inner vertices separating ``s`` from ``t`` once the
    direct edge (if any) is removed; ``len(cut) + direct_edge == max_paths``.
    It is None when the search stopped early at ``cap``.
    """

    max_paths: int
    witness: list[list[int]]
    cut: frozenset[int] | None
    direct_edge: bool


class _SplitNetwork:
    # Vertex v becomes 2v (in) -> 2v+1 (out); arcs are stored pairwise so
    # that arc ^ 1 is the reverse arc.

    def __init__(self, g: Graph, s: int, t: int):
        self.head: list[int] = []
        self.cap: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(2 * g.n + 2)]
        for v in range(1, g.n + 1):
            if v != s and v != t:
                self._arc(2 * v, 2 * v + 1)
        for u in range(1, g.n + 1):
            for w in g.adj[u]:
                if w != s and u != t:
                    self._arc(2 * u + 1, 2 * w)

    def _arc(self, a: int, b: int) -> None:
        self.out[a].append(len(self.head))
        self.head.append(b)
        self.cap.append(1)
        self.out[b].append(len(self.head))
        self.head.append(a)
        self.cap.append(0)

    def augment(self, source: int, sink: int) -> bool:
        parent = {source: -1}
        queue = deque([source])
        while queue:
            x = queue.popleft()
            for e in self.out[x]:
                y = self.head[e]
                if self.cap[e] and y not in parent:
                    parent[y] = e
                    if y == sink:
                        while y != source:
                            e = parent[y]
                            self.cap[e] -= 1
                            self.cap[e ^ 1] += 1
                            y = self.head[e ^ 1]
                        return True
                    queue.append(y)
        return False

    def reachable(self, source: int) -> set[int]:
        seen = {source}
        stack = [source]
        while stack:
            x = stack.pop()
            for e in self.out[x]:
                y = self.head[e]
                if self.cap[e] and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def carries_flow(self, e: int) -> bool:
        # Forward arcs have even ids and unit capacity.
        return e % 2 == 0 and self.cap[e] == 0


def max_disjoint_paths(g: Graph, s: int, t: int, cap: int | None = None) -> OracleResult:
    """Local vertex connectivity between vertex IDs ``s`` and ``t`` (direct edge counts)."""
    if s == t:
        raise PreconditionError(f"s and t must differ, both are {s}")
    for x in (s, t):
        if not 1 <= x <= g.n:
            raise PreconditionError(f"vertex {x} outside 1..{g.n}")
    net = _SplitNetwork(g, s, t)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while (cap is None or flow < cap) and net.augment(source, sink):
        flow += 1

    witness = []
    for e in net.out[source]:
        if not net.carries_flow(e):
            continue
        path = [s]
        x = net.head[e]  # an in-node
        while x != sink:
            v = x // 2
            path.append(v)
            x = 2 * v + 1
            x = next(net.head[f] for f in net.out[x] if net.carries_flow(f))
        path.append(t)
        witness.append(path)

    direct = g.has_edge(s, t)
    cut = None
    if cap is None or flow < cap:
        cut = _vertex_cut(net, source, s, t)
    return OracleResult(flow, witness, cut, direct)


def _vertex_cut(net: _SplitNetwork, source: int, s: int, t: int) -> frozenset[int]:
    # Each arc leaving the residual-reachable side is charged to an inner
    # vertex on it; only the direct s-t arc has none.
    seen = net.reachable(source)
    cut = set()
    for e in range(0, len(net.head), 2):
        a, b = net.head[e ^ 1], net.head[e]
        if a in seen and b not in seen:
            u, w = a // 2, b // 2
            if u == w:
                cut.add(u)
            elif w != t:
                cut.add(w)
            elif u != s:
                cut.add(u)
    return frozenset(cut)


def verify_internally_disjoint(g: Graph, s: int, t: int, paths) -> Verdict:
    """Check that ``paths`` are simple s-t paths in ``g`` sharing no inner vertex."""
    owner: dict[int, int] = {}
    direct = None
    for i, p in enumerate(paths, start=1):
        p = list(p)
        if len(p) < 2 or p[0] != s or p[-1] != t:
            return fail(f"endpoint mismatch: path runs {p[:1]}..{p[-1:]}, expected {s}..{t}",
                        path_index=i)
        for x in p:
            if not 1 <= x <= g.n:
                return fail(f"vertex {x} out of range 1..{g.n}", path_index=i)
        if len(set(p)) != len(p):
            rep = next(x for x in p if p.count(x) > 1)
            return fail(f"repeated vertex {rep}", path_index=i)
        for a, b in zip(p, p[1:]):
            if not g.has_edge(a, b):
                return fail(f"non-edge {a}-{b}", path_index=i)
        if len(p) == 2:
            if direct is not None:
                return fail(f"direct edge {s}-{t} already used by path {direct}", path_index=i)
            direct = i
        for x in p[1:-1]:
            if x in owner:
                return fail(f"shared internal vertex {x} with path {owner[x]}", path_index=i)
            owner[x] = i
    return OK


def verify_sbar_disjoint(paths, s: int, roots) -> Verdict:
    """Check that path ``i`` runs from ``s`` to ``roots[i]`` and paths meet only in ``s``."""
    paths = [list(p) for p in paths]
    if len(paths) != len(roots):
        return fail(f"{len(paths)} paths for {len(roots)} roots")
    owner: dict[int, int] = {}
    for i, (p, r) in enumerate(zip(paths, roots), start=1):
        if not p or p[0] != s:
            return fail(f"path does not start at s={s}", path_index=i)
        if p[-1] != r:
            return fail(f"path ends at {p[-1]}, expected root {r}", path_index=i)
        if len(set(p)) != len(p):
            return fail("repeated vertex", path_index=i)
        for x in p[1:]:
            if x in owner:
                return fail(f"shared vertex {x} with path {owner[x]}", path_index=i)
            owner[x] = i
    return OK


def check_k_connected_suffix(g: Graph, ordering: MaoOrdering, k: int) -> Verdict:
    """Check that the last ``delta - k + 2`` vertices of the ordering are k-connected.

    Every pair is tested with the flow oracle capped at ``k``; the first
    failing pair (as vertex IDs) is reported in ``where``.
    """
    delta = min_degree(g)
    if not 1 <= k <= delta:
        raise PreconditionError(f"k={k} must lie in 1..{delta}, the minimum degree")
    n = g.n
    suffix = [ordering.vert[p] for p in range(n - (delta - k + 2) + 1, n + 1)]
    for a, b in combinations(suffix, 2):
        got = max_disjoint_paths(g, a, b, cap=k).max_paths
        if got < k:
            return fail(f"vertices {a} and {b} have local connectivity {got} < {k}", where=(a, b))
    return OK
