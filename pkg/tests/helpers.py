"""Brute-force reference implementations used as independent oracles.

Nothing here calls into the package beyond the Graph container, so each
function checks the library by a separate route.
"""

from __future__ import annotations

import itertools
import random

import networkx as nx

from maopaths import Graph, random_graph


def naive_mcs(g: Graph, start: int) -> list[int]:
    """Quadratic maximum cardinality search with smallest-ID tie-breaking."""
    order = [start]
    placed = {start}
    while len(order) < g.n:
        best = None
        for w in range(1, g.n + 1):
            if w in placed:
                continue
            c = sum(1 for x in g.adj[w] if x in placed)
            if best is None or c > best[0]:
                best = (c, w)
        order.append(best[1])
        placed.add(best[1])
    return order


def mao_predicate(g: Graph, order: list[int]) -> tuple[int, int] | None:
    """First position pair (v, w) violating the MAO property, or None."""
    position = {x: i for i, x in enumerate(order, start=1)}
    n = len(order)

    def count(x, before):
        return sum(1 for y in g.adj[x] if position[y] < before)

    for v in range(1, n + 1):
        for w in range(v + 1, n + 1):
            if count(order[v - 1], v) < count(order[w - 1], v):
                return (v, w)
    return None


def all_maos_from(g: Graph, start: int) -> list[list[int]]:
    rest = [x for x in range(1, g.n + 1) if x != start]
    return [
        [start, *perm]
        for perm in itertools.permutations(rest)
        if mao_predicate(g, [start, *perm]) is None
    ]


def forests_by_definition(g: Graph, order: list[int]) -> dict[tuple[int, int], int]:
    """Edge (by positions, u < v) -> forest index straight from the definition."""
    position = {x: i for i, x in enumerate(order, start=1)}
    out = {}
    for v_id in order:
        v = position[v_id]
        lefts = sorted(position[x] for x in g.adj[v_id] if position[x] < v)
        for i, u in enumerate(lefts, start=1):
            out[(u, v)] = i
    return out


def is_forest(edges) -> bool:
    parent: dict[int, int] = {}

    def find(x):
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    for u, v in edges:
        a, b = find(u), find(v)
        if a == b:
            return False
        parent[a] = b
    return True


def component(edges, s: int) -> set[int]:
    h = nx.Graph()
    h.add_node(s)
    h.add_edges_from(edges)
    return nx.node_connected_component(h, s)


def local_connectivity(g: Graph, s: int, t: int) -> int:
    """Internally disjoint s-t paths via networkx, counting a direct edge."""
    h = nx.Graph()
    h.add_nodes_from(range(1, g.n + 1))
    h.add_edges_from(g.edges)
    extra = 0
    if h.has_edge(s, t):
        h.remove_edge(s, t)
        extra = 1
    return extra + nx.node_connectivity(h, s, t)


def path_edge_set(paths):
    return {(min(a, b), max(a, b)) for p in paths for a, b in zip(p, p[1:])}


def corpus(count: int, nmax: int, ps, seed: int, nmin: int = 2):
    """Deterministic list of ``(graph, rng)`` pairs for property harnesses."""
    out = []
    for i in range(count):
        rng = random.Random(seed * 1_000_003 + i)
        n = rng.randint(nmin, nmax)
        p = ps[i % len(ps)]
        out.append((random_graph(n, p, seed * 7919 + i), rng))
    return out


def chain_violation(ts):
    """First ``(i, j, v)`` breaking the left-neighbor chain inside nested trees.

    For ``r_j < v < s`` and ``i < j <= k`` the forest neighbors must satisfy
    ``r_i <= left_i(v) < left_j(v) < v`` and ``r_j <= left_j(v)``.
    """
    left, roots, s = ts.left, ts.roots, ts.s
    for j in range(2, ts.k + 1):
        rj = roots[j - 1]
        for v in range(rj + 1, s):
            row = left[v]
            if len(row) < j or not rj <= row[j - 1] < v:
                return (None, j, v)
            for i in range(1, j):
                if not roots[i - 1] <= row[i - 1] < row[j - 1]:
                    return (i, j, v)
    return None


def sample_st(rng: random.Random, nmax: int, ps=(0.1, 0.3, 0.7)):
    """Random ``(g, ordering, fd, ts, t)`` with ``r_k <= t < s``, or None."""
    from maopaths import compute_mao, forest_decomposition, tree_system

    g = random_graph(rng.randint(3, nmax), rng.choice(ps), rng.getrandbits(32))
    o = compute_mao(g, rng.randint(1, g.n))
    fd = forest_decomposition(g, o)
    s = rng.randint(2, g.n)
    d = fd.left_degree(s)
    if d == 0:
        return None
    ts = tree_system(g, o, fd, s, rng.randint(1, d))
    t = rng.randint(ts.roots[-1], s - 1)
    return g, o, fd, ts, t


def sample_fan_set(rng: random.Random, nmax: int, ps=(0.3, 0.5, 0.7)):
    """Random feasible fan or set instance as ``(kind, g, o, fd, s, k, sources, targets)``.

    Feasibility follows the sorted assignment rule: the i-th smallest chosen
    position must not lie left of ``r_i``. Returns None when the draw fails.
    """
    from maopaths import compute_mao, forest_decomposition, tree_system

    g = random_graph(rng.randint(4, nmax), rng.choice(ps), rng.getrandbits(32))
    o = compute_mao(g, rng.randint(1, g.n))
    fd = forest_decomposition(g, o)
    s = rng.randint(3, g.n)
    d = fd.left_degree(s)
    if d == 0:
        return None
    k = rng.randint(1, d)
    roots = tree_system(g, o, fd, s, k).roots

    def pick(hi):
        # Independent draws per rank, then reject collisions.
        chosen = sorted({rng.randint(r, hi) for r in roots})
        if len(chosen) != k or any(x < r for x, r in zip(chosen, roots)):
            return None
        return chosen

    if rng.random() < 0.5:
        targets = pick(s - 1)
        return None if targets is None else ("fan", g, o, fd, s, k, None, targets)
    targets = pick(s - 1)
    sources = pick(s)
    if targets is None or sources is None or set(targets) & set(sources):
        return None
    return ("set", g, o, fd, s, k, sources, targets)
