"""Internally vertex-disjoint s-t paths from two coordinated sweeps.

Paths ``A_i`` grow from ``s`` exactly as in :mod:`.loose_ends`. Once the sweep
reaches ``t``, paths ``B_i`` start growing from ``t`` in the same sweep, and
whenever A- and B-paths meet at a vertex the indices on both sides are
rotated so that exactly one pair ``A_j``, ``B_j`` ends there; that pair is
then joined.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass, replace

from .errors import PreconditionError
from .graph import Graph
from .loose_ends import _downshift, path_edges
from .mao import (
    MaoOrdering,
    ForestDecomposition,
    TreeSystem,
    forest_decomposition,
    tree_system,
    verify_mao,
)
from .verdict import OK, Verdict, fail


@dataclass(frozen=True)
class DualTraceEvent:
    """One processing step of the two-sided sweep.

    ``replacements`` hold ``(side, index, old_end, new_end)`` with the index
    before rotation; ``appended`` holds ``(side, index, new_end)`` with the
    index after it. ``j`` is None on the step that processes ``t``.
    """

    processed: int
    ending_a: tuple[int, ...] = ()
    ending_b: tuple[int, ...] = ()
    j: int | None = None
    replacements: tuple[tuple[str, int, int, int], ...] = ()
    downshift_a: tuple[int, ...] = ()
    downshift_b: tuple[int, ...] = ()
    appended: tuple[tuple[str, int, int], ...] = ()
    finished_a: tuple[int, ...] = ()
    finished_b: tuple[int, ...] = ()

    def as_record(self, name=int) -> dict:
        return {
            "processed": name(self.processed),
            "ending_a": list(self.ending_a),
            "ending_b": list(self.ending_b),
            "j": self.j,
            "replacements": [[sd, i, name(a), name(b)] for sd, i, a, b in self.replacements],
            "downshift_a": list(self.downshift_a),
            "downshift_b": list(self.downshift_b),
            "appended": [[sd, i, name(w)] for sd, i, w in self.appended],
            "finished_a": list(self.finished_a),
            "finished_b": list(self.finished_b),
        }


@dataclass
class DualBundle:
    """Half-paths ``A_i`` from s and ``B_i`` from t; ``finished`` is shared per index."""

    s: int
    t: int
    a_paths: list[list[int]]
    b_paths: list[list[int]]
    finished: list[bool]
    active: frozenset[int]


@dataclass
class StPathSet:
    """``k`` internally disjoint s-t paths in positions.

    ``paths[i - 1]`` is ``A_i`` followed by the reversed ``B_i``, the junction
    ``meeting[i - 1]`` written once. ``finish_order`` lists indices in the order
    their pairs were joined, which is descending by junction.
    """

    s: int
    t: int
    paths: list[list[int]]
    meeting: list[int]
    finish_order: list[int]
    bundle: DualBundle
    edge_visits: int = 0

    def ordered(self) -> list[list[int]]:
        return [self.paths[i - 1] for i in self.finish_order]


def _register(ending: list, w: int, i: int) -> None:
    if ending[w] is None:
        ending[w] = [i]
    else:
        insort(ending[w], i)


def _unregister(ending: list, w: int, i: int) -> None:
    row = ending[w]
    row.remove(i)
    if not row:
        ending[w] = None


def matching_ends(
    ts: TreeSystem, t: int, record: bool = True
) -> tuple[StPathSet, list[DualTraceEvent]]:
    """Compute ``k`` internally vertex-disjoint paths between ``s`` and ``t``.

    ``t`` must satisfy ``r_k <= t < s``. Work is linear in the size of
    ``T_1 + ... + T_k`` and tallied in ``StPathSet.edge_visits``.
    """
    s, k, left, roots = ts.s, ts.k, ts.left, ts.roots
    if t == s:
        raise PreconditionError(f"t={t} equals s; t must be strictly left of s")
    if t > s:
        raise PreconditionError(f"t={t} must be strictly left of s={s}")
    if t < roots[-1]:
        raise PreconditionError(f"t={t} is left of the root r_{k}={roots[-1]}, so not in T_{k}")

    A: list = [None] + [[s, left[s][i - 1]] for i in range(1, k + 1)]
    B: list = [None] + [[t] for _ in range(k)]
    finished = [False] * (k + 1)
    active = bytearray(s + 1)
    end_a: list = [None] * (s + 1)
    end_b: list = [None] * (s + 1)
    for i in range(1, k + 1):
        w = left[s][i - 1]
        active[w] = 1
        end_a[w] = [i]
    active[t] = 1
    order: list[int] = []
    trace: list[DualTraceEvent] = []
    visits = k

    def shift_side(P, ending, S, v, side, replaced):
        # Reroute every path of S but the lowest to a smaller end, then rotate.
        for a, b in zip(S, S[1:]):
            p = P[b]
            old = p[-1]
            w = left[p[-2]][a - 1]
            p[-1] = w
            active[w] = 1
            if old != v:
                _unregister(ending, old, b)
            replaced.append((side, b, old, w))
        if len(S) > 1:
            _downshift(P, S)
            for a in S[:-1]:
                _register(ending, P[a][-1], a)

    # Nothing left of r_1 is ever marked, so the sweep stops there.
    v = s - 1
    while v >= roots[0]:
        visits += 1
        if not active[v]:
            v -= 1
            continue
        if v == t:
            I_A = end_a[t] or []
            end_a[t] = None
            here = set(I_A)
            appended = []
            for i in range(1, k + 1):
                if i in here:
                    finished[i] = True
                    order.append(i)
                else:
                    w = left[t][i - 1]
                    B[i].append(w)
                    active[w] = 1
                    _register(end_b, w, i)
                    appended.append(("B", i, w))
                    visits += 1
            active[t] = 0
            if record:
                trace.append(DualTraceEvent(
                    t, ending_a=tuple(I_A), appended=tuple(appended),
                    finished_a=tuple(I_A), finished_b=tuple(I_A)))
            v -= 1
            continue

        I_A = end_a[v] or []
        I_B = end_b[v] or []
        end_a[v] = end_b[v] = None
        if not I_A and not I_B:
            active[v] = 0
            if record:
                trace.append(DualTraceEvent(v))
            v -= 1
            continue
        j = max(I_A[-1] if I_A else 0, I_B[-1] if I_B else 0)
        S_A = I_A if I_A and I_A[-1] == j else I_A + [j]
        S_B = I_B if I_B and I_B[-1] == j else I_B + [j]
        replaced: list = []
        shift_side(A, end_a, S_A, v, "A", replaced)
        shift_side(B, end_b, S_B, v, "B", replaced)
        visits += len(replaced)

        appended = []
        fin: tuple[int, ...] = ()
        if A[j][-1] == v and B[j][-1] == v:
            finished[j] = True
            order.append(j)
            fin = (j,)
        else:
            P, ending, side = (A, end_a, "A") if A[j][-1] == v else (B, end_b, "B")
            w = left[v][j - 1]
            P[j].append(w)
            active[w] = 1
            _register(ending, w, j)
            appended.append((side, j, w))
            visits += 1
        active[v] = 0
        if record:
            trace.append(DualTraceEvent(
                v, tuple(I_A), tuple(I_B), j, tuple(replaced),
                tuple(S_A) if len(S_A) > 1 else (), tuple(S_B) if len(S_B) > 1 else (),
                tuple(appended), fin, fin))
        v -= 1

    a_paths, b_paths = A[1:], B[1:]
    bundle = DualBundle(s, t, a_paths, b_paths, finished[1:], frozenset())
    paths = [a + b[-2::-1] for a, b in zip(a_paths, b_paths)]
    meeting = [a[-1] for a in a_paths]
    result = StPathSet(s, t, paths, meeting, order, bundle, visits)
    return result, trace


def _check_dual_state(ts: TreeSystem, t: int, A, B, fin_a, fin_b, v: int) -> Verdict:
    """Invariants (1)-(5) and the paired-finish observation before processing ``v``."""
    s, k = ts.s, ts.k
    for i in range(1, k + 1):
        if fin_a[i - 1] != fin_b[i - 1]:
            return fail(f"A_{i} finished={fin_a[i - 1]} but B_{i} finished={fin_b[i - 1]}",
                        invariant="paired-finish", path_index=i)
    for i in range(1, k + 1):
        for side, p, head in (("A", A[i - 1], s), ("B", B[i - 1], t)):
            if p[0] != head or any(a <= b for a, b in path_edges(p)):
                return fail(f"{side}_{i} has the wrong head or is not strictly decreasing",
                            invariant=1, side=side, path_index=i)
    for i in range(1, k + 1):
        a, b, r = A[i - 1], B[i - 1], ts.root(i)
        done = fin_a[i - 1]
        if done != (v < a[-1] == b[-1]):
            return fail(f"finished={done} for index {i} but ends are {a[-1]}, {b[-1]} at v={v}",
                        invariant=2, side="A", path_index=i)
        if done:
            continue
        for side, p in (("A", a), ("B", b)):
            if not r <= p[-1] <= v:
                return fail(f"unfinished {side}_{i} ends at {p[-1]} outside [r_{i}={r}, v={v}]",
                            invariant=2, side=side, path_index=i)
            if len(p) > 1 and ts.tree_index(p[-2], p[-1]) != i:
                return fail(f"last edge of {side}_{i} is not in T_{i}",
                            invariant=2, side=side, path_index=i)
    for i in range(1, k + 1):
        a, b = A[i - 1], B[i - 1]
        if a[-2] <= v:
            return fail(f"second-to-last vertex of A_{i} is {a[-2]} <= v={v}",
                        invariant=3, side="A", path_index=i)
        if v >= t:
            if b != [t]:
                return fail(f"B_{i} left t before t was processed",
                            invariant=3, side="B", path_index=i)
        elif not ((fin_b[i - 1] and b == [t]) or (len(b) > 1 and b[-2] > v)):
            return fail(f"B_{i} violates the second-to-last condition at v={v}",
                        invariant=3, side="B", path_index=i)
    seen: dict[int, tuple[str, int]] = {}
    for i in range(1, k + 1):
        for side, p in (("A", A[i - 1]), ("B", B[i - 1])):
            for w in p:
                if not v < w < s or w == t:
                    continue
                if w not in seen:
                    seen[w] = (side, i)
                    continue
                side0, i0 = seen[w]
                ok = (i0 == i and side0 != side and fin_a[i - 1]
                      and A[i - 1][-1] == B[i - 1][-1] == w)
                if not ok:
                    return fail(f"position {w} lies on {side0}_{i0} and {side}_{i}",
                                invariant=4, side=side, path_index=i)
    for i in range(1, k + 1):
        for side, p in (("A", A[i - 1]), ("B", B[i - 1])):
            for a, b in path_edges(p):
                if ts.tree_index(a, b) is None:
                    return fail(f"edge {a}-{b} of {side}_{i} is not in T_1..T_{k}",
                                invariant=5, side=side, path_index=i)
    return OK


def replay_dual_invariants(ts: TreeSystem, t: int, trace: list[DualTraceEvent]) -> Verdict:
    """Replay a two-sided trace and check all invariants before every step.

    Besides invariants 1-5 this checks that A- and B-paths of equal index
    finish together, that the B-paths stay at ``t`` until ``t`` is processed,
    and that the processed vertex is always the largest marked one.
    """
    s, k = ts.s, ts.k
    A = [[s, ts.left_of(s, i)] for i in range(1, k + 1)]
    B = [[t] for _ in range(k)]
    fin_a = [False] * k
    fin_b = [False] * k
    active = {a[-1] for a in A} | {t}
    last = s

    for step, ev in enumerate(trace, start=1):
        v = max(active) if active else 0
        verdict = _check_dual_state(ts, t, A, B, fin_a, fin_b, v)
        if not verdict:
            return replace(verdict, step=step)
        if ev.processed != v or v >= last:
            return fail(f"trace processes {ev.processed}, largest active vertex is {v}",
                        invariant="order", step=step)
        last = v
        sides = {"A": A, "B": B}
        for side, idx, old, new in ev.replacements:
            p = sides[side][idx - 1]
            if p[-1] != old:
                return fail(f"replacement on {side}_{idx} expects end {old}, found {p[-1]}",
                            invariant="trace", step=step, side=side, path_index=idx)
            p[-1] = new
            active.add(new)
        for side, idx in (("A", ev.downshift_a), ("B", ev.downshift_b)):
            if idx:
                shifted = [None] + sides[side]
                _downshift(shifted, list(idx))
                sides[side][:] = shifted[1:]
        for side, idx, new in ev.appended:
            sides[side][idx - 1].append(new)
            active.add(new)
        for i in ev.finished_a:
            fin_a[i - 1] = True
        for i in ev.finished_b:
            fin_b[i - 1] = True
        active.discard(v)

    if active:
        return fail(f"positions {sorted(active)} still active after the last step",
                    invariant="order", step=len(trace) + 1)
    verdict = _check_dual_state(ts, t, A, B, fin_a, fin_b, 0)
    return verdict if verdict else replace(verdict, step=len(trace) + 1)


def _assignment_error(kind: str, chosen: list[int], roots: tuple[int, ...]) -> str | None:
    for i, (x, r) in enumerate(zip(sorted(chosen), roots), start=1):
        if x < r:
            return f"sorted {kind} {x} (rank {i}) is left of the root r_{i}={r}"
    return None


def _augmented(g: Graph, ordering: MaoOrdering, s: int, extra: list[list[int]]):
    """Prefix graph on positions 1..s plus new vertices s+1, s+2, ... with given neighbors."""
    vert, pos, adj = ordering.vert, ordering.pos, g.adj
    edges = [(pos[x], u) for u in range(1, s + 1) for x in adj[vert[u]] if pos[x] < u]
    for offset, nbrs in enumerate(extra, start=1):
        edges.extend((x, s + offset) for x in nbrs)
    aug = Graph.from_edges(s + len(extra), edges)
    identity = MaoOrdering.from_vertices(range(1, aug.n + 1))
    return aug, identity


def _strip(paths: list[list[int]], first: bool, last: bool) -> list[list[int]]:
    lo = 1 if first else 0
    return [p[lo:len(p) - 1] if last else p[lo:] for p in paths]


def _check_positions(name: str, xs, k: int, hi: int, strict: bool) -> list[int]:
    xs = list(xs)
    if len(xs) != k:
        raise PreconditionError(f"expected {k} {name}, got {len(xs)}")
    if len(set(xs)) != len(xs):
        raise PreconditionError(f"duplicate {name} in {sorted(xs)}")
    for x in xs:
        if x < 1 or (x >= hi if strict else x > hi):
            rel = "<" if strict else "<="
            raise PreconditionError(f"{name[:-1]} {x} must satisfy 1 <= x {rel} s={hi}")
    return xs


def fan_paths(
    g: Graph,
    ordering: MaoOrdering,
    s: int,
    k: int,
    targets,
    fd: ForestDecomposition | None = None,
    check: bool = True,
) -> list[list[int]]:
    """``k`` paths from position ``s`` to the ``k`` target positions, disjoint except at ``s``.

    A new vertex ``s + 1`` adjacent to every target is appended to the prefix
    graph on ``1..s``; the two-sided sweep between ``s + 1`` and ``s`` then
    yields the fan once the auxiliary vertex is dropped. Paths run from ``s``
    to their target.
    """
    targets = _check_positions("targets", targets, k, s, strict=True)
    fd = fd or forest_decomposition(g, ordering)
    ts = tree_system(g, ordering, fd, s, k)
    err = _assignment_error("target", targets, ts.roots)
    if err:
        raise PreconditionError(err)
    aug, identity = _augmented(g, ordering, s, [sorted(targets)])
    if check:
        verdict = verify_mao(aug, identity)
        if not verdict:
            raise AssertionError(f"augmented ordering is not a MAO: {verdict.reason}")
    aug_ts = tree_system(aug, identity, forest_decomposition(aug, identity), s + 1, k)
    result, _ = matching_ends(aug_ts, s, record=False)
    return [p[::-1] for p in _strip(result.ordered(), first=True, last=False)]


def set_paths(
    g: Graph,
    ordering: MaoOrdering,
    s: int,
    k: int,
    sources,
    targets,
    fd: ForestDecomposition | None = None,
    check: bool = True,
) -> list[list[int]]:
    """``k`` vertex-disjoint paths from the source positions to the target positions.

    The prefix graph on ``1..s`` gets a vertex ``s + 1`` adjacent to all
    targets and a vertex ``s + 2`` adjacent to all sources; the two-sided
    sweep runs from ``s + 2`` towards ``s + 1``.
    """
    sources = _check_positions("sources", sources, k, s, strict=False)
    targets = _check_positions("targets", targets, k, s, strict=True)
    overlap = set(sources) & set(targets)
    if overlap:
        raise PreconditionError(f"sources and targets overlap in {sorted(overlap)}")
    fd = fd or forest_decomposition(g, ordering)
    ts = tree_system(g, ordering, fd, s, k)
    errors = [e for e in (_assignment_error("source", sources, ts.roots),
                          _assignment_error("target", targets, ts.roots)) if e]
    if errors:
        raise PreconditionError("; ".join(errors))
    aug, identity = _augmented(g, ordering, s, [sorted(targets), sorted(sources)])
    if check:
        verdict = verify_mao(aug, identity)
        if not verdict:
            raise AssertionError(f"augmented ordering is not a MAO: {verdict.reason}")
    aug_ts = tree_system(aug, identity, forest_decomposition(aug, identity), s + 2, k)
    result, _ = matching_ends(aug_ts, s + 1, record=False)
    return _strip(result.ordered(), first=True, last=True)
