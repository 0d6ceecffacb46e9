"""Paths from a start position to the roots of its trees, pairwise meeting only in s.

The sweep visits active positions right to left. When several paths end at
the same position, all but the lowest-indexed one are rerouted to a smaller
vertex and the indices are rotated so that each path keeps extending along
the forest that matches its index.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass, replace

from .mao import TreeSystem
from .verdict import OK, Verdict, fail


@dataclass(frozen=True)
class TraceEvent:
    """One processing step of the sweep.

    ``replacements`` use the path index *before* the rotation, ``appended``
    and ``finished_index`` the index after it.
    """

    processed: int
    ending_indices: tuple[int, ...]
    replacements: tuple[tuple[int, int, int], ...] = ()
    downshift: tuple[int, ...] = ()
    appended: tuple[int, int] | None = None
    finished_index: int | None = None

    def as_record(self, name=int) -> dict:
        """Plain dict for serialization; ``name`` maps positions to output labels."""
        return {
            "processed": name(self.processed),
            "ending": list(self.ending_indices),
            "replacements": [[i, name(a), name(b)] for i, a, b in self.replacements],
            "downshift": list(self.downshift),
            "appended": None if self.appended is None else [self.appended[0], name(self.appended[1])],
            "finished": self.finished_index,
        }


@dataclass
class PathBundle:
    """Paths ``A_1..A_k`` (``paths[i - 1]``) as position lists starting at s."""

    s: int
    paths: list[list[int]]
    finished: list[bool]
    active: frozenset[int]
    edge_visits: int = 0

    def path(self, i: int) -> list[int]:
        return self.paths[i - 1]


def _downshift(paths: list, idx: list[int]) -> None:
    """Rotate ``paths`` over the ascending index list: each gets the next one's path."""
    first = paths[idx[0]]
    for a, b in zip(idx, idx[1:]):
        paths[a] = paths[b]
    paths[idx[-1]] = first


def loose_ends(ts: TreeSystem, record: bool = True) -> tuple[PathBundle, list[TraceEvent]]:
    """Compute ``k`` paths from ``s`` with ``A_i`` ending at root ``r_i``.

    Runs in time linear in the size of ``T_1 + ... + T_k``; the work is
    tallied in ``PathBundle.edge_visits``. With ``record`` off the returned
    trace is empty.
    """
    s, k, left, roots = ts.s, ts.k, ts.left, ts.roots
    paths: list = [None] + [[s, left[s][i - 1]] for i in range(1, k + 1)]
    finished = [False] * (k + 1)
    active = bytearray(s + 1)
    ending: list = [None] * (s + 1)
    for i in range(1, k + 1):
        w = left[s][i - 1]
        active[w] = 1
        ending[w] = [i]
    trace: list[TraceEvent] = []
    visits = k

    # Nothing left of r_1 is ever marked, so the sweep stops there.
    v = s - 1
    while v >= roots[0]:
        visits += 1
        if not active[v]:
            v -= 1
            continue
        J = ending[v]
        ending[v] = None
        replaced = []
        if len(J) > 1:
            for a, b in zip(J, J[1:]):
                p = paths[b]
                w = left[p[-2]][a - 1]
                replaced.append((b, p[-1], w))
                p[-1] = w
                active[w] = 1
            visits += len(J) - 1
            _downshift(paths, J)
            for a in J[:-1]:
                w = paths[a][-1]
                if ending[w] is None:
                    ending[w] = [a]
                else:
                    insort(ending[w], a)
        last = J[-1]
        appended = done = None
        if v == roots[last - 1]:
            finished[last] = True
            done = last
        else:
            w = left[v][last - 1]
            paths[last].append(w)
            active[w] = 1
            if ending[w] is None:
                ending[w] = [last]
            else:
                insort(ending[w], last)
            appended = (last, w)
            visits += 1
        active[v] = 0
        if record:
            trace.append(TraceEvent(
                v, tuple(J), tuple(replaced), tuple(J) if len(J) > 1 else (), appended, done))
        v -= 1

    bundle = PathBundle(s, paths[1:], finished[1:], frozenset(), visits)
    return bundle, trace


def path_edges(path):
    return zip(path, path[1:])


def _check_state(ts: TreeSystem, paths, finished, v: int) -> Verdict:
    """Invariants (1)-(5) of the sweep before processing position ``v``."""
    s = ts.s
    for i, p in enumerate(paths, start=1):
        if p[0] != s or any(a <= b for a, b in path_edges(p)):
            return fail(f"A_{i} does not start at s or is not strictly decreasing",
                        invariant=1, path_index=i)
    for i, p in enumerate(paths, start=1):
        end, r = p[-1], ts.root(i)
        if finished[i - 1] != (end > v):
            return fail(f"A_{i} finished={finished[i - 1]} but ends at {end} with v={v}",
                        invariant=2, path_index=i)
        if finished[i - 1]:
            if end != r:
                return fail(f"finished A_{i} ends at {end}, not at r_{i}={r}",
                            invariant=2, path_index=i)
        elif not r <= end <= v or ts.tree_index(p[-2], end) != i:
            return fail(f"unfinished A_{i} ends at {end} outside [r_{i}, v] or off T_{i}",
                        invariant=2, path_index=i)
    for i, p in enumerate(paths, start=1):
        if p[-2] <= v:
            return fail(f"second-to-last vertex of A_{i} is {p[-2]} <= v={v}",
                        invariant=3, path_index=i)
    owner: dict[int, int] = {}
    for i, p in enumerate(paths, start=1):
        for w in p:
            if v < w < s:
                if w in owner:
                    return fail(f"position {w} lies on A_{owner[w]} and A_{i}",
                                invariant=4, path_index=i)
                owner[w] = i
    for i, p in enumerate(paths, start=1):
        for a, b in path_edges(p):
            if ts.tree_index(a, b) is None:
                return fail(f"edge {a}-{b} of A_{i} is not in T_1..T_{ts.k}",
                            invariant=5, path_index=i)
    return OK


def replay_invariants(ts: TreeSystem, trace: list[TraceEvent]) -> Verdict:
    """Rebuild the path state step by step from ``trace`` and check every invariant.

    The processed vertex of each step is recomputed as the largest marked
    vertex; a mismatch with the trace is reported as invariant ``"order"``.
    """
    s, k = ts.s, ts.k
    paths = [[s, ts.left_of(s, i)] for i in range(1, k + 1)]
    finished = [False] * k
    active = {p[-1] for p in paths}

    for step, ev in enumerate(trace, start=1):
        v = max(active) if active else 0
        verdict = _check_state(ts, paths, finished, v)
        if not verdict:
            return _at_step(verdict, step)
        if ev.processed != v:
            return fail(f"trace processes {ev.processed}, largest active vertex is {v}",
                        invariant="order", step=step)
        ending = tuple(i for i in range(1, k + 1) if not finished[i - 1] and paths[i - 1][-1] == v)
        if ending != tuple(ev.ending_indices):
            return fail(f"trace lists paths {ev.ending_indices} ending at {v}, state has {ending}",
                        invariant="trace", step=step)
        for idx, old, new in ev.replacements:
            p = paths[idx - 1]
            if p[-1] != old:
                return fail(f"replacement on A_{idx} expects end {old}, found {p[-1]}",
                            invariant="trace", step=step, path_index=idx)
            p[-1] = new
            active.add(new)
        if ev.downshift:
            shifted = [None] + paths
            _downshift(shifted, list(ev.downshift))
            paths = shifted[1:]
        if ev.appended is not None:
            idx, new = ev.appended
            paths[idx - 1].append(new)
            active.add(new)
        if ev.finished_index is not None:
            finished[ev.finished_index - 1] = True
        active.discard(v)

    if active:
        return fail(f"positions {sorted(active)} still active after the last step",
                    invariant="order", step=len(trace) + 1)
    verdict = _check_state(ts, paths, finished, 0)
    return verdict if verdict else _at_step(verdict, len(trace) + 1)


def _at_step(verdict: Verdict, step: int) -> Verdict:
    return replace(verdict, step=step)
