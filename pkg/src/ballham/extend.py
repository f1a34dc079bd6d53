"""Cycle growth in locally connected members: +1 or +2 vertices per step.

For a locally connected member of degree at least six, every
non-spanning cycle extends to a cycle one or two vertices longer that
keeps the original vertices.  The step search tries the constructive
reroute patterns from the underlying proof first, then exhaustive one- and
two-vertex insertions, and finally a complete bounded search for any
(+1/+2)-vertex supercycle, so that an extension failure really does
contradict the theorem.  Iterating the step reaches a Hamilton cycle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import (
    GraphInputError,
    InternalContradictionError,
    NotMemberError,
    PreconditionError,
)
from .graph import Graph, induced_subgraph, is_cycle, is_locally_connected
from .membership import MembershipReport, require_member
from .oracle import hamiltonian_exact

COMPLETION_BUDGET = 10**6


@dataclass(frozen=True)
class ExtensionStep:
    before: tuple[int, ...]
    after: tuple[int, ...]
    delta: int
    pattern: str
    attachment: tuple[int, int, int] | None

    def to_json_dict(self) -> dict:
        return {
            "before": list(self.before),
            "after": list(self.after),
            "delta": self.delta,
            "pattern": self.pattern,
            "attachment": list(self.attachment) if self.attachment else None,
        }


def find_triangle(g: Graph, u: int) -> tuple[int, int, int]:
    """A triangle through ``u``; exists whenever ``g`` is locally connected."""
    g.check_vertex(u)
    nbrs = sorted(g.adj[u])
    for i, a in enumerate(nbrs):
        for b in nbrs[i + 1:]:
            if b in g.adj[a]:
                return (u, a, b)
    raise PreconditionError(
        f"no triangle through vertex {u}; the graph is not locally connected")


def triangle_attachment(g: Graph, c, w: int) -> tuple[int, int]:
    """The guaranteed attachment pair (v, z) for a cycle vertex ``w``.

    Walks a path inside the neighborhood of ``w`` from the cycle successor
    of ``w`` toward an outside neighbor; ``z`` is the last cycle vertex on
    that path and ``v`` its successor, so v is outside the cycle, z on it,
    and both wz and vz are edges.
    """
    c = tuple(c)
    if not is_cycle(g, c):
        raise GraphInputError("attachment needs a valid cycle")
    if w not in c:
        raise PreconditionError(f"vertex {w} is not on the cycle")
    on_cycle = set(c)
    outside = sorted(g.adj[w] - on_cycle)
    if not outside:
        raise PreconditionError(f"vertex {w} has no neighbor outside the cycle")
    target = outside[0]
    succ = c[(c.index(w) + 1) % len(c)]
    path = _bfs_path_within(g, g.adj[w], succ, target)
    if path is None:
        raise PreconditionError(
            f"neighborhood of {w} is disconnected; graph is not locally connected")
    last_on = max(i for i, x in enumerate(path) if x in on_cycle)
    z = path[last_on]
    v = path[last_on + 1]
    return v, z


def _bfs_path_within(g: Graph, allowed, start: int, goal: int):
    allowed = set(allowed)
    parent = {start: None}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        if x == goal:
            path = [x]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return path[::-1]
        for y in sorted(g.adj[x]):
            if y in allowed and y not in parent:
                parent[y] = x
                queue.append(y)
    return None


def extend_cycle(g: Graph, c, allow_small_k: bool = False,
                 completion_budget: int = COMPLETION_BUDGET,
                 report: MembershipReport | None = None) -> ExtensionStep:
    """One extension step (+1 or +2 vertices, keeping the cycle's vertices)."""
    report = _check_hypotheses(g, report, allow_small_k)
    c = tuple(c)
    if not is_cycle(g, c):
        raise GraphInputError("input is not a valid cycle")
    if len(c) >= g.n:
        raise PreconditionError("cycle already spans the graph")
    return _extend_step(g, c, completion_budget)


def hamiltonize(g: Graph, allow_small_k: bool = False,
                completion_budget: int = COMPLETION_BUDGET):
    """Grow a Hamilton cycle from a triangle at vertex 0; returns (cycle, steps)."""
    report = _check_hypotheses(g, None, allow_small_k)
    cycle = find_triangle(g, 0)
    steps: list[ExtensionStep] = []
    while len(cycle) < g.n:
        step = _extend_step(g, cycle, completion_budget)
        steps.append(step)
        cycle = step.after
        if len(steps) > g.n - 3:
            raise InternalContradictionError("extension failed to terminate")
    return cycle, steps


def _check_hypotheses(g, report, allow_small_k):
    if report is None:
        report = require_member(g)
    if report.k < 6 and not allow_small_k:
        raise NotMemberError(
            f"degree {report.k} below 6; pass allow_small_k to override")
    if report.k < 3:
        raise PreconditionError("extension machinery needs degree >= 3")
    connected, witness = is_locally_connected(g)
    if not connected:
        raise PreconditionError(
            f"graph is not locally connected (witness vertex {witness})")
    return report


def _extend_step(g: Graph, c, completion_budget) -> ExtensionStep:
    for finder in (_try_patterns, _try_insert_one, _try_insert_two,
                   _try_completion_search):
        if finder is _try_completion_search:
            found = finder(g, c, completion_budget)
        else:
            found = finder(g, c)
        if found is not None:
            after, pattern, attachment = found
            step = ExtensionStep(
                before=c, after=after, delta=len(after) - len(c),
                pattern=pattern, attachment=attachment)
            _check_step(g, step)
            return step
    raise InternalContradictionError(
        f"no +1/+2 extension of a {len(c)}-cycle exists; "
        "the extension theorem is violated")


def _check_step(g, step):
    ok = (is_cycle(g, step.after)
          and set(step.before) < set(step.after)
          and step.delta in (1, 2))
    if not ok:
        raise InternalContradictionError("constructed extension step is invalid")


def _candidate(g, c, after):
    after = tuple(after)
    if len(set(after)) == len(after) and is_cycle(g, after):
        return after
    return None


def _try_patterns(g: Graph, c):
    """The three reroute patterns, over all attachments and both orientations."""
    n = len(c)
    for orient in (c, tuple(reversed(c))):
        on_cycle = set(orient)
        index = {x: i for i, x in enumerate(orient)}
        anchors = sorted(w for w in orient if g.adj[w] - on_cycle)
        for w1 in anchors:
            rot = orient[index[w1]:] + orient[:index[w1]]
            pos = {x: i for i, x in enumerate(rot)}
            succ1 = rot[1]
            for v in sorted(g.adj[w1] - on_cycle):
                # Arc flip: w1 v z (arc back to succ1) z+ (arc on to w1).
                for z in sorted(g.adj[v] & on_cycle):
                    jz = pos[z]
                    if jz < 2:
                        continue
                    if jz < n - 1 and not g.has_edge(succ1, rot[jz + 1]):
                        continue
                    after = _candidate(
                        g, c, (w1, v) + rot[jz:0:-1] + rot[jz + 1:])
                    if after:
                        return after, "arc-flip", (w1, v, z)
                # Relocate: pull x next to v, bridge its old gap.
                for x in sorted(g.adj[v] & g.adj[succ1] & on_cycle):
                    jx = pos[x]
                    if not 2 <= jx <= n - 2:
                        continue
                    if not g.has_edge(rot[jx - 1], rot[jx + 1]):
                        continue
                    after = _candidate(
                        g, c, (w1, v, x) + rot[1:jx] + rot[jx + 1:])
                    if after:
                        return after, "relocate", (w1, v, x)
                # Double bridge: v and a second outside vertex u straddle
                # the two gaps after w1.
                if n >= 4 and v in g.adj[rot[2]]:
                    for u in sorted((g.adj[succ1] & g.adj[rot[3]]) - on_cycle):
                        if u == v:
                            continue
                        after = _candidate(
                            g, c, (w1, v, rot[2], rot[1], u) + rot[3:])
                        if after:
                            return after, "double-bridge", (w1, v, u)
    return None


def _try_insert_one(g: Graph, c):
    n = len(c)
    on_cycle = set(c)
    for i in range(n):
        a, b = c[i], c[(i + 1) % n]
        shared = sorted((g.adj[a] & g.adj[b]) - on_cycle)
        if shared:
            x = shared[0]
            after = c[:i + 1] + (x,) + c[i + 1:]
            return tuple(after), "insert-one", (a, x, b)
    return None


def _try_insert_two(g: Graph, c):
    n = len(c)
    on_cycle = set(c)
    for i in range(n):
        a, b = c[i], c[(i + 1) % n]
        for x in sorted(g.adj[a] - on_cycle):
            for y in sorted(g.adj[b] - on_cycle):
                if y != x and y in g.adj[x]:
                    after = c[:i + 1] + (x, y) + c[i + 1:]
                    return tuple(after), "insert-two", (a, x, y)
    return None


def _try_completion_search(g: Graph, c, budget):
    """Complete fallback: any Hamilton cycle of the cycle plus 1 or 2 vertices."""
    on_cycle = set(c)
    outside = sorted(set(range(g.n)) - on_cycle)
    singles = [(x,) for x in outside]
    pairs = [(x, y) for i, x in enumerate(outside) for y in outside[i + 1:]]
    for extra in singles + pairs:
        sub, keys = induced_subgraph(g, on_cycle | set(extra))
        result = hamiltonian_exact(sub, budget=budget)
        if result.found:
            after = tuple(keys[i] for i in result.cycle)
            tag = "search-one" if len(extra) == 1 else "search-two"
            return after, tag, None
    return None
