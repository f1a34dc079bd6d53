"""Recognition of k-regular graphs whose second neighborhoods stay within k.

A connected k-regular graph belongs to the class when no vertex has more
than k vertices at distance exactly two.  This module decides membership,
evaluates the four equivalent formulations of that bound, and extracts the
rigid structure around cut vertices of radius-2 balls that members exhibit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalContradictionError, NotMemberError, PreconditionError
from .graph import (
    Graph,
    connected_components,
    cut_vertices_within,
    distances_from,
    is_connected,
    is_k_regular,
    ring,
)

VERDICT_IN = "in"
VERDICT_OUT = "out"


@dataclass(frozen=True)
class MembershipReport:
    verdict: str
    reason: str
    k: int | None
    per_vertex_n2: tuple[int, ...]
    violating_vertex: int | None
    balls2_cut_vertex: int | None

    @property
    def is_member(self) -> bool:
        return self.verdict == VERDICT_IN

    def to_json_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "reason": self.reason,
            "k": self.k,
            "per_vertex_n2": list(self.per_vertex_n2),
            "violating_vertex": self.violating_vertex,
            "balls2_cut_vertex": self.balls2_cut_vertex,
        }


@dataclass(frozen=True)
class CutVertexProfile:
    """Structure of a member around a cut vertex of its own radius-2 ball.

    Removing ``v`` from that ball leaves exactly the two components, each
    with k vertices, and every neighbor of ``v`` is adjacent to all other
    vertices of its component.
    """

    v: int
    components: tuple[frozenset[int], frozenset[int]]
    neighbor_split: tuple[int, int]


def classify(g: Graph) -> MembershipReport:
    """Full membership report for ``g`` (never raises on out-of-class input)."""
    if g.n == 0:
        return MembershipReport(VERDICT_OUT, "empty graph", None, (), None, None)
    n2 = tuple(len(ring(g, u, 2)) for u in range(g.n))
    if not is_connected(g):
        return MembershipReport(VERDICT_OUT, "not connected", None, n2, None, None)
    k = is_k_regular(g)
    if k is None:
        return MembershipReport(VERDICT_OUT, "not regular", None, n2, None, None)
    for u in range(g.n):
        if n2[u] > k:
            return MembershipReport(
                VERDICT_OUT, "second neighborhood exceeds degree", k, n2, u, None)
    ok, witness = balls2_all_biconnected(g)
    cut_witness = None if ok else witness[1]
    return MembershipReport(VERDICT_IN, "ok", k, n2, None, cut_witness)


def require_member(g: Graph, ks=None) -> MembershipReport:
    """Classify and raise NotMemberError unless the verdict is in (and k in ks)."""
    report = classify(g)
    if not report.is_member:
        raise NotMemberError(f"graph is not a class member: {report.reason}")
    if ks is not None and report.k not in ks:
        raise NotMemberError(
            f"degree {report.k} outside the supported range {sorted(ks)}")
    return report


def membership_predicates(g: Graph, k: int) -> tuple[bool, bool, bool, bool]:
    """The four equivalent membership conditions, each evaluated directly.

    (1) every second neighborhood has at most k vertices;
    (2) 2k >= |M2(u)| - 1 for every u, where M2 is the radius-2 ball set;
    (3) deg(u) + deg(v) >= |M2(w)| - 1 for every induced path u-w-v;
    (4) |N(u) & N(v)| >= |M2(w) - (N(u) | N(v))| - 1 for every induced
        path u-w-v.

    Conditions 3 and 4 are vacuously true when no induced path exists.
    """
    if not is_connected(g):
        raise PreconditionError("predicates need a connected graph")
    if is_k_regular(g) != k:
        raise PreconditionError(f"graph is not {k}-regular")

    m2_sizes = []
    for u in range(g.n):
        dist = distances_from(g, u)
        m2_sizes.append(sum(1 for d in dist if d <= 2))

    p1 = all(len(ring(g, u, 2)) <= k for u in range(g.n))
    p2 = all(2 * k >= m2 - 1 for m2 in m2_sizes)

    p3 = True
    p4 = True
    for w in range(g.n):
        nbrs = sorted(g.adj[w])
        m2_members = None
        for i, u in enumerate(nbrs):
            for v in nbrs[i + 1:]:
                if v in g.adj[u]:
                    continue
                if g.degree(u) + g.degree(v) < m2_sizes[w] - 1:
                    p3 = False
                if m2_members is None:
                    dist = distances_from(g, w)
                    m2_members = {x for x in range(g.n) if dist[x] <= 2}
                common = len(g.adj[u] & g.adj[v])
                outside = len(m2_members - (g.adj[u] | g.adj[v]))
                if common < outside - 1:
                    p4 = False
    return p1, p2, p3, p4


def balls2_all_biconnected(g: Graph):
    """Is every radius-2 ball 2-connected?  Witness (center, cut vertex) if not."""
    if not is_connected(g):
        raise PreconditionError("ball survey needs a connected graph")
    for u in range(g.n):
        members = ball_members(g, u, 2)
        if len(members) < 3:
            return False, (u, None)
        cuts = cut_vertices_within(g, members)
        if cuts:
            return False, (u, min(cuts))
    return True, None


def ball_members(g: Graph, u: int, r: int) -> frozenset[int]:
    dist = distances_from(g, u)
    return frozenset(v for v in range(g.n) if dist[v] <= r)


def is_cut_vertex_of_own_ball2(g: Graph, v: int) -> bool:
    return v in cut_vertices_within(g, ball_members(g, v, 2))


def cut_vertex_profile(g: Graph, v: int,
                       report: MembershipReport | None = None):
    """Profile of ``v`` when it cuts some radius-2 ball; None otherwise.

    Verifies both views (cut vertex of any ball versus of its own ball) and
    every structural conclusion that holds for members; a mismatch on a
    verified member raises InternalContradictionError.
    """
    g.check_vertex(v)
    if report is None:
        report = require_member(g)
    elif not report.is_member:
        raise NotMemberError("profile requires a class member")
    k = report.k

    cuts_own = is_cut_vertex_of_own_ball2(g, v)
    cuts_some = any(
        v in cut_vertices_within(g, ball_members(g, u, 2)) for u in range(g.n))
    if cuts_own != cuts_some:
        raise InternalContradictionError(
            f"vertex {v} cuts a radius-2 ball but not its own")
    if not cuts_own:
        return None

    members = ball_members(g, v, 2)
    comps = connected_components(g, members - {v})
    if len(comps) != 2:
        raise InternalContradictionError(
            f"ball around {v} minus {v} has {len(comps)} components, expected 2")
    if sorted(len(c) for c in comps) != [k, k]:
        raise InternalContradictionError(
            f"components around {v} have sizes {sorted(len(c) for c in comps)},"
            f" expected [{k}, {k}]")
    for comp in comps:
        for w in g.adj[v]:
            if w in comp and not comp.issubset(g.adj[w] | {w}):
                raise InternalContradictionError(
                    f"neighbor {w} of {v} misses part of its component")
    a, b = comps
    split_a = len(g.adj[v] & a)
    split_b = len(g.adj[v] & b)
    if (split_b, sorted(b)) < (split_a, sorted(a)):
        a, b = b, a
        split_a, split_b = split_b, split_a
    return CutVertexProfile(v=v, components=(a, b),
                            neighbor_split=(split_a, split_b))


def min_edge_triangles(g: Graph) -> int:
    """Minimum, over all edges, of the number of triangles through the edge."""
    edges = g.edges()
    if not edges:
        raise PreconditionError("graph has no edges")
    return min(len(g.adj[u] & g.adj[v]) for u, v in edges)


def triangle_density_implies_membership(g: Graph) -> bool:
    """Does the per-edge triangle bound force membership (k-regular, k >= 9)?

    Every edge lying in at least k-4 triangles bounds second neighborhoods
    by 3k/(k-5), which is at most k from k = 9 on.
    """
    k = is_k_regular(g)
    if k is None:
        raise PreconditionError("triangle-density implication needs a regular graph")
    if k < 9:
        return False
    return min_edge_triangles(g) >= k - 4
