"""Constructive Hamiltonicity for members of degree at most five.

Members whose radius-2 balls are all 2-connected fall back to the exact
search.  Every other member decomposes into a cyclic chain of segments
glued at hinge vertices (cut vertices of their own radius-2 balls):
post-and-clique segments (the H form), split-clique segments for degree
five (the G form), or the four 4-regular part shapes T1..T4.  The walk
recovers that chain segment by segment, yielding both a recognized form
and an explicit Hamilton cycle threaded through per-segment path templates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BudgetExceededError,
    GraphInputError,
    InternalContradictionError,
)
from .families import canonical_part_sequence
from .graph import Graph, is_hamiltonian_cycle
from .membership import (
    MembershipReport,
    balls2_all_biconnected,
    cut_vertex_profile,
    is_cut_vertex_of_own_ball2,
    require_member,
)
from .oracle import DEFAULT_BUDGET, hamiltonian_exact

VARIANT_H = "H"
VARIANT_G = "G"
VARIANT_F4 = "F4"
VARIANT_BICONNECTED = "balls2-biconnected"


@dataclass(frozen=True)
class Segment:
    kind: str              # "H", "G", or a part tag "T1".."T4"
    hinge_in: int
    hinge_out: int
    body: tuple[int, ...]  # internal vertices in hinge-to-hinge path order


@dataclass(frozen=True)
class CanonicalForm:
    variant: str
    k: int
    n: int                      # number of segments (0 for the ball case)
    tags: tuple[str, ...]       # canonical part tags (F4 variant only)
    segments: tuple[Segment, ...]
    hinge_cycle: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "variant": self.variant,
            "k": self.k,
            "n": self.n,
            "tags": list(self.tags),
            "hinge_cycle": list(self.hinge_cycle),
            "segments": [
                {"kind": s.kind, "hinge_in": s.hinge_in,
                 "hinge_out": s.hinge_out, "body": list(s.body)}
                for s in self.segments
            ],
        }


@dataclass(frozen=True)
class HamCertificate:
    cycle: tuple[int, ...]
    provenance: str             # "structural" | "oracle"
    form: CanonicalForm | None

    def to_json_dict(self) -> dict:
        return {
            "cycle": list(self.cycle),
            "provenance": self.provenance,
            "form": self.form.to_json_dict() if self.form else None,
        }


def _contradict(message: str):
    raise InternalContradictionError(message)


def _check_path(g: Graph, seq, what: str):
    for a, b in zip(seq, seq[1:]):
        if not g.has_edge(a, b):
            _contradict(f"{what}: expected edge {a}-{b} is missing")


def _require_clique(g: Graph, vertices, what: str):
    vs = sorted(vertices)
    for i, a in enumerate(vs):
        for b in vs[i + 1:]:
            if not g.has_edge(a, b):
                _contradict(f"{what}: {a} and {b} are not adjacent")


def _sole(values, what: str) -> int:
    values = sorted(values)
    if len(values) != 1:
        _contradict(f"{what}: expected exactly one vertex, got {values}")
    return values[0]


def _build_segment(g: Graph, k: int, v: int, comp: frozenset[int]) -> Segment:
    """Recognize the segment entered from hinge ``v`` through component ``comp``."""
    inside = sorted(g.adj[v] & comp)
    others = sorted(comp - g.adj[v])
    m = len(inside)

    if m in (1, k - 1):
        # Post-and-clique segment, traversed from either end.
        _require_clique(g, comp, "post segment component")
        if m == k - 1:
            post = _sole(others, "post segment far side")
            nxt = _sole(g.adj[post] - comp - {v}, "post segment exit")
            body = tuple(inside) + (post,)
        else:
            post = inside[0]
            exits = {_sole(g.adj[z] - comp - {v}, "clique exit") for z in others}
            nxt = _sole(exits, "clique exits disagree")
            body = (post,) + tuple(others)
        seg = Segment("H", v, nxt, body)
    elif k == 5 and m in (2, 3):
        _require_clique(g, comp, "split-clique component")
        exits = {_sole(g.adj[z] - comp - {v}, "split-clique exit") for z in others}
        nxt = _sole(exits, "split-clique exits disagree")
        seg = Segment("G", v, nxt, tuple(inside) + tuple(others))
    elif k == 4 and m == 2:
        seg = _build_part_segment(g, v, inside, others, comp)
    else:
        _contradict(f"hinge {v} has unsupported neighbor split {m}/{k - m}")
    _check_path(g, (seg.hinge_in,) + seg.body + (seg.hinge_out,),
                f"segment at hinge {v}")
    return seg


def _build_part_segment(g: Graph, v, inside, others, comp) -> Segment:
    w1, w2 = inside
    u1, u2 = others
    for w in (w1, w2):
        for x in comp:
            if x != w and not g.has_edge(w, x):
                _contradict(f"entry vertex {w} misses {x} in its component")
    if g.has_edge(u1, u2):
        out1 = _sole(g.adj[u1] - comp - {v}, "first far-side exit")
        out2 = _sole(g.adj[u2] - comp - {v}, "second far-side exit")
        if out1 == out2:
            return Segment("T1", v, out1, (w1, w2, u1, u2))
        x1, x2 = out1, out2
        if not g.has_edge(x1, x2):
            _contradict(f"distinct far-side exits {x1}, {x2} are not adjacent")
        mid1 = g.adj[x1] - {u1, x2}
        mid2 = g.adj[x2] - {u2, x1}
        if mid1 != mid2 or len(mid1) != 2:
            _contradict(f"bridge pair after {x1}, {x2} is malformed")
        y1, y2 = sorted(mid1)
        if not g.has_edge(y1, y2):
            _contradict(f"exit pair {y1}, {y2} is not adjacent")
        nxt = _sole({_sole(g.adj[y] - {x1, x2, y1, y2}, "long part exit")
                     for y in (y1, y2)}, "long part exits disagree")
        return Segment("T2", v, nxt, (w1, w2, u1, u2, x2, x1, y1, y2))
    ext1 = g.adj[u1] - comp
    ext2 = g.adj[u2] - comp
    if ext1 != ext2 or len(ext1) != 2 or v in ext1:
        _contradict(f"twin vertices {u1}, {u2} do not share two outside neighbors")
    x1, x2 = sorted(ext1)
    if g.has_edge(x1, x2):
        nxt = _sole({_sole(g.adj[x] - {u1, u2, x1, x2}, "short twin exit")
                     for x in (x1, x2)}, "short twin exits disagree")
        return Segment("T3", v, nxt, (w1, w2, u1, x1, u2, x2))
    far1 = g.adj[x1] - {u1, u2}
    far2 = g.adj[x2] - {u1, u2}
    if far1 != far2 or len(far1) != 2:
        _contradict(f"double twin pair after {x1}, {x2} is malformed")
    y1, y2 = sorted(far1)
    if not g.has_edge(y1, y2):
        _contradict(f"exit pair {y1}, {y2} is not adjacent")
    nxt = _sole({_sole(g.adj[y] - {x1, x2, y1, y2}, "double twin exit")
                 for y in (y1, y2)}, "double twin exits disagree")
    return Segment("T4", v, nxt, (w1, w2, u1, x1, u2, x2, y1, y2))


def decompose(g: Graph, report: MembershipReport | None = None) -> CanonicalForm:
    """Canonical form of a member with degree in 3..5.

    Returns the all-balls-2-connected marker when no radius-2 ball has a
    cut vertex; otherwise walks the hinge chain from the lowest-id hinge,
    entering first through the component holding that hinge's lowest-id
    neighbor.  Structure contradicting the classification raises
    InternalContradictionError.
    """
    if report is None:
        report = require_member(g, ks={3, 4, 5})
    elif report.k not in (3, 4, 5):
        raise GraphInputError(f"decompose supports degrees 3..5, got {report.k}")
    k = report.k
    ok, _ = balls2_all_biconnected(g)
    if ok:
        return CanonicalForm(VARIANT_BICONNECTED, k, 0, (), (), ())

    hinges = [v for v in range(g.n) if is_cut_vertex_of_own_ball2(g, v)]
    if not hinges:
        _contradict("a radius-2 ball has a cut vertex but no vertex cuts its own")
    start = hinges[0]
    profile = cut_vertex_profile(g, start, report)
    lowest_nbr = min(g.adj[start])
    comp = next(c for c in profile.components if lowest_nbr in c)

    segments: list[Segment] = []
    hinge_cycle = [start]
    visited = {start}
    current = start
    while True:
        seg = _build_segment(g, k, current, comp)
        if set(seg.body) & visited:
            _contradict(f"segment at {current} reuses visited vertices")
        segments.append(seg)
        visited.update(seg.body)
        nxt = seg.hinge_out
        if nxt == start:
            break
        if nxt in visited:
            _contradict(f"walk revisits {nxt} before closing")
        if len(segments) > g.n:
            _contradict("hinge walk failed to close")
        visited.add(nxt)
        hinge_cycle.append(nxt)
        profile = cut_vertex_profile(g, nxt, report)
        if profile is None:
            _contradict(f"expected hinge {nxt} does not cut its own ball")
        fresh = [c for c in profile.components if not (c & visited)]
        stale = [c for c in profile.components if c & visited]
        if len(fresh) != 1 or not all(c <= visited for c in stale):
            _contradict(f"components at hinge {nxt} straddle the visited set")
        comp = fresh[0]
        current = nxt

    if visited != set(range(g.n)):
        _contradict("segments do not cover the whole graph")

    kinds = {seg.kind for seg in segments}
    n = len(segments)
    if kinds == {"H"}:
        return CanonicalForm(VARIANT_H, k, n, (), tuple(segments),
                             tuple(hinge_cycle))
    if kinds == {"G"} and k == 5:
        return CanonicalForm(VARIANT_G, k, n, (), tuple(segments),
                             tuple(hinge_cycle))
    if k == 4 and kinds <= {"T1", "T2", "T3", "T4"}:
        tags = canonical_part_sequence([seg.kind for seg in segments])
        return CanonicalForm(VARIANT_F4, k, n, tags, tuple(segments),
                             tuple(hinge_cycle))
    _contradict(f"inconsistent segment kinds {sorted(kinds)} for degree {k}")


def hamilton_from_form(form: CanonicalForm, g: Graph) -> tuple[int, ...]:
    """Thread the Hamilton cycle through a recognized segment chain."""
    if form.variant == VARIANT_BICONNECTED or not form.segments:
        raise GraphInputError("form carries no segment chain to thread")
    cycle: list[int] = []
    for seg in form.segments:
        cycle.append(seg.hinge_in)
        cycle.extend(seg.body)
    if not is_hamiltonian_cycle(g, cycle):
        _contradict("threaded segment chain is not a Hamilton cycle")
    return tuple(cycle)


def hamilton_small_k(g: Graph, budget: int = DEFAULT_BUDGET,
                     report: MembershipReport | None = None) -> HamCertificate:
    """Hamilton certificate for any member with degree 2..5.

    Degree 2 members are cycles and are returned directly.  Otherwise the
    canonical form provides the cycle; the all-balls-2-connected case runs
    the exact search, whose failure to find a cycle within budget raises
    BudgetExceededError (and a proof of non-Hamiltonicity, which the
    structure theorems exclude, raises InternalContradictionError).
    """
    if report is None:
        report = require_member(g, ks={2, 3, 4, 5})
    if report.k == 2:
        return HamCertificate(_traverse_cycle(g), "structural", None)
    form = decompose(g, report)
    if form.variant != VARIANT_BICONNECTED:
        return HamCertificate(hamilton_from_form(form, g), "structural", form)
    result = hamiltonian_exact(g, budget=budget)
    if result.found:
        return HamCertificate(result.cycle, "oracle", form)
    if result.outcome == "not-hamiltonian":
        _contradict("exact search refuted Hamiltonicity of a member with "
                    "degree <= 5")
    raise BudgetExceededError(
        f"search budget {budget} exhausted after {result.nodes_explored} nodes")


def _traverse_cycle(g: Graph) -> tuple[int, ...]:
    cycle = [0, min(g.adj[0])]
    while True:
        nxt = [x for x in g.adj[cycle[-1]] if x != cycle[-2]]
        if len(nxt) != 1:
            raise GraphInputError("graph is not a single cycle")
        if nxt[0] == 0:
            return tuple(cycle)
        cycle.append(nxt[0])
