"""Gadget reduction from cubic bipartite graphs into degree-6 members.

Every vertex x of the left side becomes a 4-clique U_x, every right vertex
y a 6-clique V_y, and every edge e a junction vertex w_e adjacent to all of
U_x and to a dedicated pair of V_y, the three pairs of V_y going to the
three edges at y.  The result is 6-regular with second neighborhoods
bounded by 6, and it is Hamiltonian exactly when the source is; the
certificate maps run in both directions via the crossed-junction rule.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import GraphInputError, InternalContradictionError, PreconditionError
from .graph import Graph, cut_vertices, is_connected, is_hamiltonian_cycle, is_k_regular


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _edge_label(e) -> str:
    return f"{e[0]}-{e[1]}"


@dataclass(frozen=True)
class GadgetMap:
    """Bookkeeping of one reduction: block layouts and junction wiring."""

    source: Graph
    x_side: tuple[int, ...]
    y_side: tuple[int, ...]
    u_blocks: dict
    v_blocks: dict
    w_vertex: dict
    v_pairs: dict
    result_n: int

    def incident_edges(self, y: int) -> list[tuple[int, int]]:
        return sorted(_edge_key(y, x) for x in self.source.adj[y])

    def rebuild_result(self) -> Graph:
        """Reconstruct the reduced graph from the stored wiring."""
        edges = []
        for block in list(self.u_blocks.values()) + list(self.v_blocks.values()):
            edges.extend((a, b) for i, a in enumerate(block) for b in block[i + 1:])
        for e, w in self.w_vertex.items():
            x = e[0] if e[0] in set(self.x_side) else e[1]
            y = e[1] if x == e[0] else e[0]
            edges.extend((w, u) for u in self.u_blocks[x])
            edges.extend((w, p) for p in self.v_pairs[(y, e)])
        return Graph.from_edges(self.result_n, edges)

    def to_json_dict(self) -> dict:
        return {
            "source": {"n": self.source.n,
                       "edges": [list(e) for e in self.source.edges()]},
            "x_side": list(self.x_side),
            "y_side": list(self.y_side),
            "u_blocks": {str(x): list(b) for x, b in self.u_blocks.items()},
            "v_blocks": {str(y): list(b) for y, b in self.v_blocks.items()},
            "w_vertex": {_edge_label(e): w for e, w in self.w_vertex.items()},
            "v_pairs": {
                f"{y}:{_edge_label(e)}": list(p)
                for (y, e), p in self.v_pairs.items()
            },
            "result_n": self.result_n,
        }

    @classmethod
    def from_json_dict(cls, payload: dict) -> "GadgetMap":
        try:
            source = Graph.from_edges(
                payload["source"]["n"],
                [tuple(e) for e in payload["source"]["edges"]])
            w_vertex = {}
            for label, w in payload["w_vertex"].items():
                a, b = label.split("-")
                w_vertex[_edge_key(int(a), int(b))] = w
            v_pairs = {}
            for label, pair in payload["v_pairs"].items():
                y, edge = label.split(":")
                a, b = edge.split("-")
                v_pairs[(int(y), _edge_key(int(a), int(b)))] = tuple(pair)
            return cls(
                source=source,
                x_side=tuple(payload["x_side"]),
                y_side=tuple(payload["y_side"]),
                u_blocks={int(x): tuple(b)
                          for x, b in payload["u_blocks"].items()},
                v_blocks={int(y): tuple(b)
                          for y, b in payload["v_blocks"].items()},
                w_vertex=w_vertex,
                v_pairs=v_pairs,
                result_n=payload["result_n"],
            )
        except (KeyError, TypeError, AttributeError) as exc:
            raise GraphInputError(f"malformed gadget map JSON: {exc}")


def bipartition(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """2-coloring by BFS; raises on odd cycles or empty graphs."""
    if g.n == 0:
        raise PreconditionError("empty graph has no bipartition")
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    raise PreconditionError("graph is not bipartite")
    sides = (tuple(v for v in range(g.n) if color[v] == 0),
             tuple(v for v in range(g.n) if color[v] == 1))
    return sides


def reduce_graph(g: Graph, parts=None) -> tuple[Graph, GadgetMap]:
    """Transform a 2-connected cubic bipartite graph into a degree-6 member."""
    if not is_connected(g):
        raise PreconditionError("reduction needs a connected input")
    if is_k_regular(g) != 3:
        raise PreconditionError("reduction needs a 3-regular input")
    if parts is None:
        parts = bipartition(g)
    xs, ys = (tuple(sorted(parts[0])), tuple(sorted(parts[1])))
    if sorted(xs + ys) != list(range(g.n)):
        raise GraphInputError("bipartition does not cover the vertex set")
    for side in (xs, ys):
        side_set = set(side)
        for u in side:
            if g.adj[u] & side_set:
                raise PreconditionError("given bipartition is not independent")
    if cut_vertices(g):
        raise PreconditionError("reduction needs a 2-connected input")

    pos = 0
    u_blocks = {}
    for x in xs:
        u_blocks[x] = tuple(range(pos, pos + 4))
        pos += 4
    v_blocks = {}
    for y in ys:
        v_blocks[y] = tuple(range(pos, pos + 6))
        pos += 6
    all_edges = g.edges()
    w_vertex = {}
    for e in all_edges:
        w_vertex[e] = pos
        pos += 1
    v_pairs = {}
    for y in ys:
        incident = sorted(_edge_key(y, x) for x in g.adj[y])
        for j, e in enumerate(incident):
            v_pairs[(y, e)] = v_blocks[y][2 * j:2 * j + 2]

    gmap = GadgetMap(source=g, x_side=xs, y_side=ys, u_blocks=u_blocks,
                     v_blocks=v_blocks, w_vertex=w_vertex, v_pairs=v_pairs,
                     result_n=pos)
    return gmap.rebuild_result(), gmap


def forward_cycle(c, gmap: GadgetMap) -> tuple[int, ...]:
    """Map a Hamilton cycle of the source onto one of the reduced graph.

    Each source edge x-y on the cycle contributes a fixed path segment
    covering U_x, the junction of that edge, all of V_y, and the junction
    of the third (non-cycle) edge at y; segments meet at the junctions of
    consecutive cycle edges.
    """
    g = gmap.source
    c = tuple(c)
    if not is_hamiltonian_cycle(g, c):
        raise GraphInputError("input is not a Hamilton cycle of the source")
    x_set = set(gmap.x_side)
    start = next(i for i, v in enumerate(c) if v in x_set)
    c = c[start:] + c[:start]
    out: list[int] = []
    n = len(c)
    for k in range(0, n, 2):
        x, y = c[k], c[k + 1]
        e = _edge_key(x, y)
        f = _edge_key(y, c[(k + 2) % n])
        b = next(ee for ee in gmap.incident_edges(y) if ee not in (e, f))
        pe = gmap.v_pairs[(y, e)]
        pf = gmap.v_pairs[(y, f)]
        pb = gmap.v_pairs[(y, b)]
        out.extend(gmap.u_blocks[x])
        out.append(gmap.w_vertex[e])
        out.extend((pe[0], pb[0], gmap.w_vertex[b], pb[1], pe[1], pf[0], pf[1]))
        out.append(gmap.w_vertex[f])
    result = tuple(out)
    if not is_hamiltonian_cycle(gmap.rebuild_result(), result):
        raise InternalContradictionError(
            "forward-mapped cycle failed validation")
    return result


def crossed(e, cprime, gmap: GadgetMap) -> bool:
    """Is the junction of edge ``e`` entered from its U block and left into
    its V block (or vice versa) by the cycle ``cprime``?"""
    e = _edge_key(*e)
    if e not in gmap.w_vertex:
        raise GraphInputError(f"{e} is not an edge of the source graph")
    cprime = tuple(cprime)
    w = gmap.w_vertex[e]
    try:
        i = cprime.index(w)
    except ValueError:
        raise GraphInputError(f"junction vertex {w} is not on the cycle")
    x = e[0] if e[0] in set(gmap.x_side) else e[1]
    y = e[1] if x == e[0] else e[0]
    u_block = set(gmap.u_blocks[x])
    v_block = set(gmap.v_blocks[y])
    around = {cprime[i - 1], cprime[(i + 1) % len(cprime)]}
    return (len(around & u_block) == 1) and (len(around & v_block) == 1)


def backward_cycle(cprime, gmap: GadgetMap) -> tuple[int, ...]:
    """Recover a source Hamilton cycle from one of the reduced graph.

    Collects the source edges whose junctions are crossed; those edges must
    form a connected spanning 2-regular subgraph, anything else contradicts
    the reduction argument.
    """
    g = gmap.source
    cprime = tuple(cprime)
    if not is_hamiltonian_cycle(gmap.rebuild_result(), cprime):
        raise GraphInputError("input is not a Hamilton cycle of the reduced graph")
    chosen = [e for e in gmap.w_vertex if crossed(e, cprime, gmap)]
    incident = [[] for _ in range(g.n)]
    for a, b in chosen:
        incident[a].append(b)
        incident[b].append(a)
    if any(len(nbrs) != 2 for nbrs in incident):
        raise InternalContradictionError(
            "crossed junctions do not induce a 2-regular subgraph")
    cycle = [0, min(incident[0])]
    while True:
        nxt = [x for x in incident[cycle[-1]] if x != cycle[-2]]
        if nxt[0] == 0:
            break
        cycle.append(nxt[0])
    if len(cycle) != g.n or not is_hamiltonian_cycle(g, cycle):
        raise InternalContradictionError(
            "crossed junctions do not induce a spanning cycle")
    return tuple(cycle)
