"""Generators for every structured graph family used by this package.

Each family is built with a documented, deterministic id layout so tests
and certificates can address named vertex groups.  ``Family`` bundles the
graph with its layout and with the properties the construction is supposed
to have; ``validate_family`` checks those properties against the graph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import GraphInputError
from .graph import (
    Graph,
    complete_multipartite_graph,
    cut_vertices_within,
    diameter,
    is_claw_free,
    is_connected,
    is_k_regular,
    is_locally_connected,
    ring,
    vertex_connectivity_small,
)
from .membership import ball_members, balls2_all_biconnected, classify

PART_TAGS = ("T1", "T2", "T3", "T4")


@dataclass(frozen=True)
class Family:
    tag: str
    params: dict
    graph: Graph
    layout: dict
    claims: dict

    def to_json_dict(self) -> dict:
        return {
            "family": self.tag,
            "params": self.params,
            "layout": {name: list(ids) for name, ids in self.layout.items()},
        }


@dataclass(frozen=True)
class QuotientCertificate:
    """Block partition whose contracted graph certifies non-Hamiltonicity.

    The three channel blocks touch the rest of the graph only through two
    attachment vertices each (one wired into each terminal clique), so a
    spanning cycle would cross each channel boundary exactly twice and each
    terminal boundary three times; an odd crossing count is impossible.
    The checkable surrogate: the quotient is the complete bipartite graph
    on parts of sizes 2 and 3, which has no Hamilton cycle.
    """

    block_names: tuple[str, ...]
    blocks: dict
    quotient: Graph

    def to_json_dict(self) -> dict:
        return {
            "blocks": {name: sorted(self.blocks[name]) for name in self.block_names},
            "quotient_edges": self.quotient.edges(),
        }


# ---------------------------------------------------------------------------
# Clique-chain families (the claw-free Hamiltonian members whose radius-2
# balls all fail 2-connectedness).

def family_G(k: int, n: int) -> Family:
    """Chain of n k-cliques threaded through n degree-k hinge vertices.

    Layout: hinge i (1-based) is id i-1; clique i occupies
    ``n + (i-1)k .. n + ik - 1`` ascending.  Hinge i is adjacent to the
    first floor(k/2) vertices of clique i and the last ceil(k/2) vertices
    of clique i-1 (clique 0 meaning clique n).
    """
    if k < 3 or n < 2:
        raise GraphInputError("chain family needs k >= 3 and n >= 2")
    lo = k // 2
    hi = k - lo
    edges = []
    cliques = []
    for i in range(n):
        base = n + i * k
        ids = list(range(base, base + k))
        cliques.append(ids)
        edges.extend((a, b) for ai, a in enumerate(ids) for b in ids[ai + 1:])
    for i in range(n):
        hinge = i
        edges.extend((hinge, v) for v in cliques[i][:lo])
        edges.extend((hinge, v) for v in cliques[i - 1][-hi:])
    g = Graph.from_edges(n * (k + 1), edges)
    layout = {"hinges": tuple(range(n))}
    for i, ids in enumerate(cliques):
        layout[f"clique_{i + 1}"] = tuple(ids)
    return Family("G", {"k": k, "n": n}, g, layout, _chain_claims(k, n))


def family_H(k: int, n: int) -> Family:
    """Chain of n (k-1)-cliques, each sandwiched between two full-degree posts.

    Layout: posts u_1..u_n are ids 0..n-1, posts v_1..v_n are ids n..2n-1,
    clique i occupies ``2n + (i-1)(k-1) ..``.  Both u_i and v_i see all of
    clique i; u_i is adjacent to v_{i+1} (u_n to v_1).
    """
    if k < 3 or n < 2:
        raise GraphInputError("chain family needs k >= 3 and n >= 2")
    edges = []
    cliques = []
    for i in range(n):
        base = 2 * n + i * (k - 1)
        ids = list(range(base, base + k - 1))
        cliques.append(ids)
        edges.extend((a, b) for ai, a in enumerate(ids) for b in ids[ai + 1:])
        u_i = i
        v_i = n + i
        edges.extend((u_i, w) for w in ids)
        edges.extend((v_i, w) for w in ids)
    for i in range(n):
        edges.append((i, n + (i + 1) % n))
    g = Graph.from_edges(n * (k + 1), edges)
    layout = {
        "u_posts": tuple(range(n)),
        "v_posts": tuple(range(n, 2 * n)),
    }
    for i, ids in enumerate(cliques):
        layout[f"clique_{i + 1}"] = tuple(ids)
    return Family("H", {"k": k, "n": n}, g, layout, _chain_claims(k, n))


def _chain_claims(k: int, n: int) -> dict:
    return {
        "vertices": n * (k + 1),
        "regular": k,
        "member": k,
        "diameter": (3 * n) // 2,
        "connectivity": 2,
        "locally_connected": False,
        "claw_free": True,
        "no_ball2_biconnected": True,
    }


def gen_G(k: int, n: int) -> Graph:
    return family_G(k, n).graph


def gen_H(k: int, n: int) -> Graph:
    return family_H(k, n).graph


# ---------------------------------------------------------------------------
# The four 4-regular chain segments and their cyclic assemblies.

def _part_template(tag: str):
    """Edges and size of one chain part; port a is vertex 0, port b the last id."""
    if tag == "T1":
        size = 6
        edges = [(0, 1), (0, 2),
                 (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
                 (3, 5), (4, 5)]
    elif tag == "T2":
        size = 10
        edges = [(0, 1), (0, 2),
                 (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
                 (3, 5), (4, 6), (5, 6),
                 (5, 7), (5, 8), (6, 7), (6, 8), (7, 8),
                 (7, 9), (8, 9)]
    elif tag == "T3":
        size = 8
        edges = [(0, 1), (0, 2),
                 (1, 2), (1, 3), (1, 4), (2, 3), (2, 4),
                 (3, 5), (3, 6), (4, 5), (4, 6), (5, 6),
                 (5, 7), (6, 7)]
    elif tag == "T4":
        size = 10
        edges = [(0, 1), (0, 2),
                 (1, 2), (1, 3), (1, 4), (2, 3), (2, 4),
                 (3, 5), (3, 6), (4, 5), (4, 6),
                 (5, 7), (5, 8), (6, 7), (6, 8), (7, 8),
                 (7, 9), (8, 9)]
    else:
        raise GraphInputError(f"unknown part tag {tag!r}")
    return size, edges


def gen_T(tag: str) -> tuple[Graph, int, int]:
    """One bare chain part with its two ports (degree 2 until assembled)."""
    size, edges = _part_template(tag)
    return Graph.from_edges(size, edges), 0, size - 1


def family_F4(seq) -> Family:
    """Cyclic assembly of 4-regular chain parts, consecutive ports identified.

    Layout: hinge i, then part i's internal vertices, consecutively.
    """
    tags = tuple(seq)
    if len(tags) < 2:
        raise GraphInputError("assembly needs at least 2 parts")
    for tag in tags:
        if tag not in PART_TAGS:
            raise GraphInputError(f"unknown part tag {tag!r}")
    sizes = [_part_template(tag)[0] for tag in tags]
    hinges = []
    internal = []
    pos = 0
    for size in sizes:
        hinges.append(pos)
        internal.append(tuple(range(pos + 1, pos + size - 1)))
        pos += size - 1
    total = pos
    edges = []
    for i, tag in enumerate(tags):
        size, template = _part_template(tag)
        ids = {0: hinges[i], size - 1: hinges[(i + 1) % len(tags)]}
        for j in range(1, size - 1):
            ids[j] = internal[i][j - 1]
        edges.extend((ids[a], ids[b]) for a, b in template)
    g = Graph.from_edges(total, edges)
    layout = {"hinges": tuple(hinges), "tags": tags}
    for i, ids in enumerate(internal):
        layout[f"part_{i + 1}"] = ids
    n = len(tags)
    claims = {
        "vertices": total,
        "regular": 4,
        "member": 4,
        "diameter_range": ((3 * n) // 2, (5 * n) // 2),
        "locally_connected": False,
        "claw_free": not any(t in ("T3", "T4") for t in tags),
        "balls2_biconnected": False,
    }
    return Family("F4", {"seq": list(tags)}, g, layout, claims)


def gen_F4(seq) -> Graph:
    return family_F4(seq).graph


def canonical_part_sequence(seq) -> tuple[str, ...]:
    """Lexicographically minimal rotation of the sequence or its reversal."""
    tags = tuple(seq)
    n = len(tags)
    variants = []
    for base in (tags, tags[::-1]):
        variants.extend(base[i:] + base[:i] for i in range(n))
    return min(variants)


def distinct_part_sequences(n: int) -> list[tuple[str, ...]]:
    """All length-n part sequences up to rotation and reflection."""
    seen = set()
    out = []

    def rec(prefix):
        if len(prefix) == n:
            canon = canonical_part_sequence(prefix)
            if canon not in seen:
                seen.add(canon)
                out.append(canon)
            return
        for tag in PART_TAGS:
            rec(prefix + (tag,))

    rec(())
    return sorted(out)


# ---------------------------------------------------------------------------
# The non-Hamiltonian members (k >= 6).

def family_counterexample(k: int, k1: int, k2: int, k3: int) -> Family:
    """Two terminal k-cliques joined through three two-gate channel blocks.

    Channel i holds cliques U_i, V_i, V'_i, U'_i (sizes k-k_i, k_i, k_i,
    k-k_i) plus gates w_i, w'_i; V_i and V'_i are joined by an
    offset-aligned perfect matching.  Gate w_i is wired to k_i terminal-a
    vertices so that the terminal is partitioned among the three gates.
    """
    if k < 6:
        raise GraphInputError("counterexample family needs k >= 6")
    parts = (k1, k2, k3)
    if any(p < 2 for p in parts) or sum(parts) != k:
        raise GraphInputError(
            "channel sizes must each be >= 2 and sum to k")
    edges = []
    term_a = list(range(k))
    term_b = list(range(k, 2 * k))
    for ids in (term_a, term_b):
        edges.extend((a, b) for ai, a in enumerate(ids) for b in ids[ai + 1:])
    layout = {"terminal_a": tuple(term_a), "terminal_b": tuple(term_b)}
    blocks = {"terminal_a": frozenset(term_a), "terminal_b": frozenset(term_b)}
    pos = 2 * k
    offsets_a = [0, k1, k1 + k2]
    for i, ki in enumerate(parts, start=1):
        u = list(range(pos, pos + (k - ki))); pos += k - ki
        v = list(range(pos, pos + ki)); pos += ki
        vp = list(range(pos, pos + ki)); pos += ki
        up = list(range(pos, pos + (k - ki))); pos += k - ki
        w = pos; pos += 1
        wp = pos; pos += 1
        for ids in (u, v, vp, up):
            edges.extend((a, b) for ai, a in enumerate(ids) for b in ids[ai + 1:])
        edges.extend((x, w) for x in u)
        edges.extend((x, y) for x in u for y in v)
        edges.extend((x, wp) for x in up)
        edges.extend((x, y) for x in up for y in vp)
        edges.extend(zip(v, vp))
        start = offsets_a[i - 1]
        edges.extend((w, term_a[j]) for j in range(start, start + ki))
        edges.extend((wp, term_b[j]) for j in range(start, start + ki))
        layout[f"U_{i}"] = tuple(u)
        layout[f"V_{i}"] = tuple(v)
        layout[f"Vp_{i}"] = tuple(vp)
        layout[f"Up_{i}"] = tuple(up)
        layout[f"w_{i}"] = (w,)
        layout[f"wp_{i}"] = (wp,)
        blocks[f"channel_{i}"] = frozenset(u + v + vp + up + [w, wp])
    g = Graph.from_edges(pos, edges)
    claims = {
        "vertices": 8 * k + 6,
        "regular": k,
        "member": k,
        "quotient_certificate": True,
    }
    return Family("counterexample", {"k": k, "k1": k1, "k2": k2, "k3": k3},
                  g, layout, claims)


def _counterexample_certificate(fam: Family) -> QuotientCertificate:
    names = ("terminal_a", "terminal_b", "channel_1", "channel_2", "channel_3")
    blocks = {
        "terminal_a": frozenset(fam.layout["terminal_a"]),
        "terminal_b": frozenset(fam.layout["terminal_b"]),
    }
    for i in (1, 2, 3):
        members = set()
        for group in (f"U_{i}", f"V_{i}", f"Vp_{i}", f"Up_{i}", f"w_{i}", f"wp_{i}"):
            members.update(fam.layout[group])
        blocks[f"channel_{i}"] = frozenset(members)
    quotient = _quotient_graph(fam.graph, [blocks[name] for name in names])
    return QuotientCertificate(block_names=names, blocks=blocks, quotient=quotient)


def _quotient_graph(g: Graph, block_list) -> Graph:
    owner = {}
    for idx, block in enumerate(block_list):
        for v in block:
            owner[v] = idx
    edges = set()
    for u, v in g.edges():
        bu, bv = owner[u], owner[v]
        if bu != bv:
            edges.add((min(bu, bv), max(bu, bv)))
    return Graph.from_edges(len(block_list), sorted(edges))


def gen_counterexample(k: int, k1: int, k2: int, k3: int):
    fam = family_counterexample(k, k1, k2, k3)
    return fam.graph, _counterexample_certificate(fam)


def check_quotient_certificate(g: Graph, cert: QuotientCertificate,
                               budget: int = 10**5):
    """Verify the structural non-Hamiltonicity certificate.

    Returns (ok, failures).  Checks: the blocks partition the vertex set;
    every channel meets the rest of the graph in exactly two attachment
    vertices, one wired only into each terminal; the quotient is the
    complete bipartite graph on the terminals versus the channels; and the
    exact search proves that quotient non-Hamiltonian.
    """
    from .oracle import NOT_HAMILTONIAN, hamiltonian_exact

    failures = []
    names = cert.block_names
    blocks = [cert.blocks[name] for name in names]
    union = set()
    total = 0
    for b in blocks:
        union.update(b)
        total += len(b)
    if total != g.n or union != set(range(g.n)):
        failures.append("blocks do not partition the vertex set")
    owner = {}
    for name in names:
        for v in cert.blocks[name]:
            owner[v] = name
    terminals = {"terminal_a", "terminal_b"}
    for name in names:
        if name in terminals:
            continue
        block = cert.blocks[name]
        boundary = {}
        for v in block:
            outside = {owner[x] for x in g.adj[v] if x not in block}
            if outside:
                boundary[v] = outside
        if len(boundary) != 2:
            failures.append(f"{name} has {len(boundary)} attachment vertices")
            continue
        targets = sorted(frozenset(t) for t in boundary.values())
        if targets != [frozenset({"terminal_a"}), frozenset({"terminal_b"})]:
            failures.append(f"{name} attachments do not separate the terminals")
    expected = {(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)}
    if set(cert.quotient.edges()) != expected:
        failures.append("quotient is not the 2-by-3 complete bipartite graph")
    rebuilt = _quotient_graph(g, blocks)
    if rebuilt.adj != cert.quotient.adj:
        failures.append("quotient does not match the cross-block edges")
    result = hamiltonian_exact(cert.quotient, budget=budget)
    if result.outcome != NOT_HAMILTONIAN:
        failures.append(f"quotient search outcome {result.outcome}")
    return not failures, failures


# ---------------------------------------------------------------------------
# Locally connected members of high degree: ring of cliques minus colors.

def _round_robin_rounds(size: int):
    """Circle-method 1-factorization of the complete graph on ``size`` vertices.

    ``size`` must be even; returns size-1 rounds, each a perfect matching.
    """
    rounds = []
    m = size - 1
    for r in range(m):
        matching = [(m, r)]
        for i in range(1, size // 2):
            matching.append(((r + i) % m, (r - i) % m))
        rounds.append([(min(a, b), max(a, b)) for a, b in matching])
    return rounds


def family_D(n: int, p: int, t: int, allow_small_p: bool = False) -> Family:
    """Ring of 2n cliques of size 2p, with p-1-t matchings removed per clique.

    Consecutive blocks are completely joined; the removed matchings are the
    first p-1-t rounds of the circle-method 1-factorization, applied with
    the same local indexing in every block.  Result: (5p+t)-regular and
    locally connected.
    """
    if n < 2:
        raise GraphInputError("ring family needs n >= 2")
    if not 0 <= t <= 4:
        raise GraphInputError("t must be in 0..4")
    min_p = 2 if allow_small_p else 6
    if p < min_p:
        raise GraphInputError(f"p must be >= {min_p}")
    if p - 1 - t < 1:
        raise GraphInputError("need p - 1 - t >= 1")
    size = 2 * p
    blocks = [tuple(range(i * size, (i + 1) * size)) for i in range(2 * n)]
    removed_local = set()
    for rnd in _round_robin_rounds(size)[:p - 1 - t]:
        removed_local.update(rnd)
    edges = []
    for ids in blocks:
        for a in range(size):
            for b in range(a + 1, size):
                if (a, b) not in removed_local:
                    edges.append((ids[a], ids[b]))
    for i in range(2 * n):
        nxt = blocks[(i + 1) % (2 * n)]
        edges.extend((a, b) for a in blocks[i] for b in nxt)
    g = Graph.from_edges(2 * n * size, edges)
    layout = {f"block_{i + 1}": ids for i, ids in enumerate(blocks)}
    k = 5 * p + t
    # Exact second-neighborhood size: the removed in-block partners plus the
    # blocks at ring distance 2, which coincide when the ring has length 4.
    n2 = (p - 1 - t) + (4 * p if n >= 3 else 2 * p)
    claims = {
        "vertices": 4 * n * p,
        "regular": k,
        "member": k,
        "diameter": n,
        "locally_connected": True,
        "claw_free": False,
        "second_neighborhood_exact": n2,
    }
    return Family("D", {"n": n, "p": p, "t": t}, g, layout, claims)


def gen_D(n: int, p: int, t: int, allow_small_p: bool = False) -> Graph:
    return family_D(n, p, t, allow_small_p).graph


def family_Q(n: int, p: int) -> Family:
    """Ring of 3p blocks of period (2n, 2n-1, 2), matchings removed up front.

    Block sizes are 2n, 2n, 2, then (2n, 2n-1, 2) repeated; consecutive
    blocks are completely joined and a perfect matching is removed inside
    each of the first three blocks.  Result: 4n-regular with every radius-2
    ball 2-connected, neither locally connected nor claw-free.
    """
    if n < 2 or p < 2:
        raise GraphInputError("this family needs n >= 2 and p >= 2")
    sizes = [2 * n, 2 * n, 2]
    for _ in range(p - 1):
        sizes.extend([2 * n, 2 * n - 1, 2])
    blocks = []
    pos = 0
    for s in sizes:
        blocks.append(tuple(range(pos, pos + s)))
        pos += s
    edges = []
    for bi, ids in enumerate(blocks):
        skip = set()
        if bi < 3:
            skip = {(ids[j], ids[j + 1]) for j in range(0, len(ids) - 1, 2)}
        for ai, a in enumerate(ids):
            for b in ids[ai + 1:]:
                if (a, b) not in skip:
                    edges.append((a, b))
    for i in range(len(blocks)):
        nxt = blocks[(i + 1) % len(blocks)]
        edges.extend((a, b) for a in blocks[i] for b in nxt)
    g = Graph.from_edges(pos, edges)
    layout = {f"block_{i + 1}": ids for i, ids in enumerate(blocks)}
    claims = {
        "vertices": pos,
        "regular": 4 * n,
        "member": 4 * n,
        "diameter": (3 * p) // 2,
        "locally_connected": False,
        "claw_free": False,
        "balls2_biconnected": True,
    }
    return Family("Q", {"n": n, "p": p}, g, layout, claims)


def gen_Q(n: int, p: int) -> Graph:
    return family_Q(n, p).graph


# ---------------------------------------------------------------------------
# Dense bipartite/multipartite members that are not claw-free.

def family_bipartite_minus_matching(k: int) -> Family:
    """Complete bipartite graph on k+1 per side, minus a perfect matching."""
    if k < 2:
        raise GraphInputError("needs k >= 2")
    a = k + 1
    edges = [(i, a + j) for i in range(a) for j in range(a) if i != j]
    g = Graph.from_edges(2 * a, edges)
    layout = {"side_a": tuple(range(a)), "side_b": tuple(range(a, 2 * a))}
    claims = {
        "vertices": 2 * a,
        "regular": k,
        "member": k,
        "claw_free": False,
        "hamiltonian": True,
    }
    return Family("bipartite_minus_matching", {"k": k}, g, layout, claims)


def gen_bipartite_minus_matching(k: int) -> Graph:
    return family_bipartite_minus_matching(k).graph


def family_multipartite(d: int, r: int) -> Family:
    """Complete r-partite graph with equal part size d (member for k=(r-1)d)."""
    if d < 3 or r < 2:
        raise GraphInputError("needs part size >= 3 and >= 2 parts")
    g = complete_multipartite_graph([d] * r)
    layout = {f"part_{i + 1}": tuple(range(i * d, (i + 1) * d)) for i in range(r)}
    k = (r - 1) * d
    claims = {
        "vertices": r * d,
        "regular": k,
        "member": k,
        "claw_free": False,
        "hamiltonian": True,
    }
    return Family("multipartite", {"d": d, "r": r}, g, layout, claims)


def gen_multipartite(d: int, r: int) -> Graph:
    return family_multipartite(d, r).graph


def family_kk_rewire(k: int, t: int, seed: int = 0) -> Family:
    """Complete bipartite k-per-side graph with 2t matching edges rewired.

    Removes a seeded matching x_1y_1..x_{2t}y_{2t} and adds the within-side
    edges x_1x_2, y_1y_2, ..., x_{2t-1}x_{2t}, y_{2t-1}y_{2t}.
    """
    if k < 4:
        raise GraphInputError("needs k >= 4")
    if not 1 <= t < k / 2:
        raise GraphInputError("needs 1 <= t < k/2")
    rng = random.Random(seed)
    xs = rng.sample(range(k), 2 * t)
    ys = rng.sample(range(k, 2 * k), 2 * t)
    removed = set(zip(xs, ys))
    edges = [(i, k + j) for i in range(k) for j in range(k)
             if (i, k + j) not in removed]
    for j in range(0, 2 * t, 2):
        edges.append((min(xs[j], xs[j + 1]), max(xs[j], xs[j + 1])))
        edges.append((min(ys[j], ys[j + 1]), max(ys[j], ys[j + 1])))
    g = Graph.from_edges(2 * k, edges)
    layout = {
        "side_a": tuple(range(k)),
        "side_b": tuple(range(k, 2 * k)),
        "rewired_a": tuple(xs),
        "rewired_b": tuple(ys),
    }
    claims = {
        "vertices": 2 * k,
        "regular": k,
        "member": k,
        "claw_free": False,
        "balls2_biconnected": True,
        "hamiltonian": True,
    }
    return Family("kk_rewire", {"k": k, "t": t, "seed": seed}, g, layout, claims)


def gen_kk_rewire(k: int, t: int, seed: int = 0) -> Graph:
    return family_kk_rewire(k, t, seed).graph


# ---------------------------------------------------------------------------
# Random regular sampling (pairing model with rejection).

def random_regular(k: int, n: int, seed: int = 0, max_tries: int = 5000) -> Graph:
    """Seeded simple k-regular graph on n vertices via stub pairing."""
    if n <= k or k < 0:
        raise GraphInputError("needs n > k >= 0")
    if (n * k) % 2:
        raise GraphInputError("n * k must be even")
    rng = random.Random(seed)
    for _ in range(max_tries):
        stubs = [v for v in range(n) for _ in range(k)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if ok:
            return Graph.from_edges(n, sorted(edges))
    raise GraphInputError(
        f"could not realize a simple {k}-regular graph on {n} vertices")


def family_random_regular(k: int, n: int, seed: int = 0) -> Family:
    g = random_regular(k, n, seed)
    return Family("random_regular", {"k": k, "n": n, "seed": seed}, g,
                  {"vertices": tuple(range(n))}, {"regular": k})


# ---------------------------------------------------------------------------
# Claim validation.

@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    failures: tuple[str, ...]
    results: dict

    def to_json_dict(self) -> dict:
        return {"ok": self.ok, "failures": list(self.failures),
                "results": self.results}


def validate_family(g: Graph, claims: dict, budget: int = 10**6) -> ValidationReport:
    """Check each claimed property of ``g``; unknown claim keys fail loudly."""
    from .oracle import hamiltonian_exact

    results = {}
    failures = []

    def record(name, expected, actual):
        ok = expected == actual
        results[name] = {"expected": expected, "actual": actual, "ok": ok}
        if not ok:
            failures.append(f"{name}: expected {expected!r}, got {actual!r}")

    for name, expected in claims.items():
        if name == "vertices":
            record(name, expected, g.n)
        elif name == "regular":
            record(name, expected, is_k_regular(g))
        elif name == "member":
            report = classify(g)
            record(name, expected, report.k if report.is_member else report.reason)
        elif name == "diameter":
            record(name, expected, diameter(g) if is_connected(g) else None)
        elif name == "diameter_range":
            lo, hi = expected
            actual = diameter(g) if is_connected(g) else None
            ok = actual is not None and lo <= actual <= hi
            results[name] = {"expected": list(expected), "actual": actual, "ok": ok}
            if not ok:
                failures.append(f"{name}: {actual!r} outside [{lo}, {hi}]")
        elif name == "locally_connected":
            record(name, expected, is_locally_connected(g)[0])
        elif name == "claw_free":
            record(name, expected, is_claw_free(g)[0])
        elif name == "balls2_biconnected":
            record(name, expected, balls2_all_biconnected(g)[0])
        elif name == "no_ball2_biconnected":
            bad = [u for u in range(g.n)
                   if not cut_vertices_within(g, ball_members(g, u, 2))]
            record(name, expected, not bad)
        elif name == "second_neighborhood_exact":
            sizes = sorted({len(ring(g, u, 2)) for u in range(g.n)})
            record(name, [expected], sizes)
        elif name == "connectivity":
            record(name, expected, vertex_connectivity_small(g, cap=expected + 1))
        elif name == "hamiltonian":
            record(name, expected, hamiltonian_exact(g, budget=budget).found)
        elif name == "quotient_certificate":
            continue  # checked separately with the certificate object
        else:
            failures.append(f"unknown claim {name!r}")
    return ValidationReport(ok=not failures, failures=tuple(failures),
                            results=results)


def validate_built_family(fam: Family, budget: int = 10**6) -> ValidationReport:
    """Validate a family's claims, including its certificate when it has one."""
    report = validate_family(fam.graph, fam.claims, budget=budget)
    if not fam.claims.get("quotient_certificate"):
        return report
    cert = _counterexample_certificate(fam)
    ok, failures = check_quotient_certificate(fam.graph, cert)
    results = dict(report.results)
    results["quotient_certificate"] = {
        "expected": True, "actual": ok, "ok": ok, "failures": failures}
    all_failures = report.failures + tuple(failures)
    return ValidationReport(ok=report.ok and ok, failures=all_failures,
                            results=results)


# ---------------------------------------------------------------------------
# CLI dispatch.

FAMILY_BUILDERS = {
    "G": (family_G, ("k", "n")),
    "H": (family_H, ("k", "n")),
    "F4": (family_F4, None),
    "counterexample": (family_counterexample, ("k", "k1", "k2", "k3")),
    "D": (family_D, ("n", "p", "t")),
    "Q": (family_Q, ("n", "p")),
    "bipartite_minus_matching": (family_bipartite_minus_matching, ("k",)),
    "multipartite": (family_multipartite, ("d", "r")),
    "kk_rewire": (family_kk_rewire, ("k", "t")),
    "random_regular": (family_random_regular, ("k", "n")),
}

_SEEDED = {"kk_rewire", "random_regular"}


def build_family(tag: str, args, seed: int = 0) -> Family:
    """Build a family from CLI-style string arguments."""
    if tag not in FAMILY_BUILDERS:
        known = ", ".join(sorted(FAMILY_BUILDERS))
        raise GraphInputError(f"unknown family {tag!r} (known: {known})")
    builder, names = FAMILY_BUILDERS[tag]
    if names is None:  # F4 takes the part tags themselves
        return builder([a.upper() for a in args])
    if len(args) != len(names):
        raise GraphInputError(
            f"family {tag} expects {len(names)} parameters {names}, "
            f"got {len(args)}")
    try:
        values = [int(a) for a in args]
    except ValueError as exc:
        raise GraphInputError(f"family parameters must be integers: {exc}")
    if tag in _SEEDED:
        return builder(*values, seed=seed)
    return builder(*values)
