"""Pure-Python Hamilton-cycle search kernel.

Twin of the compiled core in ``_core_cy.pyx``: the two must stay
behaviorally identical, including candidate ordering and node accounting,
so results and explored-node counts agree between backends.

Search: depth-first path extension anchored at vertex 0, neighbor
candidates ordered by (unvisited-degree, id).  Pruning per expanded node:
every unvisited vertex must retain at least two potential cycle edges
(into unvisited vertices, the path head, or vertex 0), some unvisited
vertex must stay adjacent to 0, and the unvisited region must be reachable
from the head.  Symmetry is halved by requiring second vertex < last
vertex at closure.  A node is counted whenever a vertex is pushed onto the
path; the budget caps that count.
"""

FOUND = 0
NOT_HAMILTONIAN = 1
BUDGET_EXCEEDED = 2


def hamilton_search(n, adj, budget):
    """Exact search on adjacency lists ``adj`` (ascending, symmetric).

    Returns ``(status, cycle_or_None, nodes_explored)``.
    """
    if n < 3:
        return NOT_HAMILTONIAN, None, 0
    for u in range(n):
        if len(adj[u]) < 2:
            return NOT_HAMILTONIAN, None, 0
    adjset = [frozenset(a) for a in adj]
    on_path = bytearray(n)
    path = [0]
    on_path[0] = 1
    nodes = 1

    def viable_candidates():
        head = path[-1]
        remaining = n - len(path)
        closure = False
        for w in range(n):
            if on_path[w]:
                continue
            avail = 0
            for x in adj[w]:
                if not on_path[x] or x == head or x == 0:
                    avail += 1
            if avail < 2:
                return None
            if 0 in adjset[w]:
                closure = True
        if not closure:
            return None
        seen = bytearray(n)
        seen[head] = 1
        stack = [head]
        reached = 0
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y] and not on_path[y]:
                    seen[y] = 1
                    reached += 1
                    stack.append(y)
        if reached != remaining:
            return None
        cands = [v for v in adj[head] if not on_path[v]]
        cands.sort(key=lambda v: (sum(1 for x in adj[v] if not on_path[x]), v))
        return cands

    first = viable_candidates()
    frames = [[first or [], 0]]
    while frames:
        frame = frames[-1]
        clist, idx = frame
        if idx >= len(clist):
            frames.pop()
            v = path.pop()
            on_path[v] = 0
            continue
        frame[1] = idx + 1
        v = clist[idx]
        if nodes >= budget:
            return BUDGET_EXCEEDED, None, nodes
        nodes += 1
        path.append(v)
        on_path[v] = 1
        if len(path) == n:
            if 0 in adjset[v] and path[1] < v:
                return FOUND, list(path), nodes
            nxt = []
        else:
            nxt = viable_candidates() or []
        frames.append([nxt, 0])
    return NOT_HAMILTONIAN, None, nodes
