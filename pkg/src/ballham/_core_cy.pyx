# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled Hamilton-cycle search kernel.

Behavioral twin of ``_core_py.hamilton_search``: identical pruning,
candidate ordering, and node accounting, so both backends return the same
outcome, cycle, and explored-node count on every input.
"""

import array

FOUND = 0
NOT_HAMILTONIAN = 1
BUDGET_EXCEEDED = 2


def _zeros(typecode, count):
    item = array.array(typecode).itemsize
    return array.array(typecode, bytes(item * count))


cdef int _candidates(int n, int[:] start, int[:] flat, signed char[:] mat,
                     signed char[:] on_path, int head, int n_on_path,
                     int[:] seen, int stamp, int[:] dstack,
                     int[:] cand, int offset, int[:] key) nogil:
    """Prune the state after a push; fill the candidate row; -1 when dead."""
    cdef int w, x, y, i, j, avail, closure, remaining, reached, top, cnt, v, kv
    remaining = n - n_on_path
    closure = 0
    for w in range(n):
        if on_path[w]:
            continue
        avail = 0
        for i in range(start[w], start[w + 1]):
            x = flat[i]
            if (not on_path[x]) or x == head or x == 0:
                avail += 1
        if avail < 2:
            return -1
        if mat[w * n]:
            closure = 1
    if not closure:
        return -1
    seen[head] = stamp
    dstack[0] = head
    top = 1
    reached = 0
    while top:
        top -= 1
        x = dstack[top]
        for i in range(start[x], start[x + 1]):
            y = flat[i]
            if seen[y] != stamp and not on_path[y]:
                seen[y] = stamp
                reached += 1
                dstack[top] = y
                top += 1
    if reached != remaining:
        return -1
    cnt = 0
    for i in range(start[head], start[head + 1]):
        v = flat[i]
        if on_path[v]:
            continue
        kv = 0
        for j in range(start[v], start[v + 1]):
            if not on_path[flat[j]]:
                kv += 1
        j = cnt
        while j > 0 and (key[j - 1] > kv or (key[j - 1] == kv and cand[offset + j - 1] > v)):
            key[j] = key[j - 1]
            cand[offset + j] = cand[offset + j - 1]
            j -= 1
        key[j] = kv
        cand[offset + j] = v
        cnt += 1
    return cnt


def hamilton_search(int n, adj, long long budget):
    """Exact search on adjacency lists ``adj`` (ascending, symmetric).

    Returns ``(status, cycle_or_None, nodes_explored)``.
    """
    if n < 3:
        return NOT_HAMILTONIAN, None, 0
    cdef int u, x
    cdef int total = 0
    for u in range(n):
        if len(adj[u]) < 2:
            return NOT_HAMILTONIAN, None, 0
        total += len(adj[u])

    start_a = _zeros('i', n + 1)
    flat_a = _zeros('i', total)
    mat_a = _zeros('b', n * n)
    cdef int[:] start = start_a
    cdef int[:] flat = flat_a
    cdef signed char[:] mat = mat_a
    cdef int pos = 0
    for u in range(n):
        start[u] = pos
        for x in adj[u]:
            flat[pos] = x
            mat[u * n + x] = 1
            pos += 1
    start[n] = pos

    path_a = _zeros('i', n)
    on_a = _zeros('b', n)
    cand_a = _zeros('i', n * n)
    clen_a = _zeros('i', n)
    cptr_a = _zeros('i', n)
    seen_a = _zeros('i', n)
    dstack_a = _zeros('i', n)
    key_a = _zeros('i', n)
    cdef int[:] path = path_a
    cdef signed char[:] on_path = on_a
    cdef int[:] cand = cand_a
    cdef int[:] clen = clen_a
    cdef int[:] cptr = cptr_a
    cdef int[:] seen = seen_a
    cdef int[:] dstack = dstack_a
    cdef int[:] key = key_a

    cdef long long nodes = 1
    cdef int stamp = 1
    cdef int frame = 0
    cdef int v, c, new_len
    path[0] = 0
    on_path[0] = 1
    c = _candidates(n, start, flat, mat, on_path, 0, 1, seen, stamp,
                    dstack, cand, 0, key)
    stamp += 1
    clen[0] = c if c > 0 else 0
    cptr[0] = 0

    while frame >= 0:
        if cptr[frame] >= clen[frame]:
            on_path[path[frame]] = 0
            frame -= 1
            continue
        v = cand[frame * n + cptr[frame]]
        cptr[frame] += 1
        if nodes >= budget:
            return BUDGET_EXCEEDED, None, nodes
        nodes += 1
        frame += 1
        path[frame] = v
        on_path[v] = 1
        new_len = frame + 1
        if new_len == n:
            if mat[v * n] and path[1] < v:
                return FOUND, [path[u] for u in range(n)], nodes
            clen[frame] = 0
        else:
            c = _candidates(n, start, flat, mat, on_path, v, new_len, seen,
                            stamp, dstack, cand, frame * n, key)
            stamp += 1
            clen[frame] = c if c > 0 else 0
        cptr[frame] = 0
    return NOT_HAMILTONIAN, None, nodes
