# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; same contracts as ``_pykernels``."""

from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport uint64_t


cdef object _words_to_int(uint64_t *words, int nwords):
    cdef int w
    value = 0
    for w in range(nwords - 1, -1, -1):
        value = (value << 64) | <object>words[w]
    return value


def degree_subgraphs(int n, edges, targets, include_mask=0, exclude_mask=0, int limit=0):
    cdef int m = len(edges)
    cdef int nwords = (m + 63) // 64 if m > 0 else 1
    cdef int *us = <int *>malloc((m + 1) * sizeof(int))
    cdef int *vs = <int *>malloc((m + 1) * sizeof(int))
    cdef int *tgt = <int *>malloc((n + 1) * sizeof(int))
    cdef int *deg = <int *>calloc(n + 1, sizeof(int))
    cdef int *rem = <int *>calloc(n + 1, sizeof(int))
    cdef char *phase = <char *>calloc(m + 1, sizeof(char))
    cdef char *forced_in = <char *>calloc(m + 1, sizeof(char))
    cdef char *forced_out = <char *>calloc(m + 1, sizeof(char))
    cdef uint64_t *chosen = <uint64_t *>calloc(nwords, sizeof(uint64_t))
    cdef int i, u, v, k
    cdef uint64_t bit
    out = []
    try:
        for i in range(m):
            u, v = edges[i]
            us[i] = u
            vs[i] = v
            rem[u] += 1
            rem[v] += 1
            forced_in[i] = 1 if (include_mask >> i) & 1 else 0
            forced_out[i] = 1 if (exclude_mask >> i) & 1 else 0
        for k in range(n):
            tgt[k] = targets[k]
            if rem[k] < tgt[k]:
                return out
        i = 0
        phase[0] = 0
        while i >= 0:
            if i == m:
                out.append(_words_to_int(chosen, nwords))
                if limit > 0 and len(out) >= limit:
                    break
                i -= 1
                continue
            u = us[i]
            v = vs[i]
            bit = (<uint64_t>1) << (i & 63)
            if phase[i] == 0:
                rem[u] -= 1
                rem[v] -= 1
                phase[i] = 1
                if not forced_out[i] and deg[u] < tgt[u] and deg[v] < tgt[v]:
                    deg[u] += 1
                    deg[v] += 1
                    chosen[i >> 6] |= bit
                    phase[i + 1] = 0
                    i += 1
                    continue
            if phase[i] == 1:
                if chosen[i >> 6] & bit:
                    chosen[i >> 6] &= ~bit
                    deg[u] -= 1
                    deg[v] -= 1
                phase[i] = 2
                if (not forced_in[i] and deg[u] + rem[u] >= tgt[u]
                        and deg[v] + rem[v] >= tgt[v]):
                    phase[i + 1] = 0
                    i += 1
                    continue
            rem[u] += 1
            rem[v] += 1
            i -= 1
        return out
    finally:
        free(us)
        free(vs)
        free(tgt)
        free(deg)
        free(rem)
        free(phase)
        free(forced_in)
        free(forced_out)
        free(chosen)


def three_edge_coloring(int n, edges, order, int pinned=0):
    cdef int m = len(edges)
    cdef int *eu = <int *>malloc((m + 1) * sizeof(int))
    cdef int *ev = <int *>malloc((m + 1) * sizeof(int))
    cdef int *ordr = <int *>malloc((m + 1) * sizeof(int))
    cdef int *used = <int *>calloc(n + 1, sizeof(int))
    cdef int *deg = <int *>calloc(n + 1, sizeof(int))
    cdef int *colour = <int *>calloc(m + 1, sizeof(int))
    cdef int *tried = <int *>calloc(m + 1, sizeof(int))
    cdef int k, e, u, v, c, busy
    try:
        for k in range(m):
            u, v = edges[k]
            eu[k] = u
            ev[k] = v
            ordr[k] = order[k]
            deg[u] += 1
            deg[v] += 1
            if deg[u] > 3 or deg[v] > 3:
                return None
        k = 0
        while 0 <= k < m:
            e = ordr[k]
            u = eu[e]
            v = ev[e]
            if colour[e]:
                used[u] &= ~(1 << colour[e])
                used[v] &= ~(1 << colour[e])
                colour[e] = 0
            c = tried[k] + 1
            if k < pinned:
                c = k + 1 if tried[k] == 0 else 4
            busy = used[u] | used[v]
            while c <= 3 and (busy >> c) & 1:
                c += 1
            if c > 3:
                tried[k] = 0
                k -= 1
                continue
            tried[k] = c
            colour[e] = c
            used[u] |= 1 << c
            used[v] |= 1 << c
            k += 1
        if k < 0:
            return None
        return [colour[k] for k in range(m)]
    finally:
        free(eu)
        free(ev)
        free(ordr)
        free(used)
        free(deg)
        free(colour)
        free(tried)
