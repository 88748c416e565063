# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the brute-force codeword scans.

Vectors in Z4^n are packed 2 bits per coordinate into a single integer,
so a full scan of Z4^n is a plain counter over [0, 4**n).
"""

from libc.stdlib cimport free, malloc


def dual_scan(gens, int n):
    """All packed v in [0, 4**n) orthogonal to every packed generator."""
    cdef long long total = 1LL << (2 * n)
    cdef int k = len(gens)
    cdef long long v, g
    cdef int i, j, s, ok
    cdef int* gd
    cdef int* vd
    if n < 1 or n > 13:
        raise ValueError("scan kernel supports 1 <= n <= 13")
    gd = <int*> malloc((k if k else 1) * n * sizeof(int))
    vd = <int*> malloc(n * sizeof(int))
    if gd == NULL or vd == NULL:
        free(gd)
        free(vd)
        raise MemoryError()
    out = []
    try:
        for i in range(k):
            g = gens[i]
            for j in range(n):
                gd[i * n + j] = (g >> (2 * j)) & 3
        for v in range(total):
            for j in range(n):
                vd[j] = (v >> (2 * j)) & 3
            ok = 1
            for i in range(k):
                s = 0
                for j in range(n):
                    s += vd[j] * gd[i * n + j]
                if s & 3:
                    ok = 0
                    break
            if ok:
                out.append(v)
        return out
    finally:
        free(gd)
        free(vd)


def closure(gens, int n):
    """Additive closure (subgroup) of the packed generators inside Z4^n.

    Packed lanewise addition mod 4: s = (a ^ b) ^ (((a & b) & L) << 1)
    with L the mask of lane low bits.
    """
    cdef long long total = 1LL << (2 * n)
    cdef int k = len(gens)
    cdef long long a, b, s, L
    cdef int i, j
    cdef Py_ssize_t head = 0
    cdef long long* gs
    if n < 1 or n > 13:
        raise ValueError("closure kernel supports 1 <= n <= 13")
    gs = <long long*> malloc((k if k else 1) * sizeof(long long))
    if gs == NULL:
        raise MemoryError()
    visited = bytearray(total)
    cdef unsigned char[::1] vis = visited
    queue = [0]
    vis[0] = 1
    L = 0
    for j in range(n):
        L |= 1LL << (2 * j)
    try:
        for i in range(k):
            gs[i] = gens[i]
        while head < len(queue):
            a = queue[head]
            head += 1
            for i in range(k):
                b = gs[i]
                s = (a ^ b) ^ (((a & b) & L) << 1)
                if not vis[s]:
                    vis[s] = 1
                    queue.append(s)
        return queue
    finally:
        free(gs)
