# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled bit-parallel kernel (fixed-width uint64 rows).

Same surface and semantics as ``_pykernels.BitCore``.
"""

from libc.stdint cimport uint64_t, uint8_t
from libc.stdlib cimport calloc, free
from libc.string cimport memcpy

cdef extern from *:
    """
    static inline int cr_popcount(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int cr_ctz(unsigned long long x) { return __builtin_ctzll(x); }
    """
    int cr_popcount(unsigned long long x) nogil
    int cr_ctz(unsigned long long x) nogil

cdef enum:
    MAXW = 8
    MAXN = 512
    INF = 1 << 30

KIND_K = 0
KIND_J = 1
KIND_C = 2
KIND_W = 3
KIND_KB = 4

MAX_N = MAXN
MAX_COLORS = 8


cdef struct Ctx:
    uint64_t* rows      # rows of the active colour, row v at rows + v * W
    int W
    int n
    int* dist


cdef inline int popc(const uint64_t* x, int W) noexcept nogil:
    cdef int i, s = 0
    for i in range(W):
        s += cr_popcount(x[i])
    return s


cdef inline bint testbit(const uint64_t* x, int v) noexcept nogil:
    return (x[v >> 6] >> (v & 63)) & 1


cdef inline uint64_t* rowof(Ctx* g, int v) noexcept nogil:
    return g.rows + v * g.W


cdef bint clique_rec(Ctx* g, const uint64_t* P, int s) noexcept nogil:
    cdef uint64_t Q[MAXW]
    cdef uint64_t P2[MAXW]
    cdef int W = g.W, i, wi, v
    cdef uint64_t* nv
    if s <= 0:
        return True
    if popc(P, W) < s:
        return False
    if s == 1:
        return True
    memcpy(Q, P, W * sizeof(uint64_t))
    for wi in range(W):
        while Q[wi]:
            v = wi * 64 + cr_ctz(Q[wi])
            Q[wi] &= Q[wi] - 1
            if popc(Q, W) < s - 1:
                return False
            nv = rowof(g, v)
            for i in range(W):
                P2[i] = Q[i] & nv[i]
            if clique_rec(g, P2, s - 1):
                return True
    return False


cdef bint j_rec(Ctx* g, const uint64_t* P, const uint64_t* C, int s) noexcept nogil:
    cdef uint64_t Q[MAXW]
    cdef uint64_t P2[MAXW]
    cdef uint64_t C2[MAXW]
    cdef int W = g.W, i, wi, v
    cdef uint64_t* nv
    if s == 0:
        return popc(C, W) >= 2
    if popc(C, W) < s + 2 or popc(P, W) < s:
        return False
    memcpy(Q, P, W * sizeof(uint64_t))
    for wi in range(W):
        while Q[wi]:
            v = wi * 64 + cr_ctz(Q[wi])
            Q[wi] &= Q[wi] - 1
            nv = rowof(g, v)
            for i in range(W):
                C2[i] = C[i] & nv[i]
            if popc(C2, W) < s + 1:
                continue
            for i in range(W):
                P2[i] = Q[i] & nv[i]
            if j_rec(g, P2, C2, s - 1):
                return True
    return False


cdef void dist_to(Ctx* g, const uint64_t* A, int target) noexcept nogil:
    cdef uint64_t frontier[MAXW]
    cdef uint64_t seen[MAXW]
    cdef uint64_t nxt[MAXW]
    cdef int W = g.W, i, wi, w, d = 0
    cdef bint more
    cdef uint64_t x
    cdef uint64_t* nw
    for i in range(g.n):
        g.dist[i] = INF
    for i in range(W):
        frontier[i] = 0
    frontier[target >> 6] = (<uint64_t>1) << (target & 63)
    memcpy(seen, frontier, W * sizeof(uint64_t))
    more = True
    while more:
        for i in range(W):
            nxt[i] = 0
        for wi in range(W):
            x = frontier[wi]
            while x:
                w = wi * 64 + cr_ctz(x)
                x &= x - 1
                g.dist[w] = d
                nw = rowof(g, w)
                for i in range(W):
                    nxt[i] |= nw[i]
        more = False
        for i in range(W):
            nxt[i] &= A[i] & ~seen[i]
            seen[i] |= nxt[i]
            frontier[i] = nxt[i]
            if nxt[i]:
                more = True
        d += 1


cdef bint path_rec(Ctx* g, const uint64_t* A, int cur, int target, int rem,
                   uint64_t* visited) noexcept nogil:
    cdef uint64_t cand[MAXW]
    cdef int W = g.W, i, wi, w
    cdef uint64_t* nc = rowof(g, cur)
    cdef bint found
    if rem == 1:
        return testbit(nc, target)
    for i in range(W):
        cand[i] = nc[i] & A[i] & ~visited[i]
    cand[target >> 6] &= ~((<uint64_t>1) << (target & 63))
    for wi in range(W):
        while cand[wi]:
            w = wi * 64 + cr_ctz(cand[wi])
            cand[wi] &= cand[wi] - 1
            if g.dist[w] > rem - 1:
                continue
            visited[w >> 6] |= (<uint64_t>1) << (w & 63)
            found = path_rec(g, A, w, target, rem - 1, visited)
            visited[w >> 6] &= ~((<uint64_t>1) << (w & 63))
            if found:
                return True
    return False


cdef bint cycle_through_edge(Ctx* g, const uint64_t* A, int u, int v, int L) noexcept nogil:
    cdef uint64_t visited[MAXW]
    cdef int i
    dist_to(g, A, u)
    if g.dist[v] > L - 1:
        return False
    for i in range(g.W):
        visited[i] = 0
    visited[v >> 6] = (<uint64_t>1) << (v & 63)
    return path_rec(g, A, v, u, L - 1, visited)


cdef bint cycle_in(Ctx* g, const uint64_t* A, int L) noexcept nogil:
    cdef uint64_t rest[MAXW]
    cdef uint64_t outer[MAXW]
    cdef uint64_t nb[MAXW]
    cdef int W = g.W, i, wi, wj, v, w
    cdef uint64_t* nv
    memcpy(rest, A, W * sizeof(uint64_t))
    memcpy(outer, A, W * sizeof(uint64_t))
    for wi in range(W):
        while outer[wi]:
            v = wi * 64 + cr_ctz(outer[wi])
            outer[wi] &= outer[wi] - 1
            if popc(rest, W) < L:
                return False
            nv = rowof(g, v)
            for i in range(W):
                nb[i] = nv[i] & rest[i]
            for wj in range(W):
                while nb[wj]:
                    w = wj * 64 + cr_ctz(nb[wj])
                    nb[wj] &= nb[wj] - 1
                    if cycle_through_edge(g, rest, v, w, L):
                        return True
            rest[v >> 6] &= ~((<uint64_t>1) << (v & 63))
    return False


cdef bint kab_rec(Ctx* g, const uint64_t* cand, const uint64_t* C, int s, int b) noexcept nogil:
    cdef uint64_t Q[MAXW]
    cdef uint64_t C2[MAXW]
    cdef int W = g.W, i, wi, v
    cdef uint64_t* nv
    if s == 0:
        return popc(C, W) >= b
    memcpy(Q, cand, W * sizeof(uint64_t))
    for wi in range(W):
        while Q[wi]:
            if popc(Q, W) < s:
                return False
            v = wi * 64 + cr_ctz(Q[wi])
            Q[wi] &= Q[wi] - 1
            nv = rowof(g, v)
            for i in range(W):
                C2[i] = C[i] & nv[i]
            if popc(C2, W) >= b and kab_rec(g, Q, C2, s - 1, b):
                return True
    return False


cdef class BitCore:
    """Per-colour adjacency bit rows of an edge-coloured complete graph.

    Colour 0 means uncoloured.
    """

    cdef readonly int n
    cdef readonly int c
    cdef int W
    cdef uint64_t* bits
    cdef uint8_t* col
    cdef uint64_t full[MAXW]
    cdef int dist[MAXN]

    backend = "cython"

    def __cinit__(self, int n, int c):
        cdef int i
        if n < 0 or n > MAXN:
            raise ValueError(f"n must be in 0..{MAXN}")
        if c < 1 or c > 8:
            raise ValueError("c must be in 1..8")
        self.n = n
        self.c = c
        self.W = max(1, (n + 63) // 64)
        self.bits = <uint64_t*>calloc(max(1, c * n * self.W), sizeof(uint64_t))
        self.col = <uint8_t*>calloc(max(1, n * n), sizeof(uint8_t))
        if self.bits == NULL or self.col == NULL:
            raise MemoryError()
        for i in range(MAXW):
            self.full[i] = 0
        for i in range(n):
            self.full[i >> 6] |= (<uint64_t>1) << (i & 63)

    def __dealloc__(self):
        free(self.bits)
        free(self.col)

    cdef inline uint64_t* rowp(self, int t, int v) noexcept nogil:
        return self.bits + ((t - 1) * self.n + v) * self.W

    cdef inline void ctx(self, Ctx* g, int t) noexcept:
        g.rows = self.bits + (t - 1) * self.n * self.W
        g.W = self.W
        g.n = self.n
        g.dist = self.dist

    def copy(self):
        cdef BitCore other = BitCore(self.n, self.c)
        memcpy(other.bits, self.bits, self.c * self.n * self.W * sizeof(uint64_t))
        memcpy(other.col, self.col, self.n * self.n * sizeof(uint8_t))
        return other

    def get(self, int u, int v):
        if u < 0 or v < 0 or u >= self.n or v >= self.n:
            raise ValueError("bad vertex")
        return self.col[u * self.n + v]

    cdef inline void _set(self, int u, int v, int t) noexcept:
        cdef int old = self.col[u * self.n + v]
        cdef uint64_t* r
        if old == t:
            return
        if old:
            r = self.rowp(old, u)
            r[v >> 6] &= ~((<uint64_t>1) << (v & 63))
            r = self.rowp(old, v)
            r[u >> 6] &= ~((<uint64_t>1) << (u & 63))
        if t:
            r = self.rowp(t, u)
            r[v >> 6] |= (<uint64_t>1) << (v & 63)
            r = self.rowp(t, v)
            r[u >> 6] |= (<uint64_t>1) << (u & 63)
        self.col[u * self.n + v] = t
        self.col[v * self.n + u] = t

    def set(self, int u, int v, int t):
        if u < 0 or v < 0 or u >= self.n or v >= self.n or u == v:
            raise ValueError("bad vertex pair")
        if t < 0 or t > self.c:
            raise ValueError("bad colour")
        self._set(u, v, t)

    def set_pairs(self, const int[:] flat, int t):
        """Colour every pair ``(flat[2i], flat[2i+1])`` with ``t``."""
        cdef Py_ssize_t i, m = flat.shape[0]
        cdef int u, v
        if t < 0 or t > self.c:
            raise ValueError("bad colour")
        for i in range(0, m - 1, 2):
            u = flat[i]
            v = flat[i + 1]
            if u < 0 or v < 0 or u >= self.n or v >= self.n or u == v:
                raise ValueError("bad vertex pair")
            self._set(u, v, t)

    def row(self, int t, int v):
        cdef uint64_t* r = self.rowp(t, v)
        cdef int i
        out = 0
        for i in range(self.W - 1, -1, -1):
            out = (out << 64) | r[i]
        return out

    def degree(self, int t, int v):
        return popc(self.rowp(t, v), self.W)

    def edge_count(self, int t):
        cdef int v, s = 0
        for v in range(self.n):
            s += popc(self.rowp(t, v), self.W)
        return s // 2

    def triangle_count(self, int t):
        cdef long total = 0
        cdef int u, v, i, wi, W = self.W
        cdef uint64_t hi[MAXW]
        cdef uint64_t* ru
        cdef uint64_t* rv
        cdef uint64_t x
        for u in range(self.n):
            ru = self.rowp(t, u)
            for i in range(W):
                hi[i] = ru[i]
            for i in range(W):
                if i * 64 + 63 <= u:
                    hi[i] = 0
                elif i * 64 <= u:
                    hi[i] &= ~(((<uint64_t>2) << (u & 63)) - 1) if (u & 63) < 63 else 0
            for wi in range(W):
                x = hi[wi]
                while x:
                    v = wi * 64 + cr_ctz(x)
                    x &= x - 1
                    rv = self.rowp(t, v)
                    for i in range(W):
                        if i * 64 + 63 <= v:
                            continue
                        if i * 64 <= v:
                            if (v & 63) < 63:
                                total += cr_popcount(ru[i] & rv[i] & ~(((<uint64_t>2) << (v & 63)) - 1))
                        else:
                            total += cr_popcount(ru[i] & rv[i])
        return total

    def contains(self, int t, int kind, int p1, int p2):
        cdef Ctx g
        cdef int h
        cdef uint64_t* A
        if t < 1 or t > self.c:
            raise ValueError("bad colour")
        self.ctx(&g, t)
        if kind == KIND_K:
            return clique_rec(&g, self.full, p1)
        if kind == KIND_J:
            return j_rec(&g, self.full, self.full, p1 - 2)
        if kind == KIND_C:
            return cycle_in(&g, self.full, p1)
        if kind == KIND_W:
            for h in range(self.n):
                A = rowof(&g, h)
                if popc(A, g.W) >= p1 - 1 and cycle_in(&g, A, p1 - 1):
                    return True
            return False
        if kind == KIND_KB:
            return kab_rec(&g, self.full, self.full, p1, p2)
        raise ValueError(f"unknown pattern kind {kind}")

    def contains_through(self, int t, int kind, int p1, int p2, int u, int v):
        cdef Ctx g
        cdef uint64_t both[MAXW]
        cdef uint64_t tmp[MAXW]
        cdef uint64_t* nu
        cdef uint64_t* nv
        cdef uint64_t* A
        cdef int i, wi, w, h, hub, rim, side, L, W
        if t < 1 or t > self.c:
            raise ValueError("bad colour")
        if u < 0 or v < 0 or u >= self.n or v >= self.n:
            raise ValueError("bad vertex")
        self.ctx(&g, t)
        W = g.W
        nu = rowof(&g, u)
        nv = rowof(&g, v)
        if not testbit(nu, v):
            return False
        for i in range(W):
            both[i] = nu[i] & nv[i]
        if kind == KIND_K:
            return clique_rec(&g, both, p1 - 2)
        if kind == KIND_J:
            if p1 >= 4 and j_rec(&g, both, both, p1 - 4):
                return True
            return j_rec(&g, both, nu, p1 - 3) or j_rec(&g, both, nv, p1 - 3)
        if kind == KIND_C:
            return cycle_through_edge(&g, self.full, u, v, p1)
        if kind == KIND_W:
            L = p1 - 1
            for side in range(2):
                hub = u if side == 0 else v
                rim = v if side == 0 else u
                A = rowof(&g, hub)
                nv = rowof(&g, rim)
                for i in range(W):
                    tmp[i] = nv[i] & A[i]
                for wi in range(W):
                    while tmp[wi]:
                        w = wi * 64 + cr_ctz(tmp[wi])
                        tmp[wi] &= tmp[wi] - 1
                        if cycle_through_edge(&g, A, rim, w, L):
                            return True
            for wi in range(W):
                while both[wi]:
                    h = wi * 64 + cr_ctz(both[wi])
                    both[wi] &= both[wi] - 1
                    if cycle_through_edge(&g, rowof(&g, h), u, v, L):
                        return True
            return False
        if kind == KIND_KB:
            nv = rowof(&g, v)
            memcpy(tmp, nv, W * sizeof(uint64_t))
            tmp[u >> 6] &= ~((<uint64_t>1) << (u & 63))
            if kab_rec(&g, tmp, nu, p1 - 1, p2):
                return True
            memcpy(tmp, nu, W * sizeof(uint64_t))
            tmp[v >> 6] &= ~((<uint64_t>1) << (v & 63))
            return kab_rec(&g, tmp, nv, p1 - 1, p2)
        raise ValueError(f"unknown pattern kind {kind}")
