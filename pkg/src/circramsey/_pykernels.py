"""Pure-Python bit-parallel kernel.

Rows are arbitrary-precision ints, one per (colour, vertex). This module is
the reference implementation for ``_kernels.pyx``; both expose the same
``BitCore`` surface and must agree on every query.
"""

KIND_K = 0
KIND_J = 1
KIND_C = 2
KIND_W = 3
KIND_KB = 4

MAX_N = 512
MAX_COLORS = 8

_INF = 1 << 30


def _bits(x):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _clique(rows, P, s):
    # is there an s-clique inside P?
    if s <= 0:
        return True
    if P.bit_count() < s:
        return False
    if s == 1:
        return True
    Q = P
    while Q:
        low = Q & -Q
        v = low.bit_length() - 1
        Q ^= low
        if Q.bit_count() < s - 1:
            return False
        if _clique(rows, Q & rows[v], s - 1):
            return True
    return False


def _jrec(rows, P, C, s):
    # extend the current clique by s vertices from P; C is its common
    # neighbourhood, which must keep at least two vertices at the end
    if s == 0:
        return C.bit_count() >= 2
    if C.bit_count() < s + 2 or P.bit_count() < s:
        return False
    Q = P
    while Q:
        low = Q & -Q
        v = low.bit_length() - 1
        Q ^= low
        nv = rows[v]
        C2 = C & nv
        if C2.bit_count() < s + 1:
            continue
        if _jrec(rows, Q & nv, C2, s - 1):
            return True
    return False


def _dist_to(rows, A, target):
    dist = {}
    frontier = 1 << target
    seen = frontier
    d = 0
    while frontier:
        nxt = 0
        for w in _bits(frontier):
            dist[w] = d
            nxt |= rows[w]
        nxt &= A & ~seen
        seen |= nxt
        frontier = nxt
        d += 1
    return dist


def _path(rows, A, cur, target, rem, visited, dist):
    if rem == 1:
        return (rows[cur] >> target) & 1 == 1
    cand = rows[cur] & A & ~visited & ~(1 << target)
    for w in _bits(cand):
        if dist.get(w, _INF) > rem - 1:
            continue
        if _path(rows, A, w, target, rem - 1, visited | (1 << w), dist):
            return True
    return False


def _cycle_through_edge(rows, A, u, v, L):
    # cycle of exactly L vertices inside A that uses the edge uv
    dist = _dist_to(rows, A, u)
    if dist.get(v, _INF) > L - 1:
        return False
    return _path(rows, A, v, u, L - 1, 1 << v, dist)


def _cycle_in(rows, A, L):
    rest = A
    for v in _bits(A):
        if rest.bit_count() < L:
            return False
        for w in _bits(rows[v] & rest):
            if _cycle_through_edge(rows, rest, v, w, L):
                return True
        rest &= ~(1 << v)
    return False


def _kab(rows, cand, C, s, b):
    if s == 0:
        return C.bit_count() >= b
    Q = cand
    while Q:
        if Q.bit_count() < s:
            return False
        low = Q & -Q
        v = low.bit_length() - 1
        Q ^= low
        C2 = C & rows[v]
        if C2.bit_count() >= b and _kab(rows, Q, C2, s - 1, b):
            return True
    return False


class BitCore:
    """Per-colour adjacency bit rows of an edge-coloured complete graph.

    Colour 0 means uncoloured. Inputs are assumed validated by the caller
    apart from cheap range checks in :meth:`set`.
    """

    __slots__ = ("n", "c", "_rows", "_col")

    backend = "python"

    def __init__(self, n, c):
        if not 0 <= n <= MAX_N:
            raise ValueError(f"n must be in 0..{MAX_N}")
        if not 1 <= c <= MAX_COLORS:
            raise ValueError(f"c must be in 1..{MAX_COLORS}")
        self.n = n
        self.c = c
        self._rows = [[0] * n for _ in range(c + 1)]
        self._col = bytearray(n * n)

    def copy(self):
        other = BitCore.__new__(BitCore)
        other.n = self.n
        other.c = self.c
        other._rows = [list(r) for r in self._rows]
        other._col = bytearray(self._col)
        return other

    def get(self, u, v):
        return self._col[u * self.n + v]

    def set(self, u, v, t):
        n = self.n
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ValueError("bad vertex pair")
        if not 0 <= t <= self.c:
            raise ValueError("bad colour")
        col = self._col
        old = col[u * n + v]
        if old == t:
            return
        rows = self._rows
        if old:
            r = rows[old]
            r[u] &= ~(1 << v)
            r[v] &= ~(1 << u)
        if t:
            r = rows[t]
            r[u] |= 1 << v
            r[v] |= 1 << u
        col[u * n + v] = t
        col[v * n + u] = t

    def set_pairs(self, flat, t):
        """Colour every pair ``(flat[2i], flat[2i+1])`` with ``t``."""
        for i in range(0, len(flat), 2):
            self.set(flat[i], flat[i + 1], t)

    def row(self, t, v):
        return self._rows[t][v]

    def degree(self, t, v):
        return self._rows[t][v].bit_count()

    def edge_count(self, t):
        return sum(r.bit_count() for r in self._rows[t]) // 2

    def triangle_count(self, t):
        rows = self._rows[t]
        total = 0
        for u in range(self.n):
            higher = rows[u] >> (u + 1) << (u + 1)
            for v in _bits(higher):
                total += (rows[u] & rows[v] & ~((1 << (v + 1)) - 1)).bit_count()
        return total

    def contains(self, t, kind, p1, p2):
        rows = self._rows[t]
        n = self.n
        full = (1 << n) - 1
        if kind == KIND_K:
            return _clique(rows, full, p1)
        if kind == KIND_J:
            return _jrec(rows, full, full, p1 - 2)
        if kind == KIND_C:
            return _cycle_in(rows, full, p1)
        if kind == KIND_W:
            for h in range(n):
                A = rows[h]
                if A.bit_count() >= p1 - 1 and _cycle_in(rows, A, p1 - 1):
                    return True
            return False
        if kind == KIND_KB:
            return _kab(rows, full, full, p1, p2)
        raise ValueError(f"unknown pattern kind {kind}")

    def contains_through(self, t, kind, p1, p2, u, v):
        rows = self._rows[t]
        if not (rows[u] >> v) & 1:
            return False
        nu = rows[u]
        nv = rows[v]
        if kind == KIND_K:
            return _clique(rows, nu & nv, p1 - 2)
        if kind == KIND_J:
            if p1 >= 4:
                both = nu & nv
                if _jrec(rows, both, both, p1 - 4):
                    return True
            return _jrec(rows, nu & nv, nu, p1 - 3) or _jrec(rows, nu & nv, nv, p1 - 3)
        if kind == KIND_C:
            full = (1 << self.n) - 1
            return _cycle_through_edge(rows, full, u, v, p1)
        if kind == KIND_W:
            L = p1 - 1
            for hub, rim in ((u, v), (v, u)):
                A = rows[hub]
                for w in _bits(rows[rim] & A):
                    if _cycle_through_edge(rows, A, rim, w, L):
                        return True
            for h in _bits(nu & nv):
                if _cycle_through_edge(rows, rows[h], u, v, L):
                    return True
            return False
        if kind == KIND_KB:
            return (_kab(rows, nv & ~(1 << u), nu, p1 - 1, p2)
                    or _kab(rows, nu & ~(1 << v), nv, p1 - 1, p2))
        raise ValueError(f"unknown pattern kind {kind}")
