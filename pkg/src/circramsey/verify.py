"""Independent checks: a naive Ramsey verifier, isomorphism and dedup.

Nothing here uses the bit kernels or the pattern detectors. The verifier
works on plain Python sets so that it can cross-check them.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ParameterError
from .graph import ColoredCompleteGraph
from .pattern import PatternSpec


@dataclass(frozen=True)
class Verdict:
    """``valid`` is False exactly when a witness copy was found."""

    valid: bool
    color: int | None = None
    pattern: PatternSpec | None = None
    vertices: tuple[int, ...] = ()

    def __bool__(self):
        return self.valid

    def describe(self) -> str:
        if self.valid:
            return "VALID"
        verts = " ".join(map(str, self.vertices))
        return f"INVALID color {self.color} {self.pattern}: {verts}"


def _adjacency(g: ColoredCompleteGraph, t: int) -> list[set[int]]:
    mat = g.color_matrix()
    return [{w for w in range(g.n) if mat[v][w] == t} for v in range(g.n)]


def _cliques(adj, size, cand=None, chosen=()):
    """Yield ``size``-cliques as tuples in increasing vertex order."""
    if size == 0:
        yield chosen
        return
    if cand is None:
        cand = set(range(len(adj)))
    for v in sorted(cand):
        rest = {w for w in cand if w > v and w in adj[v]}
        if len(rest) >= size - 1:
            yield from _cliques(adj, size - 1, rest, chosen + (v,))


def _find_clique(adj, k):
    for q in _cliques(adj, k):
        return q
    return None


def _find_near_clique(adj, k):
    # a (k-2)-clique with two common neighbours outside it
    for q in _cliques(adj, k - 2):
        common = set(range(len(adj))) - set(q)
        for v in q:
            common &= adj[v]
        if len(common) >= 2:
            x, y = sorted(common)[:2]
            return q + (x, y)
    return None


def _find_cycle(adj, length, allowed=None):
    # the smallest vertex of the cycle is its start; paths only use larger ones
    verts = sorted(allowed) if allowed is not None else list(range(len(adj)))
    allowed = set(verts)
    for s in verts:
        path = [s]
        on_path = {s}

        def walk(v):
            if len(path) == length:
                return s in adj[v]
            for w in sorted(adj[v] & allowed):
                if w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    if walk(w):
                        return True
                    path.pop()
                    on_path.discard(w)
            return False

        if walk(s):
            return tuple(path)
    return None


def _find_wheel(adj, k):
    for hub in range(len(adj)):
        if len(adj[hub]) < k - 1:
            continue
        rim = _find_cycle(adj, k - 1, adj[hub])
        if rim:
            return (hub,) + rim
    return None


def _find_bipartite(adj, a, b):
    n = len(adj)
    for left in combinations(range(n), a):
        common = set(range(n)) - set(left)
        for v in left:
            common &= adj[v]
        if len(common) >= b:
            return left + tuple(sorted(common)[:b])
    return None


def find_copy(g: ColoredCompleteGraph, t: int, p: PatternSpec):
    """Vertices of one colour-``t`` copy of ``p``, or ``None``."""
    adj = _adjacency(g, t)
    if p.kind == "K":
        return _find_clique(adj, p.k)
    if p.kind == "J":
        return _find_near_clique(adj, p.k)
    if p.kind == "C":
        return _find_cycle(adj, p.k)
    if p.kind == "W":
        return _find_wheel(adj, p.k)
    return _find_bipartite(adj, p.k, p.b)


def verify_ramsey(g: ColoredCompleteGraph, patterns: Sequence[PatternSpec]) -> Verdict:
    if len(patterns) != g.c:
        raise ParameterError(f"need one pattern per colour ({g.c}), got {len(patterns)}")
    mat = g.color_matrix()
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not mat[u][v]:
                raise ParameterError(f"pair ({u}, {v}) is uncoloured")
    for t, p in enumerate(patterns, 1):
        found = find_copy(g, t, p)
        if found is not None:
            return Verdict(False, t, p, tuple(found))
    return Verdict(True)


def _refine(mat, n, cells):
    """Equitable refinement of ``cells`` over the disjoint union of two graphs.

    ``mat`` is the colour matrix of the union (pairs across the two halves are
    never consulted). Cell labels are renumbered by sorted signature, so the
    same structure gets the same label on both sides.
    """
    half = n // 2
    while True:
        sigs = []
        for v in range(n):
            lo, hi = (0, half) if v < half else (half, n)
            row = mat[v]
            cnt = Counter((row[w], cells[w]) for w in range(lo, hi) if w != v)
            sigs.append((cells[v], tuple(sorted(cnt.items()))))
        labels = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [labels[s] for s in sigs]
        if len(labels) == len(set(cells)):
            return new
        cells = new


def _union_matrix(g, h):
    n = g.n
    mg, mh = g.color_matrix(), h.color_matrix()
    mat = []
    for v in range(n):
        mat.append(mg[v] + [0] * n)
    for v in range(n):
        mat.append([0] * n + mh[v])
    return mat


def are_isomorphic(g: ColoredCompleteGraph, h: ColoredCompleteGraph) -> bool:
    """Colour-preserving isomorphism test by refinement and individualisation."""
    if g.n != h.n or g.c != h.c:
        raise ParameterError("graphs differ in vertex or colour count")
    n = g.n
    if n == 0:
        return True
    if any(g.edge_count(t) != h.edge_count(t) for t in range(1, g.c + 1)):
        return False
    mat = _union_matrix(g, h)
    size = 2 * n

    def balanced(cells):
        return Counter(cells[:n]) == Counter(cells[n:])

    def search(cells):
        cells = _refine(mat, size, cells)
        if not balanced(cells):
            return False
        counts = Counter(cells[:n])
        if all(x == 1 for x in counts.values()):
            where = {cells[n + w]: w for w in range(n)}
            phi = [where[cells[v]] for v in range(n)]
            return all(mat[u][v] == mat[n + phi[u]][n + phi[v]]
                       for u in range(n) for v in range(u + 1, n))
        target = min((cnt, lab) for lab, cnt in counts.items() if cnt > 1)[1]
        x = next(v for v in range(n) if cells[v] == target)
        fresh = max(cells) + 1
        for y in range(n, size):
            if cells[y] != target:
                continue
            trial = list(cells)
            trial[x] = fresh
            trial[y] = fresh
            if search(trial):
                return True
        return False

    return search([0] * size)


def invariant_hash(g: ColoredCompleteGraph) -> tuple:
    """Colour-1 edge count plus sorted per-vertex degree and triangle profile."""
    adj1 = _adjacency(g, 1)
    profile = []
    for v in range(g.n):
        degs = tuple(g.degree(v, t) for t in range(1, g.c + 1))
        nb = adj1[v]
        tri = sum(len(nb & adj1[w]) for w in nb) // 2
        profile.append((degs, tri))
    return (g.edge_count(1), tuple(sorted(profile)))


def dedupe_indices(graphs: Sequence[ColoredCompleteGraph]) -> list[int]:
    """Indices of the first representative of each isomorphism class."""
    buckets: dict[tuple, list[ColoredCompleteGraph]] = defaultdict(list)
    keep = []
    for idx, g in enumerate(graphs):
        reps = buckets[(g.n, g.c, invariant_hash(g))]
        if any(g == r or are_isomorphic(g, r) for r in reps):
            continue
        reps.append(g)
        keep.append(idx)
    return keep


def dedupe_nonisomorphic(graphs: Iterable[ColoredCompleteGraph]) -> list[ColoredCompleteGraph]:
    """One representative per isomorphism class, first occurrence kept."""
    graphs = list(graphs)
    return [graphs[i] for i in dedupe_indices(graphs)]


def enumerate_all_small(patterns: Sequence[PatternSpec], max_n: int) -> dict[tuple[int, int], int]:
    """Isomorphism-class counts of Ramsey graphs keyed by ``(n, colour-1 edges)``.

    Order ``n`` is built by adding one vertex in every possible way to each
    class representative of order ``n - 1``.
    """
    from .extend import extend_by_one

    if max_n > 8:
        raise ParameterError("the small-order census is limited to max_n <= 8")
    c = len(patterns)
    census: dict[tuple[int, int], int] = {}
    level = [ColoredCompleteGraph(1, c)] if max_n >= 1 else []
    for n in range(1, max_n + 1):
        if n > 1:
            grown = [x for g in level for x in extend_by_one(g, patterns)]
            level = dedupe_nonisomorphic(grown)
        for g in level:
            key = (n, g.edge_count(1))
            census[key] = census.get(key, 0) + 1
        if not level:
            break
    return dict(sorted(census.items()))
