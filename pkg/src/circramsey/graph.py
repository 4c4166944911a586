"""Edge-coloured complete graphs with per-colour bit rows."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ._backend import MAX_COLORS, MAX_N, BitCore
from .errors import ParameterError, PartialGraphError

UNCOLORED = 0


class ColoredCompleteGraph:
    """A complete graph on ``0..n-1`` whose pairs carry a colour in ``1..c``.

    Pairs start out :data:`UNCOLORED`. The per-colour adjacency rows are kept
    in a kernel object (``core``) so pattern detection never rebuilds them.
    """

    __slots__ = ("core",)

    def __init__(self, n: int, c: int = 2, *, _core=None):
        if _core is not None:
            self.core = _core
            return
        if not 0 <= n <= MAX_N:
            raise ParameterError(f"vertex count must be in 0..{MAX_N}, got {n}")
        if not 2 <= c <= MAX_COLORS:
            raise ParameterError(f"colour count must be in 2..{MAX_COLORS}, got {c}")
        self.core = BitCore(n, c)

    @classmethod
    def from_color_function(cls, n: int, c: int, color_of) -> "ColoredCompleteGraph":
        g = cls(n, c)
        for u in range(n):
            for v in range(u + 1, n):
                g.set_color(u, v, color_of(u, v))
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], c: int = 2,
                   rest: int | None = 2) -> "ColoredCompleteGraph":
        """Colour ``edges`` with 1 and every other pair with ``rest``."""
        g = cls(n, c)
        if rest:
            for u in range(n):
                for v in range(u + 1, n):
                    g.core.set(u, v, rest)
        for u, v in edges:
            g.set_color(u, v, 1)
        return g

    @property
    def n(self) -> int:
        return self.core.n

    @property
    def c(self) -> int:
        return self.core.c

    def _check_vertex(self, v):
        if not 0 <= v < self.n:
            raise ParameterError(f"vertex {v} out of range 0..{self.n - 1}")

    def _check_color(self, t, allow_uncolored=False):
        lo = 0 if allow_uncolored else 1
        if not lo <= t <= self.c:
            raise ParameterError(f"colour {t} out of range {lo}..{self.c}")

    def color(self, u: int, v: int) -> int:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ParameterError("a vertex has no colour with itself")
        return self.core.get(u, v)

    def set_color(self, u: int, v: int, t: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ParameterError("self-loops are not allowed")
        self._check_color(t, allow_uncolored=True)
        self.core.set(u, v, t)

    def pairs(self):
        n = self.n
        for u in range(n):
            for v in range(u + 1, n):
                yield u, v

    def is_total(self) -> bool:
        get = self.core.get
        return all(get(u, v) for u, v in self.pairs())

    def require_total(self, what="this operation"):
        if not self.is_total():
            raise PartialGraphError(f"{what} needs a graph with every pair coloured")

    def neighbors(self, v: int, t: int) -> list[int]:
        self._check_vertex(v)
        self._check_color(t)
        row = self.core.row(t, v)
        return [w for w in range(self.n) if (row >> w) & 1]

    def degree(self, v: int, t: int) -> int:
        self._check_vertex(v)
        self._check_color(t)
        return self.core.degree(t, v)

    def edge_count(self, t: int) -> int:
        self._check_color(t)
        return self.core.edge_count(t)

    def edges(self, t: int) -> list[tuple[int, int]]:
        get = self.core.get
        return [(u, v) for u, v in self.pairs() if get(u, v) == t]

    def color_matrix(self) -> list[list[int]]:
        n = self.n
        get = self.core.get
        return [[get(u, v) if u != v else 0 for v in range(n)] for u in range(n)]

    def signature(self) -> bytes:
        """Upper-triangle colours, row by row; equal iff the graphs are equal."""
        get = self.core.get
        return bytes(get(u, v) for u, v in self.pairs())

    def induced(self, vertices: Iterable[int]) -> "ColoredCompleteGraph":
        vs = list(vertices)
        h = ColoredCompleteGraph(len(vs), self.c)
        get = self.core.get
        for a in range(len(vs)):
            for b in range(a + 1, len(vs)):
                t = get(vs[a], vs[b])
                if t:
                    h.core.set(a, b, t)
        return h

    def relabeled(self, perm: list[int]) -> "ColoredCompleteGraph":
        """Return the graph where old vertex ``v`` becomes ``perm[v]``."""
        h = ColoredCompleteGraph(self.n, self.c)
        get = self.core.get
        for u, v in self.pairs():
            t = get(u, v)
            if t:
                h.core.set(perm[u], perm[v], t)
        return h

    def copy(self) -> "ColoredCompleteGraph":
        return ColoredCompleteGraph(0, _core=self.core.copy())

    def __eq__(self, other):
        if not isinstance(other, ColoredCompleteGraph):
            return NotImplemented
        return self.n == other.n and self.c == other.c and self.signature() == other.signature()

    def __hash__(self):
        return hash((self.n, self.c, self.signature()))

    def __repr__(self):
        return f"ColoredCompleteGraph(n={self.n}, c={self.c})"


@dataclass(frozen=True)
class DegreeHistogram:
    """``counts[j]`` is the number of vertices of degree ``j`` in one colour."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != max(self.n, 1) and not (self.n == 0 and not self.counts):
            raise ParameterError("histogram needs one entry per degree 0..n-1")
        if any(x < 0 for x in self.counts):
            raise ParameterError("histogram entries must be non-negative")
        if sum(self.counts) != self.n:
            raise ParameterError("histogram entries must sum to n")

    @classmethod
    def regular(cls, n: int, degree: int) -> "DegreeHistogram":
        counts = [0] * n
        counts[degree] = n
        return cls(n, tuple(counts))

    def __getitem__(self, j):
        return self.counts[j]


def neighborhood_subgraph(g: ColoredCompleteGraph, v: int, i: int) -> ColoredCompleteGraph:
    """Induced subgraph on the colour-``i`` neighbours of ``v``, in vertex order."""
    if not 0 <= v < g.n:
        raise ParameterError(f"vertex {v} out of range 0..{g.n - 1}")
    if not 1 <= i <= g.c:
        raise ParameterError(f"colour {i} out of range 1..{g.c}")
    get = g.core.get
    if any(get(v, w) == UNCOLORED for w in range(g.n) if w != v):
        raise PartialGraphError(f"vertex {v} has uncoloured incident pairs")
    return g.induced(g.neighbors(v, i))


def degree_histogram(g: ColoredCompleteGraph, i: int = 1) -> DegreeHistogram:
    g.require_total("degree_histogram")
    if not 1 <= i <= g.c:
        raise ParameterError(f"colour {i} out of range 1..{g.c}")
    counts = [0] * max(g.n, 1) if g.n else []
    for v in range(g.n):
        counts[g.core.degree(i, v)] += 1
    return DegreeHistogram(g.n, tuple(counts))


def mono_triangle_count(g: ColoredCompleteGraph) -> int:
    """Triangles whose three pairs share one colour, summed over colours."""
    g.require_total("mono_triangle_count")
    return sum(g.core.triangle_count(t) for t in range(1, g.c + 1))
