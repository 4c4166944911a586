"""Forbidden monochromatic patterns and their detection."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ._backend import KIND_C, KIND_J, KIND_K, KIND_KB, KIND_W
from .errors import ParameterError
from .graph import ColoredCompleteGraph

MAX_PATTERN_ORDER = 16

_KIND_CODES = {"K": KIND_K, "J": KIND_J, "C": KIND_C, "W": KIND_W, "KB": KIND_KB}
_MIN_ORDER = {"K": 2, "J": 3, "C": 3, "W": 4}


@dataclass(frozen=True)
class PatternSpec:
    """A pattern kind with its size.

    ``kind`` is one of ``K`` (clique), ``J`` (clique minus an edge), ``C``
    (cycle), ``W`` (wheel: hub plus a cycle on ``k - 1`` vertices) or ``KB``
    (complete bipartite ``K_{k,b}``). Bipartite parts are stored with
    ``k <= b``.
    """

    kind: str
    k: int
    b: int = 0

    def __post_init__(self):
        if self.kind not in _KIND_CODES:
            raise ParameterError(f"unknown pattern kind {self.kind!r}")
        if self.kind == "KB":
            a, b = sorted((self.k, self.b))
            if a < 1:
                raise ParameterError("bipartite parts must be non-empty")
            object.__setattr__(self, "k", a)
            object.__setattr__(self, "b", b)
        else:
            if self.b:
                raise ParameterError(f"{self.kind} patterns take one size parameter")
            if self.k < _MIN_ORDER[self.kind]:
                raise ParameterError(
                    f"{self.kind} patterns need k >= {_MIN_ORDER[self.kind]}, got {self.k}")
        if self.order > MAX_PATTERN_ORDER:
            raise ParameterError(f"pattern order {self.order} exceeds {MAX_PATTERN_ORDER}")

    @classmethod
    def clique(cls, k):
        return cls("K", k)

    @classmethod
    def near_clique(cls, k):
        return cls("J", k)

    @classmethod
    def cycle(cls, k):
        return cls("C", k)

    @classmethod
    def wheel(cls, k):
        return cls("W", k)

    @classmethod
    def bipartite(cls, a, b):
        return cls("KB", a, b)

    @property
    def order(self) -> int:
        """Number of vertices of the pattern."""
        return self.k + self.b if self.kind == "KB" else self.k

    @property
    def kernel_args(self) -> tuple[int, int, int]:
        return _KIND_CODES[self.kind], self.k, self.b

    def __str__(self):
        if self.kind == "KB":
            return f"K{self.k},{self.b}"
        return f"{self.kind}{self.k}"


def _check_color(g, i):
    if not 1 <= i <= g.c:
        raise ParameterError(f"colour {i} out of range 1..{g.c}")


def contains_pattern(g: ColoredCompleteGraph, i: int, p: PatternSpec) -> bool:
    """Whether the colour-``i`` pairs contain ``p`` as a subgraph."""
    _check_color(g, i)
    kind, p1, p2 = p.kernel_args
    return bool(g.core.contains(i, kind, p1, p2))


def contains_pattern_through_edge(g: ColoredCompleteGraph, i: int, p: PatternSpec,
                                  e: tuple[int, int]) -> bool:
    """Whether some colour-``i`` copy of ``p`` uses the pair ``e``."""
    _check_color(g, i)
    u, v = e
    if g.color(u, v) != i:
        raise ParameterError(f"pair {e} does not have colour {i}")
    kind, p1, p2 = p.kernel_args
    return bool(g.core.contains_through(i, kind, p1, p2, u, v))


def _check_patterns(g, patterns):
    if len(patterns) != g.c:
        raise ParameterError(f"need one pattern per colour ({g.c}), got {len(patterns)}")


def is_ramsey_graph(g: ColoredCompleteGraph, patterns: Sequence[PatternSpec]) -> bool:
    """Total graph avoiding ``patterns[t-1]`` in every colour ``t``."""
    _check_patterns(g, patterns)
    g.require_total("is_ramsey_graph")
    return not any(contains_pattern(g, t, p) for t, p in enumerate(patterns, 1))
