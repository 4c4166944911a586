"""Circulant colourings of K_n described by their difference classes."""

from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping

from .errors import ParameterError, PartialGraphError
from .graph import UNCOLORED, ColoredCompleteGraph


def units(m: int) -> list[int]:
    """Residues in ``1..m-1`` coprime to ``m`` (``[1]`` when ``m <= 2``)."""
    if m <= 2:
        return [1]
    return [q for q in range(1, m) if gcd(q, m) == 1]


def class_of(d: int, n: int) -> int:
    """Representative ``min(d, n-d)`` of the class holding difference ``d``."""
    d %= n
    return min(d, n - d)


class CirculantColoring:
    """Colour per difference class ``d = 1..n//2`` of ``Z_n``.

    Class ``d`` covers the differences ``d`` and ``n - d``. ``assign[d-1]``
    holds its colour, ``0`` while undecided.
    """

    __slots__ = ("n", "c", "assign")

    def __init__(self, n: int, assign: Iterable[int], c: int = 2):
        assign = tuple(assign)
        if n < 1:
            raise ParameterError("modulus must be positive")
        if len(assign) != n // 2:
            raise ParameterError(f"need {n // 2} class colours for n={n}, got {len(assign)}")
        if any(not 0 <= t <= c for t in assign):
            raise ParameterError(f"class colours must be in 0..{c}")
        self.n = n
        self.c = c
        self.assign = assign

    @classmethod
    def from_sets(cls, n: int, sets: Mapping[int, Iterable[int]], c: int = 2,
                  fill: int | None = None) -> "CirculantColoring":
        """Build from colour -> differences; classes never named get ``fill``.

        Differences may be given as class representatives or as full
        symmetric sets. Naming one class in two colours is an error.
        """
        assign = [UNCOLORED] * (n // 2)
        for t, ds in sets.items():
            if not 1 <= t <= c:
                raise ParameterError(f"colour {t} out of range 1..{c}")
            for d in ds:
                if d % n == 0:
                    raise ParameterError("difference 0 is not an edge")
                r = class_of(d, n)
                if assign[r - 1] not in (UNCOLORED, t):
                    raise ParameterError(f"difference class {r} given two colours")
                assign[r - 1] = t
        if fill:
            assign = [t or fill for t in assign]
        return cls(n, assign, c)

    def is_total(self) -> bool:
        return all(self.assign)

    def class_reps(self, t: int) -> tuple[int, ...]:
        return tuple(d for d in range(1, self.n // 2 + 1) if self.assign[d - 1] == t)

    def color_set(self, t: int) -> tuple[int, ...]:
        """Sorted symmetric difference set of colour ``t``."""
        n = self.n
        out = set()
        for d in self.class_reps(t):
            out.add(d)
            out.add(n - d)
        return tuple(sorted(out))

    def key(self) -> tuple:
        """Sort key: colour-1 set, then colour-2 set, and so on."""
        return tuple(self.color_set(t) for t in range(1, self.c + 1))

    def multiply(self, q: int) -> "CirculantColoring":
        """The colouring sending class ``d`` to the colour of class ``q*d``."""
        n = self.n
        if gcd(q, n) != 1:
            raise ParameterError(f"{q} is not a unit modulo {n}")
        assign = self.assign
        return CirculantColoring(
            n, (assign[class_of(q * d, n) - 1] for d in range(1, n // 2 + 1)), self.c)

    def __eq__(self, other):
        if not isinstance(other, CirculantColoring):
            return NotImplemented
        return (self.n, self.c, self.assign) == (other.n, other.c, other.assign)

    def __hash__(self):
        return hash((self.n, self.c, self.assign))

    def __repr__(self):
        parts = ", ".join(f"{t}: {list(self.class_reps(t))}" for t in range(1, self.c + 1))
        return f"CirculantColoring(n={self.n}, {{{parts}}})"


def realize_circulant(col: CirculantColoring) -> ColoredCompleteGraph:
    n = col.n
    if n < 3:
        raise ParameterError("circulant colourings need n >= 3")
    g = ColoredCompleteGraph(n, col.c)
    set_ = g.core.set
    assign = col.assign
    for u in range(n):
        for v in range(u + 1, n):
            t = assign[class_of(v - u, n) - 1]
            if t:
                set_(u, v, t)
    return g


def unit_canonical_form(col: CirculantColoring) -> CirculantColoring:
    """Smallest ``q * col`` over units ``q`` in the colour-set order."""
    if not col.is_total():
        raise PartialGraphError("unit_canonical_form needs every class coloured")
    best = col
    best_key = col.key()
    for q in units(col.n)[1:]:
        cand = col.multiply(q)
        k = cand.key()
        if k < best_key:
            best, best_key = cand, k
    return best
