"""Growing Ramsey graphs: one-vertex extension and remove-then-add local search."""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Sequence

from .errors import ParameterError
from .graph import ColoredCompleteGraph
from .pattern import PatternSpec, is_ramsey_graph


def _grow(g: ColoredCompleteGraph, patterns: Sequence[PatternSpec]) -> Iterator[ColoredCompleteGraph]:
    n, c = g.n, g.c
    h = ColoredCompleteGraph(n + 1, c)
    core = h.core
    get = g.core.get
    for u in range(n):
        for v in range(u + 1, n):
            core.set(u, v, get(u, v))
    kernel = [p.kernel_args for p in patterns]
    new = n

    # colours of the new vertex's pairs are decided in vertex order
    def rec(v):
        if v == n:
            yield h.copy()
            return
        for t in range(1, c + 1):
            core.set(v, new, t)
            kind, p1, p2 = kernel[t - 1]
            if not core.contains_through(t, kind, p1, p2, v, new):
                yield from rec(v + 1)
        core.set(v, new, 0)

    yield from rec(0)


def extend_by_one(g: ColoredCompleteGraph, patterns: Sequence[PatternSpec]) -> Iterator[ColoredCompleteGraph]:
    """Every Ramsey graph on ``n + 1`` vertices whose first ``n`` vertices induce ``g``."""
    if len(patterns) != g.c:
        raise ParameterError(f"need one pattern per colour ({g.c}), got {len(patterns)}")
    if not is_ramsey_graph(g, patterns):
        raise ParameterError("the input graph is not a Ramsey graph for these patterns")
    return _grow(g, patterns)


def _grow_times(g, patterns, times):
    if times == 0:
        yield g
        return
    for h in _grow(g, patterns):
        yield from _grow_times(h, patterns, times - 1)


def local_search(g: ColoredCompleteGraph, patterns: Sequence[PatternSpec],
                 remove_t: int, add_s: int) -> Iterator[ColoredCompleteGraph]:
    """Delete ``remove_t`` vertices in every way, then add ``add_s`` in every way.

    When the output order equals ``g``'s, results isomorphic to ``g`` are
    reported once; other repeats are left for a later dedup pass.
    """
    from .verify import are_isomorphic

    if not 1 <= remove_t <= 2:
        raise ParameterError("remove_t must be 1 or 2")
    if not remove_t <= add_s <= remove_t + 2:
        raise ParameterError("add_s must lie in remove_t..remove_t+2")
    if len(patterns) != g.c:
        raise ParameterError(f"need one pattern per colour ({g.c}), got {len(patterns)}")
    g.require_total("local_search")
    if remove_t > g.n:
        raise ParameterError("cannot remove more vertices than the graph has")
    same_order = add_s == remove_t
    seen_original = False
    for gone in combinations(range(g.n), remove_t):
        keep = [v for v in range(g.n) if v not in gone]
        base = g.induced(keep)
        for h in _grow_times(base, patterns, add_s):
            if same_order and are_isomorphic(h, g):
                if seen_original:
                    continue
                seen_original = True
            yield h
