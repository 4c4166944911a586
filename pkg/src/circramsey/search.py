"""Exhaustive backtracking over circulant and block-circulant colourings.

Every decision colours one difference slot: all pairs of the slot's orbit
under the simultaneous rotation of all blocks. Rotation is an automorphism
that acts transitively on the orbit, so a new monochromatic copy through
any pair of the orbit implies one through the slot's representative pair.
Only that pair is checked.
"""

from __future__ import annotations

import sys
from array import array
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from ._backend import BitCore
from .blockcirc import BlockCirculantColoring, PrefixChecker, fill_order, is_canonical
from .circulant import CirculantColoring, unit_canonical_form
from .errors import ParameterError
from .pattern import PatternSpec

DEFAULT_SPLIT_DEPTH = 10


@dataclass
class SearchJob:
    """Parameters of one enumeration run.

    ``k == 1`` means plain circulant colourings. With ``split_modulus > 1``
    only the subtrees whose frontier index is ``split_residue`` modulo
    ``split_modulus`` are explored.
    """

    n: int
    patterns: Sequence[PatternSpec]
    k: int = 1
    split_modulus: int = 1
    split_residue: int = 0
    split_depth: int = DEFAULT_SPLIT_DEPTH
    canonical_prefix: bool = True
    progress: bool = False
    stats: dict = field(default_factory=dict)

    def __post_init__(self):
        self.patterns = tuple(self.patterns)
        if len(self.patterns) < 2:
            raise ParameterError("need at least two colours")
        if self.split_modulus < 1:
            raise ParameterError("split modulus must be at least 1")
        if not 0 <= self.split_residue < self.split_modulus:
            raise ParameterError("split residue must be in 0..modulus-1")
        if self.k < 1 or self.n % self.k:
            raise ParameterError(f"block count {self.k} must divide n={self.n}")
        if self.split_depth < 0:
            raise ParameterError("split depth must be non-negative")

    @property
    def c(self) -> int:
        return len(self.patterns)


@dataclass(frozen=True)
class _Slot:
    block: tuple[int, int]
    diff: int
    pairs: array
    edge: tuple[int, int]
    mirror: int  # the paired difference on a diagonal block, else -1
    completes: bool


def _slots(n: int, k: int) -> list[_Slot]:
    m = n // k
    out = []
    for i, j in fill_order(k):
        diffs = range(1, m // 2 + 1) if i == j else range(m)
        diffs = list(diffs)
        for pos, d in enumerate(diffs):
            flat = array("i")
            for a in range(m):
                flat.append(i * m + a)
                flat.append(j * m + (a + d) % m)
            mirror = (m - d) % m if i == j else -1
            out.append(_Slot((i, j), d, flat, (i * m, j * m + d), mirror,
                             pos == len(diffs) - 1))
    return out


class _Runner:
    def __init__(self, job: SearchJob, core_cls=BitCore):
        self.job = job
        self.core = core_cls(job.n, job.c)
        self.kernel = [p.kernel_args for p in job.patterns]
        self.slots = _slots(job.n, job.k)
        self.depth = min(job.split_depth, len(self.slots)) if job.split_modulus > 1 else -1
        self.frontier = 0
        self.nodes = 0
        self.next_report = 1_000_000

    def _take_frontier(self) -> bool:
        idx = self.frontier
        self.frontier += 1
        return idx % self.job.split_modulus == self.job.split_residue

    def _progress(self):
        if self.nodes >= self.next_report:
            print(f"search: {self.nodes} nodes, {self.frontier} frontier", file=sys.stderr)
            self.next_report = self.nodes + 1_000_000


def _run(runner: _Runner, state: list, on_block, on_leaf) -> Iterator:
    core = runner.core
    kernel = runner.kernel
    slots = runner.slots
    total = len(slots)
    c = runner.job.c
    split_at = runner.depth
    set_pairs = core.set_pairs
    through = core.contains_through

    def rec(pos):
        if pos == split_at and not runner._take_frontier():
            return
        if pos == total:
            yield from on_leaf(state)
            return
        slot = slots[pos]
        u, v = slot.edge
        for t in range(1, c + 1):
            runner.nodes += 1
            set_pairs(slot.pairs, t)
            kind, p1, p2 = kernel[t - 1]
            if not through(t, kind, p1, p2, u, v):
                state[pos] = t
                if not slot.completes or on_block(state, pos):
                    yield from rec(pos + 1)
                state[pos] = 0
            set_pairs(slot.pairs, 0)
        if runner.job.progress:
            runner._progress()

    yield from rec(0)
    runner.job.stats.update(nodes=runner.nodes, frontier=runner.frontier)


def enumerate_circulant(job: SearchJob, core_cls=BitCore) -> Iterator[CirculantColoring]:
    """Every Ramsey circulant colouring that is least among its unit multiples."""
    if job.k != 1:
        raise ParameterError("enumerate_circulant needs k == 1")
    if job.n < 3:
        raise ParameterError("circulant colourings need n >= 3")
    runner = _Runner(job, core_cls)
    n, c = job.n, job.c
    state = [0] * len(runner.slots)

    def on_leaf(st):
        col = CirculantColoring(n, st, c)
        if not job.canonical_prefix or unit_canonical_form(col) == col:
            yield col

    return _run(runner, state, lambda st, pos: True, on_leaf)


def _blocks_from_state(slots, state, m, k):
    blocks = {p: [0] * m for p in fill_order(k)}
    for slot, t in zip(slots, state):
        if not t:
            continue
        cols = blocks[slot.block]
        cols[slot.diff] = t
        if slot.mirror >= 0:
            cols[slot.mirror] = t
    return blocks


def enumerate_block_circulant(job: SearchJob, core_cls=BitCore) -> Iterator[BlockCirculantColoring]:
    """Ramsey block-circulant colourings in canonical form.

    Blocks are filled column by column. Canonicity conditions are checked
    as soon as each block completes, and each total colouring is emitted
    only if it equals its own canonical form. With ``canonical_prefix``
    off, every Ramsey colouring is emitted.
    """
    if job.k < 2:
        raise ParameterError("enumerate_block_circulant needs k >= 2")
    runner = _Runner(job, core_cls)
    n, k, c = job.n, job.k, job.c
    m = n // k
    slots = runner.slots
    state = [0] * len(slots)
    checker = PrefixChecker(m, k, c)
    # slot index where each block starts
    start = {}
    for pos, slot in enumerate(slots):
        start.setdefault(slot.block, pos)
    live = {p: [0] * m for p in fill_order(k)}

    def on_block(st, pos):
        i, j = slots[pos].block
        cols = live[(i, j)]
        for x in range(start[(i, j)], pos + 1):
            s = slots[x]
            cols[s.diff] = st[x]
            if s.mirror >= 0:
                cols[s.mirror] = st[x]
        if not job.canonical_prefix:
            return True
        return checker.block_done(live, i, j)

    def on_leaf(st):
        b = BlockCirculantColoring(n, k, _blocks_from_state(slots, st, m, k), c)
        if not job.canonical_prefix or is_canonical(b):
            yield b

    return _run(runner, state, on_block, on_leaf)


def enumerate_colorings(job: SearchJob, core_cls=BitCore):
    if job.k == 1:
        return enumerate_circulant(job, core_cls)
    return enumerate_block_circulant(job, core_cls)


def split_subtrees(job: SearchJob) -> list[SearchJob]:
    """One job per residue of ``job.split_modulus``; together they cover ``job``."""
    return [SearchJob(job.n, job.patterns, job.k, job.split_modulus, r, job.split_depth,
                      job.canonical_prefix) for r in range(job.split_modulus)]
