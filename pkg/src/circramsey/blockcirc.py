"""Block-circulant colourings and their structural canonical form.

Blocks are indexed from 0. Block ``(i, j)`` with ``i <= j`` is stored as a
tuple ``cols`` of length ``m``: the pair ``{(i, a), (j, b)}`` has colour
``cols[(b - a) % m]``. Diagonal blocks keep ``cols[0] == 0`` and are
symmetric under ``d -> -d``. Blocks below the diagonal are never stored;
``(j, i)`` is the negation of ``(i, j)``.

All set comparisons use the order of :mod:`circramsey.circulant`: a block's
key is its tuple of sorted per-colour difference sets, and a whole colouring
is compared block by block in fill order (column by column, top to bottom).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from math import gcd
from typing import Iterable, Mapping, Sequence

from .circulant import units
from .errors import ParameterError, PartialGraphError
from .graph import UNCOLORED, ColoredCompleteGraph


def fill_order(k: int) -> list[tuple[int, int]]:
    """Block positions column by column, each column top to bottom."""
    return [(i, j) for j in range(k) for i in range(j + 1)]


def _block_key(cols: Sequence[int], c: int) -> tuple:
    sets = [[] for _ in range(c)]
    for d, t in enumerate(cols):
        if t:
            sets[t - 1].append(d)
    return tuple(tuple(s) for s in sets)


def _shift(cols, r, m):
    # differences move from d to d + r
    return tuple(cols[(d - r) % m] for d in range(m))


def _negate(cols, m):
    return tuple(cols[(-d) % m] for d in range(m))


def _scale(cols, q, m):
    # difference d moves to q * d
    out = [0] * m
    for d, t in enumerate(cols):
        out[(q * d) % m] = t
    return tuple(out)


class BlockCirculantColoring:
    """A ``k x k`` grid of circulant blocks of size ``m = n / k``."""

    __slots__ = ("n", "k", "m", "c", "_blocks")

    def __init__(self, n: int, k: int, blocks: Mapping[tuple[int, int], Sequence[int]],
                 c: int = 2):
        if k < 1 or n < 1 or n % k:
            raise ParameterError(f"block count {k} must divide n={n}")
        m = n // k
        self.n, self.k, self.m, self.c = n, k, m, c
        data = {}
        for i, j in fill_order(k):
            cols = tuple(blocks.get((i, j), (UNCOLORED,) * m))
            if len(cols) != m:
                raise ParameterError(f"block ({i}, {j}) needs {m} entries")
            if any(not 0 <= t <= c for t in cols):
                raise ParameterError(f"block ({i}, {j}) has a colour outside 0..{c}")
            if i == j:
                if cols[0] != UNCOLORED:
                    raise ParameterError(f"diagonal block ({i}, {i}) colours difference 0")
                if cols != _negate(cols, m):
                    raise ParameterError(f"diagonal block ({i}, {i}) is not symmetric")
            data[(i, j)] = cols
        extra = set(blocks) - set(data)
        if extra:
            raise ParameterError(f"blocks {sorted(extra)} are not on or above the diagonal")
        self._blocks = data

    @classmethod
    def from_sets(cls, n: int, k: int,
                  sets: Mapping[tuple[int, int], Mapping[int, Iterable[int]]],
                  c: int = 2, fill: int | None = None) -> "BlockCirculantColoring":
        """Build from ``{(i, j): {colour: differences}}``.

        Diagonal differences are closed under negation automatically.
        Unnamed differences get ``fill`` (or stay uncoloured).
        """
        if k < 1 or n % k:
            raise ParameterError(f"block count {k} must divide n={n}")
        m = n // k
        blocks = {}
        for (i, j), per_color in sets.items():
            if not (0 <= i <= j < k):
                raise ParameterError(f"block ({i}, {j}) is not on or above the diagonal")
            cols = [UNCOLORED] * m
            for t, ds in per_color.items():
                if not 1 <= t <= c:
                    raise ParameterError(f"colour {t} out of range 1..{c}")
                for d in ds:
                    targets = {d % m, (-d) % m} if i == j else {d % m}
                    for x in targets:
                        if i == j and x == 0:
                            raise ParameterError(f"diagonal block ({i}, {i}) colours difference 0")
                        if cols[x] not in (UNCOLORED, t):
                            raise ParameterError(
                                f"difference {x} of block ({i}, {j}) given two colours")
                        cols[x] = t
            blocks[(i, j)] = cols
        if fill:
            for i, j in fill_order(k):
                cols = blocks.setdefault((i, j), [UNCOLORED] * m)
                for d in range(1 if i == j else 0, m):
                    if not cols[d]:
                        cols[d] = fill
        return cls(n, k, blocks, c)

    def block(self, i: int, j: int) -> tuple[int, ...]:
        """Colours by difference for block ``(i, j)``; ``i > j`` is allowed."""
        if i <= j:
            return self._blocks[(i, j)]
        return _negate(self._blocks[(j, i)], self.m)

    def color_set(self, i: int, j: int, t: int) -> tuple[int, ...]:
        return tuple(d for d, x in enumerate(self.block(i, j)) if x == t)

    def block_key(self, i: int, j: int) -> tuple:
        return _block_key(self.block(i, j), self.c)

    def key(self) -> tuple:
        return tuple(_block_key(self._blocks[p], self.c) for p in fill_order(self.k))

    def diagonal_keys(self) -> tuple:
        return tuple(self.block_key(i, i) for i in range(self.k))

    def is_block_complete(self, i: int, j: int) -> bool:
        cols = self.block(i, j)
        return all(cols[d] for d in range(1 if i == j else 0, self.m))

    def is_total(self) -> bool:
        return all(self.is_block_complete(i, j) for i, j in fill_order(self.k))

    def blocks(self) -> dict[tuple[int, int], tuple[int, ...]]:
        return dict(self._blocks)

    def _replace(self, blocks):
        return BlockCirculantColoring(self.n, self.k, blocks, self.c)

    def __eq__(self, other):
        if not isinstance(other, BlockCirculantColoring):
            return NotImplemented
        return (self.n, self.k, self.c, self._blocks) == (other.n, other.k, other.c, other._blocks)

    def __hash__(self):
        return hash((self.n, self.k, self.c, tuple(self._blocks[p] for p in fill_order(self.k))))

    def __repr__(self):
        return f"BlockCirculantColoring(n={self.n}, k={self.k}, c={self.c})"


def realize_block(b: BlockCirculantColoring) -> ColoredCompleteGraph:
    """Vertex ``(i, a)`` becomes ``i * m + a``."""
    m, k = b.m, b.k
    g = ColoredCompleteGraph(b.n, b.c)
    set_ = g.core.set
    for i, j in fill_order(k):
        cols = b.block(i, j)
        for a in range(m):
            for bb in range(m):
                if i == j and bb <= a:
                    continue
                t = cols[(bb - a) % m]
                if t:
                    set_(i * m + a, j * m + bb, t)
    return g


def lyndon_rotation(word: Sequence) -> int:
    """Smallest ``r`` making ``word[r:] + word[:r]`` the least rotation (Booth)."""
    s = list(word)
    n = len(s)
    if n == 0:
        raise ParameterError("word must be non-empty")
    ss = s + s
    fail = [-1] * (2 * n)
    best = 0
    for j in range(1, 2 * n):
        x = ss[j]
        i = fail[j - best - 1]
        while i != -1 and x != ss[best + i + 1]:
            if x < ss[best + i + 1]:
                best = j - i - 1
            i = fail[i]
        if i == -1 and x != ss[best]:
            if x < ss[best]:
                best = j
            fail[j - best] = -1
        else:
            fail[j - best] = i + 1
    # periodic words have several least rotations; report the first
    return best % _period(ss[best:best + n])


def _period(s):
    n = len(s)
    for p in range(1, n + 1):
        if n % p == 0 and s[p:] + s[:p] == s:
            return p
    return n


def apply_block_permutation(b: BlockCirculantColoring, perm: Sequence[int]) -> BlockCirculantColoring:
    """New block ``i`` is old block ``perm[i]``."""
    perm = list(perm)
    if sorted(perm) != list(range(b.k)):
        raise ParameterError(f"{perm} is not a permutation of 0..{b.k - 1}")
    return b._replace({(i, j): b.block(perm[i], perm[j]) for i, j in fill_order(b.k)})


def apply_column_rotation(b: BlockCirculantColoring, d: int, r: int) -> BlockCirculantColoring:
    """Shift block column ``d`` by ``r``: vertex ``(d, a)`` becomes ``(d, a + r)``."""
    if not 0 <= d < b.k:
        raise ParameterError(f"column {d} out of range 0..{b.k - 1}")
    m = b.m
    r %= m
    if r == 0:
        return b
    blocks = b.blocks()
    for i in range(d):
        blocks[(i, d)] = _shift(blocks[(i, d)], r, m)
    for j in range(d + 1, b.k):
        blocks[(d, j)] = _shift(blocks[(d, j)], -r, m)
    return b._replace(blocks)


def apply_unit_multiplication(b: BlockCirculantColoring, q: int) -> BlockCirculantColoring:
    m = b.m
    if gcd(q, m) != 1:
        raise ParameterError(f"{q} is not a unit modulo {m}")
    return b._replace({p: _scale(cols, q, m) for p, cols in b.blocks().items()})


def _sorting_permutations(diag_keys):
    # every permutation listing blocks by non-decreasing diagonal key
    order = sorted(range(len(diag_keys)), key=lambda i: diag_keys[i])
    groups = []
    for i in order:
        if groups and diag_keys[groups[-1][0]] == diag_keys[i]:
            groups[-1].append(i)
        else:
            groups.append([i])
    for choice in product(*(permutations(g) for g in groups)):
        yield [i for g in choice for i in g]


@lru_cache(maxsize=1 << 16)
def _shift_keys(cols, m, c):
    # key of the block after each shift r = 0..m-1
    return tuple(_block_key(_shift(cols, r, m), c) for r in range(m))


class _Below(Exception):
    pass


def _orbit_minimum(b: BlockCirculantColoring, bound=None, stop_below=False):
    """Least fill-order key over the canonicalising moves, with its blocks.

    Branches whose key prefix exceeds ``bound`` are cut. With
    ``stop_below`` the search raises :class:`_Below` at the first full key
    smaller than ``bound``. The returned blocks are ``None`` when no branch
    reached a key at most ``bound``.
    """
    m, k, c = b.m, b.k, b.c
    orders = fill_order(k)

    def diag_sorted(q):
        return tuple(sorted(_block_key(_scale(b.block(i, i), q, m), c) for i in range(k)))

    by_unit = {q: diag_sorted(q) for q in units(m)}
    best_diag = min(by_unit.values())
    best = [bound, None]  # key, blocks

    def descend(blocks, j, prefix):
        # columns < j are final; prefix is the key of their blocks in fill order
        if best[0] is not None and prefix > best[0][:len(prefix)]:
            return
        if j == k:
            if best[0] is None or prefix < best[0]:
                if stop_below:
                    raise _Below
                best[0] = prefix
                best[1] = dict(blocks)
            elif best[1] is None:
                best[1] = dict(blocks)
            return
        shifted = [_shift_keys(blocks[(i, j)], m, c) for i in range(j)]
        cands = [tuple(sk[r] for sk in shifted) for r in range(m)]
        low = min(cands)
        for r, tup in enumerate(cands):
            if tup != low:
                continue
            nb = dict(blocks)
            if r:
                for i in range(j):
                    nb[(i, j)] = _shift(blocks[(i, j)], r, m)
                for jj in range(j + 1, k):
                    nb[(j, jj)] = _shift(blocks[(j, jj)], -r, m)
            descend(nb, j + 1, prefix + low + (_block_key(nb[(j, j)], c),))

    for q, dk in by_unit.items():
        if dk != best_diag:
            continue
        scaled = {p: _scale(cols, q, m) for p, cols in b.blocks().items()}
        keys = [_block_key(scaled[(i, i)], c) for i in range(k)]
        for perm in _sorting_permutations(keys):
            permuted = {}
            for i, j in orders:
                pi, pj = perm[i], perm[j]
                permuted[(i, j)] = (scaled[(pi, pj)] if pi <= pj
                                    else _negate(scaled[(pj, pi)], m))
            descend(permuted, 1, (_block_key(permuted[(0, 0)], c),))
    return best[0], best[1]


def canonicalize_block(b: BlockCirculantColoring) -> BlockCirculantColoring:
    """Structural canonical form under units, block permutations and column shifts.

    Picks the units that minimise the sorted diagonal, sorts the diagonal,
    then shifts each column (left to right) so that its upper part is
    least among its shifts. When several choices tie at any of these steps,
    every branch is followed and the least resulting colouring is returned,
    so the result depends only on the orbit of ``b`` under these moves.
    Negation is one of the units, so the sign choice is covered too.
    """
    if not b.is_total():
        raise PartialGraphError("canonicalize_block needs a total colouring")
    return b._replace(_orbit_minimum(b)[1])


def is_canonical(b: BlockCirculantColoring) -> bool:
    """Same as ``canonicalize_block(b) == b`` but stops at the first smaller form."""
    if not b.is_total():
        raise PartialGraphError("is_canonical needs a total colouring")
    try:
        _, blocks = _orbit_minimum(b, b.key(), stop_below=True)
    except _Below:
        return False
    return blocks is not None


class PrefixChecker:
    """Necessary conditions for a partly filled colouring to be canonical.

    Each check looks only at complete blocks, so a prefix of a canonical
    colouring always passes. The search calls :meth:`block_done` when a
    block becomes complete in fill order.
    """

    def __init__(self, m: int, k: int, c: int):
        self.m, self.k, self.c = m, k, c
        self.units = units(m)[1:]

    def key(self, cols):
        return _block_key(cols, self.c)

    def diagonal_ok(self, diag: list) -> bool:
        """``diag`` holds the complete leading diagonal blocks, in order."""
        m, c = self.m, self.c
        keys = [_block_key(cols, c) for cols in diag]
        if len(keys) >= 2 and keys[-1] < keys[-2]:
            return False
        for q in self.units:
            scaled = sorted(_block_key(_scale(cols, q, m), c) for cols in diag)
            if tuple(scaled) < tuple(keys):
                return False
        return True

    def column_ok(self, column: list) -> bool:
        """``column`` holds the complete leading upper blocks of one column."""
        m, c = self.m, self.c
        here = tuple(_block_key(cols, c) for cols in column)
        for r in range(1, m):
            if tuple(_block_key(_shift(cols, r, m), c) for cols in column) < here:
                return False
        return True

    def first_pair_ok(self, cols) -> bool:
        # the first off-diagonal block may not exceed every shift of its negation
        m, c = self.m, self.c
        here = _block_key(cols, c)
        neg = _negate(cols, m)
        return all(here <= _block_key(_shift(neg, r, m), c) for r in range(m))

    def block_done(self, blocks, i: int, j: int) -> bool:
        """Check after block ``(i, j)`` completes; earlier fill-order blocks are complete."""
        if i == j:
            return self.diagonal_ok([blocks[(x, x)] for x in range(j + 1)])
        if not self.column_ok([blocks[(x, j)] for x in range(i + 1)]):
            return False
        if (i, j) == (0, 1):
            return self.first_pair_ok(blocks[(0, 1)])
        return True


def is_canonical_prefix(b: BlockCirculantColoring) -> bool:
    """False when the complete blocks of ``b`` already rule out canonicity."""
    chk = PrefixChecker(b.m, b.k, b.c)
    k = b.k
    complete = {p: b.is_block_complete(*p) for p in fill_order(k)}
    diag_done = [i for i in range(k) if complete[(i, i)]]
    keys = [b.block_key(i, i) for i in diag_done]
    if any(keys[x] > keys[x + 1] for x in range(len(keys) - 1)):
        return False
    lead = 0
    while lead < k and complete[(lead, lead)]:
        lead += 1
    if lead and not chk.diagonal_ok([b.block(x, x) for x in range(lead)]):
        return False
    for j in range(1, k):
        top = 0
        while top < j and complete[(top, j)]:
            top += 1
        if top and not chk.column_ok([b.block(x, j) for x in range(top)]):
            return False
    if k >= 2 and complete[(0, 1)] and not chk.first_pair_ok(b.block(0, 1)):
        return False
    return True
