"""Text formats: graph6, pattern names, circulant and block-circulant records.

Circulant record, one line, class representatives per colour::

    circ n=13 c=2 / 1 : 1 5 / 2 : 2 3 4 6

Block-circulant record, a header then one line per block and colour with
1-based block indices (diagonal sets are listed in full, both ``d`` and
``m - d``)::

    blockcirc n=27 k=3 c=2
    1 1 1 : 3 4 5 6
    1 1 2 : 1 2 7 8
    ...
"""

from __future__ import annotations

import re
from typing import Iterable, Union

from .blockcirc import BlockCirculantColoring, fill_order, realize_block
from .circulant import CirculantColoring, realize_circulant
from .errors import ParameterError, ParseError
from .graph import ColoredCompleteGraph
from .pattern import PatternSpec

GRAPH6_HEADER = ">>graph6<<"

Record = Union[ColoredCompleteGraph, CirculantColoring, BlockCirculantColoring]


# graph6

def _size_bytes(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    raise ParameterError("graph6 here supports n < 258048")


def encode_graph6(g: ColoredCompleteGraph) -> str:
    """graph6 line (no newline) of the colour-1 graph."""
    n = g.n
    get = g.core.get
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if get(u, v) == 1 else 0)
    bits.extend([0] * (-len(bits) % 6))
    out = bytearray(_size_bytes(n))
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i:i + 6]:
            x = (x << 1) | b
        out.append(63 + x)
    return out.decode("ascii")


def decode_graph6(text: str, c: int = 2) -> ColoredCompleteGraph:
    """Graph whose colour-1 pairs are the edges; all other pairs get colour ``c``."""
    line = text.strip()
    skip = 0
    if line.startswith(GRAPH6_HEADER):
        skip = len(GRAPH6_HEADER)
        line = line[skip:]
    data = line.encode("ascii", "replace")
    if not data:
        raise ParseError("empty graph6 line", skip)
    for pos, ch in enumerate(data):
        if not 63 <= ch <= 126:
            raise ParseError(f"invalid graph6 character {chr(ch)!r}", skip + pos)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    else:
        if len(data) < 4:
            raise ParseError("truncated graph6 size field", skip + len(data))
        if data[1] == 126:
            raise ParseError("graph6 sizes above 258047 are not supported", skip + 1)
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    nbits = n * (n - 1) // 2
    want = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != want:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {want}",
                         skip + pos + min(len(body), want))
    g = ColoredCompleteGraph.from_edges(n, (), c=c, rest=c)
    set_ = g.core.set
    idx = 0
    for v in range(1, n):
        for u in range(v):
            byte = body[idx // 6] - 63
            if (byte >> (5 - idx % 6)) & 1:
                set_(u, v, 1)
            idx += 1
    # padding bits must be zero
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise ParseError("non-zero graph6 padding bits", skip + pos + len(body) - 1)
    return g


# patterns

_PATTERN_RE = re.compile(r"^\s*([KJCW])\s*(\d+)\s*(?:,\s*(\d+))?\s*$")


def parse_pattern(text: str) -> PatternSpec:
    m = _PATTERN_RE.match(text)
    if not m:
        raise ParseError(f"cannot parse pattern {text!r}")
    kind, a, b = m.group(1), int(m.group(2)), m.group(3)
    try:
        if b is not None:
            if kind != "K":
                raise ParseError(f"only K takes two sizes: {text!r}")
            return PatternSpec("KB", a, int(b))
        return PatternSpec(kind, a)
    except ParameterError as exc:
        raise ParseError(f"invalid pattern {text!r}: {exc}") from None


def parse_pattern_list(text: str) -> list[PatternSpec]:
    """Split ``"J4,J7"`` or ``"K3,5,K4"``: a bare number continues a bipartite name."""
    tokens = [t.strip() for t in text.split(",")]
    merged: list[str] = []
    for tok in tokens:
        if tok.isdigit() and merged:
            merged[-1] += "," + tok
        else:
            merged.append(tok)
    return [parse_pattern(t) for t in merged]


# circulant records

_KV_RE = re.compile(r"(\w+)=(\d+)")


def _header_values(line: str, keys: tuple[str, ...], lineno=None) -> dict[str, int]:
    found = {k: int(v) for k, v in _KV_RE.findall(line)}
    missing = [k for k in keys if k not in found]
    if missing:
        raise ParseError(f"header lacks {', '.join(missing)}", lineno)
    return found


def emit_circ(col: CirculantColoring) -> str:
    parts = [f"circ n={col.n} c={col.c}"]
    for t in range(1, col.c + 1):
        reps = " ".join(map(str, col.class_reps(t)))
        parts.append(f"{t} : {reps}".rstrip())
    return " / ".join(parts)


def parse_circ(line: str, lineno=None) -> CirculantColoring:
    chunks = [x.strip() for x in line.split("/")]
    head = _header_values(chunks[0], ("n",), lineno)
    n, c = head["n"], head.get("c", 2)
    sets: dict[int, list[int]] = {}
    for chunk in chunks[1:]:
        if ":" not in chunk:
            raise ParseError(f"circulant colour group {chunk!r} lacks ':'", lineno)
        left, right = chunk.split(":", 1)
        try:
            t = int(left)
            sets.setdefault(t, []).extend(int(x) for x in right.split())
        except ValueError:
            raise ParseError(f"bad number in {chunk!r}", lineno) from None
    try:
        return CirculantColoring.from_sets(n, sets, c)
    except ParameterError as exc:
        raise ParseError(str(exc), lineno) from None


# block-circulant records

def emit_blockcirc(b: BlockCirculantColoring) -> str:
    lines = [f"blockcirc n={b.n} k={b.k} c={b.c}"]
    for i in range(b.k):
        for j in range(i, b.k):
            for t in range(1, b.c + 1):
                ds = " ".join(map(str, b.color_set(i, j, t)))
                lines.append(f"{i + 1} {j + 1} {t} : {ds}".rstrip())
    return "\n".join(lines)


def _parse_blockcirc_lines(header: str, body: list[tuple[int, str]], lineno=None):
    head = _header_values(header, ("n", "k"), lineno)
    n, k, c = head["n"], head["k"], head.get("c", 2)
    if k < 1 or n % k:
        raise ParseError(f"block count {k} must divide n={n}", lineno)
    m = n // k
    blocks = {p: [0] * m for p in fill_order(k)}
    for ln, line in body:
        if ":" not in line:
            raise ParseError(f"block line {line!r} lacks ':'", ln)
        left, right = line.split(":", 1)
        try:
            i, j, t = (int(x) for x in left.split())
            ds = [int(x) for x in right.split()]
        except ValueError:
            raise ParseError(f"bad block line {line!r}", ln) from None
        if not (1 <= i <= j <= k):
            raise ParseError(f"block ({i}, {j}) is not on or above the diagonal", ln)
        if not 1 <= t <= c:
            raise ParseError(f"colour {t} out of range 1..{c}", ln)
        cols = blocks[(i - 1, j - 1)]
        for d in ds:
            if not 0 <= d < m or (i == j and d == 0):
                raise ParseError(f"difference {d} invalid in block ({i}, {j})", ln)
            if cols[d] and cols[d] != t:
                raise ParseError(
                    f"slot: block ({i}, {j}) difference {d} has colours {cols[d]} and {t}", ln)
            cols[d] = t
    for (i, j), cols in blocks.items():
        if i == j:
            for d in range(1, m):
                if cols[d] != cols[m - d]:
                    raise ParseError(
                        f"slot: block ({i + 1}, {j + 1}) differences {d} and {m - d} disagree",
                        lineno)
    return BlockCirculantColoring(n, k, blocks, c)


def parse_blockcirc(text: str) -> BlockCirculantColoring:
    records = list(parse_records(text))
    if len(records) != 1 or not isinstance(records[0], BlockCirculantColoring):
        raise ParseError("expected exactly one blockcirc record")
    return records[0]


# mixed record files

def parse_records(text: str) -> Iterable[Record]:
    """Yield each record of a file mixing graph6, circ and blockcirc entries."""
    header = None
    header_no = None
    body: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is not None and line[0].isdigit():
            body.append((lineno, line))
            continue
        if header is not None:
            yield _parse_blockcirc_lines(header, body, header_no)
            header, body = None, []
        # graph6 never contains spaces, so these prefixes are unambiguous
        if line.startswith("blockcirc "):
            header, header_no = line, lineno
        elif line.startswith("circ "):
            yield parse_circ(line, lineno)
        else:
            try:
                yield decode_graph6(line)
            except ParseError as exc:
                raise ParseError(f"line {lineno}: {exc}") from None
    if header is not None:
        yield _parse_blockcirc_lines(header, body, header_no)


def emit_record(rec: Record) -> str:
    if isinstance(rec, CirculantColoring):
        return emit_circ(rec)
    if isinstance(rec, BlockCirculantColoring):
        return emit_blockcirc(rec)
    return encode_graph6(rec)


def realize_record(rec: Record) -> ColoredCompleteGraph:
    if isinstance(rec, CirculantColoring):
        return realize_circulant(rec)
    if isinstance(rec, BlockCirculantColoring):
        return realize_block(rec)
    return rec


def format_census(census: dict[tuple[int, int], int]) -> str:
    return "".join(f"{n} {e} {cnt}\n" for (n, e), cnt in sorted(census.items()))
