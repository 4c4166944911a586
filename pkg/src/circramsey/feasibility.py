"""Triangle counting and deficiency arithmetic for upper-bound arguments.

Everything is exact: counts are ints and coefficients are Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from math import comb
from typing import Mapping

from .errors import ParameterError, TableRangeError
from .graph import ColoredCompleteGraph, DegreeHistogram, neighborhood_subgraph


@dataclass(frozen=True)
class EdgeMaxTable:
    """Largest colour-``role`` edge count over the Ramsey graphs of each order.

    ``bound`` is the Ramsey number that caps the colour-``role`` degree: a
    vertex of a larger graph has colour-``role`` degree below ``bound``.
    """

    role: int
    params: tuple[str, str]
    entries: Mapping[int, int]
    bound: int | None = None

    def __post_init__(self):
        if self.role not in (1, 2):
            raise ParameterError("table role must be 1 or 2")
        for n, v in self.entries.items():
            if not 0 <= v <= comb(n, 2):
                raise ParameterError(f"entry {v} for n={n} is not a valid edge count")

    def __getitem__(self, n: int) -> int:
        try:
            return self.entries[n]
        except KeyError:
            raise TableRangeError(
                f"E{self.role}({self.params[0]},{self.params[1]};{n}) is not in the table"
            ) from None

    def __contains__(self, n):
        return n in self.entries

    def inflated(self, extra: int) -> "EdgeMaxTable":
        """Every entry raised by ``extra``, capped at the number of pairs."""
        return EdgeMaxTable(self.role, self.params,
                            {n: min(v + extra, comb(n, 2)) for n, v in self.entries.items()},
                            self.bound)


# colour-1 neighbourhoods of a (J5,J6)-graph are (J4,J6)-graphs, colour-2
# neighbourhoods are (J5,J5)-graphs
J4J6_MAX_EDGES = {3: 3, 4: 4, 5: 6, 6: 9, 7: 12, 8: 16, 9: 20, 10: 25, 11: 27,
                  12: 30, 13: 34, 14: 39, 15: 45, 16: 50}
J5J5_MAX_SECOND = {19: 93, 20: 100, 21: 105}


def builtin_tables(patterns: tuple[str, str]) -> tuple[EdgeMaxTable, EdgeMaxTable]:
    """Shipped tables; only the (J5, J6) problem has them."""
    if tuple(patterns) != ("J5", "J6"):
        raise ParameterError(f"no built-in tables for {patterns[0]},{patterns[1]}; pass a table file")
    return (EdgeMaxTable(1, ("J4", "J6"), dict(J4J6_MAX_EDGES), bound=17),
            EdgeMaxTable(2, ("J5", "J5"), dict(J5J5_MAX_SECOND), bound=22))


def goodman_triangle_count(h: DegreeHistogram) -> Fraction:
    n = h.n
    s = sum(cnt * j * (n - 1 - j) for j, cnt in enumerate(h.counts))
    return comb(n, 3) - Fraction(s, 2)


def triangle_sum_via_neighborhoods(g: ColoredCompleteGraph) -> int:
    """Monochromatic triangles as a third of the neighbourhood edge sum."""
    g.require_total("triangle_sum_via_neighborhoods")
    if g.c != 2:
        raise ParameterError("the neighbourhood sum is defined for two colours")
    total = 0
    for v in range(g.n):
        for t in (1, 2):
            total += neighborhood_subgraph(g, v, t).edge_count(t)
    if total % 3:
        raise ArithmeticError(f"neighbourhood edge sum {total} is not divisible by 3")
    return total // 3


def vertex_deficiency(g: ColoredCompleteGraph, v: int, e1: EdgeMaxTable, e2: EdgeMaxTable) -> int:
    g.require_total("vertex_deficiency")
    if g.c != 2:
        raise ParameterError("deficiency is defined for two colours")
    d1, d2 = g.degree(v, 1), g.degree(v, 2)
    n1 = neighborhood_subgraph(g, v, 1).edge_count(1)
    n2 = neighborhood_subgraph(g, v, 2).edge_count(2)
    return e1[d1] - n1 + e2[d2] - n2


def _fmt(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    den = x.denominator
    while den % 2 == 0:
        den //= 2
    while den % 5 == 0:
        den //= 5
    if den == 1:
        return str(Decimal(x.numerator) / Decimal(x.denominator))
    return f"{x.numerator}/{x.denominator}"


@dataclass
class DeficiencyLedger:
    """Sum of deficiencies as ``constant + sum_i count_i * coefficient_i``.

    ``count_i`` is the number of vertices of colour-1 degree ``i``; only the
    degrees in the admissible window appear.
    """

    n: int
    constant: int
    coefficients: dict[int, Fraction] = field(default_factory=dict)

    def normalized(self, i: int) -> Fraction:
        """Coefficient after spreading the constant evenly over the ``n`` vertices."""
        return self.coefficients[i] + Fraction(self.constant, self.n)

    def evaluate(self, h: DegreeHistogram) -> Fraction:
        total = Fraction(self.constant)
        for i, cnt in enumerate(h.counts):
            if cnt:
                if i not in self.coefficients:
                    raise TableRangeError(f"degree {i} is outside the ledger window")
                total += cnt * self.coefficients[i]
        return total

    @property
    def max_normalized(self) -> Fraction:
        return max(self.normalized(i) for i in self.coefficients)

    @property
    def argmax(self) -> list[int]:
        top = self.max_normalized
        return [i for i in sorted(self.coefficients) if self.normalized(i) == top]

    def formula(self) -> str:
        terms = [str(self.constant)]
        for i in sorted(self.coefficients):
            terms.append(f"n{i}*{_fmt(self.coefficients[i])}")
        return " + ".join(terms)


def degree_window(n: int, e1: EdgeMaxTable, e2: EdgeMaxTable) -> range:
    """Colour-1 degrees allowed by the two Ramsey bounds."""
    if e1.bound is None or e2.bound is None:
        raise ParameterError("both tables need a Ramsey bound for the degree window")
    lo = max(0, n - e2.bound)
    hi = min(n - 1, e1.bound - 1)
    return range(lo, hi + 1)


def deficiency_sum_ledger(n: int, e1: EdgeMaxTable, e2: EdgeMaxTable,
                          degrees=None) -> DeficiencyLedger:
    if n < 1:
        raise ParameterError("n must be positive")
    if degrees is None:
        degrees = degree_window(n, e1, e2)
    ledger = DeficiencyLedger(n, -3 * comb(n, 3))
    for i in degrees:
        ledger.coefficients[i] = (e1[i] + e2[n - 1 - i]
                                  + Fraction(3 * i * (n - 1 - i), 2))
    return ledger


@dataclass
class FeasibilityVerdict:
    status: str  # "INFEASIBLE" or "OPEN"
    reason: str
    ledger: DeficiencyLedger
    tight_degree: int | None = None
    forced_triangles: dict[int, Fraction] = field(default_factory=dict)

    @property
    def infeasible(self) -> bool:
        return self.status == "INFEASIBLE"

    def report(self) -> str:
        led = self.ledger
        lines = [f"n = {led.n}",
                 f"constant = {led.constant}"]
        for i in sorted(led.coefficients):
            lines.append(f"degree {i}: coefficient {_fmt(led.coefficients[i])}, "
                         f"per vertex {_fmt(led.normalized(i))}")
        lines.append(f"sum of deficiencies = {led.formula()}")
        if self.tight_degree is not None:
            lines.append(f"TIGHT at degree {self.tight_degree}")
            for t, val in sorted(self.forced_triangles.items()):
                lines.append(f"forced color-{t} triangles = {_fmt(val)}")
        lines.append(f"verdict: {self.status} ({self.reason})")
        return "\n".join(lines)


def feasibility_verdict(k: str, l: str, n: int, e1: EdgeMaxTable, e2: EdgeMaxTable,
                        ramsey_bounds: tuple[int, int] | None = None) -> FeasibilityVerdict:
    """Decide whether the deficiency sum rules out a (k, l; n) Ramsey graph.

    ``k`` and ``l`` only label the report. ``ramsey_bounds`` overrides the
    tables' own degree bounds when given.
    """
    if ramsey_bounds is not None:
        e1 = EdgeMaxTable(e1.role, e1.params, e1.entries, ramsey_bounds[0])
        e2 = EdgeMaxTable(e2.role, e2.params, e2.entries, ramsey_bounds[1])
    window = degree_window(n, e1, e2)
    if not window:
        ledger = DeficiencyLedger(n, -3 * comb(n, 3))
        return FeasibilityVerdict("INFEASIBLE", "no admissible degree", ledger)
    ledger = deficiency_sum_ledger(n, e1, e2, window)
    top = ledger.max_normalized
    if top < 0:
        return FeasibilityVerdict("INFEASIBLE", "negative", ledger)
    if top > 0:
        return FeasibilityVerdict("OPEN", "positive slack", ledger)
    args = ledger.argmax
    if len(args) > 1:
        return FeasibilityVerdict("OPEN", f"zero slack at degrees {args}", ledger)
    d = args[0]
    # every vertex has degree d and extremal neighbourhoods
    forced = {1: Fraction(n * e1[d], 3), 2: Fraction(n * e2[n - 1 - d], 3)}
    verdict = FeasibilityVerdict("OPEN", f"tight at degree {d}", ledger, d, forced)
    for t, val in sorted(forced.items()):
        if val.denominator != 1:
            e = e1[d] if t == 1 else e2[n - 1 - d]
            verdict.status = "INFEASIBLE"
            verdict.reason = (f"divisibility: {n}*{e}/3 = {val.numerator}/{val.denominator} "
                              f"color-{t} triangles is not an integer")
            break
    return verdict


def parse_tables(text: str) -> tuple[EdgeMaxTable, EdgeMaxTable]:
    """Read ``E1 n value``, ``E2 n value``, ``bound1 value`` and ``bound2 value`` lines."""
    from .errors import ParseError

    e1, e2 = {}, {}
    bounds = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] in ("E1", "E2") and len(parts) == 3:
                (e1 if parts[0] == "E1" else e2)[int(parts[1])] = int(parts[2])
            elif parts[0] in ("bound1", "bound2") and len(parts) == 2:
                bounds[parts[0]] = int(parts[1])
            else:
                raise ValueError
        except ValueError:
            raise ParseError(f"bad table line {raw!r}", lineno) from None
    for key in ("bound1", "bound2"):
        if key not in bounds:
            raise ParseError(f"table file lacks {key}")
    return (EdgeMaxTable(1, ("", ""), e1, bounds["bound1"]),
            EdgeMaxTable(2, ("", ""), e2, bounds["bound2"]))


def format_tables(e1: EdgeMaxTable, e2: EdgeMaxTable) -> str:
    lines = [f"E1 {n} {v}" for n, v in sorted(e1.entries.items())]
    lines += [f"E2 {n} {v}" for n, v in sorted(e2.entries.items())]
    lines += [f"bound1 {e1.bound}", f"bound2 {e2.bound}"]
    return "\n".join(lines) + "\n"
