import random
from fractions import Fraction
from math import comb

import pytest

from circramsey import (DegreeHistogram, EdgeMaxTable, ParameterError, TableRangeError,
                        builtin_tables, deficiency_sum_ledger, degree_histogram,
                        feasibility_verdict, goodman_triangle_count, mono_triangle_count,
                        realize_block, triangle_sum_via_neighborhoods, vertex_deficiency)
from circramsey.feasibility import format_tables, parse_tables
from circramsey.graph import neighborhood_subgraph
from oracles import c5, load_block, paley, random_coloring


def j5j6():
    return builtin_tables(("J5", "J6"))


def test_goodman_examples():
    assert goodman_triangle_count(DegreeHistogram(6, [0] * 5 + [6])) == 20
    assert goodman_triangle_count(DegreeHistogram(37, [0] * 16 + [37] + [0] * 20)) == 1850
    g = paley(17)
    assert goodman_triangle_count(degree_histogram(g, 1)) == 136 == mono_triangle_count(g)


def test_neighborhood_sum_examples():
    from circramsey import ColoredCompleteGraph
    assert triangle_sum_via_neighborhoods(ColoredCompleteGraph.from_edges(6, [], rest=2)) == 20
    assert triangle_sum_via_neighborhoods(c5()) == 0


def test_three_triangle_counts_agree_on_random_colorings():
    rng = random.Random(21)
    for _ in range(1000):
        g = random_coloring(rng.randint(3, 12), rng=rng, p=rng.random())
        direct = mono_triangle_count(g)
        assert goodman_triangle_count(degree_histogram(g, 1)) == direct
        assert triangle_sum_via_neighborhoods(g) == direct


def test_ledger_for_37_vertices():
    e1, e2 = j5j6()
    led = deficiency_sum_ledger(37, e1, e2)
    assert led.constant == -23310
    assert led.coefficients == {15: Fraction(1245, 2), 16: Fraction(630)}
    assert led.formula() == "-23310 + n15*622.5 + n16*630"
    assert led.evaluate(DegreeHistogram(37, [0] * 16 + [37] + [0] * 20)) == 0
    assert led.evaluate(DegreeHistogram(37, [0] * 15 + [37] + [0] * 21)) == Fraction(-555, 2)


def test_ledger_coefficients_reevaluate():
    e1, e2 = j5j6()
    for n in (36, 37):
        led = deficiency_sum_ledger(n, e1, e2)
        for i in led.coefficients:
            want = e1[i] + e2[n - 1 - i] + Fraction(3 * i * (n - 1 - i), 2) - Fraction(3 * comb(n, 3), n)
            assert led.normalized(i) == want


def test_verdict_at_37_is_divisibility():
    e1, e2 = j5j6()
    v = feasibility_verdict("J5", "J6", 37, e1, e2)
    assert v.infeasible and v.tight_degree == 16
    assert v.forced_triangles[1] == Fraction(1850, 3)
    assert "37*50/3" in v.reason
    text = v.report()
    assert "constant = -23310" in text and "TIGHT at degree 16" in text


def test_verdict_at_36_is_open():
    e1, e2 = j5j6()
    assert feasibility_verdict("J5", "J6", 36, e1, e2).status == "OPEN"


def test_inflated_tables_are_open():
    e1, e2 = j5j6()
    v = feasibility_verdict("J5", "J6", 37, e1.inflated(10), e2.inflated(10))
    assert v.status == "OPEN" and v.reason == "positive slack"


def test_negative_verdict_and_empty_window():
    e1 = EdgeMaxTable(1, ("a", "b"), {3: 0, 4: 0}, bound=5)
    e2 = EdgeMaxTable(2, ("a", "b"), {3: 0, 4: 0}, bound=5)
    assert feasibility_verdict("a", "b", 8, e1, e2).reason == "negative"
    assert feasibility_verdict("a", "b", 20, e1, e2).reason == "no admissible degree"


def test_missing_entries_raise_range_error():
    e1, e2 = j5j6()
    with pytest.raises(TableRangeError):
        feasibility_verdict("J5", "J6", 35, e1, e2)


def test_table_validation():
    with pytest.raises(ParameterError):
        EdgeMaxTable(1, ("a", "b"), {3: 4})
    with pytest.raises(ParameterError):
        EdgeMaxTable(3, ("a", "b"), {})
    e1, _ = j5j6()
    assert all(v <= comb(n, 2) for n, v in e1.inflated(10).entries.items())


def test_verdict_is_monotone_in_table_entries():
    rng = random.Random(22)
    base1, base2 = j5j6()
    for _ in range(300):
        n = rng.choice([36, 37])
        e1 = dict(base1.entries)
        e2 = dict(base2.entries)
        before = feasibility_verdict("J5", "J6", n, EdgeMaxTable(1, ("", ""), e1, 17),
                                     EdgeMaxTable(2, ("", ""), e2, 22))
        for table in (e1, e2):
            key = rng.choice(sorted(table))
            table[key] = min(table[key] + rng.randint(0, 3), comb(key, 2))
        after = feasibility_verdict("J5", "J6", n, EdgeMaxTable(1, ("", ""), e1, 17),
                                    EdgeMaxTable(2, ("", ""), e2, 22))
        if before.status == "OPEN":
            assert after.status == "OPEN"


def a1_star_tables():
    # neighbourhood bounds for the 27-vertex witness: colour-1 degree 10, colour-2 degree 16
    return (EdgeMaxTable(1, ("J3", "J7"), {10: 5}, 11),
            EdgeMaxTable(2, ("J4", "J6"), {16: 80}, 17))


def test_witness_deficiencies_are_nonnegative():
    g = realize_block(load_block("a1_star.bc"))
    e1, e2 = a1_star_tables()
    for v in range(g.n):
        assert neighborhood_subgraph(g, v, 1).edge_count(1) <= 5
        assert vertex_deficiency(g, v, e1, e2) >= 0


def test_deficiency_sum_equals_ledger_value():
    g = realize_block(load_block("a1_star.bc"))
    e1, e2 = a1_star_tables()
    led = deficiency_sum_ledger(27, e1, e2, degrees=[10])
    total = sum(vertex_deficiency(g, v, e1, e2) for v in range(27))
    assert led.evaluate(degree_histogram(g, 1)) == total


def test_deficiency_sum_on_random_graphs():
    rng = random.Random(23)
    for _ in range(200):
        n = rng.randint(3, 10)
        g = random_coloring(n, rng=rng)
        e1 = EdgeMaxTable(1, ("", ""), {i: rng.randint(0, comb(i, 2)) for i in range(n)}, n)
        e2 = EdgeMaxTable(2, ("", ""), {i: rng.randint(0, comb(i, 2)) for i in range(n)}, n)
        led = deficiency_sum_ledger(n, e1, e2, degrees=range(n))
        total = sum(vertex_deficiency(g, v, e1, e2) for v in range(n))
        assert led.evaluate(degree_histogram(g, 1)) == total


def test_single_missing_edge_gives_deficiency_one():
    from circramsey import ColoredCompleteGraph
    # vertex 0 sees 1,2,3 in colour 1 with one colour-1 edge among them
    g = ColoredCompleteGraph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2)], rest=2)
    e1 = EdgeMaxTable(1, ("", ""), {3: 2})
    e2 = EdgeMaxTable(2, ("", ""), {1: 0})
    assert vertex_deficiency(g, 0, e1, e2) == 1


def test_table_text_round_trip():
    e1, e2 = j5j6()
    a, b = parse_tables(format_tables(e1, e2))
    assert a.entries == e1.entries and b.entries == e2.entries
    assert (a.bound, b.bound) == (17, 22)
