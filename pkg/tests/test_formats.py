import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circramsey import (BlockCirculantColoring, CirculantColoring, ColoredCompleteGraph,
                        ParseError, PatternSpec, decode_graph6, emit_blockcirc, emit_circ,
                        encode_graph6, parse_blockcirc, parse_circ, parse_pattern)
from circramsey.formats import emit_record, parse_pattern_list, parse_records
from oracles import c5, color_graph, fixture_path, random_block, random_coloring


def test_graph6_examples():
    assert encode_graph6(ColoredCompleteGraph(1, 2)) == "@"
    assert encode_graph6(c5()) == "Dhc"
    tri = decode_graph6(encode_graph6(ColoredCompleteGraph.from_edges(3, [(0, 1), (0, 2), (1, 2)])))
    assert tri.edges(1) == [(0, 1), (0, 2), (1, 2)]
    assert decode_graph6(">>graph6<<Dhc") == c5()


def test_graph6_round_trip_matches_networkx():
    rng = random.Random(51)
    for _ in range(1000):
        n = rng.randint(1, 60)
        g = random_coloring(n, rng=rng, p=rng.random())
        text = encode_graph6(g)
        assert decode_graph6(text) == g
        assert text == nx.to_graph6_bytes(color_graph(g, 1), header=False).decode().strip()


def test_graph6_long_size_field():
    g = random_coloring(100, rng=random.Random(52))
    text = encode_graph6(g)
    assert text[0] == "~"
    assert decode_graph6(text) == g


@pytest.mark.parametrize("text,offset", [("", 0), ("D h", 1), ("Dh", 2), ("~??", 3), ("Dhd", 2)])
def test_graph6_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        decode_graph6(text)
    assert info.value.offset == offset


def test_pattern_parsing():
    assert parse_pattern("J4") == PatternSpec.near_clique(4)
    assert parse_pattern("K3,5") == PatternSpec.bipartite(3, 5)
    assert parse_pattern("C4") == PatternSpec.cycle(4)
    assert parse_pattern("W7") == PatternSpec.wheel(7)
    assert parse_pattern("K5") == PatternSpec.clique(5)
    for bad in ("J2", "X4", "K", "J3,4", "K0", "W3"):
        with pytest.raises(ParseError):
            parse_pattern(bad)
    assert parse_pattern_list("K3,5,J4") == [PatternSpec.bipartite(3, 5), PatternSpec.near_clique(4)]
    assert parse_pattern_list("J4,J7") == [PatternSpec.near_clique(4), PatternSpec.near_clique(7)]


def test_a1_fixture():
    with open(fixture_path("a1.bc")) as fh:
        b = parse_blockcirc(fh.read())
    assert (b.n, b.k, b.c) == (27, 3, 2)
    assert b.color_set(0, 1, 1) == (0, 1, 2)
    assert parse_blockcirc(emit_blockcirc(b)) == b


def test_blockcirc_round_trip():
    rng = random.Random(53)
    for _ in range(100):
        k = rng.randint(1, 4)
        b = random_block(k * rng.randint(1, 8), k, c=rng.randint(2, 3), rng=rng)
        text = emit_blockcirc(b)
        assert parse_blockcirc(text) == b
        lines = text.splitlines()[1:]
        keys = [tuple(map(int, ln.split(":")[0].split())) for ln in lines]
        assert keys == sorted(keys)


def test_blockcirc_double_assignment_names_slot():
    text = "blockcirc n=8 k=2 c=2\n1 2 1 : 0 3\n1 2 2 : 1 2 3\n"
    with pytest.raises(ParseError, match=r"block \(1, 2\) difference 3"):
        parse_blockcirc(text)


def test_blockcirc_asymmetric_diagonal_rejected():
    with pytest.raises(ParseError, match="disagree"):
        parse_blockcirc("blockcirc n=10 k=2 c=2\n1 1 1 : 1\n")


def test_circ_round_trip():
    rng = random.Random(54)
    for _ in range(100):
        n = rng.randint(3, 40)
        c = rng.randint(2, 4)
        col = CirculantColoring(n, [rng.randint(1, c) for _ in range(n // 2)], c)
        assert parse_circ(emit_circ(col)) == col
    assert emit_circ(CirculantColoring.from_sets(13, {1: [1, 5]}, fill=2)) == \
        "circ n=13 c=2 / 1 : 1 5 / 2 : 2 3 4 6"


def test_mixed_record_stream():
    b = random_block(12, 3, rng=random.Random(55))
    col = CirculantColoring(7, (1, 2, 1))
    text = "\n".join(["# mixed", emit_record(c5()), emit_record(b), emit_record(col), "Dhc", ""])
    recs = list(parse_records(text))
    assert recs == [c5(), b, col, c5()]
    assert isinstance(recs[1], BlockCirculantColoring)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 20), st.randoms(use_true_random=False))
def test_graph6_decode_of_encode_property(n, rng):
    g = random_coloring(n, rng=rng)
    assert decode_graph6(encode_graph6(g)) == g
