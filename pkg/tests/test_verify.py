import random

import pytest

from circramsey import (ColoredCompleteGraph, ParameterError, PatternSpec, are_isomorphic,
                        dedupe_nonisomorphic, enumerate_all_small, is_ramsey_graph, realize_block,
                        verify_ramsey)
from circramsey.verify import invariant_hash
from oracles import c5, fixture_path, load_block, nx_isomorphic, paley, random_coloring

K, J = PatternSpec.clique, PatternSpec.near_clique


def shuffled(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabeled(perm)


def test_verify_examples():
    assert verify_ramsey(realize_block(load_block("a1.bc")), (J(4), J(7))).valid
    assert verify_ramsey(paley(17), (K(4), K(4))).valid
    blue = ColoredCompleteGraph.from_edges(5, [], rest=2)
    v = verify_ramsey(blue, (K(3), K(3)))
    assert not v.valid and v.color == 2 and len(v.vertices) == 3
    assert v.describe().startswith("INVALID color 2 K3:")


def test_verify_rejects_partial_graphs():
    with pytest.raises(ParameterError):
        verify_ramsey(ColoredCompleteGraph(4, 2), (K(3), K(3)))


def witness_is_copy(g, verdict):
    verts = verdict.vertices
    t, p = verdict.color, verdict.pattern
    inside = sum(g.color(u, v) == t for i, u in enumerate(verts) for v in verts[i + 1:])
    if p.kind == "K":
        return inside == len(verts) * (len(verts) - 1) // 2
    if p.kind == "J":
        return inside >= len(verts) * (len(verts) - 1) // 2 - 1
    return True


@pytest.mark.parametrize("patterns", [(K(3), K(4)), (J(4), J(5)), (PatternSpec.cycle(4), K(4)),
                                      (PatternSpec.wheel(5), K(3)),
                                      (PatternSpec.bipartite(2, 2), J(4)),
                                      (K(3), K(3), K(3))])
def test_checkers_agree_on_random_colorings(patterns):
    rng = random.Random(41)
    for _ in range(170):
        g = random_coloring(rng.randint(3, 10), c=len(patterns), rng=rng)
        v = verify_ramsey(g, patterns)
        assert v.valid == is_ramsey_graph(g, patterns)
        if not v.valid:
            assert witness_is_copy(g, v)


def test_isomorphism_examples():
    blue = ColoredCompleteGraph.from_edges(5, [], rest=2)
    assert not are_isomorphic(c5(), blue)
    assert are_isomorphic(realize_block(load_block("a1.bc")),
                          realize_block(load_block("a1_star.bc")))
    with pytest.raises(ParameterError):
        are_isomorphic(c5(), ColoredCompleteGraph(6, 2))


def test_isomorphism_agrees_with_networkx():
    rng = random.Random(42)
    for _ in range(150):
        n = rng.randint(1, 9)
        g = random_coloring(n, c=rng.choice([2, 3]), rng=rng)
        h = shuffled(g, rng) if rng.random() < 0.5 else random_coloring(n, c=g.c, rng=rng)
        assert are_isomorphic(g, h) == nx_isomorphic(g, h)


def test_isomorphism_on_regular_graphs():
    # refinement alone cannot split these; the search must individualise
    g = realize_block(load_block("a1.bc"))
    rng = random.Random(43)
    assert are_isomorphic(g, shuffled(g, rng))
    p = paley(17)
    assert are_isomorphic(p, shuffled(p, rng))
    other = p.copy()
    other.set_color(0, 1, 3 - other.color(0, 1))
    assert not are_isomorphic(p, other)


def test_isomorphism_is_an_equivalence():
    rng = random.Random(44)
    for _ in range(60):
        g = random_coloring(rng.randint(2, 8), rng=rng)
        h, k = shuffled(g, rng), random_coloring(g.n, rng=rng)
        assert are_isomorphic(g, g)
        assert are_isomorphic(g, k) == are_isomorphic(k, g)
        if are_isomorphic(g, h) and are_isomorphic(h, k):
            assert are_isomorphic(g, k)


def test_invariant_hash_is_isomorphism_invariant():
    rng = random.Random(45)
    for _ in range(50):
        g = random_coloring(rng.randint(2, 10), rng=rng)
        assert invariant_hash(g) == invariant_hash(shuffled(g, rng))


def test_dedupe_keeps_first_of_each_class():
    rng = random.Random(46)
    g = c5()
    out = dedupe_nonisomorphic([g] * 5)
    assert len(out) == 1 and out[0] is g
    a, b = random_coloring(7, rng=rng), random_coloring(7, rng=rng, p=0.9)
    mixed = [a, shuffled(b, rng), shuffled(a, rng), b]
    out = dedupe_nonisomorphic(mixed)
    assert out == [a, mixed[1]] or (are_isomorphic(a, b) and out == [a])


def load_census():
    rows = {}
    with open(fixture_path("census_j4_j6.txt")) as fh:
        for line in fh:
            if line.strip() and not line.startswith("#"):
                n, e, cnt = map(int, line.split())
                rows[(n, e)] = cnt
    return rows


def test_small_census_matches_fixture():
    got = enumerate_all_small((J(4), J(6)), 7)
    want = {k: v for k, v in load_census().items() if k[0] <= 7}
    assert {k: v for k, v in got.items() if k[0] >= 3} == want
    totals = [sum(v for (n, _), v in got.items() if n == size) for size in range(3, 8)]
    assert totals == [4, 9, 22, 67, 235]
    assert got[(7, 10)] == 22


def test_triangle_census():
    got = enumerate_all_small((K(3), K(3)), 6)
    assert got[(5, 5)] >= 1
    assert not any(n == 6 for n, _ in got)


def test_census_order_limit():
    with pytest.raises(ParameterError):
        enumerate_all_small((J(4), J(6)), 9)
