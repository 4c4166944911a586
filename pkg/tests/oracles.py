"""Slow reference implementations used only by the tests.

None of these touch the package's kernels; the graph-level ones go
through networkx.
"""

import itertools
import os
import random
from math import comb

import networkx as nx
from networkx.algorithms import isomorphism

from circramsey import BlockCirculantColoring, ColoredCompleteGraph, PatternSpec
from circramsey.formats import parse_blockcirc

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_path(name):
    return os.path.join(FIXTURES, name)


def load_block(name):
    with open(fixture_path(name)) as fh:
        return parse_blockcirc(fh.read())


def color_graph(g, t):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges(t))
    return h


def pattern_graph(p: PatternSpec):
    if p.kind == "K":
        return nx.complete_graph(p.k)
    if p.kind == "J":
        h = nx.complete_graph(p.k)
        h.remove_edge(0, 1)
        return h
    if p.kind == "C":
        return nx.cycle_graph(p.k)
    if p.kind == "W":
        return nx.wheel_graph(p.k)
    return nx.complete_bipartite_graph(p.k, p.b)


def nx_contains(host: nx.Graph, p: PatternSpec) -> bool:
    pat = pattern_graph(p)
    if pat.number_of_edges() > host.number_of_edges():
        return False
    return isomorphism.GraphMatcher(host, pat).subgraph_is_monomorphic()


def nx_contains_through(host: nx.Graph, p: PatternSpec, u, v) -> bool:
    if not host.has_edge(u, v):
        return False
    pat = pattern_graph(p)
    gm = isomorphism.GraphMatcher(host, pat)
    # mappings go from host vertices to pattern vertices
    for mapping in gm.subgraph_monomorphisms_iter():
        if u in mapping and v in mapping and pat.has_edge(mapping[u], mapping[v]):
            return True
    return False


def brute_near_clique(host: nx.Graph, k: int) -> bool:
    for sub in itertools.combinations(host.nodes, k):
        if host.subgraph(sub).number_of_edges() >= comb(k, 2) - 1:
            return True
    return False


def nx_isomorphic(g, h) -> bool:
    def as_nx(x):
        out = nx.complete_graph(x.n)
        for u, v in out.edges:
            out[u][v]["c"] = x.color(u, v)
        return out
    return nx.is_isomorphic(as_nx(g), as_nx(h), edge_match=lambda a, b: a["c"] == b["c"])


def random_coloring(n, c=2, rng=None, p=None, partial=0.0):
    rng = rng or random.Random()
    g = ColoredCompleteGraph(n, c)
    for u, v in g.pairs():
        if partial and rng.random() < partial:
            continue
        if p is not None and c == 2:
            t = 1 if rng.random() < p else 2
        else:
            t = rng.randint(1, c)
        g.set_color(u, v, t)
    return g


def random_block(n, k, c=2, rng=None):
    rng = rng or random.Random()
    m = n // k
    blocks = {}
    for i in range(k):
        for j in range(i, k):
            cols = [0] * m
            if i == j:
                for d in range(1, m // 2 + 1):
                    t = rng.randint(1, c)
                    cols[d] = cols[(m - d) % m] = t
            else:
                cols = [rng.randint(1, c) for _ in range(m)]
            blocks[(i, j)] = cols
    return BlockCirculantColoring(n, k, blocks, c)


def all_circulant_sets(n):
    """Every symmetric subset of Z_n minus zero, as sorted tuples."""
    classes = list(range(1, n // 2 + 1))
    for mask in range(1 << len(classes)):
        s = set()
        for bit, d in enumerate(classes):
            if mask >> bit & 1:
                s |= {d, n - d}
        yield tuple(sorted(s))


def circulant_graph_from_set(n, s):
    g = ColoredCompleteGraph(n, 2)
    for u, v in g.pairs():
        g.set_color(u, v, 1 if (v - u) % n in s else 2)
    return g


def c5():
    return circulant_graph_from_set(5, {1, 4})


def paley(p):
    qr = {(x * x) % p for x in range(1, p)}
    return circulant_graph_from_set(p, qr)
