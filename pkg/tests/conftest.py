import random
from functools import lru_cache
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import strategies as st

from domgame.graph import Graph

DATA = Path(__file__).parent / "data"


# -- independent oracles (plain sets, no bitmasks, no memo) ------------------

def nbrs(g, v):
    return {u for u in range(g.n) if g.has_edge(u, v)}


def oracle_gamma(g, total=False):
    """Smallest vertex subset whose (open or closed) neighbourhoods cover V."""
    vs = set(range(g.n))
    for k in range(g.n + 1):
        for s in combinations(range(g.n), k):
            cover = set()
            for v in s:
                cover |= nbrs(g, v) if total else nbrs(g, v) | {v}
            if cover == vs:
                return k
    raise AssertionError("no dominating set")


def oracle_game(g, total=False, dominator_first=True, start=frozenset()):
    """Plain minimax over the rules, without memoization."""
    gains = [frozenset(nbrs(g, v) if total else nbrs(g, v) | {v}) for v in range(g.n)]
    everything = frozenset(range(g.n))

    def play(covered, dom):
        if covered == everything:
            return 0
        vals = [play(covered | gain, not dom) for gain in gains if not gain <= covered]
        return 1 + (min(vals) if dom else max(vals))

    return play(frozenset(start), dominator_first)


def oracle_first_moves(g, total=False, dominator_first=True):
    gains = [frozenset(nbrs(g, v) if total else nbrs(g, v) | {v}) for v in range(g.n)]
    scores = {v: oracle_game(g, total, not dominator_first, gains[v]) for v in range(g.n)}
    best = min(scores.values()) if dominator_first else max(scores.values())
    return {v for v, s in scores.items() if s == best}


def oracle_decode_graph6(line):
    """Graph6 decoder written from the byte layout, via a bit string."""
    n = ord(line[0]) - 63
    bitstr = "".join(format(ord(c) - 63, "06b") for c in line[1:])
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bitstr[k] == "1":
                edges.append((i, j))
            k += 1
    return n, sorted(edges)


# -- graph generators ---------------------------------------------------------

def random_graph(rng, n, p=0.5):
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2)
                                if rng.random() < p])


def blow_up_twins(rng, g, target_n):
    """Replace random vertices by true-twin copies until target_n vertices."""
    adj = [set(nbrs(g, v)) for v in range(g.n)]
    while len(adj) < target_n:
        v = rng.randrange(len(adj))
        w = len(adj)
        adj.append(set(adj[v]) | {v})
        for u in adj[v]:
            adj[u].add(w)
        adj[v].add(w)
    n = len(adj)
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in adj[u] if u < v])


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


@pytest.fixture
def rng():
    return random.Random(20190517)


@lru_cache(maxsize=None)
def graph_file(n):
    from domgame.enumeration import read_graph6_file
    return tuple(read_graph6_file(DATA / f"graphs{n}.g6.gz"))
