"""Canonical labelling by exhaustive permutation search over refined cells.

The canonical code of a graph is the lexicographically smallest
upper-triangle bitstring (graph6 bit order) over all labellings that respect
an isomorphism-invariant ordered partition of the vertices. The partition
starts from degrees and is refined by neighbour-cell counts until stable;
only permutations inside cells are tried.
"""

from __future__ import annotations

from itertools import permutations, product

from .graph import Graph, bits


def refined_cells(g: Graph) -> list[list[int]]:
    colour = [g.degree(v) for v in range(g.n)]
    while True:
        sig = [
            (colour[v], tuple(sorted(colour[u] for u in bits(g.adj[v]))))
            for v in range(g.n)
        ]
        keys = sorted(set(sig))
        rank = {k: i for i, k in enumerate(keys)}
        new = [rank[s] for s in sig]
        if len(keys) == len(set(colour)):
            colour = new
            break
        colour = new
    cells: dict[int, list[int]] = {}
    for v in range(g.n):
        cells.setdefault(colour[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def _code(g: Graph, order: tuple[int, ...]) -> int:
    """Bitstring of the relabelled graph where new vertex i is ``order[i]``."""
    code = 0
    adj = g.adj
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def canonical_order(g: Graph) -> tuple[int, ...]:
    """Vertex order giving the canonical code (new vertex i = old order[i])."""
    if g.n <= 1:
        return tuple(range(g.n))
    cells = refined_cells(g)
    best_code = None
    best_order: tuple[int, ...] = ()
    for parts in product(*(permutations(c) for c in cells)):
        order = tuple(v for part in parts for v in part)
        code = _code(g, order)
        if best_code is None or code < best_code:
            best_code = code
            best_order = order
    return best_order


def canonical_form(g: Graph) -> Graph:
    order = canonical_order(g)
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return g.relabel(perm)


def canonical_key(g: Graph) -> tuple[int, int]:
    return g.n, _code(g, canonical_order(g))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return False
    return canonical_key(g) == canonical_key(h)

