"""Named graphs, the KC family, and induced-subgraph search."""

from __future__ import annotations

import re

from .graph import Graph, GraphError, bits, complement, disjoint_union, popcount

# 1-based edge lists as drawn; converted to 0-based below.
_FAMILY_F = {
    "F1": [(1, 2), (3, 2), (4, 5), (5, 6)],
    "F2": [(1, 3), (3, 2), (4, 3), (5, 4), (6, 4)],
    "F3": [(1, 2), (3, 2), (4, 5), (5, 6), (2, 5), (3, 6)],
    "F4": [(1, 2), (3, 2), (4, 3), (5, 4), (6, 5), (2, 5), (1, 4)],
    "F5": [(1, 2), (3, 2), (4, 3), (6, 4), (6, 5), (2, 6), (1, 4), (3, 5)],
    "F6": [(1, 5), (3, 5), (4, 2), (6, 1), (2, 5), (3, 6), (1, 4), (2, 6), (3, 4)],
}
_CO_DOMINO = [(1, 2), (3, 2), (4, 5), (5, 6), (4, 6), (1, 3), (2, 4), (5, 3)]


def _one_based(n: int, edges) -> Graph:
    return Graph.from_edges(n, [(u - 1, v - 1) for u, v in edges])


def path(k: int) -> Graph:
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError(f"cycle needs k >= 3, got {k}")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def antihole(k: int) -> Graph:
    if k < 5:
        raise GraphError(f"anti-hole needs k >= 5, got {k}")
    return complement(cycle(k))


def kc_graph(m: int, n: int) -> Graph:
    """KC_{m,n}: centre c=0, co-centre d=1, u_j = 2..m+1, v_i after them.

    KC_{0,n} is the star K_{1,n} (centre 0).
    """
    if m < 0 or n < 0:
        raise GraphError("KC parameters must be nonnegative")
    if m == 0:
        return complete_bipartite(1, n)
    edges = []
    for j in range(m):
        edges += [(0, 2 + j), (1, 2 + j)]
    for i in range(n):
        edges.append((0, 2 + m + i))
    return Graph.from_edges(2 + m + n, edges)


_NAME = re.compile(
    r"^(?:(?P<pk>[PCK])_?\{?(?P<k>\d+)\}?"
    r"|K_?\{?(?P<a>\d+),(?P<b>\d+)\}?"
    r"|(?P<f>F[1-6])"
    r"|(?P<codom>co-?domino)"
    r"|(?:antihole|co-?C)_?\{?(?P<ah>\d+)\}?"
    r"|(?P<tp>2P3)"
    r"|(?P<ctp>co-?2P3)"
    r"|KC_?\{?(?P<m>\d+),(?P<n>\d+)\}?)$",
    re.IGNORECASE,
)


def named_graph(name: str) -> Graph:
    """Look up a graph by name.

    Accepted: ``P5``, ``C6``, ``K4``, ``K3,3``/``K_{3,3}``, ``F1``..``F6``,
    ``co-domino``, ``antihole7``/``co-C7``, ``2P3``, ``co-2P3``, ``KC2,1``.
    """
    m = _NAME.match(name.strip().replace(" ", ""))
    if not m:
        raise KeyError(f"unknown graph name {name!r}")
    if m["pk"]:
        k = int(m["k"])
        kind = m["pk"].upper()
        if kind == "P":
            return path(k)
        if kind == "C":
            return cycle(k)
        return Graph.complete(k)
    if m["a"]:
        return complete_bipartite(int(m["a"]), int(m["b"]))
    if m["f"]:
        return _one_based(6, _FAMILY_F[m["f"].upper()])
    if m["codom"]:
        return _one_based(6, _CO_DOMINO)
    if m["ah"]:
        return antihole(int(m["ah"]))
    if m["tp"]:
        return disjoint_union(path(3), path(3))
    if m["ctp"]:
        return complement(disjoint_union(path(3), path(3)))
    return kc_graph(int(m["m"]), int(m["n"]))


def family_f() -> dict[str, Graph]:
    return {name: named_graph(name) for name in _FAMILY_F}


def minimal_imperfect_catalog(max_n: int) -> dict[str, Graph]:
    """Known minimally imperfect graphs with at most ``max_n`` vertices."""
    out: dict[str, Graph] = {}
    if max_n >= 5:
        out["P5"] = path(5)
    if max_n >= 6:
        out.update(family_f())
        out["co-domino"] = named_graph("co-domino")
    for k in range(5, max_n + 1):
        # The 5-vertex anti-hole is C5 itself.
        out["C5" if k == 5 else f"antihole{k}"] = antihole(k)
    return out


def recognize_kc(g: Graph) -> tuple[int, int] | None:
    """Return (m, n) with g isomorphic to KC_{m,n}, smallest m if ambiguous."""
    if g.n == 0:
        return None
    found = []
    full = g.full
    for c in range(g.n):
        rest = full & ~(1 << c)
        if g.adj[c] == rest:
            if all(g.adj[v] == 1 << c for v in bits(rest)):
                found.append((0, g.n - 1))
            continue
        others = rest & ~g.adj[c]
        if popcount(others) != 1:
            continue
        d = others.bit_length() - 1
        u_set = g.adj[d]
        if not u_set or u_set & ~g.adj[c]:
            continue
        cd = (1 << c) | (1 << d)
        if any(g.adj[u] != cd for u in bits(u_set)):
            continue
        leaves = g.adj[c] & ~u_set
        if any(g.adj[v] != 1 << c for v in bits(leaves)):
            continue
        found.append((popcount(u_set), popcount(leaves)))
    return min(found) if found else None


def contains_induced(g: Graph, pattern: Graph) -> bool:
    return find_induced(g, pattern) is not None


def find_induced(g: Graph, pattern: Graph) -> list[int] | None:
    """Backtracking search for an induced copy of ``pattern`` in ``g``.

    Returns the image of each pattern vertex, or None.
    """
    k = pattern.n
    if k == 0:
        return []
    if k > g.n:
        return None
    # Place high-degree pattern vertices first; each next vertex adjacent to
    # an already placed one when possible.
    order = []
    left = set(range(k))
    while left:
        placed = sum(1 << v for v in order)
        best = max(left, key=lambda v: (popcount(pattern.adj[v] & placed),
                                        pattern.degree(v), -v))
        order.append(best)
        left.discard(best)
    pdeg = [pattern.degree(v) for v in range(k)]
    gdeg = [g.degree(v) for v in range(g.n)]
    image = [-1] * k
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == k:
            return True
        p = order[i]
        cand = g.full & ~used
        for q in order[:i]:
            if pattern.adj[p] >> q & 1:
                cand &= g.adj[image[q]]
            else:
                cand &= ~g.adj[image[q]]
        for v in bits(cand):
            if gdeg[v] < pdeg[p]:
                continue
            image[p] = v
            used |= 1 << v
            if extend(i + 1):
                return True
            used &= ~(1 << v)
        image[p] = -1
        return False

    return list(image) if extend(0) else None
