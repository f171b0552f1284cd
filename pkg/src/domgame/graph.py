"""Immutable simple graphs over at most 64 vertices.

Vertex sets are plain ``int`` bitmasks: bit ``v`` set means vertex ``v`` is
in the set. ``Graph.adj[v]`` is the open neighbourhood of ``v`` as such a
mask.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64
INF = math.inf


class GraphError(ValueError):
    pass


class GraphFormatError(GraphError):
    """Malformed graph6 or edge-list text."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset


def bits(mask: int) -> Iterator[int]:
    """Yield the members of a vertex mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Graph:
    """A simple undirected graph with bitset adjacency rows.

    Instances are immutable, hashable and compare by labelled structure
    (same ``n`` and identical adjacency rows).
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int]):
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        rows = tuple(int(r) for r in adj)
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"row {v} has bits beyond vertex {n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not rows[u] >> v & 1:
                    raise GraphError(f"asymmetric edge {v}-{u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", rows)
        object.__setattr__(self, "_hash", hash((n, rows)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << v) for v in range(n)])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __len__(self):
        return self.n

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v] & ((1 << v) - 1))]

    def edge_count(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def closed(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    def closed_neighborhood(self, s: int) -> int:
        """N[S] for a vertex mask S."""
        out = s
        for v in bits(s):
            out |= self.adj[v]
        return out

    def open_neighborhood(self, s: int) -> int:
        """N[S] minus S."""
        return self.closed_neighborhood(s) & ~s

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph whose vertex ``perm[v]`` plays the role of ``v``."""
        adj = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in bits(self.adj[v]):
                row |= 1 << perm[u]
            adj[perm[v]] = row
        return Graph(self.n, adj)


def induced_subgraph(g: Graph, s: int) -> Graph:
    """Subgraph induced by mask ``s``, vertices renumbered in increasing order.

    The original index of new vertex ``i`` is ``list(bits(s))[i]``.
    """
    if s & ~g.full:
        raise GraphError("vertex set exceeds graph")
    verts = list(bits(s))
    pos = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        row = 0
        for u in bits(g.adj[v] & s):
            row |= 1 << pos[u]
        adj.append(row)
    return Graph(len(verts), adj)


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, g.full & ~(1 << v))


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, [full & ~g.adj[v] & ~(1 << v) for v in range(g.n)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_VERTICES:
        raise GraphError(f"union would have {g.n + h.n} > {MAX_VERTICES} vertices")
    return Graph(g.n + h.n, list(g.adj) + [r << g.n for r in h.adj])


def join(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_VERTICES:
        raise GraphError(f"join would have {g.n + h.n} > {MAX_VERTICES} vertices")
    hmask = ((1 << h.n) - 1) << g.n
    adj = [r | hmask for r in g.adj] + [(r << g.n) | g.full for r in h.adj]
    return Graph(g.n + h.n, adj)


def bfs_layers(g: Graph, source: int, within: int | None = None) -> list[int]:
    """Distance layers from a source mask, as a list of vertex masks.

    With ``within``, the search stays inside that vertex set.
    """
    if within is None:
        within = g.full
    source &= within
    layers = [source]
    seen = source
    frontier = source
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= within & ~seen
        if not nxt:
            break
        layers.append(nxt)
        seen |= nxt
        frontier = nxt
    return layers


def set_distance(g: Graph, a: int, b: int, within: int | None = None) -> float:
    if not a or not b:
        raise GraphError("set_distance needs two nonempty vertex sets")
    for d, layer in enumerate(bfs_layers(g, a, within)):
        if layer & b:
            return d
    return INF


def distance(g: Graph, u: int, v: int) -> float:
    return set_distance(g, 1 << u, 1 << v)


def components(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``g`` (or of ``g[within]``) as masks."""
    remaining = g.full if within is None else within
    comps = []
    while remaining:
        start = remaining & -remaining
        comp = start
        queue = deque([lowest(start)])
        while queue:
            v = queue.popleft()
            new = g.adj[v] & remaining & ~comp
            comp |= new
            queue.extend(bits(new))
        comps.append(comp)
        remaining &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_clique(g: Graph, s: int) -> bool:
    return all((g.closed(v) & s) == s for v in bits(s))


def is_triangle_free(g: Graph) -> bool:
    for u, v in g.edges():
        if g.adj[u] & g.adj[v]:
            return False
    return True


def are_true_twins(g: Graph, u: int, v: int) -> bool:
    return g.closed(u) == g.closed(v)


def are_false_twins(g: Graph, u: int, v: int) -> bool:
    return g.adj[u] == g.adj[v]


# -- text formats -----------------------------------------------------------

def _size_prefix(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line (optional ``>>graph6<<`` header)."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    offset = 0
    if data.startswith(b">>graph6<<"):
        offset = 10
    if offset >= len(data):
        raise GraphFormatError("missing size byte", offset)
    for i in range(offset, len(data)):
        if not 63 <= data[i] <= 126:
            raise GraphFormatError(f"byte {data[i]!r} outside 63..126", i)
    if data[offset] == 126:
        if offset + 1 < len(data) and data[offset + 1] == 126:
            raise GraphFormatError("8-byte size form not supported (n > 64)", offset)
        if offset + 4 > len(data):
            raise GraphFormatError("truncated size field", offset)
        n = 0
        for c in data[offset + 1:offset + 4]:
            n = (n << 6) | (c - 63)
        offset += 4
    else:
        n = data[offset] - 63
        offset += 1
    if n > MAX_VERTICES:
        raise GraphFormatError(f"graph has {n} vertices, limit is {MAX_VERTICES}", offset)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = data[offset:]
    if len(payload) != need:
        raise GraphFormatError(
            f"expected {need} payload bytes for n={n}, got {len(payload)}", offset)
    acc = 0
    for c in payload:
        acc = (acc << 6) | (c - 63)
    acc >>= need * 6 - nbits
    adj = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if acc >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(n, adj)


def write_graph6(g: Graph) -> str:
    """Encode as a graph6 line without trailing newline."""
    if g.n > 62:
        raise GraphError(f"graph6 writer supports n <= 62, got {g.n}")
    out = bytearray(_size_prefix(g.n))
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
    pad = -nbits % 6
    acc <<= pad
    nbits += pad
    for shift in range(nbits - 6, -1, -6):
        out.append((acc >> shift & 63) + 63)
    return out.decode("ascii")


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n; u v; u v; ..."`` (separators may also be newlines)."""
    parts = [p.strip() for p in text.replace("\n", ";").split(";")]
    parts = [p for p in parts if p]
    if not parts:
        raise GraphFormatError("empty edge list")
    try:
        n = int(parts[0])
    except ValueError:
        raise GraphFormatError(f"bad vertex count {parts[0]!r}", 0) from None
    edges = []
    for idx, p in enumerate(parts[1:], start=1):
        fields = p.replace(",", " ").replace("-", " ").split()
        if len(fields) != 2:
            raise GraphFormatError(f"edge item {p!r} is not a vertex pair", idx)
        try:
            edges.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise GraphFormatError(f"edge item {p!r} is not numeric", idx) from None
    try:
        return Graph.from_edges(n, edges)
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from None


def write_edge_list(g: Graph) -> str:
    return "; ".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()])


def parse_graph(text: str) -> Graph:
    """Accept either a graph6 line or an edge list."""
    s = text.strip()
    if ";" in s or " " in s or (s.isdigit() and len(s) > 0):
        return parse_edge_list(s)
    return parse_graph6(s)
