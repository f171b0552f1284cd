"""Non-isomorphic graph streams and the perfect / minimally imperfect counts."""

from __future__ import annotations

import gzip
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import islice
from typing import Iterable, Iterator, Union

from .canon import canonical_form, canonical_key
from .graph import Graph, GraphFormatError, is_connected, parse_graph6, write_graph6
from .perfection import catalog_name, is_gg_perfect, is_minimally_gg_imperfect

BUILTIN_MAX_N = 7

# Published counts: n -> (perfect, connected perfect, minimally imperfect).
TABLE1 = {
    3: (4, 2, 0),
    4: (11, 6, 0),
    5: (32, 19, 2),
    6: (122, 81, 8),
    7: (536, 386, 1),
    8: (2754, 2102, 1),
    9: (15752, 12476, 1),
}

# Number of graphs on n unlabelled vertices.
GRAPH_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044,
                8: 12346, 9: 274668}


class SourceError(Exception):
    pass


@dataclass(frozen=True)
class Builtin:
    n: int


@dataclass(frozen=True)
class Graph6File:
    path: str


GraphSource = Union[Builtin, Graph6File]


@dataclass(frozen=True)
class CountsRow:
    n: int
    perfect_all: int
    perfect_connected: int
    min_imperfect: int

    def as_tuple(self) -> tuple[int, int, int]:
        return self.perfect_all, self.perfect_connected, self.min_imperfect

    def to_tsv(self) -> str:
        return f"{self.n}\t{self.perfect_all}\t{self.perfect_connected}\t{self.min_imperfect}"


@lru_cache(maxsize=None)
def _representatives(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph.empty(0),)
    found: dict[tuple[int, int], Graph] = {}
    for g in _representatives(n - 1):
        for nbrs in range(1 << (n - 1)):
            adj = [r | ((nbrs >> v & 1) << (n - 1)) for v, r in enumerate(g.adj)]
            h = Graph(n, adj + [nbrs])
            key = canonical_key(h)
            if key not in found:
                found[key] = h
    return tuple(canonical_form(found[k]) for k in sorted(found))


def enumerate_nonisomorphic(n: int) -> Iterator[Graph]:
    """One canonically labelled graph per isomorphism class on n vertices.

    Built by adding a vertex with every possible neighbourhood to the
    classes on n-1 vertices and keeping one graph per canonical code.
    """
    if not 1 <= n <= BUILTIN_MAX_N:
        raise SourceError(
            f"builtin generator covers 1 <= n <= {BUILTIN_MAX_N}; "
            f"supply a graph6 file for n={n}")
    return iter(_representatives(n))


def read_graph6_file(path: str | os.PathLike) -> Iterator[Graph]:
    opener = gzip.open if str(path).endswith(".gz") else open
    try:
        fh = opener(path, "rt", encoding="ascii")
    except OSError as exc:
        raise SourceError(f"cannot read {path}: {exc}") from None
    with fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                yield parse_graph6(line)
            except GraphFormatError as exc:
                raise SourceError(f"{path}:{lineno}: {exc}") from None


def iter_source(source: GraphSource) -> Iterator[Graph]:
    if isinstance(source, Builtin):
        return enumerate_nonisomorphic(source.n)
    return read_graph6_file(source.path)


def _classify_one(g: Graph) -> tuple[int, bool, bool, bool]:
    perfect = is_gg_perfect(g)
    imperfect_min = False if perfect else is_minimally_gg_imperfect(g)
    return g.n, perfect, perfect and is_connected(g), imperfect_min


def _classify_chunk(lines: list[str]) -> list[tuple[int, bool, bool, bool, str]]:
    out = []
    for line in lines:
        row = _classify_one(parse_graph6(line))
        out.append(row + (line,))
    return out


def _chunks(it: Iterable, size: int) -> Iterator[list]:
    it = iter(it)
    while chunk := list(islice(it, size)):
        yield chunk


def _classified(source: GraphSource, jobs: int) -> Iterator[tuple[int, bool, bool, bool, str]]:
    lines = (write_graph6(g) for g in iter_source(source))
    if jobs <= 1:
        for chunk in _chunks(lines, 512):
            yield from _classify_chunk(chunk)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for result in pool.map(_classify_chunk, _chunks(lines, 512)):
            yield from result


def _scan(source: GraphSource, jobs: int) -> tuple[CountsRow, list[str]]:
    n = None
    counts = [0, 0, 0]
    witnesses = []
    for gn, perfect, connected, minimal, line in _classified(source, jobs):
        if n is None:
            n = gn
        elif gn != n:
            raise SourceError(f"source mixes graphs on {n} and {gn} vertices")
        counts[0] += perfect
        counts[1] += connected
        counts[2] += minimal
        if minimal:
            witnesses.append(line)
    if n is None:
        n = source.n if isinstance(source, Builtin) else 0
    return CountsRow(n, *counts), witnesses


def table1(source: GraphSource, jobs: int = 1) -> CountsRow:
    """Count perfect, connected perfect and minimally imperfect graphs."""
    return _scan(source, jobs)[0]


def find_min_imperfect(source: GraphSource, jobs: int = 1) -> list[Graph]:
    """All minimally imperfect graphs of a stream, canonically labelled and
    sorted by their graph6 text."""
    _, lines = _scan(source, jobs)
    found = [canonical_form(parse_graph6(line)) for line in lines]
    return sorted(found, key=write_graph6)


def identify(graphs: Iterable[Graph]) -> list[tuple[Graph, str | None]]:
    """Pair each graph with its catalog name (None if not listed)."""
    return [(g, catalog_name(g)) for g in graphs]
