"""Twin contraction, perfect sets of cliques, the two construction operators
and the polynomial recognizer for graphs on which every induced subgraph
has equal domination number and game domination number.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence, Union

from .canon import are_isomorphic
from .catalog import contains_induced, minimal_imperfect_catalog, named_graph, path
from .graph import (
    Graph,
    GraphError,
    bits,
    components,
    delete_vertex,
    disjoint_union,
    induced_subgraph,
    is_clique,
    popcount,
    set_distance,
    to_mask,
    write_graph6,
)
from .solver import (
    GameSolver,
    Mover,
    Variant,
    domination_number,
    gamma,
    gamma_g,
    total_domination_number,
)

BRUTE_FORCE_LIMIT = 8


class PSCError(GraphError):
    """A clique family is not a perfect set of cliques."""

    def __init__(self, clause: str, detail: str):
        super().__init__(f"{clause}: {detail}")
        self.clause = clause


class BuildError(GraphError):
    def __init__(self, index: int, reason: str):
        super().__init__(f"step {index}: {reason}")
        self.index = index


# -- twin contraction -------------------------------------------------------

@dataclass(frozen=True)
class ContractionMap:
    class_of: tuple[int, ...]
    contracted: Graph
    representatives: tuple[int, ...]

    def classes(self) -> list[int]:
        out = [0] * len(self.representatives)
        for v, c in enumerate(self.class_of):
            out[c] |= 1 << v
        return out


def mhc_contraction(g: Graph) -> ContractionMap:
    """Collapse every maximal homogeneous clique to a single vertex.

    Classes are numbered by their lowest vertex; class ``i`` becomes vertex
    ``i`` of the contracted graph and is represented by its lowest vertex.
    """
    index: dict[int, int] = {}
    class_of = []
    reps = []
    for v in range(g.n):
        key = g.closed(v)
        if key not in index:
            index[key] = len(reps)
            reps.append(v)
        class_of.append(index[key])
    contracted = induced_subgraph(g, to_mask(reps))
    return ContractionMap(tuple(class_of), contracted, tuple(reps))


def is_homogeneous_clique(g: Graph, s: int, within: int | None = None) -> bool:
    """All members of ``s`` share one closed neighbourhood (inside ``within``)."""
    if not s:
        raise ValueError("homogeneous clique check needs a nonempty set")
    if within is None:
        within = g.full
    first = g.closed(next(bits(s))) & within
    return all(g.closed(v) & within == first for v in bits(s))


# -- perfect sets of cliques ------------------------------------------------

def _check_family(g: Graph, family: Sequence[int], within: int) -> None:
    seen = 0
    for q in family:
        if not q:
            raise ValueError("clique family contains an empty set")
        if q & ~within:
            raise ValueError("clique family refers to vertices outside the graph")
        if q & seen:
            raise ValueError("clique family is not pairwise disjoint")
        seen |= q


def psc_violation(g: Graph, family: Sequence[int],
                  within: int | None = None) -> tuple[str, str] | None:
    """First violated clause as ``(clause, detail)``, or None for a PSC.

    ``within`` evaluates the clauses in the subgraph induced by that set.
    """
    if within is None:
        within = g.full
    _check_family(g, family, within)
    for q in family:
        if not is_homogeneous_clique(g, q, within):
            return "homogeneity", f"{sorted(bits(q))} is not a homogeneous clique"
    nbhd = [g.open_neighborhood(q) & within for q in family]
    for i in range(len(family)):
        for j in range(i + 1, len(family)):
            d = set_distance(g, family[i], family[j], within)
            if d != 3:
                return ("distance",
                        f"{sorted(bits(family[i]))} and {sorted(bits(family[j]))} at distance {d}")
            for x in bits(nbhd[i]):
                missing = nbhd[j] & ~g.adj[x]
                if missing:
                    y = next(bits(missing))
                    return ("join", f"no edge {x}-{y} between N'({sorted(bits(family[i]))})"
                                    f" and N'({sorted(bits(family[j]))})")
    return None


def is_psc(g: Graph, family: Sequence[int]) -> bool:
    return psc_violation(g, family) is None


# -- operators and build scripts ----------------------------------------------

def apply_union(g: Graph, s: int) -> Graph:
    if s < 1:
        raise ValueError(f"clique size must be positive, got {s}")
    return disjoint_union(g, Graph.complete(s))


def apply_extend(g: Graph, family: Sequence[int]) -> Graph:
    """Add a vertex adjacent to everything outside the cliques of a PSC."""
    bad = psc_violation(g, family)
    if bad:
        raise PSCError(*bad)
    if g.n + 1 > 64:
        raise GraphError("extension would exceed 64 vertices")
    inside = 0
    for q in family:
        inside |= q
    nbrs = g.full & ~inside
    v = g.n
    adj = [r | ((nbrs >> u & 1) << v) for u, r in enumerate(g.adj)]
    adj.append(nbrs)
    return Graph(g.n + 1, adj)


@dataclass(frozen=True)
class Start:
    def to_text(self) -> str:
        return "start"


@dataclass(frozen=True)
class UnionClique:
    size: int

    def to_text(self) -> str:
        return f"union {self.size}"


@dataclass(frozen=True)
class Extend:
    cliques: tuple[tuple[int, ...], ...] = ()

    def to_text(self) -> str:
        body = ";".join(",".join(str(v) for v in q) for q in self.cliques)
        return f"extend {body}".rstrip()

    def masks(self) -> list[int]:
        return [to_mask(q) for q in self.cliques]


Step = Union[Start, UnionClique, Extend]


@dataclass
class BuildScript:
    """Operator sequence building a graph from one vertex.

    ``order``, when present, maps each built vertex to the vertex of the
    graph the script certifies.
    """

    steps: list[Step] = field(default_factory=list)
    order: tuple[int, ...] | None = None

    def to_text(self) -> str:
        return "".join(s.to_text() + "\n" for s in self.steps)

    @classmethod
    def from_text(cls, text: str) -> BuildScript:
        steps: list[Step] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            word, _, rest = line.partition(" ")
            rest = rest.strip()
            try:
                if word == "start" and not rest:
                    steps.append(Start())
                elif word == "union":
                    steps.append(UnionClique(int(rest)))
                elif word == "extend":
                    cliques = tuple(
                        tuple(int(x) for x in part.split(","))
                        for part in rest.split(";") if part.strip())
                    steps.append(Extend(cliques))
                else:
                    raise ValueError(f"unknown step {word!r}")
            except ValueError as exc:
                raise ValueError(f"line {lineno}: {exc}") from None
        return cls(steps)

    def to_dict(self) -> dict:
        return {"steps": [s.to_text() for s in self.steps],
                "order": list(self.order) if self.order is not None else None}

    @classmethod
    def from_dict(cls, d: dict) -> BuildScript:
        script = cls.from_text("\n".join(d["steps"]))
        if d.get("order") is not None:
            script.order = tuple(d["order"])
        return script

    def prefixes(self):
        """Graphs after each step."""
        g = None
        for i, step in enumerate(self.steps):
            g = _apply_step(g, step, i)
            yield g


def _apply_step(g: Graph | None, step: Step, i: int) -> Graph:
    if isinstance(step, Start):
        if g is not None:
            raise BuildError(i, "start may only be the first step")
        return Graph.empty(1)
    if g is None:
        raise BuildError(i, "script must begin with start")
    try:
        if isinstance(step, UnionClique):
            return apply_union(g, step.size)
        masks = step.masks()
        for q in step.cliques:
            for v in q:
                if not 0 <= v < g.n:
                    raise BuildError(i, f"vertex {v} not in the current graph (n={g.n})")
        return apply_extend(g, masks)
    except BuildError:
        raise
    except (GraphError, ValueError) as exc:
        raise BuildError(i, str(exc)) from None


def build(script: BuildScript) -> Graph:
    g = None
    for i, step in enumerate(script.steps):
        g = _apply_step(g, step, i)
    return Graph.empty(0) if g is None else g


# -- recognition ------------------------------------------------------------

@dataclass(frozen=True)
class Failure:
    """Where the recognizer rejected: recursion depth, stage, vertices."""

    depth: int
    stage: str
    detail: str
    vertices: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"depth": self.depth, "stage": self.stage, "detail": self.detail,
                "vertices": list(self.vertices)}

    @classmethod
    def from_dict(cls, d: dict) -> Failure:
        return cls(d["depth"], d["stage"], d["detail"], tuple(d["vertices"]))


class Recognition(NamedTuple):
    perfect: bool
    certificate: BuildScript | Failure


class _Reject(Exception):
    def __init__(self, failure: Failure):
        self.failure = failure


def _clique_script(size: int) -> list[Step]:
    return [Start()] + [Extend()] * (size - 1)


def _recognize(g: Graph, mask: int, depth: int) -> tuple[list[Step], list[int]]:
    if not mask:
        return [], []
    comps = components(g, mask)
    cliques = [c for c in comps if is_clique(g, c)]
    rough = [c for c in comps if not is_clique(g, c)]
    if len(rough) >= 2:
        raise _Reject(Failure(
            depth, "components", "two non-complete components (induced 2P3)",
            tuple(bits(rough[0] | rough[1]))))
    if rough:
        steps, order = _recognize_connected(g, rough[0], depth)
    else:
        first = cliques.pop(0)
        steps, order = _clique_script(popcount(first)), list(bits(first))
    for c in cliques:
        steps.append(UnionClique(popcount(c)))
        order.extend(bits(c))
    return steps, order


def pick_center(g: Graph) -> int:
    """Lowest vertex whose twin class has maximum degree in the contraction."""
    cm = mhc_contraction(g)
    degs = [cm.contracted.degree(cm.class_of[v]) for v in range(g.n)]
    return degs.index(max(degs))


def _recognize_connected(g: Graph, h: int, depth: int) -> tuple[list[Step], list[int]]:
    verts = list(bits(h))
    v = verts[pick_center(induced_subgraph(g, h))]
    rest = h & ~(1 << v)
    outside = h & ~g.closed(v)
    cliques = components(g, outside)
    bad = psc_violation(g, cliques, within=rest)
    if bad:
        clause, detail = bad
        raise _Reject(Failure(depth, clause, f"removing vertex {v}: {detail}",
                              tuple(bits(h))))
    steps, order = _recognize(g, rest, depth + 1)
    pos = {x: i for i, x in enumerate(order)}
    fam = sorted(tuple(sorted(pos[x] for x in bits(q))) for q in cliques)
    steps.append(Extend(tuple(fam)))
    order.append(v)
    return steps, order


def recognize_gg_perfect(g: Graph) -> Recognition:
    """Polynomial recognition with a certificate.

    On success the certificate is a build script with ``order`` such that
    ``build(script)`` equals ``g`` relabelled so built vertex ``i`` is
    ``order[i]``. On failure it is the stage where the recursion stopped.
    """
    try:
        steps, order = _recognize(g, g.full, 0)
    except _Reject as rej:
        return Recognition(False, rej.failure)
    return Recognition(True, BuildScript(steps, tuple(order)))


def is_gg_perfect(g: Graph) -> bool:
    return recognize_gg_perfect(g).perfect


def certified_graph(g: Graph, script: BuildScript) -> Graph:
    """``g`` relabelled into the vertex order of a recognizer certificate."""
    perm = [0] * g.n
    for new, old in enumerate(script.order):
        perm[old] = new
    return g.relabel(perm)


# -- brute-force oracles ------------------------------------------------------

def is_gg_graph(g: Graph) -> bool:
    return gamma(g) == gamma_g(g)


def _size_warning(g: Graph, limit: int, what: str) -> None:
    if g.n > limit:
        warnings.warn(f"{what} on n={g.n} enumerates 2^{g.n} induced subgraphs",
                      stacklevel=3)


def _induced_all(g: Graph):
    for s in range(1, g.full + 1):
        yield induced_subgraph(g, s)


def brute_force_gg_perfect(g: Graph) -> bool:
    """Check every induced subgraph, connected or not, directly."""
    _size_warning(g, BRUTE_FORCE_LIMIT, "brute_force_gg_perfect")
    return all(is_gg_graph(f) for f in _induced_all(g))


def is_2_gg_perfect(g: Graph) -> bool:
    _size_warning(g, BRUTE_FORCE_LIMIT, "is_2_gg_perfect")
    return all(is_gg_graph(f) for f in _induced_all(g) if gamma(f) == 2)


def _minimal_game(g: Graph, kind: str) -> bool:
    if kind == "gg":
        return is_gg_graph(g)
    if kind == "gg_prime":
        return domination_number(g) == GameSolver(g).value(0, Mover.STALLER)
    mover = Mover.DOMINATOR if kind == "tg" else Mover.STALLER
    return total_domination_number(g) == GameSolver(g, Variant.TOTAL).value(0, mover)


def brute_force_perfect(g: Graph, kind: str) -> bool:
    """Literal hereditary check for ``kind`` in gg, gg_prime, tg, tg_prime.

    The total kinds only look at isolate-free induced subgraphs.
    """
    if kind not in ("gg", "gg_prime", "tg", "tg_prime"):
        raise ValueError(f"unknown perfection kind {kind!r}")
    _size_warning(g, BRUTE_FORCE_LIMIT, f"brute_force_perfect[{kind}]")
    total = kind.startswith("t")
    for f in _induced_all(g):
        if total and (f.n < 2 or f.isolated_vertices()):
            continue
        if not _minimal_game(f, kind):
            return False
    return True


def is_minimally_gg_imperfect(g: Graph) -> bool:
    if is_gg_perfect(g):
        return False
    if not all(is_gg_perfect(delete_vertex(g, v)) for v in range(g.n)):
        return False
    return not is_gg_graph(g)


def shrink_to_minimal_imperfect(g: Graph) -> int:
    """Mask of a minimally imperfect induced subgraph of an imperfect ``g``.

    Deletes vertices greedily while the rest stays imperfect; a single pass
    suffices because perfection is hereditary.
    """
    if is_gg_perfect(g):
        raise ValueError("graph is perfect; nothing to shrink")
    s = g.full
    for v in range(g.n):
        t = s & ~(1 << v)
        if not is_gg_perfect(induced_subgraph(g, t)):
            s = t
    return s


def two_nonadjacent_witness(g: Graph) -> tuple[int, int] | None:
    def has_nonadjacent_pair(s: int) -> bool:
        return any(s & ~g.closed(x) for x in bits(s))

    for u in range(g.n):
        for v in range(u + 1, g.n):
            a = g.closed(u) & ~g.closed(v)
            b = g.closed(v) & ~g.closed(u)
            if has_nonadjacent_pair(a) and has_nonadjacent_pair(b):
                return u, v
    return None


# -- structural classes -----------------------------------------------------

_P4 = path(4)
_CO_2P3 = named_graph("co-2P3")


def is_disjoint_union_of_cliques(g: Graph) -> bool:
    return all(is_clique(g, c) for c in components(g))


def is_cograph(g: Graph) -> bool:
    return not contains_induced(g, _P4)


def _isolate_free(g: Graph) -> bool:
    return g.n >= 2 and not g.isolated_vertices()


def is_gg_prime_perfect(g: Graph) -> bool:
    return is_disjoint_union_of_cliques(g)


def is_tg_perfect(g: Graph) -> bool | None:
    if not _isolate_free(g):
        return None
    return is_cograph(g) and not contains_induced(g, _CO_2P3)


def is_tg_prime_perfect(g: Graph) -> bool | None:
    if not _isolate_free(g):
        return None
    return is_cograph(g)


def catalog_name(g: Graph) -> str | None:
    """Name of the listed minimally imperfect graph isomorphic to ``g``."""
    for name, h in minimal_imperfect_catalog(g.n).items():
        if are_isomorphic(g, h):
            return name
    return None


@dataclass
class ClassificationReport:
    n: int
    graph6: str | None
    gg_perfect: bool
    two_gg_perfect: bool
    gg_prime_perfect: bool
    tg_perfect: bool | None
    tg_prime_perfect: bool | None
    minimally_imperfect: bool
    certificate: BuildScript | None = None
    failure: Failure | None = None
    forbidden: str | None = None
    forbidden_vertices: tuple[int, ...] | None = None
    oracle: dict[str, bool | None] | None = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "graph6": self.graph6,
            "gg_perfect": self.gg_perfect,
            "two_gg_perfect": self.two_gg_perfect,
            "gg_prime_perfect": self.gg_prime_perfect,
            "tg_perfect": self.tg_perfect,
            "tg_prime_perfect": self.tg_prime_perfect,
            "minimally_imperfect": self.minimally_imperfect,
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "failure": self.failure.to_dict() if self.failure else None,
            "forbidden": self.forbidden,
            "forbidden_vertices": (list(self.forbidden_vertices)
                                   if self.forbidden_vertices is not None else None),
            "oracle": self.oracle,
        }

    @classmethod
    def from_dict(cls, d: dict) -> ClassificationReport:
        d = dict(d)
        if d["certificate"] is not None:
            d["certificate"] = BuildScript.from_dict(d["certificate"])
        if d["failure"] is not None:
            d["failure"] = Failure.from_dict(d["failure"])
        if d["forbidden_vertices"] is not None:
            d["forbidden_vertices"] = tuple(d["forbidden_vertices"])
        return cls(**d)


def classify(g: Graph, *, oracle: bool = False, shrink: bool = False) -> ClassificationReport:
    """All perfection verdicts for ``g`` with certificates.

    ``shrink`` extracts and names a minimally imperfect induced subgraph when
    ``g`` is not perfect. ``oracle`` adds brute-force verdicts (n <= 7).
    """
    perfect, cert = recognize_gg_perfect(g)
    report = ClassificationReport(
        n=g.n,
        graph6=write_graph6(g) if g.n <= 62 else None,
        gg_perfect=perfect,
        two_gg_perfect=perfect,
        gg_prime_perfect=is_gg_prime_perfect(g),
        tg_perfect=is_tg_perfect(g),
        tg_prime_perfect=is_tg_prime_perfect(g),
        minimally_imperfect=False if perfect else is_minimally_gg_imperfect(g),
        certificate=cert if perfect else None,
        failure=None if perfect else cert,
    )
    if shrink and not perfect:
        s = shrink_to_minimal_imperfect(g)
        report.forbidden_vertices = tuple(bits(s))
        report.forbidden = catalog_name(induced_subgraph(g, s)) or "unlisted"
    if oracle:
        if g.n > 7:
            raise ValueError("oracle cross-check is limited to n <= 7")
        total_ok = _isolate_free(g)
        report.oracle = {
            "gg_perfect": brute_force_gg_perfect(g),
            "two_gg_perfect": is_2_gg_perfect(g),
            "gg_prime_perfect": brute_force_perfect(g, "gg_prime"),
            "tg_perfect": brute_force_perfect(g, "tg") if total_ok else None,
            "tg_prime_perfect": brute_force_perfect(g, "tg_prime") if total_ok else None,
        }
    return report


def oracle_disagreements(report: ClassificationReport) -> list[str]:
    if not report.oracle:
        return []
    return [k for k, v in report.oracle.items() if getattr(report, k) != v]
