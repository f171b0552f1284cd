"""Exact domination numbers and game values by memoized minimax.

A position of either game is fully described by the set of vertices already
(totally) dominated and the player to move; the number of moves already made
never changes the number of moves still to come, so that pair is the memo key.
"""

from __future__ import annotations

import enum
from functools import lru_cache

from .graph import Graph, GraphError, lowest


class Variant(enum.Enum):
    DOMINATION = "dom"
    TOTAL = "total"


class Mover(enum.Enum):
    DOMINATOR = "d"
    STALLER = "s"

    @property
    def other(self) -> Mover:
        return Mover.STALLER if self is Mover.DOMINATOR else Mover.DOMINATOR


class PreconditionError(GraphError):
    pass


def _check_total(g: Graph) -> None:
    if g.n < 2:
        raise PreconditionError(f"total domination needs an isolate-free graph, n={g.n}")
    iso = g.isolated_vertices()
    if iso:
        raise PreconditionError(
            f"total domination needs an isolate-free graph; vertex {iso[0]} is isolated")


def _gains(g: Graph, variant: Variant) -> tuple[int, ...]:
    if variant is Variant.TOTAL:
        _check_total(g)
        return g.adj
    return tuple(g.closed(v) for v in range(g.n))


def _min_cover(full: int, gains: tuple[int, ...], covered: int, budget: int) -> bool:
    """Can at most ``budget`` more gain-sets cover ``full``?

    Branches on the lowest uncovered vertex: one of the sets containing it
    must be chosen.
    """
    missing = full & ~covered
    if not missing:
        return True
    if budget == 0:
        return False
    target = lowest(missing)
    tried = set()
    for gain in gains:
        if gain >> target & 1:
            new = gain & missing
            if new in tried:
                continue
            tried.add(new)
            if _min_cover(full, gains, covered | gain, budget - 1):
                return True
    return False


def _cover_number(g: Graph, gains: tuple[int, ...]) -> int:
    full = g.full
    k = 0
    while not _min_cover(full, gains, 0, k):
        k += 1
    return k


def domination_number(g: Graph) -> int:
    return _cover_number(g, _gains(g, Variant.DOMINATION))


def total_domination_number(g: Graph) -> int:
    # A set totally dominates V iff the union of its open neighbourhoods is V.
    return _cover_number(g, _gains(g, Variant.TOTAL))


class GameSolver:
    """Memoized minimax for one graph and one game variant.

    The memo table lives on the instance, so separate solvers never share
    state.
    """

    def __init__(self, g: Graph, variant: Variant = Variant.DOMINATION):
        self.graph = g
        self.variant = variant
        self.gains = _gains(g, variant)
        self.full = g.full
        self.memo: dict[tuple[int, bool], int] = {}

    def moves(self, covered: int) -> dict[int, int]:
        """Legal moves grouped by what they newly dominate.

        Maps each distinct newly-dominated set to the lowest vertex
        achieving it; moves with equal new sets have identical subtrees.
        """
        out: dict[int, int] = {}
        for v, gain in enumerate(self.gains):
            new = gain & ~covered
            if new and new not in out:
                out[new] = v
        return out

    def value(self, covered: int = 0, mover: Mover = Mover.DOMINATOR) -> int:
        return self._value(covered & self.full, mover is Mover.DOMINATOR)

    def _value(self, covered: int, dominator: bool) -> int:
        if covered == self.full:
            return 0
        key = (covered, dominator)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        best = None
        for new in self.moves(covered):
            val = self._value(covered | new, not dominator)
            if best is None or (val < best if dominator else val > best):
                best = val
        # No legal move can only happen if some vertex is undominatable.
        result = 0 if best is None else best + 1
        self.memo[key] = result
        return result

    def optimal_moves(self, covered: int = 0, mover: Mover = Mover.DOMINATOR) -> int:
        """Mask of every vertex whose play attains the minimax value."""
        covered &= self.full
        dominator = mover is Mover.DOMINATOR
        scores = {}
        for v, gain in enumerate(self.gains):
            new = gain & ~covered
            if new:
                scores[v] = self._value(covered | new, not dominator)
        if not scores:
            return 0
        target = min(scores.values()) if dominator else max(scores.values())
        out = 0
        for v, s in scores.items():
            if s == target:
                out |= 1 << v
        return out


def game_value(g: Graph, variant: Variant = Variant.DOMINATION,
               first: Mover = Mover.DOMINATOR) -> int:
    return GameSolver(g, variant).value(0, first)


def residual_game_value(g: Graph, covered: int, variant: Variant = Variant.DOMINATION,
                        mover: Mover = Mover.DOMINATOR) -> int:
    return GameSolver(g, variant).value(covered, mover)


def optimal_first_moves(g: Graph, variant: Variant = Variant.DOMINATION,
                        first: Mover = Mover.DOMINATOR) -> int:
    if g.n == 0:
        raise GraphError("optimal_first_moves needs at least one vertex")
    return GameSolver(g, variant).optimal_moves(0, first)


@lru_cache(maxsize=1 << 16)
def gamma_g(g: Graph) -> int:
    return game_value(g, Variant.DOMINATION, Mover.DOMINATOR)


@lru_cache(maxsize=1 << 16)
def gamma(g: Graph) -> int:
    return domination_number(g)


def invariants(g: Graph) -> dict[str, int | None]:
    """All six numbers at once; total ones are None when g has isolates."""
    dom = GameSolver(g, Variant.DOMINATION)
    out: dict[str, int | None] = {
        "gamma": domination_number(g),
        "gamma_g": dom.value(0, Mover.DOMINATOR),
        "gamma_g_prime": dom.value(0, Mover.STALLER),
        "gamma_t": None,
        "gamma_tg": None,
        "gamma_tg_prime": None,
    }
    if g.n >= 2 and not g.isolated_vertices():
        tot = GameSolver(g, Variant.TOTAL)
        out["gamma_t"] = total_domination_number(g)
        out["gamma_tg"] = tot.value(0, Mover.DOMINATOR)
        out["gamma_tg_prime"] = tot.value(0, Mover.STALLER)
    return out

