import random

import pytest
from hypothesis import given, settings

from domgame.catalog import antihole, complete_bipartite, cycle, named_graph, path
from domgame.graph import Graph, bits, to_mask
from domgame.perfection import mhc_contraction
from domgame.solver import (
    GameSolver,
    Mover,
    PreconditionError,
    Variant,
    domination_number,
    game_value,
    invariants,
    optimal_first_moves,
    residual_game_value,
    total_domination_number,
)

from conftest import graphs, oracle_first_moves, oracle_game, oracle_gamma, random_graph

D, S = Mover.DOMINATOR, Mover.STALLER
DOM, TOT = Variant.DOMINATION, Variant.TOTAL


class TestDominationNumbers:
    def test_values(self):
        assert domination_number(path(5)) == 2
        assert domination_number(Graph.empty(0)) == 0
        for s in range(1, 7):
            assert domination_number(Graph.complete(s)) == 1

    @pytest.mark.parametrize("k", range(5, 11))
    def test_antiholes(self, k):
        assert domination_number(antihole(k)) == 2

    def test_total(self):
        assert total_domination_number(path(4)) == 2
        assert total_domination_number(Graph.complete(2)) == 2
        two_p3 = named_graph("2P3")
        assert oracle_gamma(two_p3, total=True) == 4
        assert total_domination_number(two_p3) == 4

    def test_total_rejects_isolates(self):
        with pytest.raises(PreconditionError, match="vertex 2"):
            total_domination_number(Graph.from_edges(3, [(0, 1)]))
        with pytest.raises(PreconditionError):
            total_domination_number(Graph.empty(1))
        with pytest.raises(PreconditionError):
            game_value(Graph.empty(0), TOT)

    @settings(max_examples=80)
    @given(graphs(max_n=8))
    def test_against_subset_oracle(self, g):
        assert domination_number(g) == oracle_gamma(g)
        if g.n >= 2 and not g.isolated_vertices():
            assert total_domination_number(g) == oracle_gamma(g, total=True)


class TestGameValue:
    def test_p5(self):
        assert oracle_game(path(5)) == 3
        assert game_value(path(5), DOM, D) == 3

    def test_p4_total(self):
        assert game_value(path(4), TOT, D) == 3

    @pytest.mark.parametrize("k", range(5, 10))
    def test_antiholes(self, k):
        assert game_value(antihole(k), DOM, D) == 3

    def test_p3_staller_start(self):
        assert game_value(path(3), DOM, S) == 2
        assert domination_number(path(3)) == 1

    def test_empty_graph(self):
        assert game_value(Graph.empty(0), DOM, D) == 0
        assert game_value(Graph.empty(0), DOM, S) == 0

    def test_co_2p3_total(self):
        g = named_graph("co-2P3")
        assert total_domination_number(g) == 2
        assert game_value(g, TOT, D) == 3

    def test_residual(self):
        p5 = path(5)
        assert residual_game_value(p5, p5.full, DOM, S) == 0
        assert residual_game_value(p5, p5.full, TOT, D) == 0
        covered = p5.closed(2)
        assert oracle_game(p5, dominator_first=False, start=set(bits(covered))) == 2
        assert residual_game_value(p5, covered, DOM, S) == 2
        for mover in (D, S):
            assert residual_game_value(p5, 0, DOM, mover) == game_value(p5, DOM, mover)

    def test_optimal_first_moves(self):
        star = complete_bipartite(1, 4)
        assert optimal_first_moves(star, DOM, D) & 1
        p5 = path(5)
        expected = oracle_first_moves(p5)
        assert set(bits(optimal_first_moves(p5, DOM, D))) == expected
        with pytest.raises(ValueError):
            optimal_first_moves(Graph.empty(0))

    def test_invariants_bundle(self):
        p4 = path(4)
        assert invariants(p4) == {
            "gamma": oracle_gamma(p4),
            "gamma_g": oracle_game(p4),
            "gamma_g_prime": oracle_game(p4, dominator_first=False),
            "gamma_t": oracle_gamma(p4, total=True),
            "gamma_tg": oracle_game(p4, total=True),
            "gamma_tg_prime": oracle_game(p4, total=True, dominator_first=False),
        }
        assert invariants(p4)["gamma_g"] == 2
        assert invariants(Graph.empty(2))["gamma_t"] is None

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_n=6))
    def test_memo_matches_plain_minimax(self, g):
        for total in (False, True):
            if total and (g.n < 2 or g.isolated_vertices()):
                continue
            variant = TOT if total else DOM
            solver = GameSolver(g, variant)
            for mover in (D, S):
                expected = oracle_game(g, total, mover is D)
                assert solver.value(0, mover) == expected
                if g.n:
                    assert set(bits(solver.optimal_moves(0, mover))) == \
                        oracle_first_moves(g, total, mover is D)

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=8))
    def test_lower_and_upper_bounds(self, g):
        inv = invariants(g)
        assert inv["gamma"] <= inv["gamma_g"] <= g.n
        assert inv["gamma"] <= inv["gamma_g_prime"] <= g.n
        if inv["gamma_t"] is not None:
            assert inv["gamma_t"] <= inv["gamma_tg"] <= g.n
            assert inv["gamma_t"] <= inv["gamma_tg_prime"] <= g.n

    def test_relabelling_invariance(self, rng):
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 8))
            perm = list(range(g.n))
            rng.shuffle(perm)
            h = g.relabel(perm)
            assert invariants(g) == invariants(h)


def test_contraction_preserves_game_numbers(rng):
    from conftest import blow_up_twins
    for _ in range(40):
        base = random_graph(rng, rng.randint(1, 6))
        g = blow_up_twins(rng, base, rng.randint(base.n, 9))
        hat = mhc_contraction(g).contracted
        for mover in (D, S):
            assert game_value(g, DOM, mover) == game_value(hat, DOM, mover)
        assert domination_number(g) == domination_number(hat)


def test_solver_memo_is_per_instance():
    a, b = GameSolver(path(5)), GameSolver(cycle(5))
    a.value()
    assert not b.memo
    assert b.value() == game_value(cycle(5))
