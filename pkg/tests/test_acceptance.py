"""End-to-end acceptance checks. Each test prints one PASS/FAIL line."""

import random
import time

import networkx as nx
import pytest

from domgame.catalog import contains_induced, named_graph, path, recognize_kc
from domgame.enumeration import (
    TABLE1,
    Builtin,
    Graph6File,
    enumerate_nonisomorphic,
    find_min_imperfect,
    identify,
    table1,
)
from domgame.graph import (
    Graph,
    is_connected,
    is_triangle_free,
    parse_graph6,
    write_graph6,
)
from domgame.perfection import (
    BuildScript,
    Extend,
    Start,
    UnionClique,
    brute_force_gg_perfect,
    brute_force_perfect,
    build,
    is_2_gg_perfect,
    is_disjoint_union_of_cliques,
    is_gg_graph,
    is_gg_perfect,
    is_psc,
    mhc_contraction,
)
from domgame.solver import Mover, Variant, domination_number, game_value

from conftest import DATA, blow_up_twins, graph_file, oracle_decode_graph6, random_graph


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} ({detail})")
    return emit


def all_graphs(max_n):
    for n in range(1, max_n + 1):
        yield from enumerate_nonisomorphic(n)


def test_c1_table1_builtin(report):
    t = time.perf_counter()
    rows = {n: table1(Builtin(n)).as_tuple() for n in range(3, 8)}
    took = time.perf_counter() - t
    bad = {n: r for n, r in rows.items() if r != TABLE1[n]}
    report(1, not bad and took < 300, f"n=3..7 rows {rows}, {took:.1f}s")
    assert not bad
    assert took < 300


@pytest.mark.slow
@pytest.mark.parametrize("n", [8, 9])
def test_c2_table1_files(report, n):
    t = time.perf_counter()
    row = table1(Graph6File(str(DATA / f"graphs{n}.g6.gz"))).as_tuple()
    took = time.perf_counter() - t
    report(2, row == TABLE1[n], f"n={n} row {row}, {took:.1f}s")
    assert row == TABLE1[n]


def test_c3_oracle_equivalence(report):
    t = time.perf_counter()
    checked = 0
    bad = []
    for g in all_graphs(7):
        checked += 1
        verdicts = (is_gg_perfect(g), brute_force_gg_perfect(g), is_2_gg_perfect(g))
        if len(set(verdicts)) != 1:
            bad.append(write_graph6(g))
    took = time.perf_counter() - t
    report(3, not bad and took < 1800,
           f"{checked} graphs, {len(bad)} disagreements, {took:.1f}s")
    assert not bad


def test_c4_minimal_imperfect_catalogs(report):
    expected = {
        5: {"P5", "C5"},
        6: {"F1", "F2", "F3", "F4", "F5", "F6", "co-domino", "antihole6"},
        7: {"antihole7"},
    }
    found = {}
    for n in expected:
        pairs = identify(find_min_imperfect(Builtin(n)))
        names = [name for _, name in pairs]
        found[n] = names
    ok = all(sorted(found[n]) == sorted(expected[n]) and None not in found[n]
             for n in expected)
    report(4, ok, f"found {found}")
    assert ok


def test_c5_structural_characterizations(report):
    p4, co_2p3 = path(4), named_graph("co-2P3")
    bad = []
    checked = 0
    for g in all_graphs(6):
        checked += 1
        if brute_force_perfect(g, "gg_prime") != is_disjoint_union_of_cliques(g):
            bad.append(("gg_prime", write_graph6(g)))
        if g.n < 2 or g.isolated_vertices():
            continue
        has_p4 = contains_induced(g, p4)
        if brute_force_perfect(g, "tg") != (not has_p4 and not contains_induced(g, co_2p3)):
            bad.append(("tg", write_graph6(g)))
        if brute_force_perfect(g, "tg_prime") != (not has_p4):
            bad.append(("tg_prime", write_graph6(g)))
    report(5, not bad, f"{checked} graphs, disagreements {bad}")
    assert not bad


def random_script(rng, max_steps=8, max_n=14):
    """A random valid build script, checking each extension's family first."""
    steps = [Start()]
    g = build(BuildScript(steps))
    while len(steps) < max_steps and g.n < max_n:
        if rng.random() < 0.3 and g.n + 1 < max_n:
            s = rng.randint(1, min(3, max_n - g.n - 1))
            steps.append(UnionClique(s))
            g = build(BuildScript(steps))
            continue
        classes = mhc_contraction(g).classes()
        rng.shuffle(classes)
        family = []
        for c in classes:
            # a random nonempty part of a twin class is still a homogeneous clique
            members = [v for v in range(g.n) if c >> v & 1]
            part = rng.sample(members, rng.randint(1, len(members)))
            mask = sum(1 << v for v in part)
            if rng.random() < 0.9 and is_psc(g, family + [mask]):
                family.append(mask)
        cliques = tuple(tuple(v for v in range(g.n) if q >> v & 1) for q in family)
        steps.append(Extend(tuple(sorted(cliques))))
        g = build(BuildScript(steps))
    return BuildScript(steps)


def test_c6_operator_closure(report):
    rng = random.Random(6)
    failures = []
    sizes = []
    for i in range(500):
        script = random_script(rng)
        for j, g in enumerate(script.prefixes()):
            if not (is_gg_graph(g) and is_gg_perfect(g)):
                failures.append((i, j, write_graph6(g)))
        sizes.append(g.n)
    report(6, not failures,
           f"500 scripts, largest n={max(sizes)}, {len(failures)} failing prefixes")
    assert not failures
    assert max(sizes) <= 14


def numbers(g):
    return (domination_number(g), game_value(g),
            game_value(g, Variant.DOMINATION, Mover.STALLER), is_gg_perfect(g))


def test_c7_contraction_invariance(report):
    rng = random.Random(7)
    failures = []
    for i in range(500):
        if i % 2:
            g = random_graph(rng, rng.randint(1, 10), rng.choice([0.2, 0.5, 0.8]))
        else:
            base = random_graph(rng, rng.randint(1, 7))
            g = blow_up_twins(rng, base, rng.randint(base.n, 10))
        h = mhc_contraction(g).contracted
        if numbers(g) != numbers(h):
            failures.append(write_graph6(g))
    report(7, not failures, f"500 graphs, {len(failures)} failures")
    assert not failures


def test_c8_triangle_free(report):
    bad = []
    checked = 0
    streams = [g for g in all_graphs(7)] + list(graph_file(8))
    for g in streams:
        if not (is_connected(g) and is_triangle_free(g)):
            continue
        checked += 1
        if is_gg_perfect(g) != (recognize_kc(g) is not None):
            bad.append(write_graph6(g))
    trees = 0
    for n in range(1, 10):
        for t in nx.nonisomorphic_trees(n) if n > 1 else [nx.empty_graph(1)]:
            trees += 1
            g = Graph.from_edges(n, list(t.edges()))
            kc = recognize_kc(g)
            if is_gg_perfect(g) != (kc is not None and kc[0] <= 1):
                bad.append(("tree", write_graph6(g)))
    report(8, not bad, f"{checked} triangle-free graphs, {trees} trees, "
                       f"{len(bad)} disagreements")
    assert not bad


def test_c9_graph6_round_trip(report):
    rng = random.Random(9)
    bad = 0
    for _ in range(10_000):
        n = rng.randint(0, 62)
        g = random_graph(rng, n, rng.random())
        line = write_graph6(g)
        h = parse_graph6(line)
        if h != g or write_graph6(h) != line:
            bad += 1
        elif n <= 20 and oracle_decode_graph6(line) != (n, sorted(g.edges())):
            bad += 1
    report(9, bad == 0, f"10000 graphs, {bad} mismatches")
    assert bad == 0
