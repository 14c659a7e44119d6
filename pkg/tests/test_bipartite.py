"""Bipartite two-coloring: path systems, twin splits, the full construction."""

import random

import pytest

from lirdec.bipartite import (
    bipartition,
    color_double_bipartite,
    find_twin_split,
    parity_profile,
    path_system,
)
from lirdec.decomposition import BB, RB, Decomposition, color_degree_table, verify
from lirdec.enumeration import (
    enumerate_connected_bipartite,
    random_connected_bipartite,
)
from lirdec.graphs import (
    SimpleGraph,
    complete_multipartite_graph,
    cycle_graph,
    double,
    path_graph,
)
from lirdec.solver import SearchLimits, SearchStatus, exact_lir_multigraph

from oracle import degree_parity, random_connected_graph


def test_bipartition_p4():
    bip = bipartition(path_graph(4))
    assert sorted(bip.x) == [0, 2] and sorted(bip.y) == [1, 3]


def test_bipartition_c6_sides():
    bip = bipartition(cycle_graph(6))
    assert {len(bip.x), len(bip.y)} == {3}


def test_bipartition_rejects_odd_cycle():
    with pytest.raises(ValueError, match="not bipartite"):
        bipartition(cycle_graph(5))


def test_path_system_unique_path():
    j = path_system(path_graph(3), {0, 2})
    assert j.edges == frozenset({(0, 1), (1, 2)})


def test_path_system_empty_terminals():
    assert path_system(cycle_graph(4), set()).edges == frozenset()


def test_path_system_c4_opposite_pair():
    j = path_system(cycle_graph(4), {0, 2})
    # one of the two arcs; parity is what matters
    assert degree_parity(4, j.edges) == [1, 0, 1, 0]


def test_path_system_rejects_odd_terminals():
    with pytest.raises(ValueError, match="even"):
        path_system(path_graph(3), {0})


def test_path_system_rejects_foreign_terminals():
    with pytest.raises(ValueError, match="outside"):
        path_system(path_graph(3), {0, 7})


def test_path_system_parity_property():
    rng = random.Random(99)
    for _ in range(1000):
        n = rng.randrange(2, 14)
        g = random_connected_graph(n, rng.randrange(0, n), rng)
        pool = list(range(n))
        rng.shuffle(pool)
        terms = set(pool[: 2 * rng.randrange(0, n // 2 + 1)])
        j = path_system(g, terms)
        par = degree_parity(n, j.edges)
        assert all(par[v] == (1 if v in terms else 0) for v in range(n))


def test_parity_after_coloring():
    # terminals end up odd in red and blue, everyone else even in both
    rng = random.Random(4)
    for _ in range(50):
        n = rng.randrange(3, 12)
        g = random_connected_graph(n, rng.randrange(0, n), rng)
        pool = list(range(n))
        rng.shuffle(pool)
        terms = set(pool[: 2 * rng.randrange(1, max(2, n // 2))])
        j = path_system(g, terms)
        d = Decomposition(
            double(g), 2, {e: RB if e in j.edges else BB for e in g.edges}
        )
        prof = parity_profile(d)
        assert all(
            prof[v] == ((1, 1) if v in terms else (0, 0)) for v in range(n)
        )


def test_twin_split_star():
    ts = find_twin_split(complete_multipartite_graph([1, 4]))
    # both corners are twin classes with empty residue; the tie-break picks
    # the lexicographically smaller set
    assert not ts.xp and not ts.yp
    assert sorted(ts.s) + sorted(ts.t) == [0, 1, 2, 3, 4]


def test_twin_split_c6():
    ts = find_twin_split(cycle_graph(6))
    assert sorted(ts.s) == [0]
    assert sorted(ts.t) == [1, 5]
    assert sorted(ts.xp) == [2, 4] and sorted(ts.yp) == [3]


def test_twin_split_k33_takes_a_full_side():
    ts = find_twin_split(complete_multipartite_graph([3, 3]))
    assert len(ts.s) == 3 and len(ts.t) == 3
    assert not ts.xp and not ts.yp


def test_twin_split_structural_invariants():
    rng = random.Random(31)
    for _ in range(120):
        g = random_connected_bipartite(rng.randrange(3, 16), rng)
        ts = find_twin_split(g)
        # no S vertex touches the residue's far side
        for v in ts.s:
            assert not (set(g.adj[v]) & ts.yp)
        # every T vertex keeps a neighbor in the residue when it exists
        if ts.xp:
            for t in ts.t:
                assert set(g.adj[t]) & ts.xp


def test_k12_coloring():
    d = color_double_bipartite(path_graph(3))
    assert set(d.assign.values()) == {RB}
    assert [r for r, _ in color_degree_table(d)] == [1, 2, 1]


def test_c6_coloring_matches_derived_degrees():
    d = color_double_bipartite(cycle_graph(6))
    assert [r for r, _ in color_degree_table(d)] == [0, 2, 3, 2, 3, 2]
    assert verify(d).valid


def test_k33_routes_to_balanced_bipartite_rule():
    d = color_double_bipartite(complete_multipartite_graph([3, 3]))
    assert verify(d).valid
    red_units = sum(c[0] for c in d.assign.values())
    assert red_units == 6  # one vertex's three multiedges fully red


def test_rejects_k2():
    with pytest.raises(ValueError, match="no locally irregular"):
        color_double_bipartite(path_graph(2))


def test_rejects_non_bipartite():
    with pytest.raises(ValueError, match="not bipartite"):
        color_double_bipartite(cycle_graph(5))


def test_even_side_branch_parities():
    # after branch (a): X odd in both colors, Y even in both
    g = path_graph(4)  # sides {0,2} and {1,3}, both even: X preferred
    d = color_double_bipartite(g)
    prof = parity_profile(d)
    assert prof[0] == (1, 1) and prof[2] == (1, 1)
    assert prof[1] == (0, 0) and prof[3] == (0, 0)


@pytest.mark.parametrize("n", range(3, 10))
def test_exhaustive_small_bipartite(n):
    for g in enumerate_connected_bipartite(n):
        report = verify(color_double_bipartite(g))
        assert report.valid, (n, g.edges, report.conflicts[:3])


def test_random_bipartite_up_to_sixty():
    rng = random.Random(20260808)
    for _ in range(500):
        g = random_connected_bipartite(rng.randrange(3, 61), rng)
        assert verify(color_double_bipartite(g)).valid


def _branch_of(g):
    """Which case of the both-sides-odd analysis handles g."""
    bip = bipartition(g)
    if len(bip.x) % 2 == 0 or len(bip.y) % 2 == 0:
        return "even-side"
    split = find_twin_split(g, bip)
    if not split.xp and not split.yp:
        return "complete-bipartite"
    s, t = len(split.s), len(split.t)
    if s % 2 == 1:
        return "case1"
    xp = set(split.xp)
    rich = [
        y0
        for y0 in sorted(split.t)
        if sum(1 for w in g.adj[y0] if w in xp) >= 2
    ]
    if s != t:
        return "case2a"
    return "case2b" if rich else "case2b-repair"


# smallest catalog members driving each rare branch of the construction
CASE2A = SimpleGraph(6, [(0, 1), (0, 2), (0, 4), (1, 3), (1, 5)])
CASE2B_REPAIR = SimpleGraph(
    8, [(0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (1, 6), (1, 7), (2, 3), (3, 4)]
)
CASE2B = SimpleGraph(
    10,
    [
        (0, 1), (0, 2), (0, 4), (0, 6), (0, 7), (1, 3), (1, 5), (2, 3),
        (2, 5), (3, 4), (3, 6), (4, 5), (5, 7), (6, 8), (6, 9), (7, 8), (7, 9),
    ],
)


@pytest.mark.parametrize(
    "g,branch",
    [
        (cycle_graph(6), "case1"),
        (CASE2A, "case2a"),
        (CASE2B, "case2b"),
        (CASE2B_REPAIR, "case2b-repair"),
        (complete_multipartite_graph([3, 3]), "complete-bipartite"),
        (path_graph(4), "even-side"),
    ],
)
def test_every_construction_branch(g, branch):
    assert _branch_of(g) == branch
    assert verify(color_double_bipartite(g)).valid


def test_agrees_with_exact_solver_on_small_graphs():
    # the solver always finds k<=2 where the construction succeeds, and the
    # construction never fails on connected bipartite inputs (theorem)
    for n in range(3, 8):
        for g in enumerate_connected_bipartite(n):
            d = color_double_bipartite(g)
            assert verify(d).valid
            res = exact_lir_multigraph(double(g), SearchLimits(max_colors=2))
            assert res.status is SearchStatus.FOUND
