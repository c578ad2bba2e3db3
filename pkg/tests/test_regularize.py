from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given

from degdev.errors import GraphError, PreconditionError, SizeError
from degdev.generators import all_graphs, complete, complete_bipartite, cycle, gnp, path, star
from degdev.graph import BipartiteLayout, Graph, degree_profile, edit_distance, pair_index, s2_deviation
from degdev.regularize import (
    EditScript,
    EditStep,
    bipartite_rough_regularize,
    complete_bipartite_rho_table,
    fine_regularize,
    regular_graph_masks,
    rho_bounds,
    rho_exact,
    rough_regularize,
)

from conftest import bipartite_graphs, graphs


def assert_script(g, outcome):
    assert outcome.script.replay(g) == outcome.result
    assert outcome.edits >= edit_distance(g, outcome.result)
    assert outcome.edits <= outcome.certified_bound


def assert_rough(g, outcome):
    r = outcome.result
    assert r.n == g.n and r.m == g.m
    assert max(r.degrees) - min(r.degrees) <= 1
    assert outcome.certified_bound == degree_profile(g).s
    if 2 * g.m % g.n == 0:
        assert r.is_regular()
    assert_script(g, outcome)


# -- rough ------------------------------------------------------------------


def test_rough_regular_input_unchanged():
    out = rough_regularize(cycle(5))
    assert out.result == cycle(5) and out.edits == 0


def test_rough_star3():
    g = star(3)
    out = rough_regularize(g)
    assert set(out.result.degrees) <= {1, 2} and out.result.m == 3
    assert out.edits <= 3
    assert_rough(g, out)


def test_rough_star5():
    g = star(5)
    out = rough_regularize(g)
    assert degree_profile(g).s == Fraction(20, 3)
    assert set(out.result.degrees) <= {1, 2} and out.edits <= 6
    assert_rough(g, out)


def test_rough_exhaustive_five():
    for _, g in all_graphs(5):
        assert_rough(g, rough_regularize(g))


@given(graphs(max_n=12))
def test_rough_property(g):
    assert_rough(g, rough_regularize(g))


def test_rough_is_deterministic():
    g = gnp(30, 0.3, seed=4)
    assert rough_regularize(g).script == rough_regularize(g).script


# -- bipartite ----------------------------------------------------------------


def assert_bipartite(g, layout, outcome):
    r = outcome.result
    layout.validate(r)
    assert r.m == g.m
    a = layout.a
    for cls in (r.degrees[:a], r.degrees[a:]):
        assert max(cls) - min(cls) <= 1
    assert outcome.certified_bound == s2_deviation(g, layout)
    if g.m % a == 0 and g.m % (g.n - a) == 0:
        assert s2_deviation(r, layout) == 0
    assert_script(g, outcome)


def test_bipartite_semiregular_unchanged():
    g, layout = complete_bipartite(2, 3)
    out = bipartite_rough_regularize(g, layout)
    assert out.edits == 0 and out.result == g


def test_bipartite_star_minus_edge():
    g = Graph(4, frozenset({(0, 1), (0, 2)}))
    layout = BipartiteLayout(1)
    out = bipartite_rough_regularize(g, layout)
    b = out.result.degrees[1:]
    assert max(b) - min(b) <= 1 and out.edits <= 1
    assert_bipartite(g, layout, out)


@given(bipartite_graphs())
def test_bipartite_property(gl):
    g, layout = gl
    assert_bipartite(g, layout, bipartite_rough_regularize(g, layout))


def test_bipartite_rejects_bad_layout():
    with pytest.raises(GraphError):
        bipartite_rough_regularize(cycle(3), BipartiteLayout(1))


# -- fine -------------------------------------------------------------------


def test_fine_regular_unchanged():
    out = fine_regularize(cycle(4))
    assert out.edits == 0 and out.result == cycle(4)


def test_fine_path4():
    out = fine_regularize(path(4))
    assert out.result.edge_list() == [(0, 1), (2, 3)] and out.edits == 1


def test_fine_c4_with_chord():
    g = Graph(4, cycle(4).edges | {(1, 3)})
    out = fine_regularize(g)
    assert out.result == cycle(4) and out.edits == 1
    assert str(out.script.steps[0]) == "-1 3"


def test_fine_precondition():
    with pytest.raises(PreconditionError):
        fine_regularize(star(3))


def assert_fine(g, out):
    lo = min(g.degrees)
    assert out.result.is_regular() and out.result.degrees[0] in (lo, lo + 1)
    assert out.certified_bound == Fraction(3 * g.n, 2)
    assert_script(g, out)


def test_fine_exhaustive_six_spread_one():
    count = 0
    for _, g in all_graphs(6):
        if max(g.degrees) - min(g.degrees) <= 1:
            assert_fine(g, fine_regularize(g))
            count += 1
    assert count > 100


@given(graphs(max_n=12))
def test_fine_after_rough(g):
    r = rough_regularize(g).result
    assert_fine(r, fine_regularize(r))


# -- scripts ----------------------------------------------------------------


def test_script_text_round_trip():
    script = EditScript((EditStep("+", 0, 1), EditStep("-", 2, 3)))
    assert script.to_text() == "+0 1\n-2 3\n"
    assert EditScript.from_text("# x\n+0 1\n\n-2 3\n") == script


def test_script_replay_illegal_steps():
    g = path(3)
    with pytest.raises(GraphError):
        EditScript((EditStep("+", 0, 1),)).replay(g)
    with pytest.raises(GraphError):
        EditScript((EditStep("-", 0, 2),)).replay(g)
    with pytest.raises(GraphError):
        EditScript.from_text("*0 1\n")


# -- distance to regularity ------------------------------------------------


def brute_regular_count(n):
    pairs = pair_index(n)
    count = 0
    for mask in range(1 << len(pairs)):
        deg = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                deg[u] += 1
                deg[v] += 1
        count += len(set(deg)) == 1
    return count


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_regular_masks_match_brute_force(n):
    masks = regular_graph_masks(n)
    assert len(masks) == brute_regular_count(n)
    for mask in masks:
        assert Graph.from_mask(n, mask).is_regular()


def test_rho_known_values():
    assert rho_exact(path(3)) == 1
    assert rho_exact(star(3)) == 3
    assert rho_exact(complete(5)) == 0
    with pytest.raises(SizeError):
        rho_exact(path(7))


def test_rho_upper_bound_exhaustive_five():
    for _, g in all_graphs(5):
        lo, hi = rho_bounds(g)
        assert rho_exact(g) <= hi


def test_rho_at_least_quarter_s():
    # provable: the distance is at least half of min_r sum |d - r| >= s/4
    for _, g in all_graphs(5):
        s = degree_profile(g).s
        floor = min(sum(abs(d - r) for d in g.degrees) for r in range(g.n)) / 2
        rho = rho_exact(g)
        assert rho >= floor >= s / 4


def test_complete_bipartite_table():
    rows = {(r["a"], r["b"]): r for r in complete_bipartite_rho_table(6)}
    assert rows[(1, 3)]["rho"] == 3
    assert all(r["rho"] == rho_exact(complete_bipartite(r["a"], r["b"])[0]) for r in rows.values())
