from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from degdev.errors import GraphError
from degdev.generators import all_graphs, complete, complete_bipartite, cycle, gnp, star
from degdev.graph import Graph, complement, degree_profile, subset_edge_counts
from degdev.inequalities import (
    CheckResult,
    blow_up_irregularity,
    check_bipartite_bounds,
    check_classical_bounds,
    check_irregularity_bounds,
    check_min_sum,
    check_pair_lower,
    check_pair_upper_audit,
    check_rho_sandwich,
    clique_plus_isolated_ratio,
    haemers_min_bound,
    haemers_scan,
    irregularity,
    lear_split,
    pr1_gap_check,
    star_pair_example,
    tightness_ratios,
)
from degdev.regularize import bipartite_rough_regularize, rough_regularize

from conftest import bipartite_graphs, graphs


def lapack(g):
    return np.sort(np.linalg.eigvalsh(g.adjacency_matrix()))[::-1]


def by_name(results):
    out = {}
    for r in results:
        out.setdefault(r.name, []).append(r)
    return out


# -- oracles for the individual checks ------------------------------------


@given(graphs(max_n=9))
def test_irregularity_checks_match_oracle(g):
    mu = lapack(g)[0]
    eps = mu - 2 * g.m / g.n
    assert irregularity(g) == pytest.approx(eps, abs=1e-10)
    res = by_name(check_irregularity_bounds(g))
    p = degree_profile(g)
    if g.m:
        assert res["lower_var"][0].lhs == pytest.approx(float(p.var) / (2 * math.sqrt(2 * g.m)))
        assert res["lower_s"][0].lhs == pytest.approx(float(p.s) ** 2 / (2 * g.n**2 * math.sqrt(2 * g.m)))
    assert res["upper_sqrt_s"][0].rhs == pytest.approx(math.sqrt(p.s))
    for r in check_irregularity_bounds(g):
        assert r.holds, r


@given(graphs(min_n=2, max_n=9))
def test_pair_and_min_sum_checks_match_oracle(g):
    mu, co = lapack(g), lapack(complement(g))
    n, s = g.n, degree_profile(g).s
    lower = check_pair_lower(g)
    assert [r.witness["k"] for r in lower] == list(range(1, n))
    for r in lower:
        k = r.witness["k"]
        assert r.rhs == pytest.approx(mu[k - 1] + co[n - k], abs=1e-9)
        assert r.lhs == pytest.approx(-1 - 2 * math.sqrt(2 * s))
        assert r.holds
    m = check_min_sum(g)
    assert m.lhs == pytest.approx(mu[-1] + co[-1], abs=1e-9)
    assert m.rhs == pytest.approx(-1 - float(s) ** 2 / n**3)
    assert m.holds


@given(graphs(min_n=2, max_n=9))
def test_pairing_b_always_holds(g):
    # Weyl on A + A_co = J - I pins every sum with index offset n + 2 at <= -1
    res = by_name(check_pair_upper_audit(g))
    assert len(res["pair_upper_A"]) == g.n - 1 and len(res["pair_upper_B"]) == g.n - 1
    assert all(r.holds for r in res["pair_upper_B"])
    assert all(r.kind == "audit" for r in res["pair_upper_A"])


def test_c4_pairings():
    res = by_name(check_pair_upper_audit(cycle(4)))
    a = {r.witness["k"]: r for r in res["pair_upper_A"]}
    # C_4 has spectrum 2 0 0 -2; its complement 2K_2 has 1 1 -1 -1
    assert a[3].lhs == pytest.approx(1.0) and not a[3].holds
    assert a[1].lhs == pytest.approx(1.0) and not a[1].holds
    assert a[2].holds
    assert [r.witness["k"] for r in res["pair_upper_B"]] == [2, 3, 4]
    assert all(r.holds for r in res["pair_upper_B"])


@given(bipartite_graphs())
def test_bipartite_bounds_hold(gl):
    g, layout = gl
    for r in check_bipartite_bounds(g, layout):
        assert r.holds, r


def quotient_min(g, v1):
    e1, e2, e3 = subset_edge_counts(g, v1)
    n1, n2 = len(v1), g.n - len(v1)
    b = np.array([[2 * e1 / n1, e3 / n1], [e3 / n2, 2 * e2 / n2]])
    return min(np.linalg.eigvals(b).real)


@given(graphs(min_n=2, max_n=8), st.data())
def test_haemers_matches_quotient_matrix(g, data):
    size = data.draw(st.integers(1, g.n - 1))
    v1 = frozenset(data.draw(st.permutations(range(g.n)))[:size])
    r = haemers_min_bound(g, (v1, frozenset(range(g.n)) - v1))
    assert r.rhs == pytest.approx(quotient_min(g, v1), abs=1e-9)
    assert r.lhs == pytest.approx(lapack(g)[-1], abs=1e-9)
    assert r.holds


def test_haemers_scan_finds_worst_partition():
    g = gnp(7, 0.5, seed=3)
    scan = haemers_scan(g)
    assert scan.witness["partitions_tested"] == 2**6 - 1
    best = min(quotient_min(g, frozenset(v1)) for v1, _ in _halves(7))
    assert scan.rhs == pytest.approx(best, abs=1e-9)
    sampled = haemers_scan(gnp(14, 0.5, seed=3), seed=5)
    assert sampled.witness["partitions_tested"] == 20
    assert sampled == haemers_scan(gnp(14, 0.5, seed=3), seed=5)


def _halves(n):
    for size in range(1, n):
        for c in combinations(range(n), size):
            if 0 in c:
                yield c, None


def test_haemers_rejects_bad_partition():
    with pytest.raises(GraphError):
        haemers_min_bound(cycle(4), ({0, 1}, {1, 2, 3}))
    with pytest.raises(GraphError):
        haemers_min_bound(cycle(4), (set(), {0, 1, 2, 3}))


@given(graphs(max_n=9))
def test_classical_bounds_checks(g):
    assert all(r.holds for r in check_classical_bounds(g))


@given(bipartite_graphs())
def test_classical_bipartite_checks(gl):
    g, layout = gl
    res = by_name(check_classical_bounds(g, layout))
    assert "cvetkovic" in res and "rayleigh" in res
    assert all(r.holds for r in check_classical_bounds(g, layout))


@given(graphs(max_n=10))
def test_pr1_gap_rough(g):
    out = rough_regularize(g)
    assert all(r.holds for r in pr1_gap_check(g, out.result))
    assert all(r.holds for r in pr1_gap_check(out.result, g))


@given(bipartite_graphs())
def test_pr1_gap_bipartite(gl):
    g, layout = gl
    out = bipartite_rough_regularize(g, layout)
    res = by_name(pr1_gap_check(g, out.result, layout))
    assert res["pr1_gap_bipartite"][0].holds and res["pr1_gap"][0].holds


def test_pr1_gap_vertex_mismatch():
    with pytest.raises(GraphError):
        pr1_gap_check(cycle(4), cycle(5))


# -- audited claims --------------------------------------------------------


def test_lear_split_star3():
    r = lear_split(star(3))
    assert r.witness["S"] == [1, 2]
    assert r.witness["gain"] == 1
    assert r.witness["margin_exact"] == "-1/2"
    assert r.witness["best_margin_exact"] == "-1/2"
    assert not r.holds and r.kind == "audit"


def test_lear_split_exhaustive_oracle():
    g = gnp(8, 0.4, seed=11)
    r = lear_split(g)
    best = max(
        subset_edge_counts(g, c)[1] - subset_edge_counts(g, c)[0] for c in combinations(range(8), 4)
    )
    assert r.witness["best_gain"] == best
    assert "best_gain" not in lear_split(gnp(16, 0.4, seed=1)).witness


@pytest.mark.parametrize("k", [3, 7, 20])
def test_star_example_closed_forms(k):
    ex = star_pair_example(k)
    assert Fraction(ex["s"]) == Fraction(ex["s_closed_form"]) == Fraction(2 * k * (k - 1), k + 1)
    assert Fraction(ex["s"]) != Fraction(ex["s_stated"])
    assert ex["pair_sum"] == pytest.approx(-math.sqrt(k), abs=1e-9)
    assert ex["pair_sum"] - ex["pair_sum_stated"] == pytest.approx(1.0, abs=1e-9)


def test_rho_sandwich_records():
    res = by_name(check_rho_sandwich(star(3)))
    assert res["rho_upper"][0].holds and res["rho_upper"][0].lhs == 3
    assert res["rho_lower"][0].holds
    # a single edge on five vertices: one deletion reaches the empty graph,
    # while s/2 = 6/5
    one = Graph(5, frozenset({(0, 1)}))
    low = by_name(check_rho_sandwich(one))["rho_lower"][0]
    assert not low.holds and low.witness["rho"] == 1 and low.witness["s_half"] == "6/5"
    assert low.witness["degree_floor"] == "1"


def test_rho_lower_has_counterexamples_but_floor_holds():
    bad = 0
    for _, g in all_graphs(5):
        res = by_name(check_rho_sandwich(g))
        low = res["rho_lower"][0]
        bad += not low.holds
        assert Fraction(low.witness["degree_floor"]) <= low.witness["rho"]
        assert res["rho_upper"][0].holds
    assert bad > 0


# -- tightness -------------------------------------------------------------


def test_star_upper_ratio_closed_form():
    for k in (4, 50, 400):
        s = 2 * k * (k - 1) / (k + 1)
        expected = (math.sqrt(k) - 2 * k / (k + 1)) / math.sqrt(s)
        assert tightness_ratios(star(k)).upper_ratio == pytest.approx(expected, abs=1e-9)


def test_near_balanced_lower_ratio():
    g, _ = complete_bipartite(10, 11)
    n, m = 21, 110
    eps = math.sqrt(110) - 2 * m / n
    s = 10 * abs(11 - 2 * m / n) + 11 * abs(10 - 2 * m / n)
    r = tightness_ratios(g)
    assert r.lower_ratio_sqrt_m == pytest.approx(eps * n * n * math.sqrt(m) / s**2, rel=1e-9)
    assert r.conjecture_lower == pytest.approx(2 * r.lower_ratio_sqrt_m)


def test_ratios_undefined_for_regular():
    r = tightness_ratios(complete(5))
    assert r.upper_ratio is None and r.lower_ratio_sqrt_m is None
    assert r.to_dict()["s"] == "0"


def test_clique_plus_isolated_ratio():
    r = clique_plus_isolated_ratio(10)
    k = 10
    n = k + 1
    mean = k * (k - 1) / n
    s = k * abs(k - 1 - mean) + mean
    mu = k - 1
    assert r.upper_ratio == pytest.approx((mu - mean) / math.sqrt(s))


@pytest.mark.parametrize("t", [2, 3])
def test_blow_up_scales_irregularity(t):
    got, expected = blow_up_irregularity(gnp(6, 0.5, seed=2), t)
    assert got == pytest.approx(expected, abs=1e-9)


def test_check_result_round_trip():
    r = lear_split(star(3))
    assert CheckResult.from_dict(r.to_dict()) == r
