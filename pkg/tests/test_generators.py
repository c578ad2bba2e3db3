from __future__ import annotations

from itertools import islice

import numpy as np
import pytest

from degdev.errors import GraphError
from degdev.generators import (
    FAMILIES,
    all_bipartite_graphs,
    all_bipartitions,
    all_graphs,
    clique_plus_isolated,
    complete_bipartite,
    cycle,
    generate,
    gnp,
    random_bipartite,
    random_bipartite_corpus,
    random_corpus,
    random_partition,
    star,
)
from degdev.graph import BipartiteLayout


def test_exhaustive_counts_and_order():
    items = list(all_graphs(4))
    assert len(items) == 64
    assert [mask for mask, _ in items] == list(range(64))
    assert all(g.to_mask() == mask for mask, g in items)
    assert sum(1 for _ in all_graphs(6)) == 32768


def test_exhaustive_bipartite():
    items = list(all_bipartite_graphs(2, 3))
    assert len(items) == 64
    for _, g, layout in items:
        layout.validate(g)


def test_bipartitions_are_unordered_and_complete():
    parts = list(all_bipartitions(5))
    assert len(parts) == 2**4 - 1
    assert len({p[0] for p in parts}) == len(parts)
    for v1, v2 in parts:
        assert 0 in v1 and v2 and not (v1 & v2) and v1 | v2 == set(range(5))


def test_random_partition_nonempty():
    rng = np.random.default_rng(3)
    for _ in range(50):
        v1, v2 = random_partition(4, rng)
        assert v1 and v2 and v1 | v2 == set(range(4))


def test_gnp_is_seeded():
    assert gnp(20, 0.3, seed=5) == gnp(20, 0.3, seed=5)
    assert gnp(20, 0.3, seed=5) != gnp(20, 0.3, seed=6)
    assert gnp(10, 0.0, seed=1).m == 0
    assert gnp(10, 1.0, seed=1).m == 45


def test_random_bipartite_respects_layout():
    g, layout = random_bipartite(4, 4, 0.5, seed=2)
    layout.validate(g)
    assert (g, layout) == random_bipartite(4, 4, 0.5, seed=2)


def test_corpora_are_reproducible():
    a = random_corpus(20, 30, seed=9)
    b = random_corpus(20, 30, seed=9)
    assert [g for g, _ in a] == [g for g, _ in b]
    for g, meta in a:
        assert 2 <= g.n <= 30 and meta["n"] == g.n
        assert gnp(meta["n"], meta["p"], meta["seed"]) == g
    for g, layout, meta in random_bipartite_corpus(10, 5, seed=1):
        layout.validate(g)
        assert (meta["a"], meta["b"]) == (layout.a, g.n - layout.a)


def test_families():
    assert star(4).degrees == (4, 1, 1, 1, 1)
    assert cycle(5).is_regular()
    g, layout = complete_bipartite(2, 3)
    assert g.m == 6 and layout == BipartiteLayout(2)
    k = clique_plus_isolated(4)
    assert k.n == 5 and k.degrees == (3, 3, 3, 3, 0)


def test_generate_dispatch():
    for name in FAMILIES:
        if name in ("complete_bipartite", "random_bipartite"):
            params = (2, 3) if name == "complete_bipartite" else (2, 3, 0.5)
        elif name == "disjoint_union":
            params = (star(2), star(1))
        elif name == "gnp":
            params = (5, 0.5)
        else:
            params = (4,)
        g, layout = generate(name, *params, seed=1)
        if layout is not None:
            layout.validate(g)
    with pytest.raises(GraphError):
        generate("gnp", 5, 0.5)
    with pytest.raises(GraphError):
        generate("petersen")


@pytest.mark.parametrize("call", [lambda: star(0), lambda: cycle(2), lambda: gnp(3, 1.5, 0)])
def test_generator_argument_errors(call):
    with pytest.raises(GraphError):
        call()


def test_enumerator_is_lazy():
    assert [m for m, _ in islice(all_graphs(9), 3)] == [0, 1, 2]
