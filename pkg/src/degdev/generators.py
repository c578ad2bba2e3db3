"""Deterministic graph families, seeded random graphs and exhaustive corpora."""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

import numpy as np

from .errors import GraphError
from .graph import BipartiteLayout, Graph, disjoint_union, pair_index


def _positive(**params):
    for name, value in params.items():
        if value < 1:
            raise GraphError(f"{name} must be positive, got {value}")


def complete(n: int) -> Graph:
    _positive(n=n)
    return Graph(n, frozenset(pair_index(n)))


def empty(n: int) -> Graph:
    _positive(n=n)
    return Graph(n)


def star(k: int) -> Graph:
    """``K_{1,k}`` with centre 0 and leaves ``1..k``."""
    _positive(k=k)
    return Graph(k + 1, frozenset((0, i) for i in range(1, k + 1)))


def path(n: int) -> Graph:
    _positive(n=n)
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def complete_bipartite(a: int, b: int) -> tuple[Graph, BipartiteLayout]:
    _positive(a=a, b=b)
    edges = frozenset((u, v) for u in range(a) for v in range(a, a + b))
    return Graph(a + b, edges), BipartiteLayout(a)


def clique_plus_isolated(n: int) -> Graph:
    """``K_n`` together with one isolated vertex (labelled ``n``)."""
    return disjoint_union(complete(n), empty(1))


def _check_p(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must lie in [0, 1], got {p}")


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi ``G(n, p)``; pairs are sampled in lexicographic order."""
    _positive(n=n)
    _check_p(p)
    rng = np.random.default_rng(seed)
    pairs = pair_index(n)
    keep = rng.random(len(pairs)) < p
    return Graph(n, frozenset(e for e, k in zip(pairs, keep) if k))


def random_bipartite(a: int, b: int, p: float, seed: int) -> tuple[Graph, BipartiteLayout]:
    _positive(a=a, b=b)
    _check_p(p)
    rng = np.random.default_rng(seed)
    pairs = [(u, v) for u in range(a) for v in range(a, a + b)]
    keep = rng.random(len(pairs)) < p
    return Graph(a + b, frozenset(e for e, k in zip(pairs, keep) if k)), BipartiteLayout(a)


FAMILIES = (
    "complete",
    "empty",
    "star",
    "path",
    "cycle",
    "complete_bipartite",
    "clique_plus_isolated",
    "disjoint_union",
    "gnp",
    "random_bipartite",
)


def generate(family: str, *params, seed: int | None = None):
    """Build a member of a named family.

    Returns ``(graph, layout)``; ``layout`` is ``None`` unless the family
    is naturally bipartite.  ``disjoint_union`` takes two graphs.
    """
    simple = {
        "complete": complete,
        "empty": empty,
        "star": star,
        "path": path,
        "cycle": cycle,
        "clique_plus_isolated": clique_plus_isolated,
    }
    if family in simple:
        return simple[family](*params), None
    if family == "complete_bipartite":
        return complete_bipartite(*params)
    if family == "disjoint_union":
        return disjoint_union(*params), None
    if family in ("gnp", "random_bipartite"):
        if seed is None:
            raise GraphError(f"family {family!r} requires a seed")
        if family == "gnp":
            return gnp(*params, seed=seed), None
        return random_bipartite(*params, seed=seed)
    raise GraphError(f"unknown family {family!r}")


def all_graphs(n: int) -> Iterator[tuple[int, Graph]]:
    """Every labelled graph on ``n`` vertices as ``(bitmask, graph)``.

    Masks run in increasing numeric order; bit ``i`` is pair ``i`` of
    :func:`pair_index`.
    """
    pairs = pair_index(n)
    for mask in range(1 << len(pairs)):
        yield mask, Graph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))


def all_bipartite_graphs(a: int, b: int) -> Iterator[tuple[int, Graph, BipartiteLayout]]:
    layout = BipartiteLayout(a)
    pairs = [(u, v) for u in range(a) for v in range(a, a + b)]
    for mask in range(1 << len(pairs)):
        edges = frozenset(p for i, p in enumerate(pairs) if mask >> i & 1)
        yield mask, Graph(a + b, edges), layout


def random_corpus(count: int, nmax: int, seed: int, nmin: int = 2) -> list[tuple[Graph, dict]]:
    """``count`` seeded ``G(n, p)`` graphs with ``nmin <= n <= nmax``.

    Each item carries its parameters so a report can reproduce it.
    """
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(nmin, nmax + 1))
        p = float(rng.uniform(0.05, 0.95))
        sub = int(rng.integers(2**62))
        out.append((gnp(n, p, sub), {"family": "gnp", "n": n, "p": p, "seed": sub}))
    return out


def random_bipartite_corpus(count: int, cmax: int, seed: int) -> list[tuple[Graph, BipartiteLayout, dict]]:
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        a = int(rng.integers(1, cmax + 1))
        b = int(rng.integers(1, cmax + 1))
        p = float(rng.uniform(0.1, 0.9))
        sub = int(rng.integers(2**62))
        g, layout = random_bipartite(a, b, p, sub)
        out.append((g, layout, {"family": "random_bipartite", "a": a, "b": b, "p": p, "seed": sub}))
    return out


def random_partition(n: int, rng: np.random.Generator) -> tuple[frozenset[int], frozenset[int]]:
    """A uniformly random ordered bipartition with both parts nonempty."""
    while True:
        side = rng.random(n) < 0.5
        if side.any() and not side.all():
            v1 = frozenset(int(i) for i in np.flatnonzero(side))
            return v1, frozenset(range(n)) - v1


def all_bipartitions(n: int) -> Iterator[tuple[frozenset[int], frozenset[int]]]:
    """Unordered bipartitions into two nonempty parts; vertex 0 is in ``V1``."""
    rest = range(1, n)
    for size in range(0, n - 1):
        for extra in combinations(rest, size):
            v1 = frozenset((0, *extra))
            yield v1, frozenset(range(n)) - v1
