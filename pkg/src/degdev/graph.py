"""Simple undirected graphs, degree deviation measures and blow-ups.

Vertices are labelled ``0..n-1`` throughout (0-based).  All degree based
measures (mean degree, ``s``, ``var``, ``s2``) are exact
:class:`fractions.Fraction` values so that chains of inequalities between
them can be checked without a tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import (
    BipartiteViolationError,
    DuplicateEdgeError,
    EdgeCountError,
    GraphError,
    HeaderError,
    LayoutError,
    SelfLoopError,
    VertexRangeError,
)

Edge = tuple[int, int]


@lru_cache(maxsize=None)
def pair_index(n: int) -> tuple[Edge, ...]:
    """All vertex pairs of ``K_n`` in lexicographic order.

    Bit ``i`` of an edge bitmask refers to ``pair_index(n)[i]``.
    """
    return tuple(combinations(range(n), 2))


@dataclass(frozen=True)
class Graph:
    """An immutable simple graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        raw = list(self.edges)
        norm = []
        for e in raw:
            u, v = (int(x) for x in e)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {u}-{v} out of range for n={self.n}")
            norm.append((u, v) if u < v else (v, u))
        edges = frozenset(norm)
        if len(edges) != len(norm):
            raise GraphError("duplicate edge")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_mask(cls, n: int, mask: int) -> Graph:
        pairs = pair_index(n)
        return cls(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))

    def to_mask(self) -> int:
        index = {p: i for i, p in enumerate(pair_index(self.n))}
        return sum(1 << index[e] for e in self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.adj)

    @cached_property
    def _profile(self) -> DegreeProfile:
        return _profile(self)

    def neighbors(self, u: int) -> frozenset[int]:
        return self.adj[u]

    def degree(self, u: int) -> int:
        return self.degrees[u]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        if self.edges:
            uv = np.array(self.edge_list())
            a[uv[:, 0], uv[:, 1]] = 1.0
            a[uv[:, 1], uv[:, 0]] = 1.0
        return a

    def is_regular(self) -> bool:
        return min(self.degrees) == max(self.degrees)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class BipartiteLayout:
    """Class ``A`` is vertices ``0..a-1``; class ``B`` is ``a..n-1``."""

    a: int

    def b(self, n: int) -> int:
        return n - self.a

    def side(self, u: int) -> int:
        return 0 if u < self.a else 1

    def classes(self, n: int) -> tuple[range, range]:
        return range(self.a), range(self.a, n)

    def validate(self, g: Graph) -> None:
        if not 1 <= self.a <= g.n - 1:
            raise LayoutError(f"class size a={self.a} invalid for n={g.n}")
        for u, v in g.edges:
            if (u < self.a) == (v < self.a):
                raise LayoutError(f"edge {u}-{v} lies inside one vertex class")


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    m: int
    mean_degree: Fraction
    s: Fraction
    var: Fraction

    @property
    def n(self) -> int:
        return len(self.degrees)


def degree_profile(g: Graph) -> DegreeProfile:
    return g._profile


def _profile(g: Graph) -> DegreeProfile:
    # integer arithmetic on n*d - 2m, divided out once at the end
    n, m = g.n, g.m
    dev = [n * d - 2 * m for d in g.degrees]
    s = Fraction(sum(abs(x) for x in dev), n)
    var = Fraction(sum(x * x for x in dev), n**3)
    return DegreeProfile(g.degrees, m, Fraction(2 * m, n), s, var)


def s2_deviation(g: Graph, layout: BipartiteLayout) -> Fraction:
    """Bipartite degree deviation: class-wise distance from ``m/a`` and ``m/b``."""
    layout.validate(g)
    a, b = layout.a, layout.b(g.n)
    ma, mb = Fraction(g.m, a), Fraction(g.m, b)
    deg = g.degrees
    return sum((abs(deg[u] - ma) for u in range(a)), Fraction(0)) + sum(
        (abs(deg[u] - mb) for u in range(a, g.n)), Fraction(0)
    )


def complement(g: Graph) -> Graph:
    return Graph(g.n, frozenset(p for p in pair_index(g.n) if p not in g.edges))


def bipartite_complement(g: Graph, layout: BipartiteLayout) -> Graph:
    """Complement relative to the complete bipartite graph on ``layout``."""
    a = layout.a
    full = ((u, v) for u in range(a) for v in range(a, g.n))
    return Graph(g.n, frozenset(e for e in full if e not in g.edges))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = ((u + g.n, v + g.n) for u, v in h.edges)
    return Graph(g.n + h.n, g.edges | frozenset(shifted))


def edit_distance(g: Graph, h: Graph) -> int:
    """Number of vertex pairs on which ``g`` and ``h`` disagree."""
    if g.n != h.n:
        raise GraphError(f"vertex counts differ: {g.n} != {h.n}")
    return len(g.edges ^ h.edges)


def subset_edge_counts(g: Graph, subset: Iterable[int]) -> tuple[int, int, int]:
    """Return ``(e(S), e(V-S), e(S, V-S))``."""
    inside = set(subset)
    for u in inside:
        if not 0 <= u < g.n:
            raise GraphError(f"vertex {u} out of range for n={g.n}")
    e_in = e_out = cut = 0
    for u, v in g.edges:
        hits = (u in inside) + (v in inside)
        if hits == 2:
            e_in += 1
        elif hits == 0:
            e_out += 1
        else:
            cut += 1
    return e_in, e_out, cut


def _check_t(t: int) -> None:
    if t < 1:
        raise GraphError(f"blow-up factor must be >= 1, got {t}")


def blow_up(g: Graph, t: int) -> Graph:
    """Replace every vertex by ``t`` independent copies.

    Copy ``j`` of vertex ``u`` is labelled ``u*t + j``.
    """
    _check_t(t)
    edges = set()
    for u, v in g.edges:
        for i in range(t):
            for j in range(t):
                x, y = u * t + i, v * t + j
                edges.add((x, y) if x < y else (y, x))
    return Graph(g.n * t, frozenset(edges))


def closed_blow_up(g: Graph, t: int) -> Graph:
    """Blow-up with a clique added on every copy class."""
    base = blow_up(g, t)
    inner = (
        (u * t + i, u * t + j) for u in range(g.n) for i, j in combinations(range(t), 2)
    )
    return Graph(g.n * t, base.edges | frozenset(inner))


def from_edge_list(text: str) -> tuple[Graph, BipartiteLayout | None]:
    """Parse the edge-list text format.

    ``#`` lines and blank lines are ignored.  The first data line is
    ``<n> <m>`` or ``<n> <m> bipartite <a>``; exactly ``m`` edge lines
    ``<u> <v>`` follow.
    """
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((lineno, stripped.split()))
    if not rows:
        raise HeaderError("missing header line")

    lineno, head = rows[0]
    layout = None
    try:
        if len(head) == 2:
            n, m = int(head[0]), int(head[1])
        elif len(head) == 4 and head[2] == "bipartite":
            n, m, a = int(head[0]), int(head[1]), int(head[3])
            if not 1 <= a <= n - 1:
                raise HeaderError(f"bipartite class size {a} invalid for n={n}", lineno)
            layout = BipartiteLayout(a)
        else:
            raise HeaderError(f"malformed header {' '.join(head)!r}", lineno)
    except ValueError as exc:
        if isinstance(exc, HeaderError):
            raise
        raise HeaderError(f"malformed header {' '.join(head)!r}", lineno) from None
    if n < 1 or m < 0:
        raise HeaderError(f"invalid counts n={n} m={m}", lineno)

    body = rows[1:]
    if len(body) != m:
        raise EdgeCountError(f"header declares {m} edges, found {len(body)}")
    seen: set[Edge] = set()
    for lineno, parts in body:
        if len(parts) != 2:
            raise HeaderError(f"expected '<u> <v>', got {' '.join(parts)!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise HeaderError(f"non-integer vertex in {' '.join(parts)!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"vertex out of range in edge {u} {v} (n={n})", lineno)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}", lineno)
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdgeError(f"duplicate edge {e[0]} {e[1]}", lineno)
        if layout is not None and (u < layout.a) == (v < layout.a):
            raise BipartiteViolationError(f"edge {u} {v} inside one vertex class", lineno)
        seen.add(e)
    return Graph(n, frozenset(seen)), layout


def to_edge_list(g: Graph, layout: BipartiteLayout | None = None) -> str:
    head = f"{g.n} {g.m}" if layout is None else f"{g.n} {g.m} bipartite {layout.a}"
    lines = [head] + [f"{u} {v}" for u, v in g.edge_list()]
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> tuple[Graph, BipartiteLayout | None]:
    with open(path, encoding="utf-8") as fh:
        return from_edge_list(fh.read())


def write_edge_list(path, g: Graph, layout: BipartiteLayout | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_edge_list(g, layout))
