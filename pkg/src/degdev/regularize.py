"""Edge-rewiring algorithms that make a graph (nearly) regular.

Three procedures are provided, each returning the rewired graph together
with the exact list of edge edits it made and the edit budget it is
guaranteed to stay within:

* :func:`rough_regularize` keeps ``m`` and brings all degrees within one of
  each other using at most ``s(G)`` edits;
* :func:`bipartite_rough_regularize` does the same class by class for a
  bipartite graph, within ``s2(G)`` edits;
* :func:`fine_regularize` turns a graph with degrees ``d``/``d+1`` into a
  regular one using at most ``3n/2`` edits.

Wherever a procedure has a free choice of vertex it takes the lowest index,
so edit scripts are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import AlgorithmInvariantError, GraphError, PreconditionError, SizeError
from .graph import BipartiteLayout, Graph, degree_profile, pair_index, s2_deviation

RHO_EXACT_CAP = 6


@dataclass(frozen=True)
class EditStep:
    op: str  # "+" adds the edge, "-" removes it
    u: int
    v: int

    def __str__(self):
        return f"{self.op}{self.u} {self.v}"

    def flipped(self) -> EditStep:
        return EditStep("-" if self.op == "+" else "+", self.u, self.v)


@dataclass(frozen=True)
class EditScript:
    steps: tuple[EditStep, ...] = ()

    def __len__(self):
        return len(self.steps)

    def replay(self, source: Graph) -> Graph:
        """Apply the steps to ``source``; raise if a step is illegal."""
        edges = set(source.edges)
        for step in self.steps:
            e = (min(step.u, step.v), max(step.u, step.v))
            if step.op == "+":
                if e in edges:
                    raise GraphError(f"step {step} adds an edge that is present")
                edges.add(e)
            elif step.op == "-":
                if e not in edges:
                    raise GraphError(f"step {step} removes an absent edge")
                edges.remove(e)
            else:
                raise GraphError(f"unknown edit op {step.op!r}")
        return Graph(source.n, frozenset(edges))

    def to_text(self) -> str:
        return "".join(f"{s}\n" for s in self.steps)

    @classmethod
    def from_text(cls, text: str) -> EditScript:
        steps = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            op, rest = line[0], line[1:].split()
            if op not in "+-" or len(rest) != 2:
                raise GraphError(f"line {lineno}: malformed edit step {line!r}")
            steps.append(EditStep(op, int(rest[0]), int(rest[1])))
        return cls(tuple(steps))


@dataclass(frozen=True)
class RegularizationOutcome:
    result: Graph
    script: EditScript
    certified_bound: Fraction

    @property
    def edits(self) -> int:
        return len(self.script)


class _Work:
    """Mutable adjacency with an edit log.

    ``universe`` is the set of pairs that may carry an edge (all pairs, or
    the cross pairs of a bipartite layout); complements are taken inside it.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], universe: Sequence[tuple[int, int]]):
        self.n = n
        self.universe = universe
        self.adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            self.adj[u].add(v)
            self.adj[v].add(u)
        self.steps: list[EditStep] = []

    def deg(self, u: int) -> int:
        return len(self.adj[u])

    def add(self, u: int, v: int) -> None:
        if v in self.adj[u] or u == v:
            raise AlgorithmInvariantError(f"cannot add edge {u}-{v}")
        self.adj[u].add(v)
        self.adj[v].add(u)
        self.steps.append(EditStep("+", min(u, v), max(u, v)))

    def remove(self, u: int, v: int) -> None:
        if v not in self.adj[u]:
            raise AlgorithmInvariantError(f"cannot remove absent edge {u}-{v}")
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        self.steps.append(EditStep("-", min(u, v), max(u, v)))

    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    def complemented(self) -> _Work:
        present = self.edges()
        return _Work(self.n, (e for e in self.universe if e not in present), self.universe)

    def absorb_complement(self, other: _Work) -> None:
        """Take over the state of a complemented copy, translating its edits."""
        present = other.edges()
        fresh = _Work(self.n, (e for e in self.universe if e not in present), self.universe)
        self.adj = fresh.adj
        self.steps.extend(s.flipped() for s in other.steps)


def _move_edge(work: _Work, u: int, v: int) -> None:
    """Delete ``vw`` and add ``uw`` for the lowest-index legal ``w``."""
    choices = work.adj[v] - work.adj[u] - {u}
    if not choices:
        raise AlgorithmInvariantError(f"no vertex adjacent to {v} but not to {u}")
    w = min(choices)
    work.remove(v, w)
    work.add(u, w)


def _spread_step(work: _Work, verts: Sequence[int], d: int) -> None:
    """Pull degrees of ``verts`` towards ``d``/``d+1`` from both ends at once."""
    while True:
        degs = [work.deg(x) for x in verts]
        lo, hi = min(degs), max(degs)
        if not (lo < d and hi > d + 1):
            return
        u = verts[degs.index(lo)]
        v = verts[degs.index(hi)]
        _move_edge(work, u, v)


def _level_step(work: _Work, verts: Sequence[int], level: int) -> None:
    """With minimum degree ``level``, lower every degree above ``level+1``."""
    while True:
        degs = [work.deg(x) for x in verts]
        high = [x for x, dx in zip(verts, degs) if dx >= level + 2]
        if not high:
            return
        low = [x for x, dx in zip(verts, degs) if dx == level]
        if not low:
            raise AlgorithmInvariantError(f"no vertex of degree {level} left")
        _move_edge(work, low[0], high[0])


def _even_out(work: _Work, verts: Sequence[int], mean_floor: int) -> None:
    _spread_step(work, verts, mean_floor)
    if min(work.deg(x) for x in verts) < mean_floor:
        # max degree is now <= d+1; the complement has the mirrored shape
        comp = work.complemented()
        _level_step(comp, verts, min(comp.deg(x) for x in verts))
        work.absorb_complement(comp)
    else:
        _level_step(work, verts, mean_floor)


def rough_regularize(g: Graph) -> RegularizationOutcome:
    """Rewire ``g`` keeping ``m`` so that max degree <= min degree + 1."""
    work = _Work(g.n, g.edges, pair_index(g.n))
    _even_out(work, list(range(g.n)), 2 * g.m // g.n)
    result = Graph(g.n, work.edges())
    return RegularizationOutcome(result, EditScript(tuple(work.steps)), degree_profile(g).s)


def bipartite_rough_regularize(g: Graph, layout: BipartiteLayout) -> RegularizationOutcome:
    """Class-wise version of :func:`rough_regularize`.

    Edges are only ever moved between two vertices of one class, keeping the
    far endpoint, so evening out one class never disturbs the other.
    """
    layout.validate(g)
    a = layout.a
    universe = [(u, v) for u in range(a) for v in range(a, g.n)]
    work = _Work(g.n, g.edges, universe)
    for cls in layout.classes(g.n):
        verts = list(cls)
        _even_out(work, verts, g.m // len(verts))
    result = Graph(g.n, work.edges())
    return RegularizationOutcome(result, EditScript(tuple(work.steps)), s2_deviation(g, layout))


def _fine_steps(work: _Work, top: int) -> None:
    def high():
        return [x for x in range(work.n) if work.deg(x) == top]

    while True:
        hs = high()
        hset = set(hs)
        inner = [(u, v) for u in hs for v in sorted(work.adj[u]) if v in hset and u < v]
        if not inner:
            break
        work.remove(*inner[0])

    while True:
        hs = high()
        if not hs:
            return
        if len(hs) < 2:
            raise AlgorithmInvariantError("odd number of high-degree vertices")
        u, v = hs[0], hs[1]
        for w in sorted(work.adj[u]):
            pick = [t for t in sorted(work.adj[v]) if t != w and t not in work.adj[w]]
            if pick:
                t = pick[0]
                break
        else:
            raise AlgorithmInvariantError(f"no disjoint neighbours for {u}, {v}")
        work.remove(u, w)
        work.remove(v, t)
        work.add(w, t)


def fine_regularize(g: Graph) -> RegularizationOutcome:
    """Turn a graph with degrees ``d``/``d+1`` into a regular graph.

    The class of degree ``d+1`` vertices is matched away in pairs; if it has
    odd size the work happens on the complement, where the other class
    (necessarily even) plays that role.
    """
    bound = Fraction(3 * g.n, 2)
    lo, hi = min(g.degrees), max(g.degrees)
    if hi - lo > 1:
        raise PreconditionError(f"degrees span {lo}..{hi}; need a spread of at most 1")
    if hi == lo:
        return RegularizationOutcome(g, EditScript(), bound)

    work = _Work(g.n, g.edges, pair_index(g.n))
    if sum(1 for x in g.degrees if x == hi) % 2 == 0:
        _fine_steps(work, hi)
    else:
        comp = work.complemented()
        _fine_steps(comp, g.n - 1 - lo)
        work.absorb_complement(comp)
    result = Graph(g.n, work.edges())
    return RegularizationOutcome(result, EditScript(tuple(work.steps)), bound)


def rho_bounds(g: Graph) -> tuple[Fraction, Fraction]:
    """Lower and upper bounds on the distance from ``g`` to a regular graph."""
    s = degree_profile(g).s
    return s / 2, s + Fraction(3 * g.n, 2)


@lru_cache(maxsize=None)
def regular_graph_masks(n: int) -> tuple[int, ...]:
    """Edge bitmasks of every labelled regular graph on ``n`` vertices."""
    pairs = pair_index(n)
    found: list[int] = []

    def extend(i: int, deg: list[int], mask: int, r: int) -> None:
        if i == len(pairs):
            if deg[n - 1] == r:
                found.append(mask)
            return
        u, v = pairs[i]
        last_for_u = v == n - 1
        for take in (False, True):
            if take and (deg[u] >= r or deg[v] >= r):
                continue
            du = deg[u] + take
            if last_for_u and du != r:
                continue
            if take:
                deg[u] += 1
                deg[v] += 1
            extend(i + 1, deg, mask | (1 << i) if take else mask, r)
            if take:
                deg[u] -= 1
                deg[v] -= 1

    for r in range(n):
        if n * r % 2 == 0:
            extend(0, [0] * n, 0, r)
    return tuple(sorted(found))


def rho_exact(g: Graph, cap: int = RHO_EXACT_CAP) -> int:
    """Fewest edge changes turning ``g`` into some regular graph.

    Exhaustive over all labelled regular graphs on ``g.n`` vertices.
    """
    if g.n > cap:
        raise SizeError(f"n={g.n} exceeds the exact search cap {cap}")
    if g.n == 1:
        return 0
    mask = g.to_mask()
    return min((mask ^ r).bit_count() for r in regular_graph_masks(g.n))


def complete_bipartite_rho_table(max_order: int = 6) -> list[dict]:
    """Exact distance to regularity of ``K_{a,b}`` next to ``3 s / 4``.

    Covers ``1 <= a <= b`` with ``a + b <= max_order``.  Rows where the
    exact value falls short of ``3 s / 4`` have ``holds`` false.
    """
    from .generators import complete_bipartite

    rows = []
    for a in range(1, max_order):
        for b in range(a, max_order - a + 1):
            g, _ = complete_bipartite(a, b)
            s = degree_profile(g).s
            rho = rho_exact(g, cap=max_order)
            target = Fraction(3, 4) * s
            rows.append({"a": a, "b": b, "s": s, "rho": rho, "three_quarter_s": target, "holds": rho >= target})
    return rows
