"""Dense symmetric eigenvalues by cyclic Jacobi rotations, graph spectra,
predicted spectra of blow-ups and the classical bounds on the spectral radius.

The solver works on a stack of matrices of one size at a time, applying the
same sequence of rotation positions to every matrix with per-matrix angles.
That keeps exhaustive corpora (tens of thousands of 6x6 matrices) and single
matrices of a few hundred rows both cheap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import ConvergenceError, GraphError
from .graph import BipartiteLayout, Graph, complement

DEFAULT_TOL = 1e-12
MAX_SWEEPS = 100
SYMMETRY_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues sorted descending, plus the off-diagonal norm reached."""

    values: np.ndarray
    residual: float = 0.0

    def __len__(self):
        return len(self.values)

    def mu(self, k: int) -> float:
        """The ``k``-th largest eigenvalue, 1-based."""
        if not 1 <= k <= len(self.values):
            raise IndexError(f"eigenvalue index {k} out of range 1..{len(self.values)}")
        return float(self.values[k - 1])

    @property
    def largest(self) -> float:
        return float(self.values[0])

    @property
    def smallest(self) -> float:
        return float(self.values[-1])

    def tolist(self) -> list[float]:
        return [float(x) for x in self.values]


@lru_cache(maxsize=None)
def rotation_schedule(n: int, ordering: str = "parallel") -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Groups of disjoint index pairs covering every ``p < q`` once per sweep.

    ``"row"`` is the classical cyclic-by-row order, one pair per group.
    ``"parallel"`` is the round-robin tournament order, ``n//2`` disjoint
    pairs per group, which lets a group be applied as one vectorised step.
    """
    if ordering == "row":
        return tuple(
            (np.array([p]), np.array([q])) for p in range(n) for q in range(p + 1, n)
        )
    if ordering != "parallel":
        raise ValueError(f"unknown ordering {ordering!r}")
    size = n + (n % 2)
    players = list(range(size))
    groups = []
    for _ in range(size - 1):
        pairs = []
        for i in range(size // 2):
            p, q = players[i], players[size - 1 - i]
            if p < n and q < n:
                pairs.append((min(p, q), max(p, q)))
        if pairs:
            pairs.sort()
            groups.append((np.array([p for p, _ in pairs]), np.array([q for _, q in pairs])))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(groups)


def _off_norm(a: np.ndarray) -> np.ndarray:
    off = a * (1.0 - np.eye(a.shape[1]))
    return np.sqrt(np.einsum("bij,bij->b", off, off))


def _rotate(a: np.ndarray, p: np.ndarray, q: np.ndarray, skip: np.ndarray) -> None:
    """Annihilate ``a[:, p, q]`` for every pair in place."""
    app = a[:, p, p]
    aqq = a[:, q, q]
    apq = a[:, p, q]
    live = np.abs(apq) > skip[:, None]
    if not live.any():
        return
    theta = (aqq - app) / (2.0 * np.where(live, apq, 1.0))
    t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.hypot(1.0, theta))
    c = np.where(live, 1.0 / np.sqrt(1.0 + t * t), 1.0)
    s = np.where(live, t * c, 0.0)

    rp = a[:, p, :]
    rq = a[:, q, :]
    a[:, p, :] = c[:, :, None] * rp - s[:, :, None] * rq
    a[:, q, :] = s[:, :, None] * rp + c[:, :, None] * rq
    cp = a[:, :, p]
    cq = a[:, :, q]
    a[:, :, p] = cp * c[:, None, :] - cq * s[:, None, :]
    a[:, :, q] = cp * s[:, None, :] + cq * c[:, None, :]
    a[:, p, q] = np.where(live, 0.0, a[:, p, q])
    a[:, q, p] = np.where(live, 0.0, a[:, q, p])


def eigenvalues_batch(
    stack: np.ndarray,
    tol: float = DEFAULT_TOL,
    max_sweeps: int = MAX_SWEEPS,
    ordering: str = "parallel",
) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues of a stack of symmetric matrices, shape ``(B, n, n)``.

    Returns ``(values, residuals)`` with ``values`` sorted descending per
    row.  Asymmetry beyond ``SYMMETRY_TOL`` relative to the largest entry
    is an error.  Iteration stops for a matrix once its off-diagonal Frobenius norm
    is at most ``tol * (1 + ||A||_F)``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = np.array(stack, dtype=float)
    if a.ndim != 3 or a.shape[1] != a.shape[2]:
        raise ValueError(f"expected shape (B, n, n), got {a.shape}")
    asym = np.abs(a - np.swapaxes(a, 1, 2)).max(initial=0.0)
    if asym > SYMMETRY_TOL * max(1.0, np.abs(a).max(initial=0.0)):
        raise ValueError(f"matrix is not symmetric (max asymmetry {asym:.3g})")
    # round-off level asymmetry (e.g. from Q diag Q^T) is averaged away
    a = 0.5 * (a + np.swapaxes(a, 1, 2))
    batch, n = a.shape[0], a.shape[1]
    if batch == 0:
        return np.zeros((0, n)), np.zeros(0)

    target = tol * (1.0 + np.sqrt(np.einsum("bij,bij->b", a, a)))
    # a pair whose entry is below this cannot keep off() above target
    skip = target / max(n, 1)
    schedule = rotation_schedule(n, ordering)
    residual = _off_norm(a)
    sweeps = 0
    while True:
        todo = np.flatnonzero(residual > target)
        if todo.size == 0:
            break
        if sweeps == max_sweeps:
            worst = float(residual[todo].max())
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps", worst)
        sub = a[todo]
        sub_skip = skip[todo]
        for p, q in schedule:
            _rotate(sub, p, q, sub_skip)
        a[todo] = sub
        residual[todo] = _off_norm(sub)
        sweeps += 1

    values = -np.sort(-np.einsum("bii->bi", a), axis=1)
    return values, residual


def eigenvalues_symmetric(
    a, tol: float = DEFAULT_TOL, max_sweeps: int = MAX_SWEEPS, ordering: str = "parallel"
) -> Spectrum:
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    values, residual = eigenvalues_batch(a[None], tol, max_sweeps, ordering)
    return Spectrum(values[0], float(residual[0]))


def graph_spectrum(g: Graph, tol: float = DEFAULT_TOL) -> Spectrum:
    return eigenvalues_symmetric(g.adjacency_matrix(), tol)


def graph_spectra(graphs: Sequence[Graph], tol: float = DEFAULT_TOL, chunk: int = 4096) -> list[Spectrum]:
    """Spectra of many graphs, batching graphs of equal order together."""
    out: list[Spectrum | None] = [None] * len(graphs)
    by_n: dict[int, list[int]] = {}
    for i, g in enumerate(graphs):
        by_n.setdefault(g.n, []).append(i)
    for n, idx in by_n.items():
        for start in range(0, len(idx), chunk):
            part = idx[start : start + chunk]
            stack = np.zeros((len(part), n, n))
            for j, i in enumerate(part):
                edges = graphs[i].edge_list()
                if edges:
                    uv = np.array(edges)
                    stack[j, uv[:, 0], uv[:, 1]] = 1.0
                    stack[j, uv[:, 1], uv[:, 0]] = 1.0
            values, residuals = eigenvalues_batch(stack, tol)
            for j, i in enumerate(part):
                out[i] = Spectrum(values[j], float(residuals[j]))
    return out  # type: ignore[return-value]


def graph_and_complement_spectra(graphs: Sequence[Graph], tol: float = DEFAULT_TOL):
    """``[(spectrum(g), spectrum(complement(g))), ...]`` in input order."""
    specs = graph_spectra(list(graphs) + [complement(g) for g in graphs], tol)
    k = len(graphs)
    return list(zip(specs[:k], specs[k:]))


def _check_predicted(spec: Spectrum, n: int, t: int) -> None:
    if len(spec) != n:
        raise ValueError(f"spectrum has {len(spec)} values, expected n={n}")
    if t < 1:
        raise GraphError(f"blow-up factor must be >= 1, got {t}")


def predicted_blow_up_spectrum(spec: Spectrum, n: int, t: int) -> Spectrum:
    _check_predicted(spec, n, t)
    values = np.concatenate([t * spec.values, np.zeros(n * (t - 1))])
    return Spectrum(-np.sort(-values), spec.residual)


def predicted_closed_blow_up_spectrum(spec: Spectrum, n: int, t: int) -> Spectrum:
    _check_predicted(spec, n, t)
    values = np.concatenate([t * spec.values + (t - 1), -np.ones(n * (t - 1))])
    return Spectrum(-np.sort(-values), spec.residual)


def spectrum_distance(x: Spectrum, y: Spectrum) -> float:
    """L-infinity distance between two spectra compared as sorted multisets."""
    if len(x) != len(y):
        raise ValueError(f"spectra differ in length: {len(x)} != {len(y)}")
    return float(np.max(np.abs(np.sort(x.values) - np.sort(y.values)), initial=0.0))


@dataclass(frozen=True)
class ClassicalBounds:
    """One-line bounds on the spectral radius ``mu`` of a graph.

    ``hofmeister`` is the value ``(1/n) sum d^2`` that ``mu**2`` dominates;
    ``stanley`` and ``berman_zhang`` are upper bounds on ``mu``.  The
    bipartite fields (``cvetkovic`` upper, ``rayleigh`` lower) are ``None``
    unless a layout was supplied.
    """

    mu: float
    hofmeister: float
    stanley: float
    berman_zhang: float
    cvetkovic: float | None = None
    rayleigh: float | None = None


def classical_bounds(
    g: Graph, layout: BipartiteLayout | None = None, spectrum: Spectrum | None = None
) -> ClassicalBounds:
    if layout is not None:
        layout.validate(g)
    spectrum = spectrum or graph_spectrum(g)
    deg = g.degrees
    hof = sum(d * d for d in deg) / g.n
    stanley = -0.5 + math.sqrt(2 * g.m + 0.25)
    bz = max((math.sqrt(deg[u] * deg[v]) for u, v in g.edges), default=0.0)
    cvet = rayleigh = None
    if layout is not None:
        cvet = math.sqrt(g.m)
        rayleigh = g.m / math.sqrt(layout.a * layout.b(g.n))
    return ClassicalBounds(spectrum.largest, hof, stanley, bz, cvet, rayleigh)
