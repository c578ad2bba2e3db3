"""Checkers for spectral inequalities in terms of degree deviation.

Every checker returns :class:`CheckResult` records with a signed margin
(``rhs - lhs`` for a claim of the form ``lhs <= rhs``), so near-violations
stay visible.  Checkers accept precomputed spectra to let corpus audits
batch the eigenvalue work.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import GraphError
from .generators import all_bipartitions, clique_plus_isolated, random_partition, star
from .graph import (
    BipartiteLayout,
    Graph,
    blow_up,
    complement,
    degree_profile,
    s2_deviation,
    subset_edge_counts,
)
from .spectra import Spectrum, classical_bounds, graph_spectrum

DEFAULT_CHECK_TOL = 1e-8
LEAR_EXHAUSTIVE_CAP = 14
HAEMERS_EXHAUSTIVE_CAP = 10
HAEMERS_SAMPLES = 20

# kinds: "theorem" = proven claim expected to hold; "bound" = classical bound;
# "audit" = a literal claim known to be questionable, reported either way
THEOREM, BOUND, AUDIT = "theorem", "bound", "audit"


@dataclass(frozen=True)
class CheckResult:
    name: str
    lhs: float
    rhs: float
    margin: float
    holds: bool
    tol: float
    kind: str = THEOREM
    witness: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "holds": self.holds,
            "tol": self.tol,
            "witness": self.witness,
        }

    @classmethod
    def from_dict(cls, d: dict) -> CheckResult:
        return cls(d["name"], d["lhs"], d["rhs"], d["margin"], d["holds"], d["tol"], d["kind"], d["witness"])


def _leq(name, lhs, rhs, tol, kind=THEOREM, **witness) -> CheckResult:
    """Record the claim ``lhs <= rhs``."""
    lhs, rhs = float(lhs), float(rhs)
    margin = rhs - lhs
    return CheckResult(name, lhs, rhs, margin, margin >= -tol, tol, kind, witness)


def _spec(g: Graph, spectrum: Spectrum | None) -> Spectrum:
    return spectrum if spectrum is not None else graph_spectrum(g)


def _co_spec(g: Graph, co_spectrum: Spectrum | None) -> Spectrum:
    return co_spectrum if co_spectrum is not None else graph_spectrum(complement(g))


def _frac(x: Fraction) -> str:
    return str(x)


def irregularity(g: Graph, spectrum: Spectrum | None = None) -> float:
    """Largest eigenvalue minus the average degree."""
    return _spec(g, spectrum).largest - 2 * g.m / g.n


def check_irregularity_bounds(
    g: Graph, spectrum: Spectrum | None = None, tol: float = DEFAULT_CHECK_TOL
) -> list[CheckResult]:
    """Lower and upper bounds on the irregularity in terms of ``var`` and ``s``.

    Produces ``lower_var``, ``lower_s``, ``upper_sqrt_s`` and the exact chain
    ``s^2/n^2 <= var <= s`` (``var_chain``, checked in rationals with zero
    tolerance).
    """
    prof = degree_profile(g)
    n, m = g.n, g.m
    eps = irregularity(g, spectrum)
    info = {"epsilon": eps, "mu": eps + 2 * m / n, "s": _frac(prof.s), "var": _frac(prof.var)}
    if m == 0:
        lower_var = lower_s = 0.0
        eps = 0.0
    else:
        root = math.sqrt(2 * m)
        lower_var = float(prof.var) / (2 * root)
        lower_s = float(prof.s) ** 2 / (2 * n * n * root)
    out = [
        _leq("lower_var", lower_var, eps, tol, **info),
        _leq("lower_s", lower_s, eps, tol, **info),
        _leq("upper_sqrt_s", eps, math.sqrt(prof.s), tol, **info),
    ]
    low = prof.s**2 / n**2
    exact_margin = min(prof.var - low, prof.s - prof.var)
    out.append(
        CheckResult(
            "var_chain",
            float(low),
            float(prof.s),
            float(exact_margin),
            exact_margin >= 0,
            0.0,
            THEOREM,
            {"s2_over_n2": _frac(low), "var": _frac(prof.var), "s": _frac(prof.s)},
        )
    )
    return out


def check_bipartite_bounds(
    g: Graph, layout: BipartiteLayout, spectrum: Spectrum | None = None, tol: float = DEFAULT_CHECK_TOL
) -> list[CheckResult]:
    """Both sides of the bipartite bound on ``mu - m/sqrt(ab)`` via ``s2``."""
    s2 = s2_deviation(g, layout)
    a, b, n = layout.a, layout.b(g.n), g.n
    root_ab = math.sqrt(a * b)
    excess = _spec(g, spectrum).largest - g.m / root_ab
    lower = float(s2) ** 2 / (2 * n * n * root_ab)
    upper = math.sqrt(s2 / 2)
    info = {"a": a, "b": b, "s2": _frac(s2), "excess": excess, "sqrt_half_s2": upper}
    return [
        _leq("bipartite_lower", lower, excess, tol, **info),
        _leq("bipartite_upper", excess, upper, tol, **info),
    ]


def check_pair_lower(
    g: Graph,
    spectrum: Spectrum | None = None,
    co_spectrum: Spectrum | None = None,
    tol: float = DEFAULT_CHECK_TOL,
) -> list[CheckResult]:
    """``mu_k(G) + mu_{n-k+1}(co-G) >= -1 - 2 sqrt(2 s)`` for ``k = 1..n-1``."""
    n = g.n
    if n < 2:
        raise GraphError("pair bounds need n >= 2")
    spec, co = _spec(g, spectrum), _co_spec(g, co_spectrum)
    bound = -1 - 2 * math.sqrt(2 * degree_profile(g).s)
    out = []
    for k in range(1, n):
        j = n - k + 1
        total = spec.mu(k) + co.mu(j)
        out.append(
            _leq("pair_lower", bound, total, tol, k=k, complement_index=j, mu_k=spec.mu(k), mu_complement=co.mu(j))
        )
    return out


def check_pair_upper_audit(
    g: Graph,
    spectrum: Spectrum | None = None,
    co_spectrum: Spectrum | None = None,
    tol: float = DEFAULT_CHECK_TOL,
) -> list[CheckResult]:
    """The claim ``mu_k(G) + mu_j(co-G) <= -1`` under two index pairings.

    Pairing ``A`` is ``j = n-k+1`` for ``k = 1..n-1``; pairing ``B`` is
    ``j = n-k+2`` for ``k = 2..n``.  Failures are reported, not raised.
    """
    n = g.n
    if n < 2:
        raise GraphError("pair bounds need n >= 2")
    spec, co = _spec(g, spectrum), _co_spec(g, co_spectrum)
    out = []
    for pairing, ks, offset in (("A", range(1, n), 1), ("B", range(2, n + 1), 2)):
        for k in ks:
            j = n - k + offset
            total = spec.mu(k) + co.mu(j)
            out.append(
                _leq(
                    f"pair_upper_{pairing}",
                    total,
                    -1.0,
                    tol,
                    AUDIT,
                    pairing=pairing,
                    k=k,
                    complement_index=j,
                    mu_k=spec.mu(k),
                    mu_complement=co.mu(j),
                )
            )
    return out


def check_min_sum(
    g: Graph,
    spectrum: Spectrum | None = None,
    co_spectrum: Spectrum | None = None,
    tol: float = DEFAULT_CHECK_TOL,
) -> CheckResult:
    """``mu_n(G) + mu_n(co-G) <= -1 - s^2/n^3``."""
    if g.n < 2:
        raise GraphError("min-sum bound needs n >= 2")
    spec, co = _spec(g, spectrum), _co_spec(g, co_spectrum)
    s = degree_profile(g).s
    rhs = -1 - s**2 / g.n**3
    return _leq(
        "min_sum", spec.smallest + co.smallest, rhs, tol, mu_min=spec.smallest, mu_min_complement=co.smallest
    )


def _haemers_rhs(g: Graph, v1: frozenset[int]) -> tuple[float, tuple[int, int, int]]:
    e1, e2, e3 = subset_edge_counts(g, v1)
    n1, n2 = len(v1), g.n - len(v1)
    x, y = e1 / n1, e2 / n2
    return x + y - math.sqrt((x - y) ** 2 + e3 * e3 / (n1 * n2)), (e1, e2, e3)


def haemers_min_bound(
    g: Graph,
    partition: tuple[Iterable[int], Iterable[int]],
    spectrum: Spectrum | None = None,
    tol: float = DEFAULT_CHECK_TOL,
) -> CheckResult:
    """Interlacing upper bound on the least eigenvalue from a bipartition."""
    v1, v2 = frozenset(partition[0]), frozenset(partition[1])
    if not v1 or not v2 or v1 & v2 or (v1 | v2) != frozenset(range(g.n)):
        raise GraphError("partition must split the vertex set into two nonempty parts")
    rhs, counts = _haemers_rhs(g, v1)
    return _leq(
        "haemers",
        _spec(g, spectrum).smallest,
        rhs,
        tol,
        BOUND,
        v1=sorted(v1),
        v2=sorted(v2),
        edge_counts=list(counts),
    )


def haemers_scan(
    g: Graph,
    spectrum: Spectrum | None = None,
    tol: float = DEFAULT_CHECK_TOL,
    exhaustive_cap: int = HAEMERS_EXHAUSTIVE_CAP,
    samples: int = HAEMERS_SAMPLES,
    seed: int = 0,
) -> CheckResult:
    """Worst-margin Haemers check over many bipartitions.

    All bipartitions when ``n <= exhaustive_cap``, else ``samples`` seeded
    random ones.  The witness records the worst partition and the count.
    """
    if g.n < 2:
        raise GraphError("bipartitions need n >= 2")
    spec = _spec(g, spectrum)
    if g.n <= exhaustive_cap:
        parts = list(all_bipartitions(g.n))
    else:
        rng = np.random.default_rng(seed)
        parts = [random_partition(g.n, rng) for _ in range(samples)]
    # margins share lhs, so the worst partition is the one with least rhs
    worst_part = min(parts, key=lambda p: _haemers_rhs(g, p[0])[0])
    worst = haemers_min_bound(g, worst_part, spec, tol)
    witness = dict(worst.witness, partitions_tested=len(parts))
    return CheckResult(worst.name, worst.lhs, worst.rhs, worst.margin, worst.holds, tol, BOUND, witness)


def _split_gain(g: Graph, subset: Iterable[int]) -> int:
    e_in, e_out, _ = subset_edge_counts(g, subset)
    return e_out - e_in


def lear_split(g: Graph, tol: float = DEFAULT_CHECK_TOL, exhaustive_cap: int = LEAR_EXHAUSTIVE_CAP) -> CheckResult:
    """Half-size low-degree split versus ``s/2``.

    ``S`` is the ``n//2`` vertices of smallest degree (ties by index); the
    claim checked is ``e(V-S) - e(S) >= s/2``.  For ``n <= exhaustive_cap``
    the best value over every ``n//2``-subset is recorded too.
    """
    if g.n < 2:
        raise GraphError("split needs n >= 2")
    half = g.n // 2
    order = sorted(range(g.n), key=lambda u: (g.degrees[u], u))
    subset = sorted(order[:half])
    gain = _split_gain(g, subset)
    s = degree_profile(g).s
    witness = {"S": subset, "gain": gain, "s": _frac(s), "margin_exact": _frac(gain - s / 2)}
    if g.n <= exhaustive_cap:
        best = max(_split_gain(g, c) for c in combinations(range(g.n), half))
        witness["best_gain"] = best
        witness["best_margin_exact"] = _frac(best - s / 2)
    return _leq("lear_split", s / 2, gain, tol, AUDIT, **witness)


@dataclass(frozen=True)
class TightnessRatios:
    """Irregularity relative to the scale of each bound.

    ``upper_ratio = eps / sqrt(s)`` and
    ``lower_ratio_sqrt_m = eps * n^2 * sqrt(m) / s^2``; the conjecture
    fields rescale these (``eps / sqrt(s/2)`` and ``2 * lower_ratio``) so the
    conjectured constants are both 1.  Fields are ``None`` when undefined.
    """

    epsilon: float
    s: Fraction
    upper_ratio: float | None
    lower_ratio_sqrt_m: float | None
    conjecture_upper: float | None
    conjecture_lower: float | None

    def to_dict(self) -> dict:
        return {
            "epsilon": self.epsilon,
            "s": str(self.s),
            "upper_ratio": self.upper_ratio,
            "lower_ratio_sqrt_m": self.lower_ratio_sqrt_m,
            "conjecture_upper": self.conjecture_upper,
            "conjecture_lower": self.conjecture_lower,
        }


def tightness_ratios(g: Graph, spectrum: Spectrum | None = None) -> TightnessRatios:
    s = degree_profile(g).s
    eps = irregularity(g, spectrum)
    if s == 0:
        return TightnessRatios(eps, s, None, None, None, None)
    sf = float(s)
    upper = eps / math.sqrt(sf)
    lower = eps * g.n**2 * math.sqrt(g.m) / sf**2 if g.m else None
    return TightnessRatios(
        eps, s, upper, lower, eps / math.sqrt(sf / 2), None if lower is None else 2 * lower
    )


def pr1_gap_check(
    g1: Graph,
    g2: Graph,
    layout: BipartiteLayout | None = None,
    spectra: tuple[Spectrum, Spectrum] | None = None,
    tol: float = DEFAULT_CHECK_TOL,
) -> list[CheckResult]:
    """``mu(G1) - mu(G2) <= sqrt(2 |E(G1) - E(G2)|)`` on a common vertex set.

    With a layout valid for both graphs the sharper bipartite form (no
    factor 2) is checked as well.
    """
    if g1.n != g2.n:
        raise GraphError(f"vertex counts differ: {g1.n} != {g2.n}")
    sp1, sp2 = spectra if spectra is not None else (graph_spectrum(g1), graph_spectrum(g2))
    gap = sp1.largest - sp2.largest
    only = len(g1.edges - g2.edges)
    info = {"mu_1": sp1.largest, "mu_2": sp2.largest, "edges_only_in_first": only}
    out = [_leq("pr1_gap", gap, math.sqrt(2 * only), tol, **info)]
    if layout is not None:
        layout.validate(g1)
        layout.validate(g2)
        out.append(_leq("pr1_gap_bipartite", gap, math.sqrt(only), tol, **info))
    return out


def check_classical_bounds(
    g: Graph,
    layout: BipartiteLayout | None = None,
    spectrum: Spectrum | None = None,
    tol: float = DEFAULT_CHECK_TOL,
) -> list[CheckResult]:
    cb = classical_bounds(g, layout, _spec(g, spectrum))
    out = [
        _leq("hofmeister", cb.hofmeister, cb.mu**2, tol, BOUND),
        _leq("stanley", cb.mu, cb.stanley, tol, BOUND),
        _leq("berman_zhang", cb.mu, cb.berman_zhang, tol, BOUND),
    ]
    if layout is not None:
        out.append(_leq("cvetkovic", cb.mu, cb.cvetkovic, tol, BOUND))
        out.append(_leq("rayleigh", cb.rayleigh, cb.mu, tol, BOUND))
    return out


def check_rho_sandwich(g: Graph, cap: int = 6) -> list[CheckResult]:
    """Exact distance to regularity against ``s/2`` and ``s + 3n/2``.

    Also records the bound ``(1/2) min_r sum |d(u) - r|`` (over ``r`` with
    ``n r`` even), which every regular target respects.
    """
    from .regularize import rho_bounds, rho_exact

    lo, hi = rho_bounds(g)
    rho = rho_exact(g, cap)
    valid = [r for r in range(g.n) if g.n * r % 2 == 0]
    degree_floor = Fraction(min(sum(abs(d - r) for d in g.degrees) for r in valid), 2)
    info = {"rho": rho, "s_half": _frac(lo), "degree_floor": _frac(degree_floor)}
    return [
        CheckResult("rho_lower", float(lo), rho, float(rho - lo), rho >= lo, 0.0, AUDIT, info),
        CheckResult("rho_upper", rho, float(hi), float(hi - rho), rho <= hi, 0.0, THEOREM, info),
    ]


def blow_up_irregularity(g: Graph, t: int) -> tuple[float, float]:
    """``(eps(blow_up(g, t)), t * eps(g))``; the two agree exactly in theory."""
    return irregularity(blow_up(g, t)), t * irregularity(g)


def star_pair_example(k: int) -> dict:
    """Computed values for the star ``K_{1,k}``.

    Each quantity is listed three ways: computed, its correct closed form,
    and the commonly stated value under audit (``s = 2(k-1)/(k+1)`` and
    ``mu_{k+1}(G) + mu_2(co-G) = -1 - sqrt(k)``)."""
    g = star(k)
    spec = graph_spectrum(g)
    co = graph_spectrum(complement(g))
    s = degree_profile(g).s
    return {
        "k": k,
        "s": str(s),
        "s_closed_form": str(Fraction(2 * k * (k - 1), k + 1)),
        "s_stated": str(Fraction(2 * (k - 1), k + 1)),
        "pair_sum": spec.mu(k + 1) + co.mu(2),
        "pair_sum_closed_form": -math.sqrt(k),
        "pair_sum_stated": -1 - math.sqrt(k),
    }


def clique_plus_isolated_ratio(k: int) -> TightnessRatios:
    """Tightness ratios of ``K_k`` plus an isolated vertex."""
    return tightness_ratios(clique_plus_isolated(k))
