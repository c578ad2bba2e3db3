"""Corpus audits: run every applicable check over a list of graphs and
collect the results into a deterministic, serialisable report.

A check that fails is a *finding* (the inequality claim did not hold on
that instance).  Independently the audit verifies the artifact's own
invariants (trace identities of every spectrum, contracts of the
regularization runs it performs); a failure there is a *breach* and points
at a bug rather than at the mathematics.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Iterable, Sequence

from . import __version__
from .errors import GraphError
from .generators import clique_plus_isolated, complete_bipartite, star
from .graph import BipartiteLayout, Graph, complement, degree_profile
from .inequalities import (
    DEFAULT_CHECK_TOL,
    CheckResult,
    check_bipartite_bounds,
    check_classical_bounds,
    check_irregularity_bounds,
    check_min_sum,
    check_pair_lower,
    check_pair_upper_audit,
    check_rho_sandwich,
    haemers_scan,
    lear_split,
    pr1_gap_check,
    star_pair_example,
    tightness_ratios,
)
from .regularize import (
    RHO_EXACT_CAP,
    bipartite_rough_regularize,
    complete_bipartite_rho_table,
    rough_regularize,
)
from .spectra import Spectrum, graph_spectra

SCHEMA_VERSION = "degdev.audit/1"

CHECKS = (
    "irregularity",
    "bipartite",
    "pair_lower",
    "pair_upper",
    "min_sum",
    "haemers",
    "lear",
    "classical",
    "pr1",
    "rho",
    "ratios",
)
# report-level extras, not run per graph
EXTRAS = ("reference",)

TRACE_SUM_TOL = 1e-8
TRACE_SQ_TOL = 1e-6


def resolve_checks(names: Iterable[str] | str | None) -> tuple[str, ...]:
    """Expand ``"all"`` and validate check names; order follows ``CHECKS``."""
    if names is None:
        return CHECKS
    if isinstance(names, str):
        names = [x for x in names.split(",") if x]
    wanted = set()
    for name in names:
        if name == "all":
            wanted.update(CHECKS)
        elif name in CHECKS or name in EXTRAS:
            wanted.add(name)
        else:
            raise ValueError(f"unknown check {name!r}; choose from {', '.join(CHECKS + EXTRAS)} or all")
    return tuple(c for c in CHECKS + EXTRAS if c in wanted)


@dataclass
class CorpusItem:
    graph_id: int | str
    graph: Graph
    layout: BipartiteLayout | None = None
    meta: dict = field(default_factory=dict)


def _trace_breaches(spec: Spectrum, g: Graph, label: str) -> list[str]:
    total = float(sum(spec.values))
    squares = float(sum(x * x for x in spec.values))
    out = []
    if abs(total) > TRACE_SUM_TOL:
        out.append(f"{label}: eigenvalue sum {total:.3e} exceeds {TRACE_SUM_TOL}")
    if abs(squares - 2 * g.m) > TRACE_SQ_TOL:
        out.append(f"{label}: eigenvalue square sum off from 2m by {squares - 2 * g.m:.3e}")
    if any(x < y for x, y in zip(spec.values, spec.values[1:])):
        out.append(f"{label}: spectrum not sorted")
    return out


def _regularize_breaches(g: Graph, outcome, layout: BipartiteLayout | None) -> list[str]:
    r = outcome.result
    out = []
    if r.m != g.m:
        out.append("regularize: edge count changed")
    if len(outcome.script) > outcome.certified_bound:
        out.append(f"regularize: {len(outcome.script)} edits exceed bound {outcome.certified_bound}")
    if outcome.script.replay(g) != r:
        out.append("regularize: script replay does not reproduce the result")
    classes = [range(g.n)] if layout is None else list(layout.classes(g.n))
    for cls in classes:
        degs = [r.degrees[u] for u in cls]
        if max(degs) - min(degs) > 1:
            out.append("regularize: degree spread above 1")
    return out


def audit_graph(
    item: CorpusItem,
    checks: Sequence[str],
    tol: float = DEFAULT_CHECK_TOL,
    seed: int = 0,
    spectrum: Spectrum | None = None,
    co_spectrum: Spectrum | None = None,
    regularized: tuple | None = None,
) -> dict:
    """One report entry.

    ``regularized`` is ``(outcome, spectrum_of_result)`` when precomputed.
    """
    g, layout = item.graph, item.layout
    if spectrum is None or co_spectrum is None:
        spectrum, co_spectrum = graph_spectra([g, complement(g)])
    prof = degree_profile(g)
    results: list[CheckResult] = []
    breaches = _trace_breaches(spectrum, g, "spectrum") + _trace_breaches(
        co_spectrum, complement(g), "complement spectrum"
    )
    pairs_ok = g.n >= 2

    for name in checks:
        if name == "irregularity":
            results += check_irregularity_bounds(g, spectrum, tol)
        elif name == "bipartite" and layout is not None:
            results += check_bipartite_bounds(g, layout, spectrum, tol)
        elif name == "pair_lower" and pairs_ok:
            results += check_pair_lower(g, spectrum, co_spectrum, tol)
        elif name == "pair_upper" and pairs_ok:
            results += check_pair_upper_audit(g, spectrum, co_spectrum, tol)
        elif name == "min_sum" and pairs_ok:
            results.append(check_min_sum(g, spectrum, co_spectrum, tol))
        elif name == "haemers" and pairs_ok:
            results.append(haemers_scan(g, spectrum, tol, seed=seed))
        elif name == "lear" and pairs_ok:
            results.append(lear_split(g, tol))
        elif name == "classical":
            results += check_classical_bounds(g, layout, spectrum, tol)
        elif name == "pr1":
            if regularized is None:
                outcome = rough_regularize(g) if layout is None else bipartite_rough_regularize(g, layout)
                (reg_spec,) = graph_spectra([outcome.result])
            else:
                outcome, reg_spec = regularized
            breaches += _regularize_breaches(g, outcome, layout)
            results += pr1_gap_check(g, outcome.result, layout, (spectrum, reg_spec), tol)
        elif name == "rho" and g.n <= RHO_EXACT_CAP:
            results += check_rho_sandwich(g)

    entry = {
        "graph_id": item.graph_id,
        "n": g.n,
        "m": g.m,
        "s": str(prof.s),
        "var": str(prof.var),
        "mu_max": spectrum.largest,
        "mu_min": spectrum.smallest,
        "checks": [r.to_dict() for r in results],
        "invariant_breaches": breaches,
    }
    if layout is not None:
        entry["bipartite_a"] = layout.a
    if item.meta:
        entry["meta"] = item.meta
    if "ratios" in checks:
        entry["ratios"] = tightness_ratios(g, spectrum).to_dict()
    return entry


def _summarize(entries: list[dict]) -> dict:
    run = holds = 0
    by_name: dict[str, int] = {}
    breaches = 0
    for e in entries:
        for c in e["checks"]:
            run += 1
            if c["holds"]:
                holds += 1
            else:
                by_name[c["name"]] = by_name.get(c["name"], 0) + 1
        breaches += len(e["invariant_breaches"])
    return {
        "graphs": len(entries),
        "checks_run": run,
        "holds": holds,
        "findings": run - holds,
        "findings_by_check": dict(sorted(by_name.items())),
        "invariant_breaches": breaches,
    }


@dataclass
class AuditReport:
    config: dict
    entries: list[dict]
    summary: dict
    tables: dict = field(default_factory=dict)
    tool_version: str = __version__
    schema: str = SCHEMA_VERSION

    @property
    def findings(self) -> int:
        return self.summary["findings"]

    @property
    def breaches(self) -> int:
        return self.summary["invariant_breaches"]

    def to_dict(self) -> dict:
        return {
            "schema": self.schema,
            "tool_version": self.tool_version,
            "config": self.config,
            "entries": self.entries,
            "summary": self.summary,
            "tables": self.tables,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, allow_nan=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> AuditReport:
        d = json.loads(text)
        return cls(d["config"], d["entries"], d["summary"], d.get("tables", {}), d["tool_version"], d["schema"])

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["graph_id", "n", "m", "check", "kind", "lhs", "rhs", "margin", "holds", "tol", "witness"])
        for e in self.entries:
            for c in e["checks"]:
                w.writerow(
                    [
                        e["graph_id"],
                        e["n"],
                        e["m"],
                        c["name"],
                        c["kind"],
                        repr(c["lhs"]),
                        repr(c["rhs"]),
                        repr(c["margin"]),
                        int(c["holds"]),
                        repr(c["tol"]),
                        json.dumps(c["witness"], sort_keys=True),
                    ]
                )
        return buf.getvalue()


def report_schema() -> dict:
    text = resources.files("degdev").joinpath("schema/audit_report.schema.json").read_text("utf-8")
    return json.loads(text)


def reference_tables() -> dict:
    """Fixed reference families whose values are discussed alongside the
    inequalities: the star pairing example, ``K_{a,b}`` distance to
    regularity, and the ratio families used for tightness."""
    rho_rows = [
        {k: (str(v) if isinstance(v, Fraction) else v) for k, v in row.items()}
        for row in complete_bipartite_rho_table()
    ]
    ratio_rows = []
    for k in (10, 50, 100):
        for label, g in (("star", star(k)), ("clique_plus_isolated", clique_plus_isolated(k))):
            r = tightness_ratios(g)
            ratio_rows.append({"family": label, "k": k, "upper_ratio": r.upper_ratio})
    return {
        "star_pairing": [star_pair_example(k) for k in (3, 10, 100)],
        "complete_bipartite_rho": rho_rows,
        "upper_ratio_families": ratio_rows,
    }


def audit_corpus(
    items: Sequence[CorpusItem],
    checks: Iterable[str] | str | None = None,
    tol: float = DEFAULT_CHECK_TOL,
    seed: int = 0,
    config: dict | None = None,
    detail: str = "full",
) -> AuditReport:
    """Audit every item; spectra are batched by order before checking.

    ``detail="findings"`` keeps only entries with a finding or a breach,
    and within them only the failing checks (summary counts still cover
    every graph).
    """
    checks = resolve_checks(checks)
    if detail not in ("full", "findings"):
        raise ValueError(f"unknown detail level {detail!r}")
    graphs = [it.graph for it in items]
    specs = graph_spectra(graphs + [complement(g) for g in graphs])
    k = len(graphs)

    regs: list[tuple | None] = [None] * k
    if "pr1" in checks:
        outcomes = [
            rough_regularize(it.graph) if it.layout is None else bipartite_rough_regularize(it.graph, it.layout)
            for it in items
        ]
        reg_specs = graph_spectra([o.result for o in outcomes])
        regs = list(zip(outcomes, reg_specs))

    entries = []
    for i, it in enumerate(items):
        entries.append(audit_graph(it, checks, tol, seed, specs[i], specs[k + i], regs[i]))
    summary = _summarize(entries)
    if detail == "findings":
        kept = []
        for e in entries:
            failed = [c for c in e["checks"] if not c["holds"]]
            if failed or e["invariant_breaches"]:
                kept.append(dict(e, checks=failed))
        entries = kept

    tables: dict = {}
    if "ratios" in checks:
        tables["ratios"] = [
            {"graph_id": e["graph_id"], "n": e["n"], "m": e["m"], **e["ratios"]} for e in entries if "ratios" in e
        ]
    if "reference" in checks:
        tables["reference"] = reference_tables()
    cfg = {"tol": tol, "seed": seed, "checks": list(checks), "detail": detail}
    cfg.update(config or {})
    return AuditReport(cfg, entries, summary, tables)


def exhaustive_items(n: int) -> list[CorpusItem]:
    from .generators import all_graphs

    return [CorpusItem(mask, g) for mask, g in all_graphs(n)]


def _sizes(nmin: int, nmax: int, count: int) -> list[int]:
    """``count`` roughly geometric sizes from ``nmin`` to ``nmax`` inclusive."""
    if nmax < nmin:
        raise GraphError(f"nmax={nmax} below the family minimum {nmin}")
    if count <= 1 or nmax == nmin:
        return [nmax]
    ratio = (nmax / nmin) ** (1 / (count - 1))
    return sorted({min(nmax, max(nmin, round(nmin * ratio**i))) for i in range(count)} | {nmax})


def family_items(family: str, nmax: int, count: int, seed: int, p: float | None = None) -> list[CorpusItem]:
    """Corpus for a named family.

    Deterministic families are sampled at ``count`` sizes up to ``nmax``
    (the family parameter, e.g. leaves of a star or ``a`` of ``K_{a,a+1}``);
    random families draw ``count`` seeded graphs of order at most ``nmax``.
    """
    from . import generators as gen

    if family in ("gnp", "random_bipartite"):
        if family == "gnp":
            items = []
            for i, (g, meta) in enumerate(gen.random_corpus(count, nmax, seed)):
                if p is not None:
                    g = gen.gnp(meta["n"], p, meta["seed"])
                    meta = dict(meta, p=p)
                items.append(CorpusItem(i, g, None, meta))
            return items
        return [
            CorpusItem(i, g, layout, meta)
            for i, (g, layout, meta) in enumerate(gen.random_bipartite_corpus(count, max(1, nmax // 2), seed))
        ]

    builders = {
        "star": (1, lambda k: (gen.star(k), None)),
        "complete": (1, lambda k: (gen.complete(k), None)),
        "empty": (1, lambda k: (gen.empty(k), None)),
        "path": (1, lambda k: (gen.path(k), None)),
        "cycle": (3, lambda k: (gen.cycle(k), None)),
        "clique_plus_isolated": (1, lambda k: (gen.clique_plus_isolated(k), None)),
        "near_balanced_bipartite": (1, lambda k: complete_bipartite(k, k + 1)),
    }
    if family not in builders:
        raise GraphError(f"unknown corpus family {family!r}")
    nmin, build = builders[family]
    items = []
    for k in _sizes(nmin, nmax, count):
        g, layout = build(k)
        items.append(CorpusItem(f"{family}({k})", g, layout, {"family": family, "param": k}))
    return items


CORPUS_FAMILIES = (
    "star",
    "complete",
    "empty",
    "path",
    "cycle",
    "clique_plus_isolated",
    "near_balanced_bipartite",
    "gnp",
    "random_bipartite",
)

