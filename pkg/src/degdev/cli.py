"""Command-line front end.

Exit codes: 0 clean, 1 at least one check failed (a finding), 2 usage or
input error, 3 the tool's own invariants were breached.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import __version__
from .audit import (
    CORPUS_FAMILIES,
    CorpusItem,
    audit_corpus,
    exhaustive_items,
    family_items,
    resolve_checks,
)
from .errors import ConvergenceError, GraphError, PreconditionError
from .graph import BipartiteLayout, Graph, blow_up, closed_blow_up, degree_profile, read_edge_list, to_edge_list
from .inequalities import DEFAULT_CHECK_TOL, irregularity
from .regularize import bipartite_rough_regularize, fine_regularize, rough_regularize
from .spectra import (
    graph_spectrum,
    predicted_blow_up_spectrum,
    predicted_closed_blow_up_spectrum,
    spectrum_distance,
)

EXIT_OK, EXIT_FINDINGS, EXIT_USAGE, EXIT_BREACH = 0, 1, 2, 3
EXHAUSTIVE_CAP = 7


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load(path: str) -> tuple[Graph, BipartiteLayout | None]:
    try:
        return read_edge_list(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    except GraphError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def cmd_measures(args) -> int:
    g, layout = _load(args.input)
    prof = degree_profile(g)
    eps = irregularity(g)
    info = {
        "n": g.n,
        "m": g.m,
        "degrees": list(prof.degrees),
        "mean_degree": str(prof.mean_degree),
        "mean_degree_decimal": float(prof.mean_degree),
        "s": str(prof.s),
        "s_decimal": float(prof.s),
        "var": str(prof.var),
        "var_decimal": float(prof.var),
        "epsilon": eps,
    }
    if layout is not None:
        from .graph import s2_deviation

        s2 = s2_deviation(g, layout)
        info.update(bipartite_a=layout.a, s2=str(s2), s2_decimal=float(s2))
    if args.format == "json":
        text = json.dumps(info, indent=2, sort_keys=True) + "\n"
    elif args.format == "csv":
        text = _rows_to_csv([{**info, "degrees": " ".join(map(str, prof.degrees))}])
    else:
        lines = [
            f"n {g.n}",
            f"m {g.m}",
            "degrees " + " ".join(map(str, prof.degrees)),
            f"mean_degree {prof.mean_degree} ({float(prof.mean_degree):.6g})",
            f"s {prof.s} ({float(prof.s):.6g})",
            f"var {prof.var} ({float(prof.var):.6g})",
            f"epsilon {eps:.6g}",
        ]
        if layout is not None:
            lines.append(f"s2 {info['s2']} ({info['s2_decimal']:.6g})")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    g, _ = _load(args.input)
    spec = graph_spectrum(g)
    info = {"n": g.n, "m": g.m, "eigenvalues": spec.tolist(), "residual": spec.residual}
    if args.blow_up:
        t = args.blow_up
        if args.closed:
            built, predicted = closed_blow_up(g, t), predicted_closed_blow_up_spectrum(spec, g.n, t)
        else:
            built, predicted = blow_up(g, t), predicted_blow_up_spectrum(spec, g.n, t)
        actual = graph_spectrum(built)
        info["blow_up"] = {
            "t": t,
            "closed": bool(args.closed),
            "predicted": predicted.tolist(),
            "computed": actual.tolist(),
            "linf": spectrum_distance(predicted, actual),
        }
    if args.format == "json":
        text = json.dumps(info, indent=2, sort_keys=True) + "\n"
    elif args.format == "csv":
        text = _rows_to_csv([{"k": k, "mu": mu} for k, mu in enumerate(info["eigenvalues"], 1)])
    else:
        text = "".join(f"{mu:.12g}\n" for mu in info["eigenvalues"])
        if "blow_up" in info:
            text += f"# blow-up t={args.blow_up} closed={bool(args.closed)} linf={info['blow_up']['linf']:.3e}\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_regularize(args) -> int:
    g, layout = _load(args.input)
    try:
        if args.mode == "rough":
            outcome, out_layout = rough_regularize(g), None
        elif args.mode == "bipartite":
            if layout is None:
                raise UsageError("bipartite mode needs an input with a bipartite header")
            outcome, out_layout = bipartite_rough_regularize(g, layout), layout
        else:
            outcome, out_layout = fine_regularize(g), None
    except (PreconditionError, GraphError) as exc:
        raise UsageError(str(exc)) from None
    _emit(to_edge_list(outcome.result, out_layout), args.out)
    if args.trace:
        Path(args.trace).write_text(outcome.script.to_text(), encoding="utf-8")
    msg = f"edits {outcome.edits} <= bound {outcome.certified_bound}\n"
    (sys.stdout if args.out else sys.stderr).write(msg)
    return EXIT_OK


def _finish_report(report, args) -> int:
    text = report.to_csv() if args.format == "csv" else report.to_json()
    _emit(text, args.out)
    if report.breaches:
        for e in report.entries:
            for b in e["invariant_breaches"]:
                print(f"invariant breach in graph {e['graph_id']}: {b}", file=sys.stderr)
        return EXIT_BREACH
    return EXIT_FINDINGS if report.findings else EXIT_OK


def cmd_check(args) -> int:
    checks = _checks(args.checks)
    g, layout = _load(args.input)
    item = CorpusItem(Path(args.input).stem, g, layout)
    report = audit_corpus(
        [item], checks, args.tol, args.seed, {"corpus": {"input": Path(args.input).name}}
    )
    return _finish_report(report, args)


def cmd_corpus(args) -> int:
    checks = _checks(args.checks)
    if (args.exhaustive is None) == (args.family is None):
        raise UsageError("give exactly one of --exhaustive N or --family NAME")
    if args.exhaustive is not None:
        if not 1 <= args.exhaustive <= EXHAUSTIVE_CAP:
            raise UsageError(f"--exhaustive must be between 1 and {EXHAUSTIVE_CAP}")
        items = exhaustive_items(args.exhaustive)
        corpus = {"exhaustive": args.exhaustive}
    else:
        try:
            items = family_items(args.family, args.nmax, args.count, args.seed, args.p)
        except GraphError as exc:
            raise UsageError(str(exc)) from None
        corpus = {"family": args.family, "nmax": args.nmax, "count": args.count, "p": args.p}
    report = audit_corpus(items, checks, args.tol, args.seed, {"corpus": corpus}, args.detail)
    return _finish_report(report, args)


def _checks(text: str):
    try:
        return resolve_checks(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=DEFAULT_CHECK_TOL, help="check tolerance (default 1e-8)")
    common.add_argument("--seed", type=int, default=0, help="seed for random corpora and partitions")
    common.add_argument("--format", choices=("json", "csv", "text"), default=None)
    common.add_argument("--out", help="write output here instead of stdout")

    parser = argparse.ArgumentParser(prog="degdev", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"degdev {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measures", parents=[common], help="degree deviation measures of one graph")
    p.add_argument("input")
    p.set_defaults(func=cmd_measures, default_format="text")

    p = sub.add_parser("spectrum", parents=[common], help="adjacency spectrum, optionally of a blow-up")
    p.add_argument("input")
    p.add_argument("--blow-up", type=int, metavar="T")
    p.add_argument("--closed", action="store_true", help="use the closed blow-up")
    p.set_defaults(func=cmd_spectrum, default_format="text")

    p = sub.add_parser("regularize", parents=[common], help="rewire towards a regular graph")
    p.add_argument("input")
    p.add_argument("--mode", choices=("rough", "bipartite", "fine"), default="rough")
    p.add_argument("--trace", metavar="PATH", help="write the edit script here")
    p.set_defaults(func=cmd_regularize, default_format="text")

    p = sub.add_parser("check", parents=[common], help="run inequality checks on one graph")
    p.add_argument("input")
    p.add_argument("--checks", default="all")
    p.set_defaults(func=cmd_check, default_format="json")

    p = sub.add_parser("corpus", parents=[common], help="audit an exhaustive or generated corpus")
    p.add_argument("--exhaustive", type=int, metavar="N")
    p.add_argument("--family", choices=CORPUS_FAMILIES)
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--count", type=int, default=8)
    p.add_argument("--p", type=float, default=None, help="edge probability for gnp")
    p.add_argument("--checks", default="all")
    p.add_argument("--detail", choices=("full", "findings"), default="full")
    p.set_defaults(func=cmd_corpus, default_format="json")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = args.default_format
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"degdev: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"degdev: invariant breach: {exc}", file=sys.stderr)
        return EXIT_BREACH


if __name__ == "__main__":
    sys.exit(main())
