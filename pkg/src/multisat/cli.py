"""Command-line entry point.

Exit codes: 0 success / saturated, 1 not saturated, 2 contains K_t,
3 parameter or admissibility error, 4 budget exhausted, 5 I/O or parse error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Any, Sequence, TextIO

from .constructions import (
    CLOSED_FORM_KINDS,
    KINDS,
    ConstructionArtifacts,
    ConstructionSpec,
    build,
    general_bound_formula,
    sat_k3_formula,
    size_formula,
)
from .errors import Graph6ParseError, MultisatError, ParameterDomainError
from .graph import Host, Subgraph
from .graph6 import decode_graph6, encode_graph6
from .search import DEFAULT_EDGE_CAP, brute_force_sat, random_greedy_upper_bound
from .verify import SaturationReport, default_jobs, density_profile, verify_saturated

EXIT_OK, EXIT_NOT_SATURATED, EXIT_HAS_KT, EXIT_PARAM, EXIT_BUDGET, EXIT_IO = range(6)
CSV_HEADER = ["kind", "k", "n", "t", "formula", "built", "verified"]


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARAM, f"{self.prog}: error: {message}\n")


def _int_grid(text: str) -> list[int]:
    """``"3"``, ``"3:10"`` (inclusive) or ``"3,5,7"``."""
    try:
        if ":" in text:
            lo, hi = text.split(":")
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer grid {text!r}") from None


def report_exit(report: SaturationReport) -> int:
    if not report.kt_free:
        return EXIT_HAS_KT
    return EXIT_OK if report.is_saturated else EXIT_NOT_SATURATED


def graph_to_json(sub: Subgraph) -> dict[str, Any]:
    return {
        "host": {"k": sub.host.k, "n": sub.host.n},
        "edge_count": sub.edge_count,
        "edges": [list(e) for e in sub.edges()],
    }


def read_graph(stream: TextIO, host: Host) -> Subgraph:
    text = stream.read().strip()
    if text.startswith("{"):
        try:
            doc = json.loads(text)
            edges = [(int(u), int(v)) for u, v in doc["edges"]]
        except (ValueError, KeyError, TypeError) as exc:
            raise Graph6ParseError(f"malformed JSON graph: {exc}") from None
        declared = doc.get("host")
        if declared and (declared.get("k"), declared.get("n")) != (host.k, host.n):
            raise ParameterDomainError(
                f"graph declares host k={declared.get('k')}, n={declared.get('n')} "
                f"but --k {host.k} --n {host.n} was given"
            )
        return Subgraph.from_edges(host, edges)
    line = text.splitlines()[0] if text else ""
    return decode_graph6(line, host)


def _open_input(path: str) -> TextIO:
    if path == "-":
        return sys.stdin
    try:
        return open(path)
    except OSError as exc:
        raise _IOFailure(str(exc)) from None


class _IOFailure(Exception):
    pass


def _summary(art: ConstructionArtifacts, report: SaturationReport | None) -> dict[str, Any]:
    spec = art.spec
    out: dict[str, Any] = {
        "kind": spec.kind,
        "k": spec.k,
        "n": spec.n,
        "t": spec.t,
        "edge_count": art.graph.edge_count,
        "hub_count": len(art.hub_set),
        "formula": size_formula(spec) if spec.kind in CLOSED_FORM_KINDS else None,
    }
    if report is not None:
        out["is_saturated"] = report.is_saturated
        out["kt_free"] = report.kt_free
    return out


def _print_report_text(report: SaturationReport, host: Host, out: TextIO) -> None:
    print(f"host K_{host.k}^{host.n}, t={report.t}, edges={report.edge_count}", file=out)
    if report.kt_free:
        print(f"K_{report.t}-free: yes", file=out)
    else:
        print(f"K_{report.t}-free: no, witness {[host.label(v) for v in report.witness or []]}", file=out)
    print(f"missing edges checked: {report.missing_checked}", file=out)
    for u, v in report.non_completing:
        print(f"  non-completing: {host.label(u)} {host.label(v)}", file=out)
    print(f"saturated: {'yes' if report.is_saturated else 'no'}", file=out)


def cmd_build(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    spec = ConstructionSpec(args.kind, args.k, args.n, args.t)
    art = build(spec)
    report = None if args.no_verify else verify_saturated(art.graph, spec.t, args.jobs)
    summary = _summary(art, report)
    fmt = args.format or "graph6"
    if fmt == "json":
        doc = dict(summary)
        doc.update(graph_to_json(art.graph))
        doc["hub_set"] = art.hub_set
        doc["completion_edges"] = [list(e) for e in art.completion_edges]
        doc["notes"] = art.notes
        if report is not None:
            doc["report"] = report.to_dict()
        json.dump(doc, out, indent=2)
        out.write("\n")
    elif fmt == "text":
        h = art.graph.host
        for key, val in summary.items():
            print(f"{key}: {val}", file=out)
        print("hubs: " + " ".join(h.label(v) for v in art.hub_set), file=out)
        for u, v in art.graph.edges():
            print(f"{h.label(u)} {h.label(v)}", file=out)
    else:
        if fmt == "graph6":
            print(encode_graph6(art.graph), file=out)
        else:
            w = csv.writer(out, lineterminator="\n")
            w.writerow(["u", "v"])
            w.writerows(art.graph.edges())
        print(" ".join(f"{k}={v}" for k, v in summary.items()), file=err)
    return EXIT_OK if report is None else report_exit(report)


def cmd_verify(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    host = Host(args.k, args.n)
    stream = _open_input(args.input)
    try:
        sub = read_graph(stream, host)
    finally:
        if stream is not sys.stdin:
            stream.close()
    report = verify_saturated(sub, args.t, args.jobs)
    if (args.format or "json") == "text":
        _print_report_text(report, host, out)
    else:
        json.dump(report.to_dict(), out, indent=2)
        out.write("\n")
    return report_exit(report)


def cmd_formulas(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    k, n = args.k, args.n
    Host(k, n)
    value, argmin = sat_k3_formula(k, n)
    doc: dict[str, Any] = {
        "k": k,
        "n": n,
        "g1": size_formula(ConstructionSpec("g1", k, n)),
        "g2": size_formula(ConstructionSpec("g2", k, n)),
        "sat_k3": value,
        "argmin": argmin,
        "threshold_met": n * k >= n * n - n + 5,
    }
    if args.t is not None:
        t = args.t
        doc["t"] = t
        for kind in ("gknt", "hknt"):
            try:
                doc[kind] = size_formula(ConstructionSpec(kind, k, n, t))
            except ParameterDomainError:
                doc[kind] = None
        try:
            doc["general_bound"] = general_bound_formula(k, n, t)
        except ParameterDomainError:
            doc["general_bound"] = None
    if (args.format or "text") == "json":
        json.dump(doc, out, indent=2)
        out.write("\n")
    else:
        for key, val in doc.items():
            print(f"{key}: {val}", file=out)
    return EXIT_OK


def table_rows(kinds: Sequence[str], ks: Sequence[int], ns: Sequence[int], ts: Sequence[int],
               verify: bool = True, jobs: int = 1) -> list[dict[str, Any]]:
    """Rows for every admissible (kind, k, n, t); inadmissible points are skipped."""
    rows = []
    for kind in kinds:
        for k in ks:
            for n in ns:
                for t in ts if kind not in ("g1", "g2") else [3]:
                    try:
                        spec = ConstructionSpec(kind, k, n, t)
                    except ParameterDomainError:
                        continue
                    art = build(spec)
                    row: dict[str, Any] = {
                        "kind": kind, "k": k, "n": n, "t": t,
                        "formula": size_formula(spec) if kind in CLOSED_FORM_KINDS else "",
                        "built": art.graph.edge_count,
                        "verified": "",
                    }
                    if verify:
                        rep = verify_saturated(art.graph, t, jobs)
                        row["verified"] = "true" if rep.is_saturated else "false"
                        row["_exit"] = report_exit(rep)
                    rows.append(row)
    return rows


def cmd_table(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    kinds = args.kind or list(KINDS)
    rows = table_rows(kinds, args.k, args.n, args.t or [3], not args.no_verify, args.jobs)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for row in rows:
        w.writerow([row[c] for c in CSV_HEADER])
    return max((row.get("_exit", EXIT_OK) for row in rows), default=EXIT_OK)


def cmd_exact(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    host = Host(args.k, args.n)
    res = brute_force_sat(host, args.t, max_edges=args.max_edges,
                          max_subsets=args.max_subsets, max_seconds=args.max_seconds)
    doc = {
        "k": host.k, "n": host.n, "t": args.t,
        "min_size": res.min_size,
        "witness": encode_graph6(res.witness) if res.witness else None,
        "subsets_examined": res.subsets_examined,
        "sizes_exhausted": res.sizes_exhausted,
        "wall_budget_hit": res.wall_budget_hit,
    }
    if (args.format or "text") == "json":
        json.dump(doc, out, indent=2)
        out.write("\n")
    else:
        for key, val in doc.items():
            print(f"{key}: {val}", file=out)
    return EXIT_BUDGET if res.wall_budget_hit else EXIT_OK


def cmd_heuristic(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    host = Host(args.k, args.n)
    best, graph, sizes = random_greedy_upper_bound(host, args.t, args.trials, args.seed, args.jobs)
    doc = {
        "k": host.k, "n": host.n, "t": args.t, "trials": args.trials, "seed": args.seed,
        "best_size": best,
        "best_graph": encode_graph6(graph),
        "per_trial_sizes": sizes,
    }
    if (args.format or "text") == "json":
        json.dump(doc, out, indent=2)
        out.write("\n")
    else:
        for key, val in doc.items():
            print(f"{key}: {val}", file=out)
    return EXIT_OK


def cmd_density(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    if args.kind:
        spec = ConstructionSpec(args.kind, args.k, args.n, args.t)
        sub = build(spec).graph
    elif args.input:
        host = Host(args.k, args.n)
        stream = _open_input(args.input)
        try:
            sub = read_graph(stream, host)
        finally:
            if stream is not sys.stdin:
                stream.close()
    else:
        raise ParameterDomainError("density needs --kind or --input")
    rows = density_profile(sub)
    fmt = args.format or "csv"
    if fmt == "json":
        json.dump([{"i": r.i, "j": r.j, "edges": r.edges, "density": float(r.density)} for r in rows],
                  out, indent=2)
        out.write("\n")
    elif fmt == "text":
        for r in rows:
            print(f"V{r.i}-V{r.j}: {r.edges} edges, density {r.density} ({float(r.density):.4f})", file=out)
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["i", "j", "edges", "density"])
        for r in rows:
            w.writerow([r.i, r.j, r.edges, repr(float(r.density))])
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="multisat", description="K_t-saturated subgraphs of K_k^n")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp: argparse.ArgumentParser, formats: Sequence[str], t_default: int | None = 3) -> None:
        sp.add_argument("--format", choices=formats)
        sp.add_argument("--jobs", type=int, default=default_jobs())
        if t_default is not None:
            sp.add_argument("--t", type=int, default=t_default)

    b = sub.add_parser("build", help="materialize a construction")
    b.add_argument("--kind", choices=KINDS, required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--no-verify", action="store_true")
    common(b, ("graph6", "json", "csv", "text"))

    v = sub.add_parser("verify", help="check a graph for K_t-saturation")
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--input", default="-", help="graph6 or JSON edge list; '-' for stdin")
    common(v, ("json", "text"))

    f = sub.add_parser("formulas", help="closed-form sizes and the triangle minimum")
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--t", type=int)
    f.add_argument("--format", choices=("text", "json"))

    tb = sub.add_parser("table", help="CSV grid of formula vs built size vs verdict")
    tb.add_argument("--kind", choices=KINDS, action="append")
    tb.add_argument("--k", type=_int_grid, required=True)
    tb.add_argument("--n", type=_int_grid, required=True)
    tb.add_argument("--t", type=_int_grid)
    tb.add_argument("--format", choices=("csv",))
    tb.add_argument("--jobs", type=int, default=default_jobs())
    tb.add_argument("--no-verify", action="store_true")

    e = sub.add_parser("exact", help="exact sat(K_t, K_k^n) by exhaustive search")
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--max-subsets", type=int)
    e.add_argument("--max-seconds", type=float)
    e.add_argument("--max-edges", type=int, default=DEFAULT_EDGE_CAP)
    common(e, ("text", "json"))

    hs = sub.add_parser("heuristic", help="randomized greedy upper bound")
    hs.add_argument("--k", type=int, required=True)
    hs.add_argument("--n", type=int, required=True)
    hs.add_argument("--trials", type=int, default=64)
    hs.add_argument("--seed", type=int, default=0)
    common(hs, ("text", "json"))

    d = sub.add_parser("density", help="part-pair edge densities")
    d.add_argument("--kind", choices=KINDS)
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--input")
    common(d, ("csv", "json", "text"))
    return p


COMMANDS = {
    "build": cmd_build,
    "verify": cmd_verify,
    "formulas": cmd_formulas,
    "table": cmd_table,
    "exact": cmd_exact,
    "heuristic": cmd_heuristic,
    "density": cmd_density,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = make_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "jobs", 1) is not None and getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be >= 1", file=err)
        return EXIT_PARAM
    try:
        return COMMANDS[args.command](args, out, err)
    except MultisatError as exc:
        print(f"error: {exc}", file=err)
        return exc.exit_code
    except _IOFailure as exc:
        print(f"error: {exc}", file=err)
        return EXIT_IO


def main() -> None:
    sys.exit(run())
