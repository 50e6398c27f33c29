"""Command-line interface: ``sqconn compute|family|verify|convert``.

Exit codes: 0 success / no violations, 1 violations found, 2 usage or
parse errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .connectivity import edge_connectivity, vertex_connectivity
from .families import KIND_ALIASES, FamilySpec, generate
from .formats import FORMATS, FormatError, detect_format, read_graphs, serialize
from .graph import Graph, GraphError, is_connected
from .power import graph_power
from .verify import THEOREMS, SearchConfig, reports_to_csv, reports_to_json, run_suite

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _metrics_row(g: Graph) -> dict:
    row = {"n": g.n, "m": g.m, "delta": min(g.degrees) if g.n else None,
           "lambda": None, "kappa": None, "connected": g.n > 0 and is_connected(g)}
    if g.n >= 2:
        row["lambda"] = edge_connectivity(g)[0]
        row["kappa"] = vertex_connectivity(g)[0]
    return row


def _table(rows: list[tuple[str, dict]]) -> str:
    cols = ["graph", "n", "m", "delta", "lambda", "kappa"]
    cells = [cols] + [[name] + ["-" if r[c] is None else str(r[c]) for c in cols[1:]] for name, r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(cols))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells) + "\n"


def cmd_compute(args) -> int:
    graphs = read_graphs(args.input, args.input_format)
    power = args.power if args.power is not None else (2 if args.square else None)
    if power is not None and power < 1:
        raise UsageError(f"--power must be >= 1, got {power}")
    results = []
    for idx, g in enumerate(graphs):
        entry = {"index": idx, "G": _metrics_row(g)}
        if g.n and not entry["G"]["connected"]:
            print(f"warning: graph {idx} is disconnected; lambda = 0", file=sys.stderr)
        if power is not None and g.n:
            entry[f"G^{power}"] = _metrics_row(graph_power(g, power))
        results.append(entry)
    if args.format == "json":
        sys.stdout.write(json.dumps(results, indent=2) + "\n")
    else:
        rows = []
        for entry in results:
            for key, row in entry.items():
                if key != "index":
                    rows.append((f"{entry['index']}:{key}", row))
        sys.stdout.write(_table(rows))
    return EXIT_OK


def cmd_family(args) -> int:
    spec = FamilySpec.parse(args.kind, args.parameter)
    inst = generate(spec)
    out = Path(args.output)
    fmt = args.format or detect_format(out)
    out.write_text(serialize(inst.graph, fmt), encoding="utf-8")
    meta = inst.metadata()
    meta["format"] = fmt
    sidecar = out.with_name(out.name + ".json")
    sidecar.write_text(json.dumps(meta, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {out} ({inst.graph.n} vertices, {inst.graph.m} edges) and {sidecar}")
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    values = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part[1:]:
            lo, hi = part.split("-", 1) if not part.startswith("-") else (part, part)
            values.extend(range(int(lo), int(hi) + 1))
        else:
            values.append(int(part))
    return values


def parse_families(items: list[str]) -> tuple[FamilySpec, ...]:
    """``g-lambda=4,9;g-n=10-17`` style family selections."""
    specs = []
    for item in items:
        for chunk in item.split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            if "=" not in chunk:
                raise UsageError(f"family selection {chunk!r} must look like kind=values")
            kind, values = chunk.split("=", 1)
            kind = kind.strip()
            if kind not in KIND_ALIASES and kind not in KIND_ALIASES.values():
                raise UsageError(f"unknown family {kind!r}; choose from {sorted(KIND_ALIASES)}")
            try:
                params = _int_list(values)
            except ValueError:
                raise UsageError(f"bad family parameters {values!r}") from None
            specs += [FamilySpec.parse(kind, p) for p in params]
    return tuple(specs)


def _pair(text: str, cast) -> tuple:
    parts = [cast(p) for p in text.split(",")]
    if len(parts) == 1:
        return parts[0], parts[0]
    if len(parts) != 2:
        raise UsageError(f"expected one value or 'lo,hi', got {text!r}")
    return parts[0], parts[1]


def cmd_verify(args) -> int:
    if args.summary_only and args.format == "csv":
        raise UsageError("--summary-only is only available with --format json")
    if args.witnesses and args.format == "csv":
        raise UsageError("--witnesses is only available with --format json")
    families = parse_families(args.families or [])
    if args.exhaustive_n is None and not args.samples and not families:
        raise UsageError("nothing to verify: give --exhaustive-n, --samples or --families")
    targets = tuple(args.targets.split(",")) if args.targets else THEOREMS
    config = SearchConfig(
        exhaustive_n=args.exhaustive_n,
        samples=args.samples,
        n_range=_pair(args.n_range, int),
        p_range=_pair(args.p, float),
        seed=args.seed,
        families=families,
        targets=targets,
        engine=args.engine,
        allow_large_exhaustive=args.allow_large,
    )
    try:
        config.validate()
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    reports, summary = run_suite(config, keep_reports=not args.summary_only)
    if args.format == "csv":
        text = reports_to_csv(reports)
    else:
        text = reports_to_json(reports, summary, witnesses=args.witnesses)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    status = "ok" if summary.ok else "FAILED"
    print(f"{status}: {summary.graphs} graphs, {summary.violations} violations, "
          f"{summary.whitney_failures} Whitney failures, {summary.family_mismatches} family mismatches",
          file=sys.stderr)
    return EXIT_OK if summary.ok else EXIT_VIOLATION


def cmd_convert(args) -> int:
    src_fmt = args.input_format or detect_format(args.input, Path(args.input).read_text(encoding="utf-8"))
    graphs = read_graphs(args.input, src_fmt)
    dst_fmt = args.output_format or detect_format(args.output)
    if dst_fmt != "graph6" and len(graphs) > 1:
        raise UsageError(f"{len(graphs)} graphs in input; {dst_fmt} holds a single graph")
    Path(args.output).write_text("".join(serialize(g, dst_fmt) for g in graphs), encoding="utf-8")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sqconn", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="connectivity metrics of a graph file")
    p.add_argument("input")
    p.add_argument("--input-format", choices=FORMATS)
    p.add_argument("--square", action="store_true", help="also report the square")
    p.add_argument("--power", "-k", type=int, help="also report the k-th power")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("family", help="write an extremal construction plus JSON sidecar")
    p.add_argument("kind", choices=sorted(KIND_ALIASES))
    p.add_argument("parameter", type=int)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--format", choices=FORMATS)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="check the theorems over graph corpora")
    p.add_argument("--exhaustive-n", type=int, help="all connected graphs with 2..N vertices")
    p.add_argument("--samples", type=int, default=0, help="number of random connected graphs")
    p.add_argument("--n-range", default="4,12", help="vertex count (or lo,hi) for random graphs")
    p.add_argument("--p", default="0.2,0.6", help="edge probability (or lo,hi) for random graphs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--families", action="append", help="e.g. 'g-lambda=4,9;g-n=10-17'")
    p.add_argument("--targets", help=f"comma list from {','.join(THEOREMS)}")
    p.add_argument("--engine", choices=("algorithms", "batch"), default="algorithms",
                   help="batch: vectorized brute force for exhaustive corpora")
    p.add_argument("--allow-large", action="store_true", help="permit --exhaustive-n 8")
    p.add_argument("--witnesses", action="store_true", help="include witness cuts in JSON")
    p.add_argument("--summary-only", action="store_true", help="omit per-graph reports")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("convert", help="convert between graph6, edgelist and dimacs")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--input-format", choices=FORMATS)
    p.add_argument("--output-format", choices=FORMATS)
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
