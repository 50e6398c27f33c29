"""Theorem checkers and verification suites for the edge connectivity of
graph squares.

Each checker evaluates a hypothesis and a conclusion on one connected graph
and returns a :class:`TheoremRecord`. A violation (hypothesis true,
conclusion false) contradicts a proved statement and therefore points at a
bug in this package. :func:`run_suite` applies every checker over
exhaustive corpora, seeded random graphs and the extremal families.
"""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt, sqrt

import numpy as np

from .connectivity import Cut, analyze_cut, edge_connectivity, vertex_connectivity
from .families import FamilyInstance, FamilySpec, generate
from .formats import to_graph6
from .graph import Graph, GraphError, build_graph, is_connected
from .oracle import ENUM_CAP, batch_metrics, enumerate_connected_graphs, graph_from_mask, pair_list
from .power import square

THEOREMS = ("theorem1", "theorem2", "theorem3", "corollary1", "corollary2", "theorem4", "lemma1")

DESCRIPTIONS = {
    "theorem1": "2*delta >= n-1  =>  lambda = delta",
    "theorem2": "delta >= floor((n+2)/4)  =>  lambda(G^2) = delta(G^2)",
    "theorem3": "delta >= 2  =>  G^2 max. edge-connected or lambda(G^2) >= kappa*(delta+1)",
    "corollary1": "kappa >= 2  =>  G^2 max. edge-connected or lambda(G^2) >= kappa*(kappa+1)",
    "corollary2": "G not complete  =>  lambda(G^2) >= delta+1",
    "theorem4": "G^2 max. edge-connected or lambda(G^2) >= lambda^1.5/2 - lambda/2",
    "lemma1": "minimum cut of G^2 below delta(G^2)  =>  interior vertices on both sides",
}


@dataclass
class Metrics:
    """Connectivity parameters of a connected graph and its square."""

    n: int
    m: int
    delta: int
    lam: int
    kappa: int
    delta_sq: int
    lambda_sq: int
    complete: bool
    cut: Cut | None = None
    separator: frozenset[int] | None = None
    sq_cut: Cut | None = None

    @property
    def sq_maximal(self) -> bool:
        return self.lambda_sq == self.delta_sq

    @property
    def whitney_holds(self) -> bool:
        return self.kappa <= self.lam <= self.delta and self.lambda_sq <= self.delta_sq


def compute_metrics(g: Graph) -> Metrics:
    if g.n < 2:
        raise GraphError(f"metrics need n >= 2, got n={g.n}")
    if not is_connected(g):
        raise GraphError("graph is not connected")
    h = square(g)
    lam, cut = edge_connectivity(g)
    kappa, sep = vertex_connectivity(g)
    lam_sq, sq_cut = edge_connectivity(h)
    return Metrics(
        n=g.n,
        m=g.m,
        delta=min(g.degrees),
        lam=lam,
        kappa=kappa,
        delta_sq=min(h.degrees),
        lambda_sq=lam_sq,
        complete=g.is_complete(),
        cut=cut,
        separator=sep,
        sq_cut=sq_cut,
    )


@dataclass
class TheoremRecord:
    theorem: str
    hypothesis_holds: bool
    conclusion_holds: bool
    bound_value: Fraction | None = None
    slack: Fraction | None = None
    extra: dict = field(default_factory=dict)

    @property
    def violation(self) -> bool:
        return self.hypothesis_holds and not self.conclusion_holds

    def to_dict(self) -> dict:
        out = {
            "hypothesis_holds": self.hypothesis_holds,
            "conclusion_holds": self.conclusion_holds,
            "bound_value": _num(self.bound_value),
            "slack": _num(self.slack),
        }
        if self.extra:
            out["extra"] = {k: _num(v) if isinstance(v, Fraction) else v for k, v in self.extra.items()}
        return out


def _num(x: Fraction | int | None):
    if x is None:
        return None
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    return x


def _metrics_for(g: Graph, metrics: Metrics | None) -> Metrics:
    return metrics if metrics is not None else compute_metrics(g)


# records from metrics


def theorem1_record(mt: Metrics) -> TheoremRecord:
    return TheoremRecord(
        "theorem1",
        hypothesis_holds=2 * mt.delta >= mt.n - 1,
        conclusion_holds=mt.lam == mt.delta,
        bound_value=Fraction(mt.delta),
        slack=Fraction(mt.lam - mt.delta),
    )


def theorem2_record(mt: Metrics) -> TheoremRecord:
    return TheoremRecord(
        "theorem2",
        hypothesis_holds=mt.delta >= (mt.n + 2) // 4,
        conclusion_holds=mt.sq_maximal,
        bound_value=Fraction(mt.delta_sq),
        slack=Fraction(mt.lambda_sq - mt.delta_sq),
    )


def _lower_bound_record(name: str, hyp: bool, mt: Metrics, bound: int) -> TheoremRecord:
    maximal = mt.sq_maximal
    return TheoremRecord(
        name,
        hypothesis_holds=hyp,
        conclusion_holds=maximal or mt.lambda_sq >= bound,
        bound_value=Fraction(bound),
        # slack is only meaningful on the branch where the bound carries content
        slack=None if maximal else Fraction(mt.lambda_sq - bound),
        extra={"sq_maximal": maximal},
    )


def theorem3_record(mt: Metrics) -> TheoremRecord:
    return _lower_bound_record("theorem3", mt.delta >= 2, mt, mt.kappa * (mt.delta + 1))


def corollary1_record(mt: Metrics) -> TheoremRecord:
    return _lower_bound_record("corollary1", mt.kappa >= 2, mt, mt.kappa * (mt.kappa + 1))


def corollary2_record(mt: Metrics) -> TheoremRecord:
    bound = mt.delta + 1
    return TheoremRecord(
        "corollary2",
        hypothesis_holds=not mt.complete,
        conclusion_holds=mt.lambda_sq >= bound,
        bound_value=Fraction(bound),
        slack=Fraction(mt.lambda_sq - bound),
    )


def theorem4_bound(lam: int) -> tuple[Fraction, bool]:
    """``lam^1.5/2 - lam/2``: exact for perfect squares, otherwise a rational
    approximation flagged as inexact."""
    t = isqrt(lam)
    if t * t == lam:
        return Fraction(t * t * t - lam, 2), True
    return Fraction(0.5 * lam ** 1.5 - 0.5 * lam).limit_denominator(10 ** 9), False


def theorem4_holds(lambda_sq: int, lam: int) -> bool:
    # lambda_sq >= (lam^1.5 - lam)/2  <=>  (2*lambda_sq + lam)^2 >= lam^3
    return (2 * lambda_sq + lam) ** 2 >= lam ** 3


def theorem4_record(mt: Metrics) -> TheoremRecord:
    bound, exact = theorem4_bound(mt.lam)
    maximal = mt.sq_maximal
    return TheoremRecord(
        "theorem4",
        hypothesis_holds=mt.lam >= 1,
        conclusion_holds=maximal or theorem4_holds(mt.lambda_sq, mt.lam),
        bound_value=bound,
        slack=None if maximal else Fraction(mt.lambda_sq) - bound,
        extra={
            "sq_maximal": maximal,
            "exact": exact,
            # variant with -sqrt(lambda)/2 as the second term
            "alt_bound": round(0.5 * mt.lam ** 1.5 - 0.5 * sqrt(mt.lam), 9),
        },
    )


def lemma1_record(g: Graph, mt: Metrics) -> TheoremRecord:
    h = square(g)
    analysis = analyze_cut(g, h, mt.sq_cut, max(mt.lam, 1))
    return TheoremRecord(
        "lemma1",
        hypothesis_holds=analysis.interior_required,
        conclusion_holds=analysis.interior_present,
        extra={
            "interior1": len(analysis.interior1),
            "interior2": len(analysis.interior2),
            "s_prime": len(analysis.s_prime),
            "dichotomy_holds": analysis.dichotomy_holds,
        },
    )


_FROM_METRICS = {
    "theorem1": theorem1_record,
    "theorem2": theorem2_record,
    "theorem3": theorem3_record,
    "corollary1": corollary1_record,
    "corollary2": corollary2_record,
    "theorem4": theorem4_record,
}


# public per-graph checkers


def check_chartrand(g: Graph, metrics: Metrics | None = None) -> TheoremRecord:
    return theorem1_record(_metrics_for(g, metrics))


def check_theorem2(g: Graph, metrics: Metrics | None = None) -> TheoremRecord:
    return theorem2_record(_metrics_for(g, metrics))


def check_theorem3(g: Graph, metrics: Metrics | None = None) -> TheoremRecord:
    return theorem3_record(_metrics_for(g, metrics))


def check_corollary1(g: Graph, metrics: Metrics | None = None) -> TheoremRecord:
    return corollary1_record(_metrics_for(g, metrics))


def check_corollary2(g: Graph, metrics: Metrics | None = None) -> TheoremRecord:
    return corollary2_record(_metrics_for(g, metrics))


def check_theorem4(g: Graph, metrics: Metrics | None = None) -> TheoremRecord:
    return theorem4_record(_metrics_for(g, metrics))


def check_lemma1(g: Graph, metrics: Metrics | None = None) -> TheoremRecord:
    return lemma1_record(g, _metrics_for(g, metrics))


def sharpness_ratio(lam: int) -> Fraction:
    """Measured ``lambda(G_lam^2) / lam^1.5`` on the generated family."""
    inst = generate(FamilySpec("Glambda", lam))
    lam_sq, _ = edge_connectivity(square(inst.graph))
    return Fraction(lam_sq, isqrt(lam) ** 3)


# reports


@dataclass
class VerificationReport:
    graph_id: str
    graph6: str
    metrics: Metrics
    records: dict[str, TheoremRecord]
    provenance: dict
    family_checks: dict | None = None

    @property
    def violations(self) -> list[str]:
        return [name for name, r in self.records.items() if r.violation]

    @property
    def family_ok(self) -> bool:
        return self.family_checks is None or all(c["holds"] for c in self.family_checks.values())

    def to_dict(self, witnesses: bool = False) -> dict:
        mt = self.metrics
        out = {
            "graph_id": self.graph_id,
            "graph6": self.graph6,
            "n": mt.n,
            "m": mt.m,
            "delta": mt.delta,
            "lambda": mt.lam,
            "kappa": mt.kappa,
            "delta_sq": mt.delta_sq,
            "lambda_sq": mt.lambda_sq,
            "whitney_holds": mt.whitney_holds,
            "records": {k: r.to_dict() for k, r in self.records.items()},
            "provenance": self.provenance,
        }
        if self.family_checks is not None:
            out["family_checks"] = self.family_checks
        if witnesses:
            out["witnesses"] = {
                "cut_side1": sorted(mt.cut.side1) if mt.cut else None,
                "separator": sorted(mt.separator) if mt.separator is not None else None,
                "sq_cut_side1": sorted(mt.sq_cut.side1) if mt.sq_cut else None,
            }
        return out


def family_checks(inst: FamilyInstance, mt: Metrics) -> dict:
    measured = {
        "delta": mt.delta,
        "lambda": mt.lam,
        "kappa": mt.kappa,
        "delta_sq": mt.delta_sq,
        "lambda_sq": mt.lambda_sq,
        "sq_deficit": mt.delta_sq - mt.lambda_sq,
    }
    return {
        key: {**claim.to_dict(), "measured": measured[key], "holds": claim.holds(measured[key])}
        for key, claim in inst.expected.items()
    }


def evaluate(g: Graph, graph_id: str, provenance: dict, targets=THEOREMS,
             metrics: Metrics | None = None, graph6: str | None = None) -> VerificationReport:
    mt = _metrics_for(g, metrics)
    records = {}
    for name in targets:
        if name == "lemma1":
            if mt.sq_cut is not None:
                records[name] = lemma1_record(g, mt)
        else:
            records[name] = _FROM_METRICS[name](mt)
    return VerificationReport(graph_id, graph6 or to_graph6(g), mt, records, provenance)


# suites


@dataclass(frozen=True)
class SearchConfig:
    """What :func:`run_suite` should test.

    ``exhaustive_n`` enables every connected labeled graph with
    ``2 <= n <= exhaustive_n``. ``samples`` random connected graphs are drawn
    with order uniform in ``n_range`` and edge probability uniform in
    ``p_range``; instance ``i`` uses its own generator seeded by
    ``(seed, i)``.
    """

    exhaustive_n: int | None = None
    samples: int = 0
    n_range: tuple[int, int] = (4, 12)
    p_range: tuple[float, float] = (0.2, 0.6)
    seed: int = 0
    families: tuple[FamilySpec, ...] = ()
    targets: tuple[str, ...] = THEOREMS
    engine: str = "algorithms"
    allow_large_exhaustive: bool = False

    def validate(self) -> None:
        if self.exhaustive_n is not None:
            if self.exhaustive_n < 2:
                raise GraphError(f"exhaustive n must be >= 2, got {self.exhaustive_n}")
            cap = ENUM_CAP if self.allow_large_exhaustive else 7
            if self.exhaustive_n > cap:
                raise GraphError(f"exhaustive n={self.exhaustive_n} exceeds the limit {cap}")
        if self.samples < 0:
            raise GraphError("sample count must be nonnegative")
        lo, hi = self.n_range
        if self.samples and not 2 <= lo <= hi:
            raise GraphError(f"invalid n range {self.n_range}")
        plo, phi = self.p_range
        if self.samples and not 0 < plo <= phi <= 1:
            raise GraphError(f"invalid edge probability range {self.p_range}")
        unknown = set(self.targets) - set(THEOREMS)
        if unknown:
            raise GraphError(f"unknown targets {sorted(unknown)}")
        if self.engine not in ("algorithms", "batch"):
            raise GraphError(f"unknown engine {self.engine!r}")


MAX_REJECTIONS = 100_000


def random_connected_graph(seed: int, index: int, n_range: tuple[int, int],
                           p_range: tuple[float, float]) -> tuple[Graph, dict]:
    """Instance ``index`` of the seeded stream, by rejection sampling."""
    rng = np.random.default_rng([seed, index])
    n = int(rng.integers(n_range[0], n_range[1] + 1))
    p = float(rng.uniform(p_range[0], p_range[1]))
    rows, cols = np.triu_indices(n, 1)
    for attempt in range(MAX_REJECTIONS):
        keep = rng.random(rows.size) < p
        g = build_graph(n, zip(rows[keep].tolist(), cols[keep].tolist()))
        if is_connected(g):
            return g, {"source": "random", "seed": seed, "index": index, "p": round(p, 12),
                       "attempts": attempt + 1}
    raise GraphError(f"no connected sample after {MAX_REJECTIONS} attempts (n={n}, p={p:.3f})")


def _batch_reports(n: int, targets) -> Iterator[VerificationReport]:
    bm = batch_metrics(n)
    pairs = pair_list(n)
    names = [t for t in targets if t != "lemma1"]
    for i in range(len(bm.masks)):
        mask = int(bm.masks[i])
        mt = Metrics(n=n, m=int(bm.m[i]), delta=int(bm.delta[i]), lam=int(bm.lam[i]),
                     kappa=int(bm.kappa[i]), delta_sq=int(bm.delta_sq[i]),
                     lambda_sq=int(bm.lambda_sq[i]), complete=bool(bm.complete[i]))
        records = {name: _FROM_METRICS[name](mt) for name in names}
        yield VerificationReport(
            f"exh-n{n}-m{mask}",
            to_graph6(graph_from_mask(n, mask, pairs)),
            mt,
            records,
            {"source": "exhaustive", "n": n, "mask": mask, "engine": "batch"},
        )


def iter_reports(config: SearchConfig) -> Iterator[VerificationReport]:
    """Deterministic stream: exhaustive corpora, random samples, families."""
    config.validate()
    if config.exhaustive_n is not None:
        for n in range(2, config.exhaustive_n + 1):
            if config.engine == "batch":
                yield from _batch_reports(n, config.targets)
                continue
            pairs = pair_list(n)
            for g in enumerate_connected_graphs(n, cap=ENUM_CAP):
                mask = sum(1 << i for i, (u, v) in enumerate(pairs) if g.has_edge(u, v))
                yield evaluate(g, f"exh-n{n}-m{mask}",
                               {"source": "exhaustive", "n": n, "mask": mask, "engine": "algorithms"},
                               config.targets)
    for i in range(config.samples):
        g, prov = random_connected_graph(config.seed, i, config.n_range, config.p_range)
        yield evaluate(g, f"rnd-s{config.seed}-i{i}", prov, config.targets)
    for spec in config.families:
        inst = generate(spec)
        report = evaluate(inst.graph, spec.label,
                          {"source": "family", "kind": spec.kind, "parameter": spec.parameter},
                          config.targets)
        report.family_checks = family_checks(inst, report.metrics)
        yield report


@dataclass
class TheoremSummary:
    tested: int = 0
    hypothesis_true: int = 0
    violations: int = 0
    min_slack: Fraction | None = None
    argmin_graph6: str | None = None
    argmin_id: str | None = None

    def add(self, record: TheoremRecord, graph_id: str, graph6: str) -> None:
        self.tested += 1
        if not record.hypothesis_holds:
            return
        self.hypothesis_true += 1
        if not record.conclusion_holds:
            self.violations += 1
        if record.slack is not None:
            key = (record.slack, graph6, graph_id)
            if self.min_slack is None or key < (self.min_slack, self.argmin_graph6, self.argmin_id):
                self.min_slack, self.argmin_graph6, self.argmin_id = key

    def to_dict(self) -> dict:
        return {
            "tested": self.tested,
            "hypothesis_true": self.hypothesis_true,
            "violations": self.violations,
            "min_slack": _num(self.min_slack),
            "argmin_graph6": self.argmin_graph6,
            "argmin_id": self.argmin_id,
        }


@dataclass
class Summary:
    graphs: int = 0
    whitney_failures: int = 0
    family_mismatches: int = 0
    theorems: dict[str, TheoremSummary] = field(default_factory=dict)
    violating_graphs: list[str] = field(default_factory=list)

    def add(self, report: VerificationReport) -> None:
        self.graphs += 1
        if not report.metrics.whitney_holds:
            self.whitney_failures += 1
        if not report.family_ok:
            self.family_mismatches += 1
        for name, record in report.records.items():
            self.theorems.setdefault(name, TheoremSummary()).add(record, report.graph_id, report.graph6)
        if report.violations:
            self.violating_graphs.append(report.graph_id)

    @property
    def violations(self) -> int:
        return sum(t.violations for t in self.theorems.values())

    @property
    def ok(self) -> bool:
        return self.violations == 0 and self.whitney_failures == 0 and self.family_mismatches == 0

    def to_dict(self) -> dict:
        return {
            "graphs": self.graphs,
            "violations": self.violations,
            "whitney_failures": self.whitney_failures,
            "family_mismatches": self.family_mismatches,
            "ok": self.ok,
            "theorems": {name: self.theorems[name].to_dict() for name in THEOREMS if name in self.theorems},
            "violating_graphs": self.violating_graphs[:100],
        }


def run_suite(config: SearchConfig, keep_reports: bool = True) -> tuple[list[VerificationReport], Summary]:
    summary = Summary()
    reports = []
    for report in iter_reports(config):
        summary.add(report)
        if keep_reports:
            reports.append(report)
    return reports, summary


# export

CSV_BASE = ["graph_id", "graph6", "n", "m", "delta", "lambda", "kappa", "delta_sq", "lambda_sq",
            "whitney_holds", "family_ok", "provenance"]


def reports_to_json(reports: list[VerificationReport], summary: Summary, witnesses: bool = False) -> str:
    payload = {
        "reports": [r.to_dict(witnesses) for r in reports],
        "summary": summary.to_dict(),
    }
    return json.dumps(payload, indent=2) + "\n"


def reports_to_csv(reports: list[VerificationReport]) -> str:
    buf = io.StringIO()
    cols = list(CSV_BASE)
    for name in THEOREMS:
        cols += [f"{name}_hyp", f"{name}_concl", f"{name}_bound", f"{name}_slack"]
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for r in reports:
        d = r.to_dict()
        row = [d[c] for c in CSV_BASE[:10]]
        row += [r.family_ok, json.dumps(r.provenance, sort_keys=True)]
        for name in THEOREMS:
            rec = r.records.get(name)
            if rec is None:
                row += ["", "", "", ""]
            else:
                rd = rec.to_dict()
                row += [rd["hypothesis_holds"], rd["conclusion_holds"], rd["bound_value"], rd["slack"]]
        writer.writerow(row)
    return buf.getvalue()
