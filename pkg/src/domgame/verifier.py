"""Bound checks, removal delta spectra, family-claim tables, and corpus scans.

Everything here recomputes values with the exact solver and compares them
against the bounds and claims the constructions are supposed to satisfy.
Scans fan out over worker processes (capped by the DOMGAME_THREADS
environment variable) and merge their partial reports in task order, so a
report is deterministic for a given corpus order and seed.
"""

from __future__ import annotations

import csv
import io
import itertools
import os
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .families import PARAMETRIC, ClaimedValues, MarkedGraph, exceptional_constructions
from .graph import Graph, _graph_from_edge_mask, parse_graph6, tree_from_pruefer, write_graph6
from .solver import Player, Solver, domination_number

#: Per-graph checks refuse orders the solver should not be asked to grind.
SOLVE_ORDER_LIMIT = 30

#: Exhaustive labeled-graph scans refuse larger orders.
SCAN_ORDER_LIMIT = 7

#: Labeled-tree scans refuse larger orders.
TREE_SCAN_LIMIT = 8

#: Every randomized sample in scans derives from this documented seed.
DEFAULT_SEED = 1729


@dataclass
class CheckResult:
    graph_id: str
    check: str
    passed: bool
    gg: int | None = None
    ggp: int | None = None
    gamma: int | None = None
    detail: str = ""


@dataclass
class DeltaSpectrum:
    """Game-value change for every single-mark removal, one start variant."""

    variant: Player
    per_mark: dict

    def min(self) -> int:
        return min(self.per_mark.values())

    def max(self) -> int:
        return max(self.per_mark.values())


@dataclass
class GraphEvaluation:
    """Solver values for a graph, each edge removal, and each vertex removal."""

    gg: int
    ggp: int
    gamma: int
    edge_values: dict  # (u, v) -> (gg, ggp, gamma) of G-e
    vertex_values: dict  # v -> (gg, ggp) of G-v


def evaluate_graph(g: Graph) -> GraphEvaluation:
    if g.n > SOLVE_ORDER_LIMIT:
        raise ValueError(f"per-graph checks limited to order <= {SOLVE_ORDER_LIMIT}")
    s = Solver(g)
    gg = s.value(0, Player.DOMINATOR)
    ggp = s.value(0, Player.STALLER)
    gamma = domination_number(g)
    edge_values = {}
    for e in g.edges():
        sub = g.remove_edge(*e)
        ss = Solver(sub)
        edge_values[e] = (
            ss.value(0, Player.DOMINATOR),
            ss.value(0, Player.STALLER),
            domination_number(sub),
        )
    vertex_values = {}
    for v in range(g.n):
        sub, _ = g.remove_vertex(v)
        ss = Solver(sub)
        vertex_values[v] = (ss.value(0, Player.DOMINATOR), ss.value(0, Player.STALLER))
    return GraphEvaluation(gg, ggp, gamma, edge_values, vertex_values)


def check_graph(
    g: Graph, graph_id: str | None = None, evaluation: GraphEvaluation | None = None
) -> list[CheckResult]:
    """Run the five bound families on one graph, every edge, every vertex.

    Checks: start-player gap <= 1; edge-removal change within +-2 (both
    variants); vertex-removal drop <= 2 (both variants); the domination
    sandwich gamma <= gg <= 2*gamma - 1; and the removal chain
    gg(G-e) >= gamma(G-e) >= gamma(G) >= ceil((gg+1)/2).
    """
    ev = evaluation or evaluate_graph(g)
    gid = graph_id if graph_id is not None else write_graph6(g)
    common = dict(gg=ev.gg, ggp=ev.ggp, gamma=ev.gamma)
    out = []

    ok = abs(ev.gg - ev.ggp) <= 1
    out.append(CheckResult(gid, "gap", ok, **common,
                           detail="" if ok else f"gg={ev.gg} ggp={ev.ggp}"))

    bad = [
        f"{u}-{v}:gg_e={t[0]},ggp_e={t[1]}"
        for (u, v), t in ev.edge_values.items()
        if abs(ev.gg - t[0]) > 2 or abs(ev.ggp - t[1]) > 2
    ]
    out.append(CheckResult(gid, "edge-bound", not bad, **common, detail=";".join(bad)))

    bad = [
        f"{v}:gg_v={t[0]},ggp_v={t[1]}"
        for v, t in ev.vertex_values.items()
        if ev.gg - t[0] > 2 or ev.ggp - t[1] > 2
    ]
    out.append(CheckResult(gid, "vertex-bound", not bad, **common, detail=";".join(bad)))

    ok = g.n == 0 or ev.gamma <= ev.gg <= 2 * ev.gamma - 1
    out.append(CheckResult(gid, "sandwich", ok, **common,
                           detail="" if ok else f"gamma={ev.gamma} gg={ev.gg}"))

    need = (ev.gg + 2) // 2
    bad = [
        f"{u}-{v}:gg_e={t[0]},gamma_e={t[2]}"
        for (u, v), t in ev.edge_values.items()
        if not t[0] >= t[2] >= ev.gamma >= need
    ]
    if ev.edge_values == {} and ev.gamma < need:
        bad = [f"gamma={ev.gamma}<ceil((gg+1)/2)={need}"]
    out.append(CheckResult(gid, "chain", not bad, **common, detail=";".join(bad)))
    return out


# -- impossibility bullets ---------------------------------------------------
#
# Each claim is (name, premise, conclusion) over (value, value-after-removal)
# for one start variant.  These are the small-value cases the source rules
# out entirely; a scan counts premise hits and records any violation.

_EDGE_CLAIMS_GG = [
    ("gg=1 => gg(G-e)<=2", lambda a: a == 1, lambda a, b: b <= 2),
    ("gg=2 => gg(G-e)<=3", lambda a: a == 2, lambda a, b: b <= 3),
    ("gg>=2 => gg(G-e)>=2", lambda a: a >= 2, lambda a, b: b >= 2),
    ("gg>=4 => gg(G-e)>=3", lambda a: a >= 4, lambda a, b: b >= 3),
    ("gg(G-e)>=ceil((gg+1)/2)", lambda a: True, lambda a, b: b >= (a + 2) // 2),
]

_EDGE_CLAIMS_GGP = [
    ("ggp=1 => ggp(G-e)=2", lambda a: a == 1, lambda a, b: b == 2),
    ("ggp=2 => ggp(G-e)<=3", lambda a: a == 2, lambda a, b: b <= 3),
    ("ggp=3 => ggp(G-e)<=4", lambda a: a == 3, lambda a, b: b <= 4),
    ("ggp(G-e)>=2", lambda a: True, lambda a, b: b >= 2),
    ("ggp=3 => ggp(G-e)>=3", lambda a: a == 3, lambda a, b: b >= 3),
    ("ggp=4 => ggp(G-e)>=3", lambda a: a == 4, lambda a, b: b >= 3),
    ("ggp=5 => ggp(G-e)>=4", lambda a: a == 5, lambda a, b: b >= 4),
]

_VERTEX_CLAIMS_GG = [
    ("no gg=4 with gg(G-v)=2", lambda a: a == 4, lambda a, b: b != 2),
    ("no gg=3 with gg(G-v)=1", lambda a: a == 3, lambda a, b: b != 1),
]


def impossibility_results(
    gid: str, ev: GraphEvaluation
) -> tuple[list[CheckResult], Counter]:
    """Violations of the ruled-out small-value removals, plus premise counts."""
    failures: list[CheckResult] = []
    counts: Counter = Counter()
    for (u, v), (gge, ggpe, _) in ev.edge_values.items():
        for name, premise, holds in _EDGE_CLAIMS_GG:
            if premise(ev.gg):
                counts[name] += 1
                if not holds(ev.gg, gge):
                    failures.append(CheckResult(
                        gid, name, False, gg=ev.gg, ggp=ev.ggp,
                        detail=f"edge {u}-{v}: gg_e={gge}"))
        for name, premise, holds in _EDGE_CLAIMS_GGP:
            if premise(ev.ggp):
                counts[name] += 1
                if not holds(ev.ggp, ggpe):
                    failures.append(CheckResult(
                        gid, name, False, gg=ev.gg, ggp=ev.ggp,
                        detail=f"edge {u}-{v}: ggp_e={ggpe}"))
    for v, (ggv, _) in ev.vertex_values.items():
        for name, premise, holds in _VERTEX_CLAIMS_GG:
            if premise(ev.gg):
                counts[name] += 1
                if not holds(ev.gg, ggv):
                    failures.append(CheckResult(
                        gid, name, False, gg=ev.gg, ggp=ev.ggp,
                        detail=f"vertex {v}: gg_v={ggv}"))
    return failures, counts


# -- delta spectra -----------------------------------------------------------


def edge_delta_spectrum(g: Graph, variant: Player = Player.DOMINATOR) -> DeltaSpectrum:
    """value(G) - value(G-e) for every edge, under one start variant."""
    if g.n > SOLVE_ORDER_LIMIT:
        raise ValueError(f"delta spectrum limited to order <= {SOLVE_ORDER_LIMIT}")
    base = Solver(g).value(0, variant)
    per_mark = {
        e: base - Solver(g.remove_edge(*e)).value(0, variant) for e in g.edges()
    }
    return DeltaSpectrum(variant, per_mark)


def vertex_delta_spectrum(g: Graph, variant: Player = Player.DOMINATOR) -> DeltaSpectrum:
    """value(G) - value(G-v) for every vertex, under one start variant."""
    if g.n > SOLVE_ORDER_LIMIT:
        raise ValueError(f"delta spectrum limited to order <= {SOLVE_ORDER_LIMIT}")
    base = Solver(g).value(0, variant)
    per_mark = {
        v: base - Solver(g.remove_vertex(v)[0]).value(0, variant) for v in range(g.n)
    }
    return DeltaSpectrum(variant, per_mark)


# -- family claims -----------------------------------------------------------


@dataclass
class ClaimRow:
    family: str
    k: int | None
    quantity: str
    claimed: int
    computed: int

    @property
    def match(self) -> bool:
        return self.claimed == self.computed


_QUANTITY_ORDER = ("gamma_g", "gamma_g_removed", "gamma_g_prime", "gamma_g_prime_removed")


def _claim_rows(
    family: str, k: int | None, mg: MarkedGraph, claims: ClaimedValues
) -> list[ClaimRow]:
    s = Solver(mg.graph)
    computed: dict[str, int] = {}
    wanted = dict(claims.items())
    if "gamma_g" in wanted:
        computed["gamma_g"] = s.value(0, Player.DOMINATOR)
    if "gamma_g_prime" in wanted:
        computed["gamma_g_prime"] = s.value(0, Player.STALLER)
    if "gamma_g_removed" in wanted or "gamma_g_prime_removed" in wanted:
        sub = Solver(mg.without_mark())
        if "gamma_g_removed" in wanted:
            computed["gamma_g_removed"] = sub.value(0, Player.DOMINATOR)
        if "gamma_g_prime_removed" in wanted:
            computed["gamma_g_prime_removed"] = sub.value(0, Player.STALLER)
    return [
        ClaimRow(family, k, q, wanted[q], computed[q])
        for q in _QUANTITY_ORDER
        if q in wanted
    ]


def verify_family_claims(
    names: Iterable[str] = ("all",),
    k_max: int = 1,
    k_overrides: dict[str, int] | None = None,
) -> list[ClaimRow]:
    """Recompute every claimed value for the requested families.

    ``names`` may contain parametric family names (checked for k = 0..k_max,
    per-family override via k_overrides), exceptional entry names, or "all".
    """
    exceptional = {name: (mg, claims) for name, mg, claims in exceptional_constructions()}
    requested = list(names)
    if "all" in requested:
        requested = list(PARAMETRIC) + list(exceptional)
    rows: list[ClaimRow] = []
    for name in requested:
        if name in PARAMETRIC:
            top = (k_overrides or {}).get(name, k_max)
            for k in range(top + 1):
                mg, claims = PARAMETRIC[name](k)
                rows.extend(_claim_rows(name, k, mg, claims))
        elif name in exceptional:
            mg, claims = exceptional[name]
            rows.extend(_claim_rows(name, None, mg, claims))
        else:
            raise ValueError(f"unknown family name {name!r}")
    return rows


# -- scan reports ------------------------------------------------------------


@dataclass
class ScanReport:
    description: str
    graphs: int = 0
    checks_run: Counter = field(default_factory=Counter)
    failures: list[CheckResult] = field(default_factory=list)
    pair_histogram: Counter = field(default_factory=Counter)
    pair_histogram_staller: Counter = field(default_factory=Counter)
    parse_errors: list[tuple[int, str]] = field(default_factory=list)
    results: list[CheckResult] | None = None

    @property
    def all_passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        state = "PASS" if self.all_passed else f"FAIL ({len(self.failures)} failures)"
        return (
            f"{self.description}: {self.graphs} graphs, "
            f"{sum(self.checks_run.values())} checks, "
            f"{len(self.parse_errors)} parse errors -> {state}"
        )


def _resolve_jobs(jobs: int | None = None) -> int:
    if jobs is not None:
        return max(1, jobs)
    avail = os.cpu_count() or 1
    env = os.environ.get("DOMGAME_THREADS")
    if env:
        try:
            avail = min(avail, int(env))
        except ValueError:
            raise ValueError(f"DOMGAME_THREADS must be an integer, got {env!r}") from None
    return max(1, avail)


def _run_tasks(worker, tasks: list, jobs: int) -> list:
    if jobs <= 1 or len(tasks) <= 1:
        return [worker(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, tasks))


def _graph_scan_chunk(task: tuple[int, int, int]) -> tuple:
    n, lo, hi = task
    pairs = list(itertools.combinations(range(n), 2))
    counts: Counter = Counter()
    failures: list[CheckResult] = []
    hist: Counter = Counter()
    hist_staller: Counter = Counter()
    for mask in range(lo, hi):
        g = _graph_from_edge_mask(n, pairs, mask)
        gid = write_graph6(g)
        ev = evaluate_graph(g)
        for r in check_graph(g, graph_id=gid, evaluation=ev):
            counts[r.check] += 1
            if not r.passed:
                failures.append(r)
        imp_failures, imp_counts = impossibility_results(gid, ev)
        counts.update(imp_counts)
        failures.extend(imp_failures)
        for gge, ggpe, _ in ev.edge_values.values():
            hist[(ev.gg, gge)] += 1
            hist_staller[(ev.ggp, ggpe)] += 1
    return hi - lo, counts, failures, hist, hist_staller


def scan_impossibility(n_max: int, jobs: int | None = None) -> ScanReport:
    """Exhaustive bound-and-impossibility scan over all labeled graphs.

    Runs the five per-graph checks plus every ruled-out small-value claim on
    every labeled graph of order <= n_max, and tallies the (value,
    value-after-edge-removal) pair histograms for both start variants.
    """
    if not 0 <= n_max <= SCAN_ORDER_LIMIT:
        raise ValueError(f"exhaustive scan limited to n_max <= {SCAN_ORDER_LIMIT}")
    jobs = _resolve_jobs(jobs)
    tasks = []
    for n in range(n_max + 1):
        total = 1 << (n * (n - 1) // 2)
        step = 4096 if total > 4096 else total
        tasks.extend((n, lo, min(lo + step, total)) for lo in range(0, total, max(1, step)))
    report = ScanReport(description=f"labeled graphs n<={n_max}")
    for graphs, counts, failures, hist, hist_staller in _run_tasks(
        _graph_scan_chunk, tasks, jobs
    ):
        report.graphs += graphs
        report.checks_run.update(counts)
        report.failures.extend(failures)
        report.pair_histogram.update(hist)
        report.pair_histogram_staller.update(hist_staller)
    return report


def _tree_scan_chunk(task: tuple[int, int, int, int, int]) -> tuple:
    n, lo, hi, samples, seed = task
    counts: Counter = Counter()
    failures: list[CheckResult] = []
    for idx in range(lo, hi):
        if n <= 2:
            tree = Graph(1) if n == 1 else Graph(2, [(0, 1)])
        else:
            rest, seq = idx, []
            for _ in range(n - 2):
                rest, digit = divmod(rest, n)
                seq.append(digit)
            tree = tree_from_pruefer(tuple(seq), n)
        s = Solver(tree)
        rng = random.Random((seed * 1000003 + n) * 1000003 + idx)
        pres = [0] + [rng.getrandbits(n) & tree.full_mask for _ in range(samples)]
        for pre in pres:
            dom = s.value(pre, Player.DOMINATOR)
            sta = s.value(pre, Player.STALLER)
            counts["forest-ineq"] += 1
            if dom > sta:
                failures.append(CheckResult(
                    write_graph6(tree), "forest-ineq", False, gg=dom, ggp=sta,
                    detail=f"pre={pre:#x}"))
    return hi - lo, counts, failures


def scan_forest_inequality(
    n_max: int,
    samples: int = 10,
    seed: int = DEFAULT_SEED,
    jobs: int | None = None,
) -> ScanReport:
    """Dominator-start <= Staller-start on every labeled tree of order <= n_max.

    Checked with no pre-dominated vertices plus ``samples`` random
    pre-dominated sets per tree, drawn deterministically from the seed.
    """
    if not 1 <= n_max <= TREE_SCAN_LIMIT:
        raise ValueError(f"tree scan limited to 1 <= n_max <= {TREE_SCAN_LIMIT}")
    jobs = _resolve_jobs(jobs)
    tasks = []
    for n in range(1, n_max + 1):
        total = 1 if n <= 2 else n ** (n - 2)
        step = 8192 if total > 8192 else total
        tasks.extend(
            (n, lo, min(lo + step, total), samples, seed)
            for lo in range(0, total, max(1, step))
        )
    report = ScanReport(description=f"labeled trees n<={n_max}")
    for graphs, counts, failures in _run_tasks(_tree_scan_chunk, tasks, jobs):
        report.graphs += graphs
        report.checks_run.update(counts)
        report.failures.extend(failures)
    return report


def scan_corpus(lines: Iterable[str], description: str = "corpus") -> ScanReport:
    """Run the per-graph checks on a stream of graph6 lines.

    Blank lines and "#" comments are skipped; parse failures are recorded
    with their line number and the scan continues.  The report keeps the
    full per-graph result rows, not just failures.
    """
    report = ScanReport(description=description, results=[])
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            g = parse_graph6(line)
        except ValueError as exc:
            report.parse_errors.append((lineno, str(exc)))
            continue
        if g.n > SOLVE_ORDER_LIMIT:
            report.parse_errors.append(
                (lineno, f"order {g.n} exceeds solve guard {SOLVE_ORDER_LIMIT}")
            )
            continue
        ev = evaluate_graph(g)
        for r in check_graph(g, graph_id=line, evaluation=ev):
            report.checks_run[r.check] += 1
            report.results.append(r)
            if not r.passed:
                report.failures.append(r)
        imp_failures, imp_counts = impossibility_results(line, ev)
        report.checks_run.update(imp_counts)
        report.failures.extend(imp_failures)
        report.results.extend(imp_failures)
        for gge, ggpe, _ in ev.edge_values.values():
            report.pair_histogram[(ev.gg, gge)] += 1
            report.pair_histogram_staller[(ev.ggp, ggpe)] += 1
        report.graphs += 1
    return report


def report_to_csv(report: ScanReport) -> str:
    """Comma-separated result rows plus a '#'-prefixed summary footer."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["graph6", "check", "pass", "gg", "ggp", "gamma", "detail"])
    rows = report.results if report.results is not None else report.failures
    for r in rows:
        writer.writerow([
            r.graph_id, r.check, int(r.passed),
            "" if r.gg is None else r.gg,
            "" if r.ggp is None else r.ggp,
            "" if r.gamma is None else r.gamma,
            r.detail,
        ])
    buf.write(f"# description={report.description}\n")
    buf.write(f"# graphs={report.graphs}\n")
    buf.write(f"# failures={len(report.failures)}\n")
    buf.write(f"# parse_errors={len(report.parse_errors)}\n")
    for lineno, message in report.parse_errors:
        buf.write(f"# parse_error line={lineno} {message}\n")
    for name in sorted(report.checks_run):
        buf.write(f"# check {name} runs={report.checks_run[name]}\n")
    for (a, b), count in sorted(report.pair_histogram.items()):
        buf.write(f"# pair_gg {a} {b} {count}\n")
    for (a, b), count in sorted(report.pair_histogram_staller.items()):
        buf.write(f"# pair_ggp {a} {b} {count}\n")
    return buf.getvalue()


def claims_to_csv(rows: list[ClaimRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["family", "k", "quantity", "claimed", "computed", "match"])
    for r in rows:
        writer.writerow([
            r.family, "" if r.k is None else r.k, r.quantity,
            r.claimed, r.computed, int(r.match),
        ])
    buf.write(f"# claims={len(rows)} mismatches={sum(not r.match for r in rows)}\n")
    return buf.getvalue()
