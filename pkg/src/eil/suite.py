"""Batch verification over graph corpora, reports, and counterexample hunting.

run_suite fans the requested checks over a corpus of graphs.  Checks that are
parameterized by an edge and a deletion set are quantified exhaustively over
all edges and all admissible deletion sets whenever the subset space has at
most EXHAUSTIVE_LIMIT elements; beyond that a seeded random sample is drawn
and the affected outcomes are flagged as sampled.  Identical corpus, checks,
seed and field always produce an identical report body (timings excluded),
whatever the worker count.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import os
import random
import tempfile
from dataclasses import dataclass, field as dc_field
from itertools import islice
from multiprocessing import Pool

from .checks import (
    FAILS,
    HOLDS,
    NOT_APPLICABLE,
    CheckOutcome,
    DepthComputer,
    check_colon_intersection,
    check_colon_intersection_depth,
    check_even_connection_depth,
    check_first_power,
    check_generator_order_decomposition,
    check_packing_deletion_bound,
    check_sharp_examples,
    check_square_colon_depth,
    check_square_colon_formula,
    check_square_depth_bounds,
    check_symbolic_square,
    check_triangle_neighborhood_packing,
)
from .depth import GF2, FieldChoice
from .graphs import Graph, emit_graph6, parse_graph6, random_graph

__all__ = [
    "EXHAUSTIVE_LIMIT",
    "CHECK_IDS",
    "SUITE_ALIASES",
    "VerificationReport",
    "resolve_checks",
    "run_suite",
    "hunt_counterexamples",
]

EXHAUSTIVE_LIMIT = 1024  # deletion-set spaces up to 2^10 are swept fully
DEFAULT_SAMPLE_SIZE = 64

# check id -> quantification kind
_GRAPH = "graph"          # one call per graph
_EDGE = "edge"            # per edge
_EDGE_SET = "edge_set"    # per edge and admissible deletion set
_GLOBAL = "global"        # corpus-independent fixed instances

_CHECKS: dict[str, tuple[str, bool]] = {
    # name: (kind, needs depth computer)
    "first_power": (_GRAPH, True),
    "triangle_deletion_packing": (_GRAPH, False),
    "colon_intersection": (_EDGE, False),
    "colon_intersection_depth": (_EDGE_SET, True),
    "even_connection_depth": (_EDGE_SET, True),
    "square_colon_depth": (_EDGE_SET, True),
    "square_colon_formula": (_EDGE_SET, False),
    "square_general": (_GRAPH, True),
    "square_wk3_free": (_GRAPH, True),
    "square_triangle_free": (_GRAPH, True),
    "symbolic_square": (_GRAPH, True),
    "order_decomposition": (_GRAPH, False),
    "deletion_bound": (_EDGE_SET, False),
    "sharp_examples": (_GLOBAL, True),
}

CHECK_IDS = tuple(_CHECKS)

SUITE_ALIASES: dict[str, tuple[str, ...]] = {
    "main": ("square_general", "square_wk3_free", "square_triangle_free"),
    "main1": ("square_general",),
    "main2": ("square_wk3_free",),
    "main3": ("square_triangle_free",),
    "examples": ("sharp_examples",),
    "all": CHECK_IDS,
}


def resolve_checks(names) -> tuple[str, ...]:
    """Expand aliases and validate before any work; unknown names raise."""
    out: list[str] = []
    for name in names:
        if name in SUITE_ALIASES:
            expanded = SUITE_ALIASES[name]
        elif name in _CHECKS:
            expanded = (name,)
        else:
            known = ", ".join(sorted(set(_CHECKS) | set(SUITE_ALIASES)))
            raise ValueError(f"unknown check {name!r}; known: {known}")
        for c in expanded:
            if c not in out:
                out.append(c)
    return tuple(out)


# ---------------------------------------------------------------------------
# deletion-set quantification


def _derived_rng(seed: int, *parts: str) -> random.Random:
    material = ":".join(str(p) for p in parts) + f":{seed}"
    digest = hashlib.sha256(material.encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def _deletion_sets(pool: list[str], seed: int, context: str, sample_size: int):
    """All subsets of the pool, or a seeded sample of them.

    Returns (list of label tuples, sampled flag).  Samples always contain the
    empty and the full set, so the boundary cases stay covered.
    """
    p = len(pool)
    if (1 << p) <= EXHAUSTIVE_LIMIT:
        subsets = []
        for mask in range(1 << p):
            subsets.append(tuple(pool[t] for t in range(p) if mask & (1 << t)))
        return subsets, False
    rng = _derived_rng(seed, "deletion-sets", context)
    masks = {0, (1 << p) - 1}
    want = min(max(sample_size, 2), 1 << p)
    while len(masks) < want:
        masks.add(rng.getrandbits(p))
    subsets = [tuple(pool[t] for t in range(p) if mask & (1 << t)) for mask in sorted(masks)]
    return subsets, True


def _pool_for_edge(G: Graph, i: int, j: int) -> list[str]:
    mask = (G.adj[i] | G.adj[j]) & ~(1 << i) & ~(1 << j)
    return [G.labels[k] for k in range(G.n) if mask & (1 << k)]


def _run_checks_on_graph(G: Graph, checks, computer: DepthComputer, seed: int,
                         sample_size: int) -> list[CheckOutcome]:
    gid = emit_graph6(G)
    out: list[CheckOutcome] = []
    for name in checks:
        kind, needs_depth = _CHECKS[name]
        field = computer if needs_depth else None
        if kind == _GLOBAL:
            continue  # handled once by run_suite, not per graph
        if kind == _GRAPH:
            if name == "first_power":
                out.append(check_first_power(G, computer))
            elif name == "triangle_deletion_packing":
                out.extend(check_triangle_neighborhood_packing(G))
            elif name in ("square_general", "square_wk3_free", "square_triangle_free"):
                out.extend(check_square_depth_bounds(G, computer, parts=(name,)))
            elif name == "symbolic_square":
                out.append(check_symbolic_square(G, computer))
            elif name == "order_decomposition":
                out.append(check_generator_order_decomposition(G))
            continue
        for i, j in G.edges():
            u, v = G.labels[i], G.labels[j]
            if kind == _EDGE:
                if name == "colon_intersection":
                    out.append(check_colon_intersection(G, (u, v)))
                continue
            pool = _pool_for_edge(G, i, j)
            subsets, sampled = _deletion_sets(pool, seed, f"{name}:{gid}:{u}:{v}", sample_size)
            for A in subsets:
                if name == "colon_intersection_depth":
                    oc = check_colon_intersection_depth(G, (u, v), A, computer)
                elif name == "even_connection_depth":
                    oc = check_even_connection_depth(G, (u, v), A, computer)
                elif name == "square_colon_depth":
                    oc = check_square_colon_depth(G, (u, v), A, computer)
                elif name == "square_colon_formula":
                    oc = check_square_colon_formula(G, (u, v), A)
                else:
                    oc = check_packing_deletion_bound(G, (u, v), A)
                if sampled:
                    oc.witness = dict(oc.witness or {})
                    oc.witness["sampled"] = True
                out.append(oc)
    return out


def _graph_task(args) -> tuple[list[CheckOutcome], list[dict], int]:
    g6, checks, characteristic, cross, seed, sample_size = args
    G = parse_graph6(g6)
    computer = DepthComputer(FieldChoice(characteristic), cross_check=cross)
    outcomes = _run_checks_on_graph(G, checks, computer, seed, sample_size)
    for finding in computer.findings:
        finding["graph_id"] = g6
    return outcomes, computer.findings, computer.comparisons


# ---------------------------------------------------------------------------
# reports


@dataclass
class VerificationReport:
    """All outcomes of one suite run plus summary tallies and findings.

    Findings (field-characteristic disagreements) are a separate channel from
    failures: a finding never flips a check verdict.
    """

    corpus: str
    checks: tuple[str, ...]
    field_char: int
    cross_check: bool
    seed: int
    outcomes: list[CheckOutcome] = dc_field(default_factory=list)
    findings: list[dict] = dc_field(default_factory=list)
    depth_comparisons: int = 0

    @property
    def summary(self) -> dict:
        tally = {HOLDS: 0, FAILS: 0, NOT_APPLICABLE: 0}
        for oc in self.outcomes:
            tally[oc.status] += 1
        return {
            "outcomes": len(self.outcomes),
            "holds": tally[HOLDS],
            "fails": tally[FAILS],
            "not_applicable": tally[NOT_APPLICABLE],
            "findings": len(self.findings),
            "depth_comparisons": self.depth_comparisons,
        }

    @property
    def failures(self) -> list[CheckOutcome]:
        return [oc for oc in self.outcomes if oc.status == FAILS]

    def to_json_dict(self, with_timing: bool = True) -> dict:
        rows = []
        for oc in self.outcomes:
            row = oc.to_dict()
            if not with_timing:
                row.pop("elapsed_ms")
            rows.append(row)
        return {
            "schema": "eil-verification-report/1",
            "corpus": self.corpus,
            "checks": list(self.checks),
            "field_char": self.field_char,
            "cross_check": self.cross_check,
            "seed": self.seed,
            "summary": self.summary,
            "findings": self.findings,
            "outcomes": rows,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=False)

    def canonical_body(self) -> str:
        """Deterministic report body: identical runs give identical bytes."""
        return json.dumps(self.to_json_dict(with_timing=False), sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(
            ["check_id", "graph_id", "status", "lhs", "rhs", "field_char",
             "elapsed_ms", "witness"]
        )
        for oc in self.outcomes:
            writer.writerow(
                [oc.check_id, oc.graph_id, oc.status, oc.lhs, oc.rhs,
                 oc.field_char if oc.field_char is not None else "",
                 oc.elapsed_ms,
                 json.dumps(oc.witness, sort_keys=True) if oc.witness else ""]
            )
        return buf.getvalue()

    def write(self, path: str, fmt: str = "json"):
        """Atomic write: the file appears complete or not at all."""
        payload = self.to_json() if fmt == "json" else self.to_csv()
        directory = os.path.dirname(os.path.abspath(path)) or "."
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".report-", text=True)
        try:
            with os.fdopen(fd, "w") as handle:
                handle.write(payload)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


# ---------------------------------------------------------------------------
# drivers


def _as_graph6(item) -> str:
    if isinstance(item, Graph):
        return emit_graph6(item)
    parse_graph6(item)  # validate up front; errors name the offending byte
    return item.strip()


def run_suite(corpus, checks, field: FieldChoice = GF2, *, cross_check: bool = False,
              seed: int = 0, jobs: int = 1, budget: int | None = None,
              sample_size: int = DEFAULT_SAMPLE_SIZE,
              corpus_name: str = "corpus") -> VerificationReport:
    """Run the named checks on every graph of the corpus.

    corpus: iterable of Graph values or graph6 lines.  budget caps the number
    of graphs consumed.  jobs > 1 distributes whole graphs over worker
    processes; outcome order stays the corpus order either way.
    """
    names = resolve_checks(checks)
    report = VerificationReport(
        corpus=corpus_name,
        checks=names,
        field_char=field.characteristic,
        cross_check=cross_check,
        seed=seed,
    )
    items = islice(corpus, budget) if budget is not None else corpus
    lines = [_as_graph6(g) for g in items]
    if "sharp_examples" in names:
        computer = DepthComputer(field, cross_check=cross_check)
        report.outcomes.extend(check_sharp_examples(computer))
        report.findings.extend(computer.findings)
        report.depth_comparisons += computer.comparisons
    per_graph = tuple(n for n in names if _CHECKS[n][0] != _GLOBAL)
    if not per_graph:
        return report
    tasks = [(g6, per_graph, field.characteristic, cross_check, seed, sample_size)
             for g6 in lines]
    if jobs > 1 and len(tasks) > 1:
        with Pool(processes=jobs) as pool:
            results = pool.imap(_graph_task, tasks, chunksize=8)
            for outcomes, findings, comparisons in results:
                report.outcomes.extend(outcomes)
                report.findings.extend(findings)
                report.depth_comparisons += comparisons
    else:
        for task in tasks:
            outcomes, findings, comparisons = _graph_task(task)
            report.outcomes.extend(outcomes)
            report.findings.extend(findings)
            report.depth_comparisons += comparisons
    return report


def hunt_counterexamples(checks, n: int, count: int, seed: int,
                         field: FieldChoice = GF2, *, cross_check: bool = False,
                         jobs: int = 1) -> VerificationReport:
    """Run checks over seeded random graphs on n vertices.

    Any failure outcome is the interesting artifact: its graph_id replays it.
    """
    if isinstance(checks, str):
        checks = [checks]
    names = resolve_checks(checks)
    rng = _derived_rng(seed, "hunt", ",".join(names), str(n))
    graphs = [random_graph(n, rng) for _ in range(count)]
    return run_suite(
        graphs, names, field, cross_check=cross_check, seed=seed, jobs=jobs,
        corpus_name=f"random:n={n},count={count},seed={seed}",
    )
