"""Corpus-level verification sweeps with machine-readable reports.

Each sweep checks one family of counting or structural claims on every
graph of a corpus and emits one record per graph.  A violated assertion is
recorded as a counterexample, never silently logged, and drives a nonzero
exit in the CLI.  Records are merged in canonical-certificate order, so a
report is byte-identical no matter how many workers produced it.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from math import factorial
from typing import Callable

from .canon import canonical_form
from .coloring import is_critical
from .corpus import Corpus, all_graphs_up_to
from .cycles import census_mod, check_chen_saito, find_admissible_paths
from .errors import ContractViolation, TheoremViolation
from .graphs import Graph, parse_graph6, structural_predicates, write_graph6
from .kempe import extract_one_mod_k

GOOD_MODULUS = 3  # cycle lengths divisible by 3 are the "good" ones


@dataclass
class VerificationRecord:
    cert: str
    graph6: str
    n: int
    m: int
    min_degree: int
    good_count: int | None = None
    one_mod_count: int | None = None
    bound_0mod: int | None = None
    bound_1mod: int | None = None
    equality_0mod: bool | None = None
    equality_1mod: bool | None = None
    is_complete: bool | None = None
    per_vertex_min_incidence: int | None = None
    per_edge_incidence_range: tuple[int, int] | None = None
    lemma13_hypothesis_met: bool | None = None
    counts: tuple[int, ...] | None = None
    skipped: str | None = None
    violations: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        d = {
            "cert": self.cert,
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "min_degree": self.min_degree,
            "good_count": self.good_count,
            "one_mod_count": self.one_mod_count,
            "bound_0mod": self.bound_0mod,
            "bound_1mod": self.bound_1mod,
            "equality_0mod": self.equality_0mod,
            "equality_1mod": self.equality_1mod,
            "is_complete": self.is_complete,
            "per_vertex_min_incidence": self.per_vertex_min_incidence,
            "per_edge_incidence_range": (
                list(self.per_edge_incidence_range)
                if self.per_edge_incidence_range is not None
                else None
            ),
            "lemma13_hypothesis_met": self.lemma13_hypothesis_met,
            "counts": list(self.counts) if self.counts is not None else None,
            "skipped": self.skipped,
            "violations": self.violations,
        }
        return d


@dataclass
class Report:
    suite: str
    records: list[VerificationRecord]
    summary: dict[str, int]

    @property
    def violation_count(self) -> int:
        return sum(len(r.violations) for r in self.records)

    @property
    def ok(self) -> bool:
        return self.violation_count == 0

    def to_jsonl(self) -> str:
        return "".join(
            json.dumps(r.to_dict(), sort_keys=True, separators=(",", ":")) + "\n"
            for r in self.records
        )

    CSV_FIELDS = [
        "cert",
        "n",
        "m",
        "min_degree",
        "good_count",
        "one_mod_count",
        "bound_0mod",
        "bound_1mod",
        "equality_0mod",
        "equality_1mod",
        "is_complete",
        "per_vertex_min_incidence",
        "per_edge_min",
        "per_edge_max",
        "lemma13_hypothesis_met",
        "skipped",
        "violations",
    ]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.CSV_FIELDS)
        for r in self.records:
            lo, hi = (r.per_edge_incidence_range or (None, None))
            writer.writerow(
                [
                    r.cert,
                    r.n,
                    r.m,
                    r.min_degree,
                    r.good_count,
                    r.one_mod_count,
                    r.bound_0mod,
                    r.bound_1mod,
                    r.equality_0mod,
                    r.equality_1mod,
                    r.is_complete,
                    r.per_vertex_min_incidence,
                    lo,
                    hi,
                    r.lemma13_hypothesis_met,
                    r.skipped,
                    "; ".join(r.violations),
                ]
            )
        return buf.getvalue()


def _base_record(g: Graph) -> VerificationRecord:
    degs = g.degrees()
    return VerificationRecord(
        cert=canonical_form(g).decode("ascii"),
        graph6=write_graph6(g),
        n=g.n,
        m=g.m,
        min_degree=min(degs) if degs else 0,
    )


# -- per-graph workers (top level so they pickle for process pools) -------


def _main_record(g6: str) -> VerificationRecord:
    g = parse_graph6(g6)
    rec = _base_record(g)
    census = census_mod(g, GOOD_MODULUS, 0)
    good = census.counts[0]
    s = structural_predicates(g)
    rec.good_count = good
    rec.bound_0mod = 4
    rec.counts = census.counts
    rec.is_complete = s.is_complete
    rec.equality_0mod = good == 4
    rec.per_vertex_min_incidence = min(census.vertex_incidence) if g.n else 0
    inc = census.edge_incidence.values()
    rec.per_edge_incidence_range = (min(inc), max(inc)) if inc else (0, 0)
    is_k4 = s.is_complete and g.n == 4
    if good < 4:
        rec.violations.append(f"good_count {good} < 4")
    if good == 4 and not is_k4:
        rec.violations.append("exactly 4 good cycles on a graph that is not K4")
    if rec.min_degree >= 4 and good < 5:
        rec.violations.append(f"min degree >= 4 but good_count {good} < 5")
    if rec.per_vertex_min_incidence < 2:
        rec.violations.append(
            f"a vertex lies on only {rec.per_vertex_min_incidence} good cycles (< 2)"
        )
    return rec


def _one_mod_record(g6: str, k: int) -> VerificationRecord:
    g = parse_graph6(g6)
    rec = _base_record(g)
    census = census_mod(g, k, 1 % k)
    one_mod = census.counts[1 % k]
    bound = factorial(k) // 2
    s = structural_predicates(g)
    rec.one_mod_count = one_mod
    rec.bound_1mod = bound
    rec.counts = census.counts
    rec.is_complete = s.is_complete
    rec.equality_1mod = one_mod == bound
    is_kk1 = s.is_complete and g.n == k + 1
    if one_mod < bound:
        rec.violations.append(f"one_mod_count {one_mod} < {bound}")
    if one_mod == bound and not is_kk1:
        rec.violations.append(
            f"exactly {bound} cycles of length 1 mod {k} on a graph that is not K{k + 1}"
        )
    try:
        constructed = extract_one_mod_k(g, 0, k)
    except TheoremViolation as exc:
        rec.violations.append(f"constructive extraction failed: {exc}")
        return rec
    if len(constructed) < bound:
        rec.violations.append(
            f"construction produced {len(constructed)} cycles, bound is {bound}"
        )
    enumerated = set(census.cycles_with_residue(1 % k))
    for cyc in constructed:
        if cyc not in enumerated:
            rec.violations.append(f"constructed cycle {cyc.vertices} missing from census")
        if 0 not in cyc:
            rec.violations.append(f"constructed cycle {cyc.vertices} avoids the pivot vertex")
    return rec


def _structure_record(g6: str) -> VerificationRecord:
    g = parse_graph6(g6)
    rec = _base_record(g)
    if rec.min_degree == 3:
        rec.skipped = "min degree 3"
        return rec
    census = census_mod(g, GOOD_MODULUS, 0)
    good = census.counts[0]
    vi = census.vertex_incidence
    rec.good_count = good
    rec.counts = census.counts
    rec.per_vertex_min_incidence = min(vi) if g.n else 0
    inc = census.edge_incidence.values()
    rec.per_edge_incidence_range = (min(inc), max(inc)) if inc else (0, 0)
    rec.lemma13_hypothesis_met = all(x <= 2 for x in vi)
    if any(x >= 3 for x in vi):
        if good < 5:
            rec.violations.append(
                f"a vertex lies on 3+ good cycles but good_count {good} < 5"
            )
    if rec.lemma13_hypothesis_met:
        degs = g.degrees()
        if any(d != 4 for d in degs):
            rec.violations.append(
                "every vertex on <= 2 good cycles but the graph is not 4-regular"
            )
        if any(x != 1 for x in census.edge_incidence.values()):
            rec.violations.append(
                "every vertex on <= 2 good cycles but some edge is not on exactly one good cycle"
            )
        if good < 5:
            rec.violations.append(
                f"every vertex on <= 2 good cycles but good_count {good} < 5"
            )
    return rec


def _borrowed_record(g6: str) -> VerificationRecord:
    g = parse_graph6(g6)
    rec = _base_record(g)
    checked_anything = False
    # sufficient condition for a 0 mod 3 cycle
    if g.n >= 2 and sum(1 for d in g.degrees() if d <= 2) <= 1:
        checked_anything = True
        witness = check_chen_saito(g)
        if witness is None:
            rec.violations.append(
                "degree hypothesis met but no cycle of length 0 mod 3 exists"
            )
    # admissible path families between every vertex pair
    s = structural_predicates(g)
    if s.two_connected:
        for x in range(g.n):
            for y in range(x + 1, g.n):
                others = [g.degree(w) for w in range(g.n) if w not in (x, y)]
                if not others:
                    continue
                ell_max = min(others) - 1
                for ell in range(1, ell_max + 1):
                    checked_anything = True
                    paths = find_admissible_paths(g, x, y, ell)
                    if paths is None:
                        rec.violations.append(
                            f"no family of {ell} admissible paths between {x} and {y}"
                        )
                        continue
                    lengths = sorted(len(p) - 1 for p in paths)
                    diffs = {b - a for a, b in zip(lengths, lengths[1:])}
                    if len(paths) != ell or any(l < 2 for l in lengths) or (
                        ell > 1 and (len(diffs) != 1 or diffs.pop() not in (1, 2))
                    ):
                        rec.violations.append(
                            f"returned family between {x} and {y} is not admissible"
                        )
    if not checked_anything:
        rec.skipped = "no hypothesis applies"
    return rec


# -- sweep drivers ---------------------------------------------------------


def _run_records(
    worker: Callable[[str], VerificationRecord],
    lines: list[str],
    jobs: int,
    fail_fast: bool,
) -> list[VerificationRecord]:
    records: list[VerificationRecord] = []
    if jobs <= 1 or fail_fast or len(lines) <= 1:
        for g6 in lines:
            rec = worker(g6)
            records.append(rec)
            if fail_fast and rec.violations:
                break
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(worker, lines, chunksize=4))
    records.sort(key=lambda r: (r.n, r.cert))
    return records


def _require_class(corpus: Corpus, q: int) -> None:
    if corpus.q != q:
        raise ContractViolation(
            f"corpus holds {corpus.q}-critical graphs, this sweep needs {q}-critical input"
        )


def verify_theorem_main(corpus: Corpus, jobs: int = 1, fail_fast: bool = False) -> Report:
    """Every 4-critical graph has >= 4 good cycles, equality only at K4.

    Splits by minimum degree: degree-3 graphs carry the equality claim,
    min degree >= 4 graphs must show at least 5 good cycles.  Also checks
    that every vertex lies on at least two good cycles.
    """
    _require_class(corpus, 4)
    lines = [write_graph6(e.graph) for e in corpus.entries]
    records = _run_records(_main_record, lines, jobs, fail_fast)
    summary = {
        "graphs": len(records),
        "violations": sum(len(r.violations) for r in records),
        "delta3": sum(1 for r in records if r.min_degree == 3),
        "delta4_plus": sum(1 for r in records if r.min_degree >= 4),
        "equality_cases": sum(1 for r in records if r.equality_0mod),
    }
    return Report("main", records, summary)


def verify_one_mod_k(corpus: Corpus, k: int, jobs: int = 1, fail_fast: bool = False) -> Report:
    """At least k!/2 cycles of length 1 mod k, equality only at K_{k+1}.

    Cross-validates the constructive extraction: its cycles must all
    appear in the census with the right residue and pass the pivot.
    """
    if k < 3:
        raise ContractViolation("sweep needs k >= 3")
    _require_class(corpus, k + 1)
    lines = [write_graph6(e.graph) for e in corpus.entries]
    records = _run_records(partial(_one_mod_record, k=k), lines, jobs, fail_fast)
    summary = {
        "graphs": len(records),
        "violations": sum(len(r.violations) for r in records),
        "equality_cases": sum(1 for r in records if r.equality_1mod),
    }
    return Report("onemod", records, summary)


def verify_structure_lemmas(corpus: Corpus, jobs: int = 1, fail_fast: bool = False) -> Report:
    """Good-cycle incidence structure for min-degree-4 4-critical graphs.

    Graphs with a vertex on 3+ good cycles must have >= 5 in total; graphs
    where every vertex lies on at most two must be 4-regular with every
    edge on exactly one good cycle and >= 5 in total.  Premise-vacuous
    branches are counted, not silently passed.
    """
    _require_class(corpus, 4)
    lines = [write_graph6(e.graph) for e in corpus.entries]
    records = _run_records(_structure_record, lines, jobs, fail_fast)
    summary = {
        "graphs": len(records),
        "violations": sum(len(r.violations) for r in records),
        "skipped_delta3": sum(1 for r in records if r.skipped == "min degree 3"),
        "vertex_on_three_plus": sum(
            1 for r in records if r.lemma13_hypothesis_met is False
        ),
        "all_vertices_at_most_two": sum(
            1 for r in records if r.lemma13_hypothesis_met is True
        ),
    }
    return Report("structure", records, summary)


def verify_borrowed_theorems(n_max: int, jobs: int = 1, fail_fast: bool = False) -> Report:
    """Exhaustively exercise the two borrowed existence results up to n_max.

    A "violation" here would falsify published literature and is treated
    as an implementation bug until proven otherwise.
    """
    if n_max > 8:
        raise ContractViolation("borrowed-theorem sweep supports n_max <= 8")
    if n_max < 2:
        raise ContractViolation("borrowed-theorem sweep needs n_max >= 2")
    lines = []
    for n in range(2, n_max + 1):
        lines.extend(write_graph6(g) for g in all_graphs_up_to(n))
    records = _run_records(_borrowed_record, lines, jobs, fail_fast)
    summary = {
        "graphs": len(records),
        "violations": sum(len(r.violations) for r in records),
        "vacuous": sum(1 for r in records if r.skipped is not None),
    }
    return Report("borrowed", records, summary)


def verify_corpus_hypotheses(corpus: Corpus) -> list[str]:
    """Sanity assertions every corpus must meet before any sweep."""
    problems = []
    for entry in corpus.entries:
        s = structural_predicates(entry.graph)
        if s.min_degree < corpus.q - 1:
            problems.append(f"{entry.cert!r}: min degree {s.min_degree} < {corpus.q - 1}")
        if not s.two_connected:
            problems.append(f"{entry.cert!r}: not 2-connected")
        if not is_critical(entry.graph, corpus.q):
            problems.append(f"{entry.cert!r}: not {corpus.q}-critical")
    return problems
