"""Corpora of color-critical graphs: generation, ingestion, persistence.

Exhaustive generation proceeds by vertex augmentation through pools of
feasible intermediate graphs.  Every induced proper subgraph of a
q-critical graph is (q-1)-colorable, and deleting a vertex lowers degrees
by at most one, so the pool at j vertices only needs graphs with
chi <= q-1 and min degree >= delta - (n - j).  Candidates at full order
must additionally cover all degree-deficient parent vertices, avoid
creating a K_q (for n > q a critical graph cannot properly contain one),
and be connected; survivors are filtered by the exact criticality test
and deduplicated by canonical form.  Completeness of the same augmentation
scheme is validated in the test suite against total non-isomorphic graph
counts for small orders.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

from .canon import canonical_form
from .coloring import chromatic_number, is_colorable, is_critical
from .errors import ContractViolation, CorpusCorruptionError, UnsupportedSizeError
from .graphs import Edge, Graph, is_connected, iter_bits, parse_graph6, structural_predicates, write_graph6


@dataclass(frozen=True)
class CorpusEntry:
    graph: Graph
    cert: bytes
    n: int
    m: int
    min_degree: int
    provenance: str


@dataclass
class Corpus:
    """A deduplicated set of q-critical graphs with metadata."""

    q: int
    entries: list[CorpusEntry]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def certs(self) -> set[bytes]:
        return {e.cert for e in self.entries}

    def graphs(self) -> list[Graph]:
        return [e.graph for e in self.entries]

    def add(self, g: Graph, provenance: str, cert: bytes | None = None) -> bool:
        """Insert unless an isomorphic entry exists; True if inserted."""
        cert = canonical_form(g) if cert is None else cert
        if any(e.cert == cert for e in self.entries):
            return False
        degs = g.degrees()
        self.entries.append(
            CorpusEntry(g, cert, g.n, g.m, min(degs) if degs else 0, provenance)
        )
        return True

    def sort(self) -> None:
        self.entries.sort(key=lambda e: (e.n, e.cert))


# -- exhaustive generation ------------------------------------------------

_POOL_CACHE: dict[tuple[int, int | None, int], list[Graph]] = {}


def _feasible_pool(j: int, chi_max: int | None, dmin: int) -> list[Graph]:
    """All graphs on j vertices, up to isomorphism, with min degree >= dmin
    and (when chi_max is given) chromatic number <= chi_max.

    Built by augmenting the (j-1)-vertex pool with one new vertex over all
    neighborhood subsets, deduplicating by canonical form.  Both filter
    conditions are preserved by vertex deletion, which makes the scheme
    complete by induction.
    """
    key = (j, chi_max, dmin)
    if key in _POOL_CACHE:
        return _POOL_CACHE[key]
    # a stricter pool at the same level is a filter of a looser one
    for (jj, cm, dm), pool in _POOL_CACHE.items():
        if jj == j and cm == chi_max and dm < dmin:
            result = [g for g in pool if min(g.degrees()) >= dmin]
            _POOL_CACHE[key] = result
            return result
    if j == 1:
        result = [Graph.empty(1)] if dmin == 0 else []
        _POOL_CACHE[key] = result
        return result
    parents = _feasible_pool(j - 1, chi_max, max(0, dmin - 1))
    seen: set[bytes] = set()
    result = []
    for parent in parents:
        deficient = 0
        for u, row in enumerate(parent.adj):
            if row.bit_count() < dmin:
                deficient |= 1 << u
        for subset in range(1 << parent.n):
            if subset & deficient != deficient:
                continue
            if subset.bit_count() < dmin:
                continue
            cand = parent.add_vertex(subset)
            if chi_max is not None and not is_colorable(cand, chi_max):
                continue
            cert = canonical_form(cand)
            if cert not in seen:
                seen.add(cert)
                result.append(cand)
    _POOL_CACHE[key] = result
    return result


def _has_clique(g: Graph, vertices_mask: int, size: int) -> bool:
    """Does the induced subgraph on the masked vertices contain K_size?"""
    verts = list(iter_bits(vertices_mask))
    if len(verts) < size:
        return False
    for combo in combinations(verts, size):
        if all(g.has_edge(a, b) for a, b in combinations(combo, 2)):
            return True
    return False


def generate_exhaustive(n: int, q: int, *, _reverse_order: bool = False) -> Corpus:
    """Every q-critical graph on exactly n vertices, once up to isomorphism.

    The _reverse_order switch only permutes the augmentation order; the
    resulting set of canonical forms must be identical, which the test
    suite checks.
    """
    if not 4 <= n <= 11:
        raise UnsupportedSizeError(f"supported generation range is 4 <= n <= 11, got {n}")
    if q < 3:
        raise ContractViolation("generation targets q >= 3")
    corpus = Corpus(q, [])
    if n < q:
        return corpus
    parents = [g for g in _feasible_pool(n - 1, q - 1, max(0, q - 2)) if is_connected(g)]
    if _reverse_order:
        parents = list(reversed(parents))
    for parent in parents:
        deficient = 0
        for u, row in enumerate(parent.adj):
            if row.bit_count() < q - 1:
                deficient |= 1 << u
        subsets = range(1 << parent.n)
        if _reverse_order:
            subsets = reversed(subsets)
        for subset in subsets:
            if subset & deficient != deficient:
                continue
            if subset.bit_count() < q - 1:
                continue
            # a q-critical graph on more than q vertices cannot properly
            # contain K_q, so the new vertex's neighborhood must be
            # K_{q-1}-free
            if n > q and _has_clique(parent, subset, q - 1):
                continue
            cand = parent.add_vertex(subset)
            if not is_connected(cand):
                continue
            if is_colorable(cand, q - 1):
                continue
            # chi(cand) = q is now forced: the parent is (q-1)-colorable,
            # so one extra vertex needs at most one extra color
            if any(
                not is_colorable(cand.without_edge(e.u, e.v), q - 1)
                for e in cand.edges()
            ):
                continue
            corpus.add(cand, "generated")
    corpus.sort()
    return corpus


def all_graphs_up_to(n: int) -> list[Graph]:
    """All graphs on exactly n vertices up to isomorphism (no filters)."""
    if n < 1:
        raise ContractViolation("n must be positive")
    return _feasible_pool(n, None, 0)


# -- Hajos construction ----------------------------------------------------


def hajos_join(g1: Graph, e1: Edge, g2: Graph, e2: Edge) -> Graph:
    """Standard Hajos join of (g1, x1 y1) and (g2, x2 y2).

    Take the disjoint union, delete both chosen edges, identify x1 with
    x2, and add the edge y1 y2.  Joining two q-critical graphs yields a
    q-critical graph.
    """
    e1 = Edge(e1[0], e1[1])
    e2 = Edge(e2[0], e2[1])
    if not g1.has_edge(e1.u, e1.v):
        raise ContractViolation(f"edge {e1} not in first graph")
    if not g2.has_edge(e2.u, e2.v):
        raise ContractViolation(f"edge {e2} not in second graph")
    x1, y1 = e1.u, e1.v
    x2, y2 = e2.u, e2.v
    n1 = g1.n
    # vertices of g2 map to x1 (for x2) or fresh labels after g1's block
    remap = {}
    nxt = n1
    for w in range(g2.n):
        if w == x2:
            remap[w] = x1
        else:
            remap[w] = nxt
            nxt += 1
    edges: list[tuple[int, int]] = []
    for e in g1.edges():
        if e != e1:
            edges.append((e.u, e.v))
    for e in g2.edges():
        if e != e2:
            edges.append((remap[e.u], remap[e.v]))
    edges.append((y1, remap[y2]))
    return Graph.from_edges(n1 + g2.n - 1, edges)


# -- ingestion and persistence --------------------------------------------


@dataclass(frozen=True)
class RejectedLine:
    lineno: int
    line: str
    reason: str


@dataclass
class IngestReport:
    corpus: Corpus
    rejected: list[RejectedLine]


def ingest_graph6(path: str | Path, q: int) -> IngestReport:
    """Parse a graph6 file into a criticality-filtered, deduplicated corpus."""
    path = Path(path)
    corpus = Corpus(q, [])
    rejected: list[RejectedLine] = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                g = parse_graph6(line)
            except ValueError as exc:
                rejected.append(RejectedLine(lineno, line, f"parse failure: {exc}"))
                continue
            if not is_critical(g, q):
                rejected.append(RejectedLine(lineno, line, "not critical"))
                continue
            if not corpus.add(g, "ingested"):
                rejected.append(RejectedLine(lineno, line, "duplicate"))
    corpus.sort()
    return IngestReport(corpus, rejected)


def _sidecar_path(path: Path) -> Path:
    return path.with_name(path.name + ".meta.jsonl")


def save_corpus(corpus: Corpus, path: str | Path) -> None:
    """Append the corpus to a graph6 file plus a JSON-lines sidecar."""
    path = Path(path)
    with open(path, "a", encoding="ascii") as fh:
        for entry in corpus.entries:
            fh.write(write_graph6(entry.graph) + "\n")
    with open(_sidecar_path(path), "a", encoding="ascii") as fh:
        for entry in corpus.entries:
            record = {
                "cert": entry.cert.decode("ascii"),
                "n": entry.n,
                "m": entry.m,
                "min_degree": entry.min_degree,
                "provenance": entry.provenance,
            }
            fh.write(json.dumps(record, sort_keys=True) + "\n")


def load_corpus(path: str | Path) -> Corpus:
    """Load a corpus, re-deriving and cross-checking all metadata.

    Any disagreement between the graph6 lines and the sidecar is a
    corruption error.  Duplicates (by canonical form) are dropped, first
    occurrence wins.  The criticality class is recomputed from the first
    entry's chromatic number.
    """
    path = Path(path)
    with open(path, "r", encoding="ascii") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    meta_path = _sidecar_path(path)
    records = []
    if meta_path.exists():
        with open(meta_path, "r", encoding="ascii") as fh:
            for lineno, raw in enumerate(fh, start=1):
                raw = raw.strip()
                if not raw:
                    continue
                try:
                    records.append(json.loads(raw))
                except json.JSONDecodeError as exc:
                    raise CorpusCorruptionError(f"metadata line {lineno} is not JSON: {exc}") from None
    else:
        raise CorpusCorruptionError(f"missing metadata sidecar {meta_path}")
    if len(records) != len(lines):
        raise CorpusCorruptionError(
            f"{len(lines)} graphs but {len(records)} metadata records"
        )
    graphs = []
    for idx, (line, rec) in enumerate(zip(lines, records), start=1):
        g = parse_graph6(line)
        cert = canonical_form(g)
        degs = g.degrees()
        derived = {
            "cert": cert.decode("ascii"),
            "n": g.n,
            "m": g.m,
            "min_degree": min(degs) if degs else 0,
        }
        for field, value in derived.items():
            if rec.get(field) != value:
                raise CorpusCorruptionError(
                    f"entry {idx}: metadata {field}={rec.get(field)!r} does not match derived {value!r}"
                )
        if not isinstance(rec.get("provenance"), str):
            raise CorpusCorruptionError(f"entry {idx}: missing provenance")
        graphs.append((g, cert, rec["provenance"]))
    if not graphs:
        return Corpus(0, [])
    q = chromatic_number(graphs[0][0])
    corpus = Corpus(q, [])
    for g, cert, provenance in graphs:
        if not is_critical(g, q):
            raise CorpusCorruptionError(
                f"stored graph {write_graph6(g)} is not {q}-critical"
            )
        corpus.add(g, provenance, cert=cert)
    corpus.sort()
    return corpus


def corpus_invariants_ok(corpus: Corpus) -> bool:
    """Every entry critical, min degree >= q-1, 2-connected, certs distinct."""
    certs = set()
    for entry in corpus.entries:
        s = structural_predicates(entry.graph)
        if entry.cert in certs:
            return False
        certs.add(entry.cert)
        if s.min_degree < corpus.q - 1 or not s.two_connected:
            return False
        if not is_critical(entry.graph, corpus.q):
            return False
    return True
