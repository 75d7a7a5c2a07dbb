"""Cycle enumeration, modular-length census, and path-family checks.

Cycles are enumerated once each in canonical form: the vertex sequence is
rotated to start at its smallest vertex and reflected so the second entry
is smaller than the last.  The enumerator grows simple paths from each
start vertex using only larger vertices, so emitted sequences are already
canonical and no post-hoc dedup is needed.  Enumeration cost is
proportional to the number of paths explored, which at the package's desk
scale (n <= 12) is trivial.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ContractViolation
from .graphs import Edge, Graph, iter_bits

DEFAULT_CYCLE_CAP = 10**6


def _canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    seq = tuple(seq)
    pivot = seq.index(min(seq))
    forward = seq[pivot:] + seq[:pivot]
    rev = tuple(reversed(seq))
    pivot = rev.index(min(rev))
    backward = rev[pivot:] + rev[:pivot]
    return min(forward, backward)


@dataclass(frozen=True)
class CycleSeq:
    """A simple cycle as a canonical vertex sequence (length >= 3)."""

    vertices: tuple[int, ...]

    @classmethod
    def from_vertices(cls, seq: Sequence[int]) -> "CycleSeq":
        if len(seq) < 3:
            raise ContractViolation("a cycle needs at least 3 vertices")
        if len(set(seq)) != len(seq):
            raise ContractViolation(f"repeated vertex in cycle {tuple(seq)}")
        return cls(_canonical_cycle(seq))

    @property
    def length(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v in self.vertices

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[Edge]:
        vs = self.vertices
        return [Edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def is_cycle_of(self, g: Graph) -> bool:
        return all(g.has_edge(e.u, e.v) for e in self.edges())


def _iter_cycle_tuples(g: Graph, max_len: int | None) -> Iterator[tuple[int, ...]]:
    adj = g.adj
    n = g.n
    for s in range(n):
        higher = ~((1 << (s + 1)) - 1)
        if (adj[s] & higher).bit_count() < 2:
            continue
        path = [s]
        visited = 1 << s

        def walk(u: int) -> Iterator[tuple[int, ...]]:
            nonlocal visited
            if (adj[u] >> s) & 1 and len(path) >= 3 and path[1] < path[-1]:
                yield tuple(path)
            if max_len is not None and len(path) >= max_len:
                return
            for w in iter_bits(adj[u] & higher & ~visited):
                path.append(w)
                visited |= 1 << w
                yield from walk(w)
                path.pop()
                visited &= ~(1 << w)

        yield from walk(s)


def enumerate_cycles(g: Graph, max_len: int | None = None) -> list[CycleSeq]:
    """All distinct cycles of length <= max_len, each once, canonical."""
    return [CycleSeq(t) for t in _iter_cycle_tuples(g, max_len)]


@dataclass(frozen=True)
class CycleCensus:
    """Cycle counts by length residue class mod r.

    Incidence tallies cover the single designated residue class.  Explicit
    cycles are retained only while the total stays under the storage cap;
    counts and incidences stay exact either way.
    """

    r: int
    residue: int
    counts: tuple[int, ...]
    total: int
    vertex_incidence: tuple[int, ...]
    edge_incidence: dict[Edge, int]
    cycles: tuple[CycleSeq, ...] | None

    def cycles_with_residue(self, residue: int) -> list[CycleSeq]:
        if self.cycles is None:
            raise ContractViolation("explicit cycles were not stored (cap exceeded)")
        return [c for c in self.cycles if c.length % self.r == residue]


def _cycle_cap() -> int:
    raw = os.environ.get("MODK_CYCLE_CAP")
    if raw is None:
        return DEFAULT_CYCLE_CAP
    try:
        return int(raw)
    except ValueError:
        raise ContractViolation(f"MODK_CYCLE_CAP is not an integer: {raw!r}") from None


def census_mod(
    g: Graph,
    r: int,
    residue_of_interest: int = 0,
    store_cap: int | None = None,
) -> CycleCensus:
    """Count all cycles by length mod r, with incidence for one residue."""
    if r < 2:
        raise ContractViolation("modulus must be at least 2")
    if not 0 <= residue_of_interest < r:
        raise ContractViolation(f"residue {residue_of_interest} outside 0..{r - 1}")
    cap = _cycle_cap() if store_cap is None else store_cap
    counts = [0] * r
    vertex_inc = [0] * g.n
    edge_inc: dict[Edge, int] = {e: 0 for e in g.edges()}
    stored: list[CycleSeq] | None = []
    total = 0
    for t in _iter_cycle_tuples(g, None):
        total += 1
        ln = len(t)
        counts[ln % r] += 1
        if ln % r == residue_of_interest:
            for v in t:
                vertex_inc[v] += 1
            for i in range(ln):
                edge_inc[Edge(t[i], t[(i + 1) % ln])] += 1
        if stored is not None:
            if total > cap:
                stored = None
            else:
                stored.append(CycleSeq(t))
    return CycleCensus(
        r=r,
        residue=residue_of_interest,
        counts=tuple(counts),
        total=total,
        vertex_incidence=tuple(vertex_inc),
        edge_incidence=edge_inc,
        cycles=None if stored is None else tuple(stored),
    )


def check_chen_saito(g: Graph) -> CycleSeq | None:
    """Witness a cycle of length 0 mod 3 under the Chen-Saito hypothesis.

    Hypothesis: n >= 2 and at most one vertex of degree 2 or less.  A None
    return means no such cycle exists, which would falsify the published
    sufficient condition; callers must treat it as a loud failure, never
    a routine branch.
    """
    if g.n < 2:
        raise ContractViolation("hypothesis needs n >= 2")
    low = sum(1 for d in g.degrees() if d <= 2)
    if low > 1:
        raise ContractViolation(f"hypothesis needs at most one vertex of degree <= 2, found {low}")
    for t in _iter_cycle_tuples(g, None):
        if len(t) % 3 == 0:
            return CycleSeq(t)
    return None


def _all_paths(g: Graph, x: int, y: int) -> Iterator[tuple[int, ...]]:
    """All simple x..y paths, in lexicographic vertex-sequence order."""
    adj = g.adj
    path = [x]
    visited = 1 << x

    def walk(u: int) -> Iterator[tuple[int, ...]]:
        nonlocal visited
        for w in iter_bits(adj[u] & ~visited):
            if w == y:
                yield tuple(path) + (y,)
                continue
            path.append(w)
            visited |= 1 << w
            yield from walk(w)
            path.pop()
            visited &= ~(1 << w)

    yield from walk(x)


def find_admissible_paths(g: Graph, x: int, y: int, ell: int) -> list[tuple[int, ...]] | None:
    """Find ell x,y-paths with lengths >= 2 in arithmetic progression.

    The common difference must be 1 or 2.  The search exhausts all simple
    x,y-paths, groups them by length, and picks the progression with the
    smallest length tuple; within each length the lexicographically least
    path wins.  Returns None iff no qualifying family exists.
    """
    if x == y:
        raise ContractViolation("endpoints must differ")
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise ContractViolation("endpoint out of range")
    if ell < 1:
        raise ContractViolation("ell must be positive")
    by_len: dict[int, tuple[int, ...]] = {}
    for p in _all_paths(g, x, y):
        length = len(p) - 1
        if length >= 2 and length not in by_len:
            by_len[length] = p  # first hit is lexicographically least
    lengths = sorted(by_len)
    if ell == 1:
        return [by_len[lengths[0]]] if lengths else None
    best: tuple[int, ...] | None = None
    available = set(lengths)
    for a in lengths:
        for d in (1, 2):
            terms = tuple(a + j * d for j in range(ell))
            if all(t in available for t in terms):
                if best is None or terms < best:
                    best = terms
    if best is None:
        return None
    return [by_len[t] for t in best]
