"""Exact proper-coloring search, chromatic number, and criticality tests.

The search is complete DSATUR-ordered backtracking.  Color symmetry is
broken only among colors that no prescription pins: a vertex may reuse any
color already in play but may open at most the single lowest unused free
color.  All tie-breaking is deterministic, so identical inputs give
bit-identical colorings on every run.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ContractViolation
from .graphs import Graph, iter_bits

Prescription = Sequence[tuple[int, int]]


@dataclass(frozen=True)
class Coloring:
    """A total color assignment, colors 1..k."""

    colors: tuple[int, ...]
    k: int

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def with_color(self, v: int, color: int) -> "Coloring":
        if not 1 <= color <= self.k:
            raise ContractViolation(f"color {color} outside 1..{self.k}")
        cols = list(self.colors)
        cols[v] = color
        return Coloring(tuple(cols), self.k)

    def color_class_mask(self, color: int) -> int:
        mask = 0
        for v, c in enumerate(self.colors):
            if c == color:
                mask |= 1 << v
        return mask


def is_proper(g: Graph, c: Coloring) -> bool:
    """True iff no edge of g is monochromatic under c."""
    if len(c.colors) != g.n:
        raise ContractViolation(f"coloring length {len(c.colors)} != n={g.n}")
    for u, row in enumerate(g.adj):
        cu = c.colors[u]
        for v in iter_bits(row >> (u + 1)):
            if c.colors[u + 1 + v] == cu:
                return False
    return True


def find_coloring(g: Graph, k: int, prescription: Prescription = ()) -> Coloring | None:
    """Complete search for a proper k-coloring honoring the prescription.

    Returns None iff no such coloring exists.  An internally inconsistent
    prescription (a prescribed monochromatic edge) also yields None, which
    is a legitimate "no coloring" answer rather than a contract breach.
    """
    if k < 1:
        raise ContractViolation("k must be at least 1")
    n = g.n
    adj = g.adj
    seen_vertices = set()
    for v, c in prescription:
        if not 0 <= v < n:
            raise ContractViolation(f"prescribed vertex {v} out of range")
        if not 1 <= c <= k:
            raise ContractViolation(f"prescribed color {c} outside 1..{k}")
        if v in seen_vertices:
            raise ContractViolation(f"vertex {v} prescribed twice")
        seen_vertices.add(v)
    if n == 0:
        return Coloring((), k)

    color = [0] * n  # 1-based, 0 = unassigned
    nbr_colors = [0] * n  # bitmask, bit (c-1) set if a neighbor has color c
    pinned_mask = 0
    for _, c in prescription:
        pinned_mask |= 1 << (c - 1)
    free_colors = [c for c in range(1, k + 1) if not (pinned_mask >> (c - 1)) & 1]

    for v, c in prescription:
        bit = 1 << (c - 1)
        if nbr_colors[v] & bit:
            return None  # prescribed edge conflict
        color[v] = c
        for w in iter_bits(adj[v]):
            nbr_colors[w] |= bit

    degrees = [row.bit_count() for row in adj]
    uncolored = n - len(seen_vertices)

    def pick() -> int:
        best_v = -1
        best_key = None
        for v in range(n):
            if color[v]:
                continue
            key = (nbr_colors[v].bit_count(), degrees[v], -v)
            if best_key is None or key > best_key:
                best_key = key
                best_v = v
        return best_v

    def extend(used_free: int) -> bool:
        nonlocal uncolored
        if uncolored == 0:
            return True
        v = pick()
        forbid = nbr_colors[v]
        used_free_mask = 0
        for c in free_colors[:used_free]:
            used_free_mask |= 1 << (c - 1)
        candidates = [b + 1 for b in iter_bits((pinned_mask | used_free_mask) & ~forbid)]
        open_new = used_free < len(free_colors)
        if open_new:
            candidates.append(free_colors[used_free])
        for c in candidates:
            bit = 1 << (c - 1)
            color[v] = c
            touched = []
            for w in iter_bits(adj[v]):
                if not nbr_colors[w] & bit:
                    nbr_colors[w] |= bit
                    touched.append(w)
            uncolored -= 1
            bump = 1 if open_new and c == free_colors[used_free] else 0
            if extend(used_free + bump):
                return True
            uncolored += 1
            color[v] = 0
            for w in touched:
                nbr_colors[w] &= ~bit
        return False

    if not extend(0):
        return None
    return Coloring(tuple(color), k)


def is_colorable(g: Graph, k: int) -> bool:
    return find_coloring(g, k) is not None


def _greedy_bound(g: Graph) -> int:
    """DSATUR greedy upper bound on the chromatic number."""
    n = g.n
    if n == 0:
        return 0
    adj = g.adj
    color = [0] * n
    nbr_colors = [0] * n
    degrees = g.degrees()
    used = 0
    for _ in range(n):
        v = max(
            (w for w in range(n) if not color[w]),
            key=lambda w: (nbr_colors[w].bit_count(), degrees[w], -w),
        )
        c = 1
        while (nbr_colors[v] >> (c - 1)) & 1:
            c += 1
        color[v] = c
        used = max(used, c)
        bit = 1 << (c - 1)
        for w in iter_bits(adj[v]):
            nbr_colors[w] |= bit
    return used


def chromatic_number(g: Graph) -> int:
    """Least k admitting a proper k-coloring (exact)."""
    if g.n == 0:
        raise ContractViolation("chromatic number undefined for the empty graph")
    if g.m == 0:
        return 1
    upper = _greedy_bound(g)
    for k in range(2, upper):
        if find_coloring(g, k) is not None:
            return k
    return upper


def is_critical(g: Graph, q: int) -> bool:
    """True iff chi(g) = q and deleting any single edge drops chi to q-1.

    Edge deletions suffice: for graphs without isolated vertices,
    edge-criticality implies vertex-criticality, so an explicit
    isolated-vertex guard is the only extra condition needed.
    """
    if q < 2:
        raise ContractViolation("criticality defined for q >= 2")
    if g.n == 0:
        return False
    if any(row == 0 for row in g.adj):
        return False
    if is_colorable(g, q - 1):
        return False
    if not is_colorable(g, q):
        return False
    for e in g.edges():
        if not is_colorable(g.without_edge(e.u, e.v), q - 1):
            return False
    return True
