"""Exact graph canonicalization by partition refinement with backtracking.

The certificate of a graph is the graph6 encoding of its lexicographically
least adjacency relabeling, minimized over all vertex orderings consistent
with iterated equitable refinement.  Two graphs get equal certificates iff
they are isomorphic; no hashing is involved, so equality-case checks can
rely on it with certainty.  Intended scale is n <= 12, where the search
tree stays tiny for everything except complete and empty graphs, which are
short-circuited.
"""

from __future__ import annotations

from .graphs import Graph, iter_bits, write_graph6


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition.

    Cells are repeatedly split by the vector of neighbor counts into every
    current cell, subcells ordered by that signature.  The result depends
    only on the isomorphism type and the cell order, never on vertex ids.
    """
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        masks = [sum(1 << v for v in c) for c in cells]
        new_cells: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            keyed: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                key = tuple((adj[v] & m).bit_count() for m in masks)
                keyed.setdefault(key, []).append(v)
            if len(keyed) > 1:
                changed = True
            for key in sorted(keyed):
                new_cells.append(keyed[key])
        cells = new_cells
    return cells


def _encode(adj: tuple[int, ...], order: list[int]) -> int:
    """Pack the relabeled upper triangle, graph6 bit order, into an int."""
    code = 0
    for j in range(1, len(order)):
        col = adj[order[j]]
        for i in range(j):
            code = (code << 1) | ((col >> order[i]) & 1)
    return code


def _canonical_order(g: Graph) -> list[int]:
    adj = g.adj
    n = g.n
    best: list[int | None] = [None, None]  # [code, order]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _encode(adj, order)
            if best[0] is None or code < best[0]:
                best[0] = code
                best[1] = order
            return
        cell = cells[target]
        for v in cell:
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search([list(range(n))])
    return best[1]  # type: ignore[return-value]


def canonical_form(g: Graph) -> bytes:
    """Return an exact isomorphism certificate (a graph6 record as bytes)."""
    m = g.m
    if g.n <= 1 or m == 0 or m == g.n * (g.n - 1) // 2:
        # every labeling of an empty or complete graph encodes identically
        return write_graph6(g).encode("ascii")
    order = _canonical_order(g)
    perm = [0] * g.n
    for new, old in enumerate(order):
        perm[old] = new
    return write_graph6(g.relabel(perm)).encode("ascii")


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
