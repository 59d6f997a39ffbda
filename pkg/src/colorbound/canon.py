"""Canonical labeling and isomorph-free enumeration of small graphs.

Canonical forms come from equitable-partition refinement with
individualization backtracking.  When the refined partition becomes
homogeneous (every cell induces an empty or complete subgraph and every
cell pair is fully joined or fully separated) any cell-respecting order
yields the same adjacency string, so the search emits a single leaf
instead of branching -- this is what keeps empty graphs, complete
multipartite graphs and matchings from exploding factorially.
"""

from __future__ import annotations

from typing import Iterator

from .graph import Graph, GraphError, bits, build, from_graph6, to_graph6

CANON_MAX_VERTICES = 16
ENUM_MAX_VERTICES = 11

# isomorphism class counts of triangle-free graphs, n = 1..11 (cross-checked
# against brute force at small n by the test suite)
TRIANGLE_FREE_CLASS_COUNTS = {
    1: 1, 2: 2, 3: 3, 4: 7, 5: 14, 6: 38, 7: 107, 8: 410, 9: 1897, 10: 12172, 11: 105071,
}


def _refine(rows: tuple[int, ...], cells: list[int]) -> list[int]:
    """Equitable refinement: split cells by neighbor counts into every cell,
    keeping a deterministic isomorphism-invariant cell order."""
    while True:
        sig = {}
        for u_cell_index, cell in enumerate(cells):
            for u in bits(cell):
                sig[u] = (u_cell_index, tuple((rows[u] & other).bit_count() for other in cells))
        new_cells: list[int] = []
        changed = False
        for cell in cells:
            groups: dict[tuple, int] = {}
            for u in bits(cell):
                groups.setdefault(sig[u], 0)
                groups[sig[u]] |= 1 << u
            if len(groups) > 1:
                changed = True
            for key in sorted(groups):
                new_cells.append(groups[key])
        cells = new_cells
        if not changed:
            return cells


def _is_homogeneous(rows: tuple[int, ...], cells: list[int]) -> bool:
    for i, a in enumerate(cells):
        first = (a & -a).bit_length() - 1
        inside = rows[first] & a
        if inside != 0 and inside != a & ~(1 << first):
            return False
        # equitable => every member sees the same counts; check extremes only
        for b in cells[i + 1 :]:
            cross = rows[first] & b
            if cross != 0 and cross != b:
                return False
    return True


def _leaf_key(rows: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    out = []
    for j in range(1, len(order)):
        col = 0
        rj = rows[order[j]]
        for i in range(j):
            col = col << 1 | (rj >> order[i] & 1)
        out.append(col)
    return tuple(out)


def _canon_search(rows: tuple[int, ...], cells: list[int], best: list) -> None:
    cells = _refine(rows, cells)
    if _is_homogeneous(rows, cells):
        order = [v for cell in cells for v in bits(cell)]
        key = _leaf_key(rows, order)
        if best[0] is None or key < best[0]:
            best[0] = key
        return
    # first smallest non-singleton cell
    target = min(
        (i for i, c in enumerate(cells) if c.bit_count() > 1),
        key=lambda i: (cells[i].bit_count(), i),
    )
    cell = cells[target]
    for v in bits(cell):
        split = cells[:target] + [1 << v, cell & ~(1 << v)] + cells[target + 1 :]
        _canon_search(rows, split, best)


def canonical_form(g: Graph) -> str:
    """Isomorphism-invariant graph6 representative: equal forms iff isomorphic."""
    if g.n > CANON_MAX_VERTICES:
        raise GraphError(f"canonical labeling supports at most {CANON_MAX_VERTICES} vertices")
    if g.n == 0:
        return to_graph6(g)
    best: list = [None]
    _canon_search(g.rows, [(1 << g.n) - 1], best)
    key = best[0]
    edges = []
    for j, col in enumerate(key, start=1):
        for i in range(j):
            if col >> (j - 1 - i) & 1:
                edges.append((i, j))
    return to_graph6(build(g.n, edges))


def canonical_graph(g: Graph) -> Graph:
    return from_graph6(canonical_form(g))


def _independent_sets(rows: tuple[int, ...], n: int) -> Iterator[int]:
    for mask in range(1 << n):
        ok = True
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            if rows[v] & mask:
                ok = False
                break
            m ^= low
        if ok:
            yield mask


def enumerate_triangle_free(n: int) -> Iterator[Graph]:
    """All triangle-free graphs on n vertices, one per isomorphism class.

    Vertex extension: a new vertex may be joined to any independent set of
    the parent (joining to an edge would close a triangle), so every
    triangle-free graph on m+1 vertices arises from one on m vertices.
    Deduplication uses a per-level hash set of canonical forms; output is
    sorted by canonical form for determinism.
    """
    if not (1 <= n <= ENUM_MAX_VERTICES):
        raise GraphError(f"enumeration supports 1..{ENUM_MAX_VERTICES} vertices")
    level = [to_graph6(build(1, []))]
    for m in range(1, n):
        seen: set[str] = set()
        for g6 in level:
            parent = from_graph6(g6)
            for mask in _independent_sets(parent.rows, m):
                child_rows = list(parent.rows) + [mask]
                for v in bits(mask):
                    child_rows[v] |= 1 << m
                child = Graph(m + 1, tuple(child_rows))
                seen.add(canonical_form(child))
        level = sorted(seen)
    for g6 in level:
        yield from_graph6(g6)


def corpus_3k1_free(n: int, min_delta: int = 0) -> Iterator[tuple[str, Graph]]:
    """Complements of the triangle-free classes on n vertices with maximum
    degree at least min_delta, as (canonical graph6 id, graph) pairs."""
    out = []
    for tf in enumerate_triangle_free(n):
        g = tf.complement()
        if g.n >= 1 and max(row.bit_count() for row in g.rows) >= min_delta:
            out.append((canonical_form(g), g))
    out.sort(key=lambda pair: pair[0])
    yield from out
