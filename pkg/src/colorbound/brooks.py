"""Constructive max-degree coloring for connected graphs that are neither
complete nor odd cycles."""

from __future__ import annotations

from .chromatic import Coloring, UNCOLORED
from .graph import Graph, GraphError, bits
from .invariants import max_degree

COMPLETE = "complete"
ODD_CYCLE = "odd_cycle"
NONE = "none"


class BrooksExceptionError(ValueError):
    """Raised for complete graphs and odd cycles, which need delta+1 colors."""


def classify_brooks_exception(g: Graph) -> str:
    if not g.is_connected():
        raise GraphError("classification requires a connected graph")
    if g.edge_count() == g.n * (g.n - 1) // 2:
        return COMPLETE
    if g.n >= 3 and g.n % 2 == 1 and all(row.bit_count() == 2 for row in g.rows):
        return ODD_CYCLE  # connected and 2-regular => a single cycle
    return NONE


def _bfs_distances(rows: tuple[int, ...], n: int, root: int, alive: int) -> list[int]:
    dist = [-1] * n
    dist[root] = 0
    frontier = [root]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for w in bits(rows[u] & alive):
                if dist[w] == -1:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def _greedy_toward(g: Graph, root: int, colors: list[int], alive: int) -> None:
    """Greedy-color the alive vertices, farthest from root first, root last.
    Every non-root vertex still has an uncolored neighbor (its BFS parent)
    when its turn comes, so it sees at most deg-1 colors."""
    dist = _bfs_distances(g.rows, g.n, root, alive)
    order = sorted(
        (v for v in bits(alive) if colors[v] == UNCOLORED),
        key=lambda v: (-dist[v], v),
    )
    for v in order:
        used = {colors[w] for w in bits(g.rows[v]) if colors[w] != UNCOLORED}
        c = 1
        while c in used:
            c += 1
        colors[v] = c


def _find_cut_vertex(g: Graph) -> int | None:
    full = (1 << g.n) - 1
    for v in range(g.n):
        alive = full & ~(1 << v)
        if not _mask_connected(g.rows, alive):
            return v
    return None


def _mask_connected(rows: tuple[int, ...], alive: int) -> bool:
    if alive == 0:
        return True
    start = (alive & -alive).bit_length() - 1
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= rows[u]
        frontier = nxt & alive & ~seen
        seen |= frontier
    return seen == alive


def _permute_palette(colors: list[int], members: list[int], want: int, have: int) -> None:
    if want == have:
        return
    for v in members:
        if colors[v] == have:
            colors[v] = want
        elif colors[v] == want:
            colors[v] = have


def brooks_color(g: Graph) -> Coloring:
    """Proper coloring with at most max-degree colors."""
    kind = classify_brooks_exception(g)
    if kind != NONE:
        raise BrooksExceptionError(
            f"{kind} graph needs delta+1 colors; use a rainbow or cycle coloring instead"
        )
    delta = max_degree(g)
    full = (1 << g.n) - 1
    colors = [UNCOLORED] * g.n

    if delta <= 2:
        # connected, not complete, not an odd cycle: a path or an even cycle
        dist = _bfs_distances(g.rows, g.n, 0, full)
        for v in range(g.n):
            colors[v] = 1 + dist[v] % 2
        return Coloring(tuple(colors), 2)

    low = next((v for v in range(g.n) if g.degree(v) < delta), None)
    if low is not None:
        _greedy_toward(g, low, colors, full)
        return Coloring(tuple(colors), max(colors))

    cut = _find_cut_vertex(g)
    if cut is not None:
        # color each block-side piece (where the cut vertex has degree < delta)
        # and permute palettes so the cut vertex agrees across pieces
        remaining = full & ~(1 << cut)
        cut_color = UNCOLORED
        while remaining:
            start = (remaining & -remaining).bit_length() - 1
            seen = 1 << start
            frontier = seen
            while frontier:
                nxt = 0
                for u in bits(frontier):
                    nxt |= g.rows[u]
                frontier = nxt & remaining & ~seen
                seen |= frontier
            piece = seen | (1 << cut)
            piece_colors = [UNCOLORED] * g.n
            _greedy_toward(g, cut, piece_colors, piece)
            members = list(bits(piece))
            if cut_color == UNCOLORED:
                cut_color = piece_colors[cut]
            else:
                _permute_palette(piece_colors, members, cut_color, piece_colors[cut])
            for v in members:
                colors[v] = piece_colors[v]
            remaining &= ~seen
        return Coloring(tuple(colors), max(colors))

    # delta-regular and 2-connected: find v with non-adjacent neighbors a, b
    # whose joint removal keeps the graph connected
    for v in range(g.n):
        nbrs = sorted(bits(g.rows[v]))
        for ia, a in enumerate(nbrs):
            for b in nbrs[ia + 1 :]:
                if g.has_edge(a, b):
                    continue
                alive = full & ~(1 << a) & ~(1 << b)
                if not _mask_connected(g.rows, alive):
                    continue
                colors[a] = 1
                colors[b] = 1
                _greedy_toward(g, v, colors, alive)
                return Coloring(tuple(colors), max(colors))
    raise GraphError("no valid branching triple found; input violates preconditions")
