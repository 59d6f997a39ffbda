"""Proper colorings, the DSATUR heuristic, and an exact chromatic-number solver."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, GraphError, bits
from .invariants import max_clique

UNCOLORED = 0


class ColoringError(ValueError):
    """Invalid coloring for the requested operation."""


@dataclass(frozen=True)
class Coloring:
    """Vertex -> color map over palette {1..k}; 0 marks an uncolored vertex."""

    colors: tuple[int, ...]
    k: int

    def color_of(self, v: int) -> int:
        return self.colors[v]

    def colors_used(self) -> int:
        return len({c for c in self.colors if c != UNCOLORED})

    def uncolored(self) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.colors) if c == UNCOLORED)

    def with_color(self, v: int, color: int) -> "Coloring":
        cs = list(self.colors)
        cs[v] = color
        return Coloring(tuple(cs), self.k)


def _check_shape(g: Graph, coloring: Coloring) -> None:
    if len(coloring.colors) != g.n:
        raise ColoringError(f"coloring covers {len(coloring.colors)} vertices, graph has {g.n}")
    for v, c in enumerate(coloring.colors):
        if c != UNCOLORED and not (1 <= c <= coloring.k):
            raise ColoringError(f"vertex {v} has color {c} outside palette 1..{coloring.k}")


def is_proper(g: Graph, coloring: Coloring) -> bool:
    _check_shape(g, coloring)
    if UNCOLORED in coloring.colors:
        raise ColoringError("coloring is partial; every vertex must be colored")
    return _proper_on_colored(g, coloring)


def _proper_on_colored(g: Graph, coloring: Coloring) -> bool:
    """No monochromatic edge among colored vertices (uncolored ignored)."""
    cs = coloring.colors
    for u in range(g.n):
        cu = cs[u]
        if cu == UNCOLORED:
            continue
        for v in bits(g.rows[u] & ((1 << u) - 1)):
            if cs[v] == cu:
                return False
    return True


def greedy_dsatur(g: Graph) -> Coloring:
    """DSATUR: highest saturation, then highest degree, then least index;
    each vertex gets the least color not on its neighborhood."""
    if g.n == 0:
        raise GraphError("cannot color the empty graph")
    colors = [UNCOLORED] * g.n
    neighbor_colors: list[set[int]] = [set() for _ in range(g.n)]
    degrees = [g.degree(v) for v in range(g.n)]
    for _ in range(g.n):
        v = max(
            (u for u in range(g.n) if colors[u] == UNCOLORED),
            key=lambda u: (len(neighbor_colors[u]), degrees[u], -u),
        )
        c = 1
        while c in neighbor_colors[v]:
            c += 1
        colors[v] = c
        for w in bits(g.rows[v]):
            neighbor_colors[w].add(c)
    return Coloring(tuple(colors), max(colors))


def k_colorable(g: Graph, k: int) -> Optional[Coloring]:
    """Witness proper coloring with at most k colors, or None (exact).

    Branch and bound in saturation order; symmetry broken by precoloring a
    maximum clique with colors 1..|Q| and by capping fresh colors at
    used+1.
    """
    if k < 1:
        raise ColoringError("palette size must be at least 1")
    if g.n == 0:
        return Coloring((), k)
    if k >= g.n:
        return Coloring(tuple(range(1, g.n + 1)), k)
    clique = sorted(max_clique(g).members)
    if len(clique) > k:
        return None
    colors = [UNCOLORED] * g.n
    for i, v in enumerate(clique):
        colors[v] = i + 1
    neighbor_colors: list[set[int]] = [set() for _ in range(g.n)]
    for v in range(g.n):
        if colors[v] != UNCOLORED:
            for w in bits(g.rows[v]):
                neighbor_colors[w].add(colors[v])
    degrees = [g.degree(v) for v in range(g.n)]
    uncolored = [v for v in range(g.n) if colors[v] == UNCOLORED]

    def solve(used: int) -> bool:
        if not uncolored:
            return True
        v = max(uncolored, key=lambda u: (len(neighbor_colors[u]), degrees[u], -u))
        uncolored.remove(v)
        for c in range(1, min(k, used + 1) + 1):
            if c in neighbor_colors[v]:
                continue
            colors[v] = c
            touched = [w for w in bits(g.rows[v]) if c not in neighbor_colors[w]]
            for w in touched:
                neighbor_colors[w].add(c)
            if solve(max(used, c)):
                return True
            for w in touched:
                neighbor_colors[w].discard(c)
            colors[v] = UNCOLORED
        uncolored.append(v)
        return False

    if solve(len(clique)):
        return Coloring(tuple(colors), k)
    return None


def chromatic_number(g: Graph) -> tuple[int, Coloring]:
    """Exact chromatic number with a witness using exactly that many colors."""
    if g.n == 0:
        raise GraphError("chromatic number undefined for the empty graph")
    lower = max_clique(g).omega
    heur = greedy_dsatur(g)
    upper = heur.k
    if upper == lower:
        return lower, heur
    for k in range(lower, upper):
        witness = k_colorable(g, k)
        if witness is not None:
            return k, witness
    return upper, heur
