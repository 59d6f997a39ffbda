"""Exact structural invariants: maximum degree, triangles, 3K1-freeness,
maximum clique, and the closed-neighborhood clique check for 3K1-free graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import Graph, GraphError, bits


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("maximum degree undefined for the empty graph")
    return max(row.bit_count() for row in g.rows)


def find_triangle(g: Graph) -> Optional[tuple[int, int, int]]:
    """Lexicographically least triangle, or None."""
    for u in range(g.n):
        ru = g.rows[u]
        for v in bits(ru & ~((1 << (u + 1)) - 1)):
            common = ru & g.rows[v] & ~((1 << (v + 1)) - 1)
            if common:
                w = (common & -common).bit_length() - 1
                return (u, v, w)
    return None


def is_3k1_free(g: Graph) -> bool:
    """No independent set of three vertices, i.e. complement is triangle-free."""
    return find_triangle(g.complement()) is None


def degeneracy_order(g: Graph) -> list[int]:
    """Repeatedly remove a minimum-degree vertex (ties: least index)."""
    alive = (1 << g.n) - 1
    order = []
    for _ in range(g.n):
        best = -1
        best_deg = g.n + 1
        for u in bits(alive):
            d = (g.rows[u] & alive).bit_count()
            if d < best_deg:
                best = u
                best_deg = d
        order.append(best)
        alive &= ~(1 << best)
    return order


@dataclass(frozen=True)
class CliqueWitness:
    members: frozenset[int]
    omega: int


def _color_bound_order(rows: tuple[int, ...], cand: int) -> tuple[list[int], list[int]]:
    """Greedy color classes of the candidate set; returns vertices in class
    order together with the class number of each (an upper bound on the
    clique extendable through that vertex)."""
    order: list[int] = []
    bound: list[int] = []
    c = 0
    rest = cand
    while rest:
        c += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            bit = 1 << v
            order.append(v)
            bound.append(c)
            avail &= ~rows[v] & ~bit
            rest &= ~bit
    return order, bound


def _clique_size_search(rows: tuple[int, ...], cand: int, size: int, best: list[int]) -> None:
    order, bound = _color_bound_order(rows, cand)
    for i in range(len(order) - 1, -1, -1):
        if size + bound[i] <= best[0]:
            return
        v = order[i]
        if size + 1 > best[0]:
            best[0] = size + 1
        nxt = cand & rows[v]
        if nxt:
            _clique_size_search(rows, nxt, size + 1, best)
        cand &= ~(1 << v)


def _exists_clique(rows: tuple[int, ...], cand: int, want: int) -> bool:
    if want <= 0:
        return True
    if cand.bit_count() < want:
        return False
    order, bound = _color_bound_order(rows, cand)
    if bound[-1] < want:
        return False
    for i in range(len(order) - 1, -1, -1):
        if bound[i] < want:
            return False
        v = order[i]
        if _exists_clique(rows, cand & rows[v], want - 1):
            return True
        cand &= ~(1 << v)
    return False


def max_clique(g: Graph) -> CliqueWitness:
    """Exact maximum clique; witness is the lexicographically least one.

    Branch and bound with a greedy-coloring upper bound; the initial lower
    bound comes from a greedy clique along the reversed degeneracy order.
    """
    if g.n == 0:
        raise GraphError("maximum clique undefined for the empty graph")
    rows = g.rows
    seed = 0
    for u in reversed(degeneracy_order(g)):
        if seed & ~rows[u] == 0:
            seed |= 1 << u
    best = [seed.bit_count()]
    _clique_size_search(rows, (1 << g.n) - 1, 0, best)
    omega = best[0]
    # second pass: lexicographically least witness of the proven size
    members: list[int] = []
    cand = (1 << g.n) - 1
    need = omega
    while need:
        for v in bits(cand):
            if _exists_clique(rows, cand & rows[v], need - 1):
                members.append(v)
                cand &= rows[v]
                need -= 1
                break
    return CliqueWitness(frozenset(members), omega)


def check_statement_I(g: Graph, u: int) -> bool:
    """For 3K1-free g: vertices outside N[u] induce a clique no larger than omega."""
    if not is_3k1_free(g):
        raise GraphError("closed-neighborhood clique check requires a 3K1-free graph")
    g.check_vertex(u)
    outside = sorted(set(range(g.n)) - g.closed_neighborhood(u))
    for i, a in enumerate(outside):
        for b in outside[i + 1 :]:
            if not g.has_edge(a, b):
                return False
    return max_clique(g).omega >= len(outside)


def max_degree_vertex_in_clique(g: Graph, clique: Iterable[int]) -> int:
    members = sorted(set(clique))
    if not members:
        raise GraphError("clique is empty")
    for v in members:
        g.check_vertex(v)
    return max(members, key=lambda v: (g.degree(v), -v))
