"""Kempe-chain recoloring moves and the coloring-extension engine for
3K1-free graphs.

The engine reinserts a removed vertex into a properly colored remainder by
trying, in order: a free color, the unique-color swap rule, targeted
two-color component swaps around the vertex, a bounded deterministic search
over move sequences, and finally the exact k-colorability oracle.  Every
intermediate coloring stays proper.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .chromatic import Coloring, ColoringError, UNCOLORED, _proper_on_colored, k_colorable
from .graph import Graph, GraphError, bits
from .invariants import degeneracy_order, is_3k1_free, max_clique, max_degree

RECOLOR_FREE = "recolor_free"
KEMPE_SWAP = "kempe_swap"

EXTENDED_BY_RULE = "extended_by_rule"
EXTENDED_BY_SEARCH = "extended_by_search"
FALLBACK_EXACT = "fallback_exact"
FAILED = "failed"


class StaleComponentError(ValueError):
    """The component no longer matches the coloring it is applied to."""


@dataclass(frozen=True)
class KempeComponent:
    members: frozenset[int]
    color_pair: frozenset[int]


@dataclass(frozen=True)
class Move:
    kind: str
    vertex: Optional[int] = None
    color: Optional[int] = None
    component: Optional[KempeComponent] = None


@dataclass(frozen=True)
class SearchConfig:
    depth: int = 4
    branch_cap: int = 16
    node_cap: int = 5000  # keeps exhausted searches cheap before the exact fallback


@dataclass(frozen=True)
class ExtensionOutcome:
    result: str
    moves: tuple[Move, ...]
    final: Coloring


@dataclass
class EngineTelemetry:
    rule_count: int = 0
    search_count: int = 0
    fallback_count: int = 0
    failed: bool = False
    bound_applies: bool = False
    palette: int = 0

    def record(self, result: str) -> None:
        if result == EXTENDED_BY_RULE:
            self.rule_count += 1
        elif result == EXTENDED_BY_SEARCH:
            self.search_count += 1
        elif result == FALLBACK_EXACT:
            self.fallback_count += 1


def free_colors(g: Graph, coloring: Coloring, v: int, k: int) -> set[int]:
    """Colors of 1..k absent from the neighborhood of v (uncolored ignored)."""
    g.check_vertex(v)
    used = {coloring.colors[w] for w in bits(g.rows[v])}
    return {c for c in range(1, k + 1) if c not in used}


def kempe_component(g: Graph, coloring: Coloring, v: int, i: int, j: int) -> KempeComponent:
    g.check_vertex(v)
    if i == j:
        raise ColoringError("component colors must differ")
    if coloring.colors[v] not in (i, j):
        raise ColoringError(f"vertex {v} is not colored {i} or {j}")
    cs = coloring.colors
    seen = {v}
    stack = [v]
    while stack:
        u = stack.pop()
        for w in bits(g.rows[u]):
            if w not in seen and cs[w] in (i, j):
                seen.add(w)
                stack.append(w)
    return KempeComponent(frozenset(seen), frozenset((i, j)))


def kempe_swap(g: Graph, coloring: Coloring, comp: KempeComponent) -> Coloring:
    """Exchange the two colors on the component; properness is preserved
    because the component is maximal (checked; stale components are rejected)."""
    i, j = sorted(comp.color_pair)
    anchor = min(comp.members)
    if kempe_component(g, coloring, anchor, i, j).members != comp.members:
        raise StaleComponentError("component is not maximal for this coloring")
    cs = list(coloring.colors)
    for v in comp.members:
        cs[v] = j if cs[v] == i else i
    return Coloring(tuple(cs), coloring.k)


def ij_path_between(
    g: Graph, coloring: Coloring, a: int, b: int, i: int, j: int
) -> Optional[list[int]]:
    """Path from a to b alternating colors i and j, or None if they sit in
    different two-color components."""
    for v in (a, b):
        if coloring.colors[v] not in (i, j):
            raise ColoringError(f"vertex {v} is not colored {i} or {j}")
    cs = coloring.colors
    parent = {a: -1}
    queue = [a]
    while queue:
        nxt = []
        for u in queue:
            for w in bits(g.rows[u]):
                if w not in parent and cs[w] in (i, j):
                    parent[w] = u
                    nxt.append(w)
        queue = nxt
    if b not in parent:
        return None
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def rule_unique_color_swap(g: Graph, coloring: Coloring, u: int, k: int) -> Optional[list[Move]]:
    """If a neighbor v of u holds a color unique in N(u) and some other
    color is free at v, recolor v and give u the vacated color."""
    g.check_vertex(u)
    counts: dict[int, int] = {}
    for w in bits(g.rows[u]):
        c = coloring.colors[w]
        if c != UNCOLORED:
            counts[c] = counts.get(c, 0) + 1
    for v in sorted(bits(g.rows[u])):
        i = coloring.colors[v]
        if i == UNCOLORED or counts[i] != 1:
            continue
        other = sorted(free_colors(g, coloring, v, k) - {i})
        if other:
            return [Move(RECOLOR_FREE, vertex=v, color=other[0]), Move(RECOLOR_FREE, vertex=u, color=i)]
    return None


def apply_move(g: Graph, coloring: Coloring, move: Move) -> Coloring:
    if move.kind == RECOLOR_FREE:
        assert move.vertex is not None and move.color is not None
        if move.color not in free_colors(g, coloring, move.vertex, coloring.k):
            raise ColoringError(f"color {move.color} is not free at vertex {move.vertex}")
        return coloring.with_color(move.vertex, move.color)
    if move.kind == KEMPE_SWAP:
        assert move.component is not None
        return kempe_swap(g, coloring, move.component)
    raise ColoringError(f"unknown move kind {move.kind!r}")


def _search_moves(g: Graph, coloring: Coloring, u: int, k: int, cap: int) -> list[Move]:
    """Candidate moves in deterministic order: free recolorings first, then
    component swaps (least vertex, least color); capped."""
    out: list[Move] = []
    for v in range(g.n):
        if v == u or coloring.colors[v] == UNCOLORED:
            continue
        for c in sorted(free_colors(g, coloring, v, k) - {coloring.colors[v]}):
            out.append(Move(RECOLOR_FREE, vertex=v, color=c))
            if len(out) >= cap:
                return out
    seen_components: set[tuple[frozenset[int], frozenset[int]]] = set()
    for v in range(g.n):
        if v == u or coloring.colors[v] == UNCOLORED:
            continue
        i = coloring.colors[v]
        for j in range(1, k + 1):
            if j == i:
                continue
            comp = kempe_component(g, coloring, v, i, j)
            if len(comp.members) <= 1:
                continue  # singleton swap duplicates a free recoloring
            key = (comp.members, comp.color_pair)
            if key in seen_components:
                continue
            seen_components.add(key)
            out.append(Move(KEMPE_SWAP, component=comp))
            if len(out) >= cap:
                return out
    return out


def extend_coloring(
    g: Graph, u: int, coloring: Coloring, k: int, config: SearchConfig = SearchConfig()
) -> ExtensionOutcome:
    """Extend a proper coloring of g minus u (u uncolored) to all of g with
    at most k colors.  See the module docstring for the escalation ladder."""
    g.check_vertex(u)
    if k < 1:
        raise ColoringError("palette size must be at least 1")
    if coloring.colors[u] != UNCOLORED:
        raise ColoringError(f"vertex {u} must be uncolored")
    for v in range(g.n):
        if v != u and coloring.colors[v] == UNCOLORED:
            raise ColoringError(f"vertex {v} must be colored before extension")
    if not _proper_on_colored(g, coloring):
        raise ColoringError("coloring of the remainder is not proper")

    # 1: u already has a free color
    free = free_colors(g, coloring, u, k)
    if free:
        move = Move(RECOLOR_FREE, vertex=u, color=min(free))
        return ExtensionOutcome(EXTENDED_BY_RULE, (move,), apply_move(g, coloring, move))

    # 2: unique-color swap rule
    moves = rule_unique_color_swap(g, coloring, u, k)
    if moves is not None:
        cur = coloring
        for m in moves:
            cur = apply_move(g, cur, m)
        return ExtensionOutcome(EXTENDED_BY_RULE, tuple(moves), cur)

    # 3: targeted component swaps around uniquely colored neighbors of u
    counts: dict[int, int] = {}
    for w in bits(g.rows[u]):
        counts[coloring.colors[w]] = counts.get(coloring.colors[w], 0) + 1
    for v in sorted(bits(g.rows[u])):
        i = coloring.colors[v]
        if counts[i] != 1:
            continue
        for j in range(1, k + 1):
            if j == i:
                continue
            comp = kempe_component(g, coloring, v, i, j)
            swapped = kempe_swap(g, coloring, comp)
            free = free_colors(g, swapped, u, k)
            if free:
                tail = Move(RECOLOR_FREE, vertex=u, color=min(free))
                final = apply_move(g, swapped, tail)
                return ExtensionOutcome(
                    EXTENDED_BY_RULE, (Move(KEMPE_SWAP, component=comp), tail), final
                )

    # 4: bounded deterministic search over move sequences
    visited = {coloring.colors}
    budget = [config.node_cap]

    def dfs(cur: Coloring, depth: int, trail: list[Move]) -> Optional[tuple[list[Move], Coloring]]:
        if depth == 0 or budget[0] <= 0:
            return None
        for move in _search_moves(g, cur, u, k, config.branch_cap):
            if budget[0] <= 0:
                return None
            budget[0] -= 1
            nxt = apply_move(g, cur, move)
            if nxt.colors in visited:
                continue
            visited.add(nxt.colors)
            free = free_colors(g, nxt, u, k)
            if free:
                tail = Move(RECOLOR_FREE, vertex=u, color=min(free))
                return trail + [move, tail], apply_move(g, nxt, tail)
            found = dfs(nxt, depth - 1, trail + [move])
            if found is not None:
                return found
        return None

    found = dfs(coloring, config.depth, [])
    if found is not None:
        moves_out, final = found
        return ExtensionOutcome(EXTENDED_BY_SEARCH, tuple(moves_out), final)

    # 5: exact fallback
    witness = k_colorable(g, k)
    if witness is not None:
        return ExtensionOutcome(FALLBACK_EXACT, (), witness)
    return ExtensionOutcome(FAILED, (), coloring)


def color_3k1_free(
    g: Graph, config: SearchConfig = SearchConfig()
) -> tuple[Coloring, EngineTelemetry]:
    """Color a 3K1-free graph by min-degree vertex removal plus reinsertion
    through the extension engine.

    Targets max(omega, delta-1) colors when delta >= 8; otherwise the
    engine still returns a proper coloring but flags that no strengthened
    bound applies (bound_applies False).  Disconnected inputs are accepted:
    removal and reinsertion never need connectivity.
    """
    if not is_3k1_free(g):
        raise GraphError("extension engine requires a 3K1-free graph")
    if g.n == 0:
        raise GraphError("cannot color the empty graph")
    delta = max_degree(g)
    omega = max_clique(g).omega
    bound_applies = delta >= 8
    start_k = max(omega, delta - 1) if bound_applies else max(omega, delta)
    removal = degeneracy_order(g)  # min-degree removal order
    insertion = list(reversed(removal))

    for k in range(start_k, g.n + 1):
        telemetry = EngineTelemetry(bound_applies=bound_applies, palette=k)
        colors = [UNCOLORED] * g.n
        colors[insertion[0]] = 1
        ok = True
        for step in range(1, g.n):
            u = insertion[step]
            members = insertion[: step + 1]
            sub, mapping = g.induced(members)
            sub_colors = [colors[old] for old in mapping]
            sub_u = mapping.index(u)
            outcome = extend_coloring(
                sub, sub_u, Coloring(tuple(sub_colors), k), k, config
            )
            if outcome.result == FAILED:
                ok = False
                break
            telemetry.record(outcome.result)
            for new, old in enumerate(mapping):
                colors[old] = outcome.final.colors[new]
        if ok:
            return Coloring(tuple(colors), k), telemetry
    raise GraphError("unreachable: a rainbow coloring always succeeds")
