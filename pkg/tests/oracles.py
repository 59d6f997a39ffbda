"""Independent brute-force oracles used to freeze expected values.

Everything here enumerates or backtracks directly from definitions and
shares no code path with the solvers under test.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from colorbound.graph import Graph, bits, build


def all_labeled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield build(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def bf_has_independent_triple(g: Graph) -> bool:
    for a, b, c in combinations(range(g.n), 3):
        if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
            return True
    return False


def bf_has_triangle(g: Graph) -> bool:
    for a, b, c in combinations(range(g.n), 3):
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c):
            return True
    return False


def bf_max_clique_size(g: Graph) -> int:
    best = 0
    for size in range(g.n, 0, -1):
        for members in combinations(range(g.n), size):
            if all(g.has_edge(a, b) for a, b in combinations(members, 2)):
                return size
    return best


def bf_k_colorable(g: Graph, k: int) -> bool:
    """Plain backtracking over vertex 0..n-1 with first-use color canon."""

    colors = [0] * g.n

    def place(v: int, used: int) -> bool:
        if v == g.n:
            return True
        for c in range(1, min(k, used + 1) + 1):
            if all(colors[w] != c for w in bits(g.rows[v])):
                colors[v] = c
                if place(v + 1, max(used, c)):
                    return True
                colors[v] = 0
        return False

    return place(0, 0)


def bf_chromatic(g: Graph) -> int:
    for k in range(1, g.n + 1):
        if bf_k_colorable(g, k):
            return k
    raise AssertionError("rainbow coloring always works")


def perm_min_canonical(g: Graph) -> tuple:
    """Canonical key by full permutation minimization (n <= 7 only)."""
    best = None
    for perm in permutations(range(g.n)):
        key = tuple(
            1 if g.has_edge(perm[i], perm[j]) else 0
            for j in range(1, g.n)
            for i in range(j)
        )
        if best is None or key < best:
            best = key
    return best


def count_triangle_free_classes(n: int) -> int:
    """Isomorphism classes of triangle-free graphs on n labeled vertices,
    counted by orbit marking over all edge masks."""
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    pair_index = {p: i for i, p in enumerate(pairs)}
    perm_maps = []
    for perm in permutations(range(n)):
        perm_maps.append(
            tuple(pair_index[tuple(sorted((perm[a], perm[b])))] for a, b in pairs)
        )
    tri_masks = []
    for a, b, c in combinations(range(n), 3):
        tri_masks.append(
            1 << pair_index[(a, b)] | 1 << pair_index[(a, c)] | 1 << pair_index[(b, c)]
        )
    seen = bytearray(1 << m)
    count = 0
    for mask in range(1 << m):
        if seen[mask]:
            continue
        if any(mask & t == t for t in tri_masks):
            continue
        count += 1
        for pm in perm_maps:
            img = 0
            rest = mask
            while rest:
                low = rest & -rest
                img |= 1 << pm[low.bit_length() - 1]
                rest ^= low
            seen[img] = 1
    return count


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return build(n, edges)


def random_connected_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    while True:
        g = random_graph(rng, n, p)
        if g.is_connected():
            return g


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return build(10, outer + inner + spokes)


def cycle(n: int) -> Graph:
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build(n, list(combinations(range(n), 2)))
