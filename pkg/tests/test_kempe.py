import random

import pytest

from colorbound.chromatic import Coloring, ColoringError, greedy_dsatur, is_proper
from colorbound.graph import build
from colorbound.graph import from_graph6
from colorbound.kempe import (
    EXTENDED_BY_RULE,
    EXTENDED_BY_SEARCH,
    FAILED,
    FALLBACK_EXACT,
    KEMPE_SWAP,
    RECOLOR_FREE,
    Move,
    SearchConfig,
    StaleComponentError,
    apply_move,
    color_3k1_free,
    extend_coloring,
    free_colors,
    ij_path_between,
    kempe_component,
    kempe_swap,
    rule_unique_color_swap,
)

from oracles import complete, cycle, random_graph


def c5_coloring():
    return cycle(5), Coloring((1, 2, 1, 2, 3), 3)


def random_proper(rng, n):
    g = random_graph(rng, n)
    base = greedy_dsatur(g)
    k = base.k + rng.randint(0, 2)
    return g, Coloring(base.colors, k)


class TestFreeColors:
    def test_rainbow_triangle_only_own_color(self):
        # colors absent from the open neighborhood; the vertex's own color
        # stays in the set, so no real recoloring move exists here
        assert free_colors(complete(3), Coloring((1, 2, 3), 3), 0, 3) == {1}

    def test_isolated_all_free(self):
        g = build(3, [(1, 2)])
        assert free_colors(g, Coloring((0, 1, 2), 4), 0, 4) == {1, 2, 3, 4}

    def test_c5_direct_read(self):
        g, c = c5_coloring()
        assert free_colors(g, c, 0, 3) == {1}


class TestKempeComponent:
    def test_c5_pair_12(self):
        g, c = c5_coloring()
        comp = kempe_component(g, c, 0, 1, 2)
        assert comp.members == {0, 1, 2, 3}
        assert comp.color_pair == {1, 2}

    def test_singleton(self):
        g = build(3, [(1, 2)])
        c = Coloring((1, 1, 2), 3)
        assert kempe_component(g, c, 0, 1, 3).members == {0}

    def test_walks_only_the_pair(self):
        g, c = c5_coloring()
        assert kempe_component(g, c, 4, 3, 1).members == {0, 4}
        assert kempe_component(g, c, 4, 3, 2).members == {3, 4}

    def test_wrong_color_rejected(self):
        g, c = c5_coloring()
        with pytest.raises(ColoringError):
            kempe_component(g, c, 0, 2, 3)

    def test_swap_then_recompute_same_members(self):
        g, c = c5_coloring()
        comp = kempe_component(g, c, 0, 1, 2)
        swapped = kempe_swap(g, c, comp)
        assert kempe_component(g, swapped, 0, 1, 2).members == comp.members


class TestKempeSwap:
    def test_c5_flips_four(self):
        g, c = c5_coloring()
        comp = kempe_component(g, c, 0, 1, 2)
        swapped = kempe_swap(g, c, comp)
        assert swapped.colors == (2, 1, 2, 1, 3)
        assert is_proper(g, swapped)

    def test_double_swap_identity(self):
        g, c = c5_coloring()
        comp = kempe_component(g, c, 0, 1, 2)
        once = kempe_swap(g, c, comp)
        assert kempe_swap(g, once, comp).colors == c.colors

    def test_stale_component_rejected(self):
        g, c = c5_coloring()
        comp = kempe_component(g, c, 0, 1, 2)
        broken = type(comp)(members=frozenset({0, 1}), color_pair=comp.color_pair)
        with pytest.raises(StaleComponentError):
            kempe_swap(g, c, broken)


class TestIjPath:
    def test_adjacent_pair(self):
        g, c = c5_coloring()
        assert ij_path_between(g, c, 0, 1, 1, 2) == [0, 1]

    def test_separate_components(self):
        g = build(4, [(0, 1), (2, 3)])
        c = Coloring((1, 2, 1, 2), 2)
        assert ij_path_between(g, c, 0, 2, 1, 2) is None

    def test_four_vertex_path_gadget(self):
        # path A-E-F-B alternating colors 1 and 2 on a 6-vertex gadget
        g = build(6, [(0, 1), (1, 2), (2, 3), (0, 4), (3, 5)])
        c = Coloring((1, 2, 1, 2, 3, 3), 3)
        assert ij_path_between(g, c, 0, 3, 1, 2) == [0, 1, 2, 3]

    def test_color_precondition(self):
        g, c = c5_coloring()
        with pytest.raises(ColoringError):
            ij_path_between(g, c, 4, 0, 1, 2)


class TestUniqueColorSwapRule:
    def test_forced_single_neighbor(self):
        g = build(2, [(0, 1)])
        c = Coloring((0, 1), 2)
        moves = rule_unique_color_swap(g, c, 0, 2)
        assert moves is not None
        assert [(m.vertex, m.color) for m in moves] == [(1, 2), (0, 1)]

    def test_repeated_colors_rule_silent(self):
        g = build(3, [(0, 1), (0, 2)])
        c = Coloring((0, 1, 1), 2)
        assert rule_unique_color_swap(g, c, 0, 2) is None

    def test_star_center(self):
        leaves = 8
        g = build(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
        c = Coloring((0,) + tuple(range(1, leaves + 1)), leaves)
        moves = rule_unique_color_swap(g, c, 0, leaves)
        assert moves is not None
        cur = c
        for m in moves:
            cur = apply_move(g, cur, m)
        assert is_proper(g, cur)


class TestExtendColoring:
    def test_free_color_pigeonhole(self):
        g = cycle(5)
        c = Coloring((0, 1, 2, 1, 2), 3)
        out = extend_coloring(g, 0, c, 3)
        assert out.result == EXTENDED_BY_RULE
        assert is_proper(g, out.final)

    def test_never_failed_when_k_large(self):
        rng = random.Random(5)
        for _ in range(100):
            g = random_graph(rng, rng.randint(2, 8))
            u = rng.randrange(g.n)
            rest, mapping = g.induced(set(range(g.n)) - {u})
            base = greedy_dsatur(rest) if rest.n else Coloring((), 1)
            colors = [0] * g.n
            for new, old in enumerate(mapping):
                colors[old] = base.colors[new]
            k = max(base.colors, default=0) + g.degree(u) + 1
            out = extend_coloring(g, u, Coloring(tuple(colors), k), k)
            assert out.result != FAILED
            assert is_proper(g, out.final)

    def test_search_path(self):
        # found by randomized hunt: rules alone cannot place vertex 3, a
        # short move sequence can
        g = from_graph6("Ge\\sfC")
        c = Coloring((1, 2, 1, 0, 3, 3, 2, 3), 3)
        out = extend_coloring(g, 3, c, 3)
        assert out.result == EXTENDED_BY_SEARCH
        assert is_proper(g, out.final)

    def test_fallback_path(self):
        # found by randomized hunt: the depth-4 search is exhausted and the
        # exact oracle closes the gap
        g = from_graph6("GtG\\Qk")
        c = Coloring((0, 2, 1, 2, 2, 3, 3, 1), 3)
        out = extend_coloring(g, 0, c, 3)
        assert out.result == FALLBACK_EXACT
        assert is_proper(g, out.final)
        assert out.final.colors_used() <= 3

    def test_failed_leaves_input_unchanged(self):
        g = complete(4)
        c = Coloring((0, 1, 2, 3), 3)
        out = extend_coloring(g, 0, c, 3)
        assert out.result == FAILED
        assert out.final.colors == c.colors

    def test_improper_input_rejected(self):
        g = cycle(4)
        with pytest.raises(ColoringError):
            extend_coloring(g, 0, Coloring((0, 1, 1, 2), 3), 3)

    def test_deterministic(self):
        rng = random.Random(9)
        for _ in range(20):
            g, c = random_proper(rng, 7)
            u = 0
            colors = list(c.colors)
            colors[u] = 0
            a = extend_coloring(g, u, Coloring(tuple(colors), c.k), c.k)
            b = extend_coloring(g, u, Coloring(tuple(colors), c.k), c.k)
            assert a == b


class TestMovePreservation:
    def test_random_moves_preserve_properness(self):
        rng = random.Random(17)
        for _ in range(500):
            g, c = random_proper(rng, rng.randint(2, 8))
            v = rng.randrange(g.n)
            if rng.random() < 0.5:
                free = sorted(free_colors(g, c, v, c.k) - {c.colors[v]})
                if not free:
                    continue
                nxt = apply_move(g, c, Move(RECOLOR_FREE, vertex=v, color=free[0]))
            else:
                j = rng.randint(1, c.k)
                if j == c.colors[v]:
                    continue
                comp = kempe_component(g, c, v, c.colors[v], j)
                nxt = kempe_swap(g, c, comp)
                assert kempe_swap(g, nxt, comp).colors == c.colors
            assert is_proper(g, nxt)


class TestColor3K1Free:
    def test_k8_plus_pendant(self):
        # K8 plus one vertex joined by a single edge: omega=8, delta=8
        edges = [(i, j) for i in range(8) for j in range(i + 1, 8)] + [(0, 8)]
        g = build(9, edges)
        coloring, telemetry = color_3k1_free(g)
        assert is_proper(g, coloring)
        assert telemetry.bound_applies
        assert coloring.colors_used() <= 8  # max(omega, delta-1)

    def test_complement_of_c5_plus_isolated(self):
        tf = build(10, [(i, (i + 1) % 5) for i in range(5)])
        g = tf.complement()
        coloring, telemetry = color_3k1_free(g)
        assert is_proper(g, coloring)
        assert telemetry.bound_applies
        assert coloring.colors_used() <= max(7, 9 - 1)

    def test_c5_flagged_no_bound(self):
        coloring, telemetry = color_3k1_free(cycle(5))
        assert is_proper(cycle(5), coloring)
        assert not telemetry.bound_applies
        assert coloring.colors_used() == 3

    def test_rejects_non_3k1_free(self):
        claw = build(4, [(0, 1), (0, 2), (0, 3)])
        with pytest.raises(Exception):
            color_3k1_free(claw)

    def test_budget_configurable(self):
        g = cycle(5).complement()
        coloring, _ = color_3k1_free(g, SearchConfig(depth=1, branch_cap=4))
        assert is_proper(g, coloring)
