"""
Unit tests for the exact, chordal, matching, deletion-set and structural solvers.

Exact search is the oracle throughout. Set GRAPHCOLOR_SLOW_TESTS=1 to extend the
exhaustive class checks from 7 to 9 vertices and to check 500 random members
with 10 to 13 vertices per structural solver instead of 170.
"""
import os
import random
import time
import unittest
from typing import List, Optional, Tuple
from unittest.mock import patch

import networkx as nx

from atlas.enumeration import enumerate_free_connected
from chromatic.chordal import clique_bound_from_order, color_chordal, is_chordal
from chromatic.coloring import Coloring
from chromatic.deletion_set import maximal_independent_sets, solve_with_deletion_set
from chromatic.dispatch import (
    METHOD_BRUTE,
    METHOD_CHORDAL,
    METHOD_CLAW_HAMMER,
    METHOD_CLAW_P5,
    METHOD_O3,
    METHOD_P5_C4,
    chromatic_auto,
    select_method,
    solve,
)
from chromatic.exact import chromatic_exact, clique_number, dsatur, k_coloring, max_clique
from chromatic.matching import color_O3_free, find_independent_triple, is_o3_free, max_matching
from chromatic.structural import (
    CLAW_HAMMER,
    CLAW_P5,
    P5_C4,
    decompose_C5,
    peel_pendants,
    solve_claw_hammer_free,
    solve_claw_P5_free,
    solve_P5_C4_free,
)
from core.bits import iter_bits, mask_of, popcount
from core.errors import ContractError, GraphSizeError, UnsupportedInstanceError
from core.graph import Graph
from core.named import named
from embedding.induced import find_induced_cycle, is_free
from tests.generators import (
    brute_chromatic,
    brute_matching_number,
    clique_blowup,
    grow_free_graph,
    random_chordal,
    random_graph,
    random_o3_free,
    to_networkx,
)

SLOW = os.environ.get("GRAPHCOLOR_SLOW_TESTS") == "1"
EXHAUSTIVE_MAX_N = 9 if SLOW else 7
RANDOM_MEMBERS = 500 if SLOW else 170


def _extend(rng: random.Random, base: Graph, extra: int) -> Graph:
    """Append ``extra`` vertices with random neighbourhoods."""
    graph = base
    for _ in range(extra):
        graph = graph.with_vertex(sum(1 << u for u in range(graph.n) if rng.random() < 0.5))
    return graph


def _random_members(rng: random.Random, specs, count: int, blowup: bool) -> List[Graph]:
    """
    Random members of Free(specs) with 10 to 13 vertices.

    Alternates between vertex-by-vertex growth and clique blow-ups of small
    members; blow-ups that pick up a forbidden subgraph are dropped.
    """
    patterns = [named(spec) for spec in specs]
    seeds = [g for g in enumerate_free_connected(6, patterns) if g.n >= 3]
    members = []
    for attempt in range(count * 10):
        if len(members) == count:
            break
        n = rng.randint(10, 13)
        if blowup and attempt % 2:
            base = rng.choice(seeds)
            sizes = [1] * base.n
            for _ in range(n - base.n):
                sizes[rng.randrange(base.n)] += 1
            graph = clique_blowup(base, sizes)
            if not is_free(graph, patterns):
                continue
        else:
            graph = grow_free_graph(rng, n, patterns, p=0.6)
            if graph is None:
                continue
        members.append(graph)
    return members


class TestColoring(unittest.TestCase):
    """Test cases for the Coloring type."""

    def test_from_assignment_renumbers(self) -> None:
        coloring = Coloring.from_assignment([5, 5, 2, 9, 2])
        self.assertEqual(coloring.colors, (0, 0, 1, 2, 1))
        self.assertEqual(coloring.k, 3)
        self.assertEqual(coloring.classes(), [0b00011, 0b10100, 0b01000])

    def test_is_proper(self) -> None:
        self.assertTrue(Coloring.from_assignment([0, 1, 0, 1]).is_proper(Graph.cycle(4)))
        self.assertFalse(Coloring.from_assignment([0, 1, 0, 0]).is_proper(Graph.cycle(4)))
        self.assertFalse(Coloring.from_assignment([0, 1]).is_proper(Graph.cycle(4)))


class TestExact(unittest.TestCase):
    """Test cases for clique search and exact coloring."""

    def test_known_chromatic_numbers(self) -> None:
        expected = {"C5": 3, "K5": 5, "petersen": 3, "grotzsch": 4, "chvatal": 4, "W5": 4, "O4": 1}
        for spec, chi in expected.items():
            result, coloring = chromatic_exact(named(spec))
            self.assertEqual(result, chi, spec)
            self.assertEqual(coloring.k, chi)
            self.assertTrue(coloring.is_proper(named(spec)))

    def test_agrees_with_brute_force(self) -> None:
        rng = random.Random(17)
        for _ in range(150):
            graph = random_graph(rng, rng.randint(1, 8), rng.uniform(0.1, 0.9))
            chi, coloring = chromatic_exact(graph)
            self.assertEqual(chi, brute_chromatic(graph))
            self.assertTrue(coloring.is_proper(graph))

    def test_max_clique_matches_networkx(self) -> None:
        rng = random.Random(19)
        for _ in range(100):
            graph = random_graph(rng, rng.randint(1, 14), rng.uniform(0.2, 0.9))
            clique = max_clique(graph)
            self.assertTrue(graph.is_clique(clique))
            expected = max(len(c) for c in nx.find_cliques(to_networkx(graph)))
            self.assertEqual(popcount(clique), expected)
        self.assertEqual(clique_number(Graph.empty(0)), 0)

    def test_dsatur_is_an_upper_bound(self) -> None:
        rng = random.Random(23)
        for _ in range(50):
            graph = random_graph(rng, rng.randint(1, 10))
            coloring = dsatur(graph)
            self.assertTrue(coloring.is_proper(graph))
            self.assertGreaterEqual(coloring.k, chromatic_exact(graph)[0])

    def test_k_coloring(self) -> None:
        self.assertIsNone(k_coloring(Graph.cycle(5), 2))
        three = k_coloring(Graph.cycle(5), 3)
        self.assertIsNotNone(three)
        self.assertTrue(three.is_proper(Graph.cycle(5)))
        precolored = k_coloring(Graph.complete(4), 4, clique=0b0111)
        self.assertEqual(precolored.colors, (0, 1, 2, 3))
        self.assertIsNone(k_coloring(Graph.complete(4), 0))

    def test_size_bound(self) -> None:
        with self.assertRaises(GraphSizeError):
            chromatic_exact(Graph.empty(17))


class TestChordal(unittest.TestCase):
    """Test cases for chordal recognition and coloring."""

    def test_recognition_matches_networkx(self) -> None:
        rng = random.Random(29)
        for _ in range(200):
            graph = random_graph(rng, rng.randint(1, 10), rng.uniform(0.2, 0.9))
            chordal, order = is_chordal(graph)
            self.assertEqual(chordal, nx.is_chordal(to_networkx(graph)))
            self.assertEqual(order is not None, chordal)

    def test_coloring_uses_clique_number_colors(self) -> None:
        """Random subtree-intersection graphs are colored with omega colors."""
        rng = random.Random(31)
        for _ in range(500):
            graph = random_chordal(rng, rng.randint(1, 40))
            chordal, order = is_chordal(graph)
            self.assertTrue(chordal)
            coloring = color_chordal(graph)
            self.assertTrue(coloring.is_proper(graph))
            self.assertEqual(coloring.k, clique_bound_from_order(graph, order))
            if graph.n <= 20:
                self.assertEqual(coloring.k, clique_number(graph))

    def test_rejects_holes(self) -> None:
        with self.assertRaises(ContractError) as ctx:
            color_chordal(Graph.cycle(4))
        self.assertEqual(len(ctx.exception.witness), 3)


class TestMatchingColoring(unittest.TestCase):
    """Test cases for the coloring of O3-free graphs."""

    def test_colors_equal_n_minus_complement_matching(self) -> None:
        """k = n - nu(complement) = chi on random O3-free graphs."""
        rng = random.Random(37)
        for _ in range(500):
            graph = random_o3_free(rng, rng.randint(1, 13))
            coloring = color_O3_free(graph)
            self.assertTrue(coloring.is_proper(graph))
            expected = graph.n - brute_matching_number(graph.complement())
            self.assertEqual(coloring.k, expected)
            if graph.n <= 9:
                self.assertEqual(coloring.k, chromatic_exact(graph)[0])

    def test_matching_is_maximum(self) -> None:
        rng = random.Random(41)
        for _ in range(50):
            graph = random_graph(rng, rng.randint(2, 12), 0.3)
            matching = max_matching(graph)
            self.assertEqual(len(matching), brute_matching_number(graph))
            touched = [v for edge in matching for v in edge]
            self.assertEqual(len(touched), len(set(touched)))

    def test_rejects_independent_triple(self) -> None:
        self.assertFalse(is_o3_free(Graph.path(5)))
        with self.assertRaises(ContractError) as ctx:
            color_O3_free(Graph.path(5))
        self.assertEqual(ctx.exception.witness, (0, 2, 4))


class TestDeletionSet(unittest.TestCase):
    """Test cases for the deletion-set search."""

    def test_maximal_independent_sets(self) -> None:
        sets = sorted(maximal_independent_sets(Graph.cycle(5), 0b11111))
        self.assertEqual(len(sets), 5)
        self.assertTrue(all(popcount(s) == 2 for s in sets))

    def test_o3_free_base_plus_few_vertices(self) -> None:
        rng = random.Random(43)
        for _ in range(250):
            base = random_o3_free(rng, rng.randint(3, 8))
            extra = rng.randint(0, 5)
            graph = _extend(rng, base, extra)
            deleted = mask_of(range(base.n, graph.n))
            chi, coloring = solve_with_deletion_set(graph, deleted, 3, color_O3_free)
            self.assertEqual(chi, chromatic_exact(graph)[0])
            self.assertTrue(coloring.is_proper(graph))

    def test_chordal_base_plus_few_vertices(self) -> None:
        rng = random.Random(47)
        for _ in range(250):
            base = random_chordal(rng, rng.randint(3, 8))
            p = clique_number(base.complement()) + 1
            graph = _extend(rng, base, rng.randint(0, 5))
            deleted = mask_of(range(base.n, graph.n))
            chi, coloring = solve_with_deletion_set(graph, deleted, p, color_chordal)
            self.assertEqual(chi, chromatic_exact(graph)[0])
            self.assertTrue(coloring.is_proper(graph))

    def test_rejects_large_independent_set_outside(self) -> None:
        with self.assertRaises(ContractError):
            solve_with_deletion_set(named("K1,3"), 0b0001, 3, color_O3_free)


class TestStructuralSolvers(unittest.TestCase):
    """Test cases for the {claw, P5}, {claw, hammer} and {P5, C4} solvers."""

    CASES = (
        (CLAW_P5, solve_claw_P5_free, True),
        (CLAW_HAMMER, solve_claw_hammer_free, False),
        (P5_C4, solve_P5_C4_free, True),
    )

    def test_exhaustive_small_members(self) -> None:
        """Every connected member up to the exhaustive bound gets the exact answer."""
        for specs, solver, _ in self.CASES:
            patterns = [named(spec) for spec in specs]
            for graph in enumerate_free_connected(EXHAUSTIVE_MAX_N, patterns):
                chi, coloring = solver(graph)
                self.assertEqual(chi, chromatic_exact(graph)[0], (specs, graph))
                self.assertTrue(coloring.is_proper(graph))

    def test_random_members(self) -> None:
        """Members with 10 to 13 vertices get the exact answer; deleting a vertex never raises it."""
        rng = random.Random(53)
        for specs, solver, blowup in self.CASES:
            members = _random_members(rng, specs, RANDOM_MEMBERS, blowup)
            if SLOW:
                self.assertEqual(len(members), RANDOM_MEMBERS, specs)
            else:
                self.assertGreater(len(members), 30, specs)
            for graph in members:
                self.assertTrue(10 <= graph.n <= 13)
                chi, coloring = solver(graph)
                self.assertEqual(chi, chromatic_exact(graph)[0], (specs, graph))
                self.assertTrue(coloring.is_proper(graph))
                smaller, _ = graph.delete_vertices(1 << rng.randrange(graph.n))
                self.assertLessEqual(solver(smaller)[0], chi)

    def test_claw_p5_members_with_a_hole_are_o3_free(self) -> None:
        """Non-chordal connected {claw, P5}-free members never reach the cycle deletion."""
        rng = random.Random(59)
        members = _random_members(rng, CLAW_P5, 120, True)
        holes = [graph for graph in members if not is_chordal(graph)[0]]
        self.assertTrue(holes)
        with patch(
            "chromatic.structural.solve_with_deletion_set", wraps=solve_with_deletion_set
        ) as deletion:
            for graph in members:
                solve_claw_P5_free(graph)
        self.assertEqual(deletion.call_count, 0)
        for graph in holes:
            self.assertIsNone(find_independent_triple(graph), graph)

    def test_claw_p5_cycle_deletion_colors_exactly(self) -> None:
        """Deleting an induced C4 or C5 and searching over the rest gives the exact answer."""
        graphs = [
            named("house"),
            named("W5"),
            clique_blowup(Graph.cycle(5), [2, 1, 3, 1, 2]),
            clique_blowup(named("house"), [1, 2, 1, 2, 1]),
        ]
        for graph in graphs:
            seen: List[int] = []

            def claim_first_triple(target: Graph) -> Optional[Tuple[int, int, int]]:
                seen.append(target.n)
                return (0, 1, 2) if len(seen) == 1 else find_independent_triple(target)

            with patch(
                "chromatic.structural.find_independent_triple", side_effect=claim_first_triple
            ), patch(
                "chromatic.structural.solve_with_deletion_set", wraps=solve_with_deletion_set
            ) as deletion:
                chi, coloring = solve_claw_P5_free(graph)
            deletion.assert_called_once()
            _, deleted, p, _ = deletion.call_args.args
            self.assertIn(popcount(deleted), (4, 5))
            self.assertEqual(p, 3)
            self.assertEqual(chi, chromatic_exact(graph)[0], graph)
            self.assertTrue(coloring.is_proper(graph))

    def test_disconnected_input(self) -> None:
        graph = named("C5+K4+K1")
        for _, solver, _ in self.CASES:
            self.assertEqual(solver(graph)[0], 4)

    def test_wrong_class_is_rejected(self) -> None:
        with self.assertRaises(ContractError) as ctx:
            solve_claw_P5_free(Graph.path(5))
        self.assertEqual(len(ctx.exception.witness), 5)
        with self.assertRaises(ContractError):
            solve_claw_hammer_free(named("hammer"))
        with self.assertRaises(ContractError):
            solve_P5_C4_free(Graph.cycle(4))

    def test_cycles_by_parity(self) -> None:
        self.assertEqual(solve_claw_hammer_free(Graph.cycle(9))[0], 3)
        self.assertEqual(solve_claw_hammer_free(Graph.cycle(10))[0], 2)

    def test_peeling_keeps_the_chromatic_number(self) -> None:
        rng = random.Random(59)
        checked = 0
        while checked < 100:
            graph = random_graph(rng, rng.randint(3, 12), 0.25)
            if not graph.is_connected():
                continue
            peeled, _ = peel_pendants(graph)
            self.assertTrue(peeled.is_connected())
            self.assertEqual(chromatic_exact(peeled)[0], chromatic_exact(graph)[0])
            checked += 1

    def test_peel_pendants(self) -> None:
        peeled, removed = peel_pendants(named("hammer"))
        self.assertEqual(removed, 2)
        self.assertEqual(peeled.n, 3)
        peeled, removed = peel_pendants(Graph.complete(2))
        self.assertEqual((peeled.n, removed), (2, 0))

    def test_clique_cutset_can_dominate(self) -> None:
        """G1 + V1 may need more colors than G2: a K5 hanging off the apex of W5."""
        edges = [(i, (i + 1) % 5) for i in range(5)] + [(5, i) for i in range(5)]
        edges += [(5, v) for v in range(6, 11)]
        edges += [(u, v) for u in range(6, 11) for v in range(u + 1, 11)]
        graph = Graph.from_edge_list(11, edges)
        self.assertTrue(is_free(graph, [named("P5"), named("C4")]))
        chi, coloring = solve_P5_C4_free(graph)
        self.assertEqual(chi, 6)
        self.assertTrue(coloring.is_proper(graph))

    def test_decompose_c5(self) -> None:
        graph = named("W5")
        cycle = mask_of(find_induced_cycle(graph, 5))
        parts = decompose_C5(graph, cycle)
        self.assertEqual(popcount(parts.v1), 1)
        self.assertEqual(parts.v2, 0)
        self.assertEqual(parts.g1, 0)
        self.assertEqual(parts.g2, graph.vertex_mask)
        with self.assertRaises(ContractError):
            decompose_C5(graph, 0b000111)
        with self.assertRaises(ContractError):
            decompose_C5(named("C5+K1"), 0b011111)

    def test_decompose_c5_blowup(self) -> None:
        """Twins of cycle vertices see three cycle vertices and land in V2."""
        graph = clique_blowup(Graph.cycle(5), [2, 1, 1, 1, 1])
        cycle = mask_of([0, 2, 3, 4, 5])
        parts = decompose_C5(graph, cycle)
        self.assertEqual(list(iter_bits(parts.v2)), [1])
        self.assertEqual(parts.v1, 0)


class TestDispatch(unittest.TestCase):
    """Test cases for solver selection."""

    def test_select_method(self) -> None:
        self.assertEqual(select_method(Graph.path(4)), METHOD_CHORDAL)
        self.assertEqual(select_method(Graph.cycle(4)), METHOD_BRUTE)
        self.assertEqual(select_method(Graph.path(40)), METHOD_CHORDAL)
        self.assertEqual(select_method(clique_blowup(Graph.cycle(5), [4] * 5)), METHOD_O3)
        self.assertEqual(select_method(Graph.cycle(20)), METHOD_CLAW_HAMMER)
        self.assertEqual(select_method(named("C5+K1,3+K1,3+K1,3+K1,3")), METHOD_P5_C4)
        self.assertEqual(select_method(named("W5+W5+W5+O2")), METHOD_CLAW_P5)

    def test_unsupported_instance(self) -> None:
        graph = named("C4+P5+C6+K1,3")
        with self.assertRaises(UnsupportedInstanceError):
            chromatic_auto(graph)

    def test_named_methods(self) -> None:
        chi, coloring, method = solve(named("petersen"), METHOD_BRUTE)
        self.assertEqual((chi, method), (3, METHOD_BRUTE))
        with self.assertRaises(ContractError):
            solve(Graph.cycle(5), METHOD_CHORDAL)
        with self.assertRaises(ValueError):
            solve(Graph.cycle(5), "nosuchmethod")

    def test_large_instances_are_fast(self) -> None:
        """Sixty-vertex members of the O3-free, {claw, hammer}-free and {P5, C4}-free classes."""
        cases = [
            (clique_blowup(Graph.cycle(5), [12] * 5), METHOD_O3, 30),
            (named("K20+C35+C5"), METHOD_CLAW_HAMMER, 20),
            (clique_blowup(named("C5+K1,9"), [10] * 5 + [1] * 10), METHOD_P5_C4, 25),
        ]
        for graph, method, expected in cases:
            self.assertEqual(graph.n, 60)
            start = time.perf_counter()
            chi, coloring, used = chromatic_auto(graph)
            elapsed = time.perf_counter() - start
            self.assertEqual(used, method)
            self.assertEqual(chi, expected)
            self.assertTrue(coloring.is_proper(graph))
            self.assertLess(elapsed, 10.0)


if __name__ == "__main__":
    unittest.main()
