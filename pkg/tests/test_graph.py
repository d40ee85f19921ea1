"""
Unit tests for the graph core: Graph, canonical forms, named graphs, edge lists.
"""
import random
import unittest
from math import comb

import networkx as nx

from core.bits import popcount
from core.canonical import are_isomorphic, canonical_form, component_form
from core.catalog import GraphCatalog
from core.edge_list import format_edge_list, parse_edge_list, parse_edge_lists
from core.errors import GraphConstructionError, GraphSizeError, GraphSpecError
from core.graph import Graph
from core.named import named
from tests.generators import random_graph, to_networkx


class TestGraph(unittest.TestCase):
    """Test cases for the Graph type."""

    def test_from_edge_list_rejects_bad_pairs(self) -> None:
        """Out-of-range endpoints and self-loops are reported with the pair."""
        with self.assertRaises(GraphConstructionError) as ctx:
            Graph.from_edge_list(3, [(0, 3)])
        self.assertEqual(ctx.exception.pair, (0, 3))
        with self.assertRaises(GraphConstructionError):
            Graph.from_edge_list(3, [(1, 1)])

    def test_duplicate_edges_collapse(self) -> None:
        graph = Graph.from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
        self.assertEqual(graph.edge_count, 1)

    def test_cycle_needs_three_vertices(self) -> None:
        with self.assertRaises(GraphConstructionError):
            Graph.cycle(2)

    def test_complement_of_path(self) -> None:
        """co(P4) is P4 again."""
        self.assertTrue(are_isomorphic(Graph.path(4).complement(), Graph.path(4)))
        self.assertEqual(Graph.complete(5).complement().edge_count, 0)

    def test_line_graph_of_star_is_complete(self) -> None:
        self.assertTrue(are_isomorphic(named("K1,4").line_graph(), Graph.complete(4)))
        self.assertTrue(are_isomorphic(Graph.path(5).line_graph(), Graph.path(4)))

    def test_disjoint_union_shifts_second_graph(self) -> None:
        union = Graph.path(3).disjoint_union(Graph.complete(2))
        self.assertEqual(union.n, 5)
        self.assertEqual(union.edges(), [(0, 1), (1, 2), (3, 4)])
        self.assertEqual(union.components(), [0b00111, 0b11000])

    def test_induced_reindexes_in_order(self) -> None:
        """Induced subgraphs keep the old order and report where vertices came from."""
        graph = Graph.cycle(5)
        sub, index_map = graph.induced(0b10110)
        self.assertEqual(index_map, (1, 2, 4))
        self.assertEqual(sub.edges(), [(0, 1)])

    def test_components_and_forest(self) -> None:
        graph = named("P3+K2+K1")
        self.assertEqual(len(graph.components()), 3)
        self.assertTrue(graph.is_forest())
        self.assertFalse(named("C4+K1").is_forest())
        self.assertFalse(graph.is_connected())

    def test_with_vertex_and_relabel(self) -> None:
        graph = Graph.path(3).with_vertex(0b101)
        self.assertTrue(are_isomorphic(graph, Graph.cycle(4)))
        self.assertTrue(are_isomorphic(graph.relabel([2, 0, 3, 1]), graph))

    def test_complement_is_an_involution(self) -> None:
        rng = random.Random(13)
        for _ in range(300):
            n = rng.randint(0, 10)
            graph = random_graph(rng, n, rng.random())
            self.assertEqual(graph.complement().complement(), graph)
            self.assertEqual(graph.edge_count + graph.complement().edge_count, comb(n, 2))

    def test_line_graph_sizes(self) -> None:
        """L(G) has a vertex per edge and an edge per pair of edges sharing an endpoint."""
        rng = random.Random(17)
        for _ in range(200):
            graph = random_graph(rng, rng.randint(1, 10), rng.random())
            line = graph.line_graph()
            self.assertEqual(line.n, graph.edge_count)
            self.assertEqual(line.edge_count, sum(comb(d, 2) for d in graph.degrees()))

    def test_delete_vertices_maps_edges_back(self) -> None:
        """Deleted vertices are gone, and the index map carries edges and non-edges back."""
        rng = random.Random(19)
        for _ in range(200):
            graph = random_graph(rng, rng.randint(1, 12), rng.random())
            removed = rng.getrandbits(graph.n)
            smaller, index_map = graph.delete_vertices(removed)
            self.assertEqual(smaller.n, graph.n - popcount(removed))
            self.assertEqual(len(index_map), smaller.n)
            self.assertFalse(any(removed >> old & 1 for old in index_map))
            for u in range(smaller.n):
                for v in range(u + 1, smaller.n):
                    self.assertEqual(
                        smaller.has_edge(u, v), graph.has_edge(index_map[u], index_map[v])
                    )


class TestCanonicalForm(unittest.TestCase):
    """Test cases for canonical forms."""

    def test_relabelled_graphs_share_a_form(self) -> None:
        """Random relabellings never change the form."""
        rng = random.Random(7)
        for _ in range(200):
            n = rng.randint(1, 9)
            graph = random_graph(rng, n, rng.random())
            perm = list(range(n))
            rng.shuffle(perm)
            self.assertEqual(canonical_form(graph), canonical_form(graph.relabel(perm)))

    def test_form_survives_ten_relabellings(self) -> None:
        """One hundred random graphs keep their form under ten relabellings each."""
        rng = random.Random(23)
        for _ in range(100):
            n = rng.randint(1, 10)
            graph = random_graph(rng, n, rng.random())
            form = canonical_form(graph)
            for _ in range(10):
                perm = list(range(n))
                rng.shuffle(perm)
                self.assertEqual(canonical_form(graph.relabel(perm)), form, graph)

    def test_form_separates_non_isomorphic_graphs(self) -> None:
        """Forms agree with networkx isomorphism on random pairs."""
        rng = random.Random(11)
        for _ in range(300):
            n = rng.randint(4, 7)
            first = random_graph(rng, n)
            second = random_graph(rng, n)
            expected = nx.is_isomorphic(to_networkx(first), to_networkx(second))
            self.assertEqual(canonical_form(first) == canonical_form(second), expected)

    def test_size_bound(self) -> None:
        with self.assertRaises(GraphSizeError):
            canonical_form(Graph.empty(11))

    def test_component_form_handles_large_forests(self) -> None:
        """Component forms only need each component within the bound."""
        big = named("7*K2")
        self.assertEqual(component_form(big), component_form(named("K2+6*K2")))
        self.assertNotEqual(component_form(big), component_form(named("P3+6*K2")))

    def test_known_pairs(self) -> None:
        self.assertTrue(are_isomorphic(named("house"), named("co(P5)")))
        self.assertTrue(are_isomorphic(named("C5"), named("co(C5)")))
        self.assertFalse(are_isomorphic(named("bull"), named("hammer")))


class TestNamedGraphs(unittest.TestCase):
    """Test cases for the named-graph grammar and catalog."""

    def test_atoms(self) -> None:
        self.assertEqual(named("C5").edge_count, 5)
        self.assertEqual(named("K1,3").degrees(), [3, 1, 1, 1])
        self.assertEqual(named("K4-e").edge_count, 5)
        self.assertEqual(named("O3").edge_count, 0)
        self.assertEqual(named("bull").n, 5)

    def test_composition(self) -> None:
        """Unions, repetition and complements compose."""
        graph = named("K1,3+co(C6)")
        self.assertEqual(graph.n, 10)
        self.assertEqual(graph.edge_count, 3 + 9)
        self.assertEqual(named("2*K2").edge_count, 2)
        self.assertTrue(are_isomorphic(named("co(2*K2)"), Graph.cycle(4)))

    def test_errors_carry_a_position(self) -> None:
        with self.assertRaises(GraphSpecError) as ctx:
            named("K1,3+")
        self.assertEqual(ctx.exception.position, 5)
        with self.assertRaises(GraphSpecError):
            named("nosuchgraph")
        with self.assertRaises(GraphSpecError):
            named("C2")

    def test_catalog_graphs(self) -> None:
        """Catalog graphs match their networkx counterparts."""
        petersen = GraphCatalog.get("petersen")
        self.assertIsNotNone(petersen)
        self.assertTrue(nx.is_isomorphic(to_networkx(petersen), nx.petersen_graph()))
        chvatal = GraphCatalog.get("chvatal")
        self.assertTrue(nx.is_isomorphic(to_networkx(chvatal), nx.chvatal_graph()))
        self.assertIsNone(GraphCatalog.get("unknown"))

    def test_name_of(self) -> None:
        self.assertEqual(GraphCatalog.name_of(named("co(P5)")), "house")
        self.assertEqual(GraphCatalog.name_of(Graph.path(4)), "P4")
        self.assertEqual(GraphCatalog.name_of(named("K1,4")), "K1,4")
        self.assertIsNone(GraphCatalog.name_of(named("P3+K1")))


class TestEdgeList(unittest.TestCase):
    """Test cases for the edge-list format."""

    def test_parse_and_format(self) -> None:
        text = "# a path\n3 2\n0 1\n1 2\n"
        graph = parse_edge_list(text)
        self.assertEqual(graph, Graph.path(3))
        self.assertEqual(format_edge_list(graph, ["a path"]), text)

    def test_formatted_graphs_parse_back(self) -> None:
        rng = random.Random(3)
        graphs = [random_graph(rng, rng.randint(0, 12)) for _ in range(20)]
        text = "".join(format_edge_list(graph) for graph in graphs)
        self.assertEqual(parse_edge_lists(text), graphs)

    def test_errors_name_the_line(self) -> None:
        with self.assertRaisesRegex(GraphSpecError, "line 1"):
            parse_edge_list("3 2\n0 1\n")
        with self.assertRaisesRegex(GraphSpecError, "line 2"):
            parse_edge_list("2 1\n0 5\n")
        with self.assertRaisesRegex(GraphSpecError, "line 1"):
            parse_edge_list("three 2\n")
        with self.assertRaises(GraphSpecError):
            parse_edge_list("")


if __name__ == "__main__":
    unittest.main()
