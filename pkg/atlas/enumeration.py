"""
Enumeration of small graphs up to isomorphism.

Graphs are grown one vertex at a time and deduplicated by canonical form: every
graph on n + 1 vertices is a graph on n vertices plus one vertex. Trees are grown
by adding leaves, and forests are multisets of trees.
"""
import logging
from enum import Enum
from functools import lru_cache
from typing import Callable, Dict, Iterable, Iterator, List, Sequence, Tuple

from core.canonical import CanonicalForm, canonical_form, component_form
from core.config import ToolkitConfig
from core.errors import ContractError, GraphSizeError
from core.graph import Graph
from embedding.induced import iter_induced_embeddings

logger = logging.getLogger(__name__)

KeyFunction = Callable[[Graph], CanonicalForm]


class GraphSet:
    """
    Immutable set of graphs, one per isomorphism class.

    Members are ordered by vertex count, then edge count, then key, so
    iteration is the same on every run.
    """

    def __init__(self, graphs: Iterable[Graph], key: KeyFunction = canonical_form) -> None:
        members: Dict[CanonicalForm, Graph] = {}
        for graph in graphs:
            members.setdefault(key(graph), graph)
        ordered = sorted(members.items(), key=lambda item: (item[1].n, item[1].edge_count, item[0]))
        self._key = key
        self._members: Tuple[Tuple[CanonicalForm, Graph], ...] = tuple(ordered)
        self._index = dict(ordered)

    def __len__(self) -> int:
        return len(self._members)

    def __iter__(self) -> Iterator[Graph]:
        return (graph for _, graph in self._members)

    def __contains__(self, graph: object) -> bool:
        return isinstance(graph, Graph) and self._key(graph) in self._index

    def contains_form(self, form: CanonicalForm) -> bool:
        return form in self._index

    def keys(self) -> List[CanonicalForm]:
        return [form for form, _ in self._members]

    def graphs(self) -> List[Graph]:
        return [graph for _, graph in self._members]

    def items(self) -> List[Tuple[CanonicalForm, Graph]]:
        return list(self._members)

    def filter(self, predicate: Callable[[Graph], bool]) -> "GraphSet":
        return GraphSet((graph for graph in self if predicate(graph)), self._key)

    def with_vertices(self, n: int) -> "GraphSet":
        return self.filter(lambda graph: graph.n == n)

    def __repr__(self) -> str:
        return f"GraphSet({len(self)} graphs)"


class ForestConstraint(Enum):
    """Restriction applied to every tree of an enumerated forest."""
    NONE = "none"
    MAX_DEGREE_3 = "max_degree_3"
    MAX_3_LEAVES_PER_COMPONENT = "max_3_leaves_per_component"


def _check_bound(what: str, value: int, bound: int) -> None:
    if value > bound:
        raise GraphSizeError(what, bound, value)


@lru_cache(maxsize=None)
def _graphs_by_order(max_n: int) -> Tuple[Tuple[Graph, ...], ...]:
    """levels[n] holds one graph per isomorphism class on n vertices."""
    levels: List[Tuple[Graph, ...]] = [(Graph.empty(0),)]
    for n in range(max_n):
        grown: Dict[CanonicalForm, Graph] = {}
        for graph in levels[n]:
            for neighbors in range(1 << n):
                bigger = graph.with_vertex(neighbors)
                grown.setdefault(canonical_form(bigger), bigger)
        levels.append(tuple(grown.values()))
        logger.debug("%d graphs on %d vertices", len(grown), n + 1)
    return tuple(levels)


def enumerate_graphs(max_n: int) -> GraphSet:
    """
    All graphs on 1..max_n vertices up to isomorphism.

    Args:
        max_n: Largest vertex count, at most ``limits.enumeration_max_n``

    Returns:
        GraphSet of every graph with 1..max_n vertices

    Raises:
        GraphSizeError: If max_n exceeds the bound
    """
    _check_bound("enumerate_graphs", max_n, ToolkitConfig.get().limits.enumeration_max_n)
    levels = _graphs_by_order(max_n)
    return GraphSet(graph for level in levels[1:] for graph in level)


def enumerate_connected(max_n: int) -> GraphSet:
    """
    All connected graphs on 1..max_n vertices up to isomorphism.

    Args:
        max_n: Largest vertex count, 1 <= max_n <= ``limits.enumeration_max_n``

    Returns:
        GraphSet of the connected graphs; there are 1, 1, 2, 6, 21, 112, 853
        of them on 1..7 vertices

    Raises:
        ContractError: If max_n < 1
    """
    if max_n < 1:
        raise ContractError(f"max_n must be at least 1, got {max_n}")
    return enumerate_graphs(max_n).filter(lambda graph: graph.is_connected())


# ----------------------------------------------------------------------
# Trees and forests
# ----------------------------------------------------------------------

@lru_cache(maxsize=None)
def _trees_by_edges(max_edges: int) -> Tuple[Tuple[Graph, ...], ...]:
    """levels[m] holds one tree per isomorphism class with m edges."""
    levels: List[Tuple[Graph, ...]] = [(Graph.empty(1),)]
    for m in range(max_edges):
        grown: Dict[CanonicalForm, Graph] = {}
        for tree in levels[m]:
            for v in range(tree.n):
                bigger = tree.with_vertex(1 << v)
                grown.setdefault(canonical_form(bigger), bigger)
        levels.append(tuple(grown.values()))
    return tuple(levels)


def leaf_count(graph: Graph) -> int:
    return sum(1 for d in graph.degrees() if d == 1)


def _tree_allowed(tree: Graph, constraint: ForestConstraint) -> bool:
    if constraint is ForestConstraint.MAX_DEGREE_3:
        return tree.max_degree() <= 3
    if constraint is ForestConstraint.MAX_3_LEAVES_PER_COMPONENT:
        return leaf_count(tree) <= 3
    return True


def _multisets(trees: Sequence[Graph], budget: int, start: int) -> Iterator[List[Graph]]:
    """Non-empty multisets of trees (by non-decreasing index) with at most ``budget`` edges."""
    for index in range(start, len(trees)):
        tree = trees[index]
        if tree.edge_count > budget:
            continue
        yield [tree]
        for rest in _multisets(trees, budget - tree.edge_count, index):
            yield [tree] + rest


def enumerate_forests(max_edges: int, constraint: ForestConstraint = ForestConstraint.NONE) -> GraphSet:
    """
    Forests without isolated vertices, up to isomorphism.

    Args:
        max_edges: Largest edge count, at most ``limits.forest_max_edges``
        constraint: Restriction every component must satisfy

    Returns:
        GraphSet keyed by component forms, holding every forest with
        1..max_edges edges whose trees all satisfy the constraint
    """
    _check_bound("enumerate_forests", max_edges, ToolkitConfig.get().limits.forest_max_edges)
    levels = _trees_by_edges(max_edges)
    trees = [tree for level in levels[1:] for tree in level if _tree_allowed(tree, constraint)]

    forests = []
    for multiset in _multisets(trees, max_edges, 0):
        forest = multiset[0]
        for tree in multiset[1:]:
            forest = forest.disjoint_union(tree)
        forests.append(forest)
    return GraphSet(forests, key=component_form)


# ----------------------------------------------------------------------
# Hereditary classes given by forbidden induced subgraphs
# ----------------------------------------------------------------------

def _embeds_through(graph: Graph, patterns: Sequence[Graph], vertex: int) -> bool:
    return any(
        next(iter_induced_embeddings(graph, pattern, anchor=vertex), None) is not None
        for pattern in patterns
    )


def enumerate_free_connected(max_n: int, patterns: Sequence[Graph]) -> GraphSet:
    """
    Connected graphs on 1..max_n vertices with no induced member of ``patterns``.

    Every connected graph has a vertex whose removal leaves it connected, so each
    member grows from a smaller member by one vertex; only embeddings through the
    new vertex need checking.

    Args:
        max_n: Largest vertex count, at most ``limits.free_enumeration_max_n``
        patterns: Forbidden induced subgraphs

    Returns:
        GraphSet of the connected members
    """
    _check_bound(
        "enumerate_free_connected", max_n, ToolkitConfig.get().limits.free_enumeration_max_n
    )
    if max_n < 1:
        return GraphSet([])
    single = Graph.empty(1)
    if _embeds_through(single, patterns, 0):
        return GraphSet([])

    levels: List[List[Graph]] = [[single]]
    for n in range(1, max_n):
        grown: Dict[CanonicalForm, Graph] = {}
        for graph in levels[-1]:
            for neighbors in range(1, 1 << n):
                bigger = graph.with_vertex(neighbors)
                if _embeds_through(bigger, patterns, n):
                    continue
                grown.setdefault(canonical_form(bigger), bigger)
        if not grown:
            break
        levels.append(list(grown.values()))
        logger.debug("%d free connected graphs on %d vertices", len(grown), n + 1)
    return GraphSet(graph for level in levels for graph in level)
