"""
The limit classes F, S, T, T', co(T) and membership tests for them.

F and S are recognized directly. T, T' and co(T) are recognized by looking the
graph up among the enumerated members of its size.
"""
import logging
from enum import Enum
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence

from atlas.enumeration import ForestConstraint, GraphSet, enumerate_forests
from core.bits import VertexSet, iter_bits, mask_of, popcount
from core.canonical import canonical_form
from core.config import ToolkitConfig
from core.errors import GraphSizeError
from core.graph import Graph
from embedding.induced import find_forbidden

logger = logging.getLogger(__name__)


class ClassId(Enum):
    """Limit classes of the coloring problem."""
    F = "F"
    S = "S"
    T = "T"
    T_PRIME = "T'"
    CO_T = "co(T)"


# Classes Y whose exclusion by both forbidden graphs makes coloring NP-complete
LIMIT_CLASSES = (ClassId.F, ClassId.T_PRIME, ClassId.CO_T)


def is_S_member(graph: Graph) -> bool:
    """Forest with at most three leaves in every component."""
    if not graph.is_forest():
        return False
    for component in graph.components():
        leaves = sum(1 for v in iter_bits(component) if graph.degree(v) == 1)
        if leaves > 3:
            return False
    return True


def _padded(graphs: Iterable[Graph], max_n: int) -> List[Graph]:
    """Every graph plus isolated vertices, up to ``max_n`` vertices in total."""
    result = []
    for graph in graphs:
        for extra in range(max_n - graph.n + 1):
            result.append(graph.disjoint_union(Graph.empty(extra)))
    return result


def _check_lookup_bound(what: str, max_n: int) -> None:
    bound = ToolkitConfig.get().limits.class_lookup_max_n
    if max_n > bound:
        raise GraphSizeError(what, bound, max_n)


@lru_cache(maxsize=None)
def _members(cls: ClassId, max_n: int) -> GraphSet:
    if cls in (ClassId.F, ClassId.S):
        constraint = ForestConstraint.NONE
        if cls is ClassId.S:
            constraint = ForestConstraint.MAX_3_LEAVES_PER_COMPONENT
        forests = enumerate_forests(max_n - 1, constraint) if max_n > 1 else GraphSet([])
        small = [forest for forest in forests if forest.n <= max_n]
        edgeless = [Graph.empty(n) for n in range(1, max_n + 1)]
        return GraphSet(_padded(small, max_n) + edgeless)

    if cls is ClassId.CO_T:
        return GraphSet(graph.complement() for graph in _members(ClassId.T, max_n))

    constraint = ForestConstraint.MAX_DEGREE_3
    if cls is ClassId.T:
        constraint = ForestConstraint.MAX_3_LEAVES_PER_COMPONENT
    # A forest with m edges has an m-vertex line graph
    members = GraphSet(forest.line_graph() for forest in enumerate_forests(max_n, constraint))
    logger.debug("%s has %d members on at most %d vertices", cls.value, len(members), max_n)
    return members


def class_members(cls: ClassId, max_n: int) -> GraphSet:
    """
    Members of a limit class with 1..max_n vertices, up to isomorphism.

    Args:
        cls: Class identifier
        max_n: Largest vertex count, at most ``limits.class_lookup_max_n``

    Returns:
        GraphSet of the members

    Raises:
        GraphSizeError: If max_n exceeds the bound
    """
    _check_lookup_bound("class_members", max_n)
    if max_n < 1:
        return GraphSet([])
    return _members(cls, max_n)


def in_class(graph: Graph, cls: ClassId) -> bool:
    """
    Test membership in a limit class.

    F and S are tested directly for any size; the other classes are looked up
    among the enumerated members with the same vertex count.

    Args:
        graph: Graph to test
        cls: Class identifier

    Returns:
        True if the graph belongs to the class

    Raises:
        GraphSizeError: If a lookup class is asked about a graph that is too large
    """
    if cls is ClassId.F:
        return graph.is_forest()
    if cls is ClassId.S:
        return is_S_member(graph)
    if graph.n == 0:
        return True
    _check_lookup_bound(f"in_class({cls.value})", graph.n)
    return _members(cls, graph.n).contains_form(canonical_form(graph))


def limit_class_obstruction(graphs: Sequence[Graph]) -> Optional[ClassId]:
    """
    Find a limit class that contains none of the given graphs.

    If such a class exists, every Free(graphs) contains the whole class and the
    coloring problem stays NP-complete there.

    Args:
        graphs: Forbidden graphs, each within the lookup bound

    Returns:
        The first class among F, T', co(T) avoided by every graph, or None
    """
    for cls in LIMIT_CLASSES:
        if not any(in_class(graph, cls) for graph in graphs):
            return cls
    return None


def deletion_set(graph: Graph, patterns: Sequence[Graph], q: int) -> Optional[VertexSet]:
    """
    Smallest vertex set of size at most q whose removal leaves a Free(patterns) graph.

    Branches on the vertices of a forbidden embedding, with iterative deepening
    on the budget so the first hit is a smallest set.

    Args:
        graph: Graph with at most ``limits.deletion_search_max_n`` vertices
        patterns: Forbidden induced subgraphs
        q: Budget

    Returns:
        The vertex set, or None if more than q deletions are needed

    Raises:
        GraphSizeError: If the graph is too large
    """
    bound = ToolkitConfig.get().limits.deletion_search_max_n
    if graph.n > bound:
        raise GraphSizeError("deletion_set", bound, graph.n)

    def search(removed: VertexSet, budget: int) -> Optional[VertexSet]:
        rest, index_map = graph.delete_vertices(removed)
        hit = find_forbidden(rest, patterns)
        if hit is None:
            return removed
        if budget == 0:
            return None
        image = mask_of(index_map[v] for v in hit[1])
        for v in iter_bits(image):
            found = search(removed | 1 << v, budget - 1)
            if found is not None:
                return found
        return None

    for budget in range(q + 1):
        found = search(0, budget)
        if found is not None:
            logger.debug("deletion set of size %d found", popcount(found))
            return found
    return None
