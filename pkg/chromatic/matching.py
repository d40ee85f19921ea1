"""
Maximum matching and the matching-based coloring of O3-free graphs.

In an O3-free graph every color class has at most two vertices, and a class of
two is a non-edge, i.e. an edge of the complement. An optimal coloring is
therefore a maximum matching of the complement plus singletons.
"""
import logging
from typing import List, Optional, Tuple

import networkx as nx

from chromatic.coloring import Coloring, check_proper
from core.bits import iter_bits
from core.errors import ContractError
from core.graph import Graph

logger = logging.getLogger(__name__)

Matching = List[Tuple[int, int]]


def to_networkx(graph: Graph) -> "nx.Graph":
    """Copy a graph into networkx, keeping vertex labels 0..n-1."""
    result = nx.Graph()
    result.add_nodes_from(range(graph.n))
    result.add_edges_from(graph.edges())
    return result


def max_matching(graph: Graph) -> Matching:
    """
    Maximum-cardinality matching of a general graph (blossom algorithm).

    Args:
        graph: Any graph

    Returns:
        Matched edges (u, v) with u < v, sorted
    """
    matched = nx.max_weight_matching(to_networkx(graph), maxcardinality=True)
    return sorted((min(u, v), max(u, v)) for u, v in matched)


def find_independent_triple(graph: Graph) -> Optional[Tuple[int, int, int]]:
    """Lexicographically first independent set of size 3, if any."""
    full = graph.vertex_mask
    for u in range(graph.n):
        later = full & ~graph.adj[u] & ~((2 << u) - 1)
        for v in iter_bits(later):
            rest = later & ~graph.adj[v] & ~((2 << v) - 1)
            if rest:
                return u, v, (rest & -rest).bit_length() - 1
    return None


def is_o3_free(graph: Graph) -> bool:
    return find_independent_triple(graph) is None


def color_O3_free(graph: Graph) -> Coloring:
    """
    Optimal coloring of an O3-free graph.

    Args:
        graph: Graph without three pairwise non-adjacent vertices

    Returns:
        Proper coloring with n - |maximum matching of the complement| colors

    Raises:
        ContractError: If the graph has an independent triple (the witness)
    """
    triple = find_independent_triple(graph)
    if triple is not None:
        raise ContractError("graph has an independent set of size 3", triple)

    matching = max_matching(graph.complement())
    partner = {}
    for u, v in matching:
        partner[u] = v
        partner[v] = u
    logger.debug("complement matching of size %d on %d vertices", len(matching), graph.n)

    colors = [-1] * graph.n
    next_color = 0
    for v in range(graph.n):
        if colors[v] != -1:
            continue
        colors[v] = next_color
        if v in partner:
            colors[partner[v]] = next_color
        next_color += 1
    return check_proper(graph, Coloring.from_assignment(colors))
