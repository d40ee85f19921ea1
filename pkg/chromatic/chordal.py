"""
Chordal graph recognition and optimal coloring.

Maximum cardinality search (ties to the lowest index) visits the vertices; the
reverse of the visit order is a perfect elimination order exactly when the graph
is chordal. Coloring greedily in visit order gives every vertex a clique of
already-colored neighbours, so the greedy uses omega(G) colors.
"""
from typing import List, Optional, Tuple

from chromatic.coloring import Coloring, check_proper
from core.bits import iter_bits
from core.errors import ContractError
from core.graph import Graph

EliminationOrder = List[int]


def mcs_visit_order(graph: Graph) -> List[int]:
    """Maximum cardinality search visit order."""
    weight = [0] * graph.n
    visited = 0
    order = []
    for _ in range(graph.n):
        v = max(
            (u for u in range(graph.n) if not visited >> u & 1),
            key=lambda u: (weight[u], -u),
        )
        order.append(v)
        visited |= 1 << v
        for u in iter_bits(graph.adj[v] & ~visited):
            weight[u] += 1
    return order


def elimination_violation(graph: Graph, order: List[int]) -> Optional[Tuple[int, int, int]]:
    """
    Check a candidate perfect elimination order.

    Args:
        graph: Graph
        order: Candidate elimination order

    Returns:
        None if the order is perfect, else (a, v, b) where a and b are
        non-adjacent later neighbours of v
    """
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in iter_bits(graph.adj[v]) if position[u] > position[v]]
        if len(later) < 2:
            continue
        first = min(later, key=lambda u: position[u])
        for u in later:
            if u != first and not graph.has_edge(first, u):
                return first, v, u
    return None


def is_chordal(graph: Graph) -> Tuple[bool, Optional[EliminationOrder]]:
    """
    Recognize a chordal graph.

    Args:
        graph: Graph to test

    Returns:
        (True, perfect elimination order) or (False, None)
    """
    order = list(reversed(mcs_visit_order(graph)))
    if elimination_violation(graph, order) is None:
        return True, order
    return False, None


def color_chordal(graph: Graph) -> Coloring:
    """
    Optimal coloring of a chordal graph.

    Args:
        graph: Chordal graph

    Returns:
        Proper coloring with exactly omega(G) colors

    Raises:
        ContractError: If the graph is not chordal; the witness is a vertex with
            two non-adjacent later neighbours in the search order
    """
    visit = mcs_visit_order(graph)
    violation = elimination_violation(graph, list(reversed(visit)))
    if violation is not None:
        raise ContractError("graph is not chordal", violation)

    colors = [-1] * graph.n
    colored = 0
    for v in visit:
        taken = {colors[u] for u in iter_bits(graph.adj[v] & colored)}
        colors[v] = next(c for c in range(len(taken) + 1) if c not in taken)
        colored |= 1 << v
    return check_proper(graph, Coloring.from_assignment(colors))


def clique_bound_from_order(graph: Graph, order: EliminationOrder) -> int:
    """1 + the largest number of later neighbours; omega(G) for a perfect order."""
    position = {v: i for i, v in enumerate(order)}
    best = 0
    for v in order:
        later = sum(1 for u in iter_bits(graph.adj[v]) if position[u] > position[v])
        best = max(best, later + 1)
    return best if graph.n else 0
