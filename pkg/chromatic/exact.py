"""
Exact chromatic number by branch and bound.

A maximum clique gives the lower bound and is precolored, DSATUR greedy gives the
upper bound, and DSATUR backtracking decides each k in between.
"""
import logging
from typing import List, Optional

from chromatic.coloring import ChromaticResult, Coloring, check_proper
from core.bits import VertexSet, iter_bits, popcount
from core.config import ToolkitConfig
from core.errors import GraphSizeError
from core.graph import Graph

logger = logging.getLogger(__name__)


def max_clique(graph: Graph) -> VertexSet:
    """
    Maximum clique by Bron-Kerbosch with pivoting on bit rows.

    Args:
        graph: Any graph

    Returns:
        Vertex set of a maximum clique (empty for the empty graph)
    """
    best = [0, 0]  # [mask, size]

    def expand(clique: int, size: int, candidates: int) -> None:
        if not candidates:
            if size > best[1]:
                best[0], best[1] = clique, size
            return
        if size + popcount(candidates) <= best[1]:
            return
        pivot = max(iter_bits(candidates), key=lambda u: popcount(candidates & graph.adj[u]))
        for v in iter_bits(candidates & ~graph.adj[pivot]):
            expand(clique | 1 << v, size + 1, candidates & graph.adj[v])
            candidates &= ~(1 << v)

    expand(0, 0, graph.vertex_mask)
    return best[0]


def clique_number(graph: Graph) -> int:
    return popcount(max_clique(graph))


def _saturation(graph: Graph, v: int, classes: List[int], used: int) -> int:
    row = graph.adj[v]
    return sum(1 for c in range(used) if row & classes[c])


def dsatur(graph: Graph) -> Coloring:
    """Greedy DSATUR coloring; ties go to higher uncolored degree, then lower index."""
    colors = [-1] * graph.n
    classes: List[int] = []
    uncolored = graph.vertex_mask
    while uncolored:
        v = max(
            iter_bits(uncolored),
            key=lambda u: (
                _saturation(graph, u, classes, len(classes)),
                popcount(graph.adj[u] & uncolored),
                -u,
            ),
        )
        color = next((c for c in range(len(classes)) if not graph.adj[v] & classes[c]), len(classes))
        if color == len(classes):
            classes.append(0)
        classes[color] |= 1 << v
        colors[v] = color
        uncolored &= ~(1 << v)
    return Coloring.from_assignment(colors)


class _KColoringSearch:
    """DSATUR backtracking for a fixed number of colors."""

    def __init__(self, graph: Graph, k: int) -> None:
        self.graph = graph
        self.k = k
        self.colors = [-1] * graph.n
        self.classes = [0] * k

    def precolor(self, clique: VertexSet) -> bool:
        for color, v in enumerate(iter_bits(clique)):
            if color >= self.k:
                return False
            self.colors[v] = color
            self.classes[color] |= 1 << v
        return True

    def solve(self, uncolored: int, used: int) -> bool:
        if not uncolored:
            return True
        graph = self.graph
        chosen = -1
        chosen_key = None
        for v in iter_bits(uncolored):
            saturation = _saturation(graph, v, self.classes, used)
            if saturation >= self.k:
                return False
            key = (saturation, popcount(graph.adj[v] & uncolored))
            if chosen_key is None or key > chosen_key:
                chosen, chosen_key = v, key

        bit = 1 << chosen
        # A fresh color is only ever the next unused one
        for color in range(min(used + 1, self.k)):
            if graph.adj[chosen] & self.classes[color]:
                continue
            self.colors[chosen] = color
            self.classes[color] |= bit
            if self.solve(uncolored & ~bit, max(used, color + 1)):
                return True
            self.classes[color] &= ~bit
            self.colors[chosen] = -1
        return False


def k_coloring(graph: Graph, k: int, clique: VertexSet = 0) -> Optional[Coloring]:
    """
    Find a proper coloring with at most k colors.

    Args:
        graph: Graph to color
        k: Number of available colors
        clique: Optional clique of ``graph`` to precolor with colors 0, 1, ...

    Returns:
        A coloring using at most k colors, or None if none exists
    """
    if graph.n == 0:
        return Coloring.empty()
    if k <= 0:
        return None
    search = _KColoringSearch(graph, k)
    if not search.precolor(clique):
        return None
    if not search.solve(graph.vertex_mask & ~clique, popcount(clique)):
        return None
    return Coloring.from_assignment(search.colors)


def chromatic_exact(graph: Graph) -> ChromaticResult:
    """
    Compute the chromatic number exactly.

    Args:
        graph: Graph with at most ``limits.exact_max_n`` vertices

    Returns:
        Tuple of (chromatic number, optimal coloring)

    Raises:
        GraphSizeError: If the graph is too large
    """
    bound = ToolkitConfig.get().limits.exact_max_n
    if graph.n > bound:
        raise GraphSizeError("chromatic_exact", bound, graph.n)
    if graph.n == 0:
        return 0, Coloring.empty()

    clique = max_clique(graph)
    greedy = dsatur(graph)
    logger.debug("exact search between %d and %d colors", popcount(clique), greedy.k)
    for k in range(popcount(clique), greedy.k):
        coloring = k_coloring(graph, k, clique)
        if coloring is not None:
            return k, check_proper(graph, coloring)
    return greedy.k, check_proper(graph, greedy)
