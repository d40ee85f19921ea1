"""
Coloring graphs that become easy after deleting a few vertices.

If G minus a small set V lies in an O_p-free class X with an exact solver, then
chi(G) is the minimum, over families of disjoint independent sets that each meet
V and together cover V, of (number of sets) + chi of what is left. Each set has
at most p - 1 vertices outside V, so the families are polynomially many.

The search grows the family one class at a time. The next class always contains
the lowest uncovered vertex of V and is a maximal independent set of the
vertices still available: enlarging a class of an optimal coloring never costs a
color, so this loses nothing. Classes that differ only by swapping twins outside
V lead to isomorphic subproblems and are explored once.
"""
import logging
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from chromatic.coloring import ChromaticResult, Coloring, check_proper, lift
from chromatic.exact import clique_number
from core.bits import VertexSet, iter_bits, lowest, popcount, to_list
from core.errors import ContractError
from core.graph import Graph

logger = logging.getLogger(__name__)

InnerSolver = Callable[[Graph], Coloring]


def maximal_independent_sets(graph: Graph, candidates: VertexSet) -> Iterator[VertexSet]:
    """
    Maximal independent sets of the subgraph induced by ``candidates``.

    Bron-Kerbosch with pivoting, run on the complement.
    """

    def expand(chosen: int, pool: int, excluded: int) -> Iterator[VertexSet]:
        if not pool:
            if not excluded:
                yield chosen
            return
        pivot = max(
            iter_bits(pool | excluded),
            key=lambda u: (popcount(pool & ~graph.adj[u] & ~(1 << u)), -u),
        )
        for v in iter_bits(pool & (graph.adj[pivot] | 1 << pivot)):
            non_neighbors = ~graph.adj[v] & ~(1 << v)
            yield from expand(chosen | 1 << v, pool & non_neighbors, excluded & non_neighbors)
            pool &= ~(1 << v)
            excluded |= 1 << v

    yield from expand(0, candidates, 0)


def twin_representatives(graph: Graph, protected: VertexSet) -> List[int]:
    """
    Map every vertex outside ``protected`` to the lowest vertex of its twin class.

    Vertices in ``protected`` map to themselves.
    """
    representative = list(range(graph.n))
    open_seen: Dict[int, int] = {}
    closed_seen: Dict[int, int] = {}
    for v in range(graph.n):
        if protected >> v & 1:
            continue
        open_key = graph.adj[v]
        closed_key = graph.adj[v] | 1 << v
        if open_key in open_seen:
            representative[v] = open_seen[open_key]
        elif closed_key in closed_seen:
            representative[v] = closed_seen[closed_key]
        else:
            open_seen[open_key] = v
            closed_seen[closed_key] = v
    return representative


class _DeletionSetSearch:
    """Branch and bound over families of color classes meeting V."""

    def __init__(self, graph: Graph, deleted: VertexSet, p: int, inner: InnerSolver) -> None:
        self.graph = graph
        self.deleted = deleted & graph.vertex_mask
        self.p = p
        self.inner = inner
        self.representative = twin_representatives(graph, self.deleted)
        # Inner results per remaining vertex set, confined to this search
        self.inner_cache: Dict[VertexSet, Coloring] = {}
        self.best_k: Optional[int] = None
        self.best_colors: Optional[List[int]] = None
        self.lower_bound = 0

    def inner_coloring(self, mask: VertexSet) -> Coloring:
        if mask not in self.inner_cache:
            sub, _ = self.graph.induced(mask)
            self.inner_cache[mask] = self.inner(sub)
        return self.inner_cache[mask]

    def run(self) -> ChromaticResult:
        outside = self.graph.vertex_mask & ~self.deleted
        self.lower_bound = max(clique_number(self.graph), self.inner_coloring(outside).k)
        self._branch([], self.graph.vertex_mask)
        assert self.best_k is not None and self.best_colors is not None
        coloring = check_proper(self.graph, Coloring.from_assignment(self.best_colors))
        return coloring.k, coloring

    def _done(self) -> bool:
        return self.best_k is not None and self.best_k <= self.lower_bound

    def _branch(self, classes: List[VertexSet], available: VertexSet) -> None:
        uncovered = available & self.deleted
        rest = available & ~self.deleted
        rest_coloring = self.inner_coloring(rest)
        bound = len(classes) + rest_coloring.k
        if self.best_k is not None and bound >= self.best_k:
            return

        if not uncovered:
            colors = [-1] * self.graph.n
            for color, members in enumerate(classes):
                for v in iter_bits(members):
                    colors[v] = color
            lift(rest_coloring, to_list(rest), colors, offset=len(classes))
            self.best_k, self.best_colors = bound, colors
            logger.debug("family of %d classes gives %d colors", len(classes), bound)
            return

        v = lowest(uncovered)
        pool = available & ~self.graph.adj[v] & ~(1 << v)
        explored = set()
        for members in maximal_independent_sets(self.graph, pool):
            color_class = members | 1 << v
            outside_part = color_class & ~self.deleted
            if popcount(outside_part) >= self.p:
                raise ContractError(
                    f"graph minus the deletion set has an independent set of size {self.p}",
                    to_list(outside_part),
                )
            key = tuple(sorted(self.representative[u] for u in iter_bits(color_class)))
            if key in explored:
                continue
            explored.add(key)
            self._branch(classes + [color_class], available & ~color_class)
            if self._done():
                return


def solve_with_deletion_set(
    graph: Graph, deleted: VertexSet, p: int, inner: InnerSolver
) -> ChromaticResult:
    """
    Compute chi(G) from an exact solver for G minus a small vertex set.

    Args:
        graph: Graph to color
        deleted: Vertex set V whose deletion leaves a graph of the easy class
        p: The easy class is O_p-free
        inner: Exact optimal coloring for every induced subgraph of G - V

    Returns:
        Tuple of (chromatic number, optimal coloring)

    Raises:
        ContractError: If G - V has an independent set of size p, or ``inner``
            rejects a subgraph of G - V
    """
    if graph.n == 0:
        return 0, Coloring.empty()
    return _DeletionSetSearch(graph, deleted, p, inner).run()
