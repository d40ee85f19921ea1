"""
Diamond implantation and the reduction to {K1,4, bull}-free graphs.

Implanting a diamond at x deletes x and adds y1..y4 where y1-y2-y3 and y2-y3-y4
are triangles, y1 takes over the neighbours in A and y4 those in B. Every proper
3-coloring gives y1 and y4 the same color, so 3-colorability is preserved both
ways. Applied to every non-pendant vertex of a triangle-free graph with maximum
degree 4, the result has no induced K1,4 and no induced bull.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from chromatic.coloring import Coloring
from chromatic.exact import k_coloring
from core.bits import VertexSet, iter_bits, popcount, to_list
from core.errors import ContractError, InternalInvariantError
from core.graph import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ImplantSite:
    """Vertex x and a split of its neighbourhood into A and B."""
    x: int
    a: VertexSet
    b: VertexSet

    def describe(self) -> str:
        return f"x={self.x} A={to_list(self.a)} B={to_list(self.b)}"


def _check_site(graph: Graph, site: ImplantSite) -> None:
    if not 0 <= site.x < graph.n:
        raise ContractError(f"implant vertex {site.x} is not in the graph")
    neighbors = graph.adj[site.x]
    if popcount(neighbors) < 2:
        raise ContractError(f"implant vertex {site.x} is pendant or isolated", [site.x])
    if not site.a or not site.b:
        raise ContractError("both parts of the neighbourhood split must be nonempty", [site.x])
    if site.a & site.b or site.a | site.b != neighbors:
        raise ContractError(
            f"A and B must partition the neighbourhood {to_list(neighbors)} of {site.x}", [site.x]
        )


def implant_with_map(graph: Graph, site: ImplantSite) -> Tuple[Graph, Tuple[int, ...]]:
    """
    Diamond implantation that also reports where the surviving vertices went.

    Returns:
        Tuple of (new graph, index map) where index_map[new] = old for the n - 1
        surviving vertices; y1..y4 are the last four vertices
    """
    _check_site(graph, site)
    rest, index_map = graph.delete_vertices(1 << site.x)
    position = {old: new for new, old in enumerate(index_map)}
    base = rest.n
    y1, y2, y3, y4 = base, base + 1, base + 2, base + 3
    edges = rest.edges()
    edges += [(position[a], y1) for a in iter_bits(site.a)]
    edges += [(position[b], y4) for b in iter_bits(site.b)]
    edges += [(y1, y2), (y1, y3), (y2, y3), (y2, y4), (y3, y4)]
    return Graph.from_edge_list(base + 4, edges), index_map


def diamond_implant(graph: Graph, site: ImplantSite) -> Graph:
    """
    Replace a vertex by a diamond wired to a split of its neighbourhood.

    Args:
        graph: Graph
        site: Non-pendant vertex x with A, B partitioning N(x)

    Returns:
        Graph with n + 3 vertices: x removed, the others reindexed in order,
        y1..y4 appended

    Raises:
        ContractError: If x is pendant or the split is not a partition into
            two nonempty parts
    """
    return implant_with_map(graph, site)[0]


def find_triangle_free_vertex(graph: Graph) -> Optional[int]:
    """Lowest vertex of degree at least 2 whose neighbourhood has no edge."""
    for v in range(graph.n):
        if graph.degree(v) >= 2 and graph.is_independent(graph.adj[v]):
            return v
    return None


def balanced_split(graph: Graph, x: int) -> ImplantSite:
    """Neighbours of x in ascending order, alternately into A and B."""
    a = b = 0
    for index, v in enumerate(iter_bits(graph.adj[x])):
        if index % 2 == 0:
            a |= 1 << v
        else:
            b |= 1 << v
    return ImplantSite(x, a, b)


def find_triangle(graph: Graph) -> Optional[Tuple[int, int, int]]:
    for u, v in graph.edges():
        common = graph.adj[u] & graph.adj[v]
        if common:
            return u, v, (common & -common).bit_length() - 1
    return None


def reduce_to_K14_bull_free(graph: Graph) -> Tuple[Graph, List[ImplantSite]]:
    """
    Implant diamonds until no vertex of degree >= 2 has an edgeless neighbourhood.

    Args:
        graph: Connected triangle-free graph with at least 2 vertices and
            maximum degree at most 4

    Returns:
        Tuple of (reduced graph, implant sites in application order); each site
        is given in the labels of the graph it was applied to

    Raises:
        ContractError: If a precondition fails; the witness is a triangle or a
            vertex of degree 5 or more with its neighbours
    """
    if graph.n < 2:
        raise ContractError(f"graph needs at least 2 vertices, has {graph.n}")
    if not graph.is_connected():
        raise ContractError("graph is not connected", to_list(graph.components()[1]))
    triangle = find_triangle(graph)
    if triangle is not None:
        raise ContractError("graph is not triangle-free", triangle)
    for v in range(graph.n):
        if graph.degree(v) > 4:
            raise ContractError(
                f"vertex {v} has degree {graph.degree(v)} > 4", [v] + to_list(graph.adj[v])
            )

    # origin[v]: vertex of the input graph, or -1 for diamond vertices
    origin = list(range(graph.n))
    current = graph
    trace: List[ImplantSite] = []
    while True:
        x = find_triangle_free_vertex(current)
        if x is None:
            break
        if origin[x] == -1:
            raise InternalInvariantError(f"diamond vertex {x} became an implant site")
        site = balanced_split(current, x)
        current, index_map = implant_with_map(current, site)
        origin = [origin[old] for old in index_map] + [-1] * 4
        trace.append(site)
        logger.debug("implanted a diamond at %s", site.describe())

    logger.info("reduced %d vertices to %d with %d implants", graph.n, current.n, len(trace))
    return current, trace


def three_coloring(graph: Graph) -> Optional[Coloring]:
    """A proper 3-coloring, or None if the graph is not 3-colorable."""
    return k_coloring(graph, 3)
