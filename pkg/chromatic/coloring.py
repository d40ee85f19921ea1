"""
Vertex colorings.
"""
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from core.bits import VertexSet, iter_bits
from core.errors import InternalInvariantError
from core.graph import Graph

# (chromatic number, witness coloring), the result shape of every solver
ChromaticResult = Tuple[int, "Coloring"]


@dataclass(frozen=True)
class Coloring:
    """
    Color per vertex, 0-based.

    Colors are numbered by first appearance in vertex order, so every color
    below ``k`` is used and two equal colorings compare equal.
    """
    colors: Tuple[int, ...]
    k: int

    @classmethod
    def from_assignment(cls, colors: Sequence[int]) -> "Coloring":
        """
        Normalize an arbitrary color assignment.

        Args:
            colors: Any hashable color label per vertex

        Returns:
            Coloring with colors renumbered by first appearance
        """
        renumber: Dict[int, int] = {}
        normalized = []
        for color in colors:
            if color not in renumber:
                renumber[color] = len(renumber)
            normalized.append(renumber[color])
        return cls(tuple(normalized), len(renumber))

    @classmethod
    def from_classes(cls, n: int, classes: Sequence[VertexSet]) -> "Coloring":
        """Coloring whose color classes are the given disjoint vertex sets covering 0..n-1."""
        colors = [-1] * n
        for index, members in enumerate(classes):
            for v in iter_bits(members):
                colors[v] = index
        if -1 in colors:
            raise InternalInvariantError(f"vertex {colors.index(-1)} is not in any color class")
        return cls.from_assignment(colors)

    @classmethod
    def empty(cls) -> "Coloring":
        return cls((), 0)

    def classes(self) -> List[VertexSet]:
        """Color classes as vertex sets, indexed by color."""
        result = [0] * self.k
        for v, color in enumerate(self.colors):
            result[color] |= 1 << v
        return result

    def is_proper(self, graph: Graph) -> bool:
        if len(self.colors) != graph.n:
            return False
        return all(self.colors[u] != self.colors[v] for u, v in graph.edges())


def check_proper(graph: Graph, coloring: Coloring) -> Coloring:
    """Return the coloring unchanged, raising if it is not proper for ``graph``."""
    if not coloring.is_proper(graph):
        raise InternalInvariantError(f"solver produced an improper coloring {coloring.colors}")
    return coloring


def lift(coloring: Coloring, index_map: Sequence[int], colors: List[int], offset: int = 0) -> None:
    """
    Copy a coloring of an induced subgraph into a full color list.

    Args:
        coloring: Coloring of the subgraph
        index_map: index_map[sub vertex] = vertex of the full graph
        colors: Full color list, written in place
        offset: Added to every color
    """
    for sub_vertex, vertex in enumerate(index_map):
        colors[vertex] = coloring.colors[sub_vertex] + offset
