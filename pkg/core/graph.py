"""
Simple undirected graphs stored as bit rows.

Vertex ``v`` of a graph with ``n`` vertices has the neighbour set ``adj[v]``, an int
whose bit ``u`` is set when ``u`` and ``v`` are adjacent. Python ints grow as needed,
so the same representation serves the 5-vertex catalog graphs and the solver inputs.
"""
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from core.bits import VertexSet, iter_bits, lowest, popcount
from core.errors import GraphConstructionError

IndexMap = Tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on the vertices 0..n-1."""
    n: int
    adj: Tuple[int, ...]

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """
        Build a graph from an edge list.

        Args:
            n: Number of vertices
            edges: Vertex pairs; duplicates are collapsed

        Returns:
            Graph with exactly the given edges

        Raises:
            GraphConstructionError: On an out-of-range endpoint or a self-loop
        """
        if n < 0:
            raise GraphConstructionError(f"vertex count must be non-negative, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphConstructionError(
                    f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}", (u, v)
                )
            if u == v:
                raise GraphConstructionError(f"edge ({u}, {v}) is a self-loop", (u, v))
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        """Edgeless graph O_n."""
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        """Complete graph K_n."""
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        """Path P_n."""
        return cls.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        """Chordless cycle C_n (n >= 3)."""
        if n < 3:
            raise GraphConstructionError(f"a cycle needs at least 3 vertices, got {n}")
        return cls.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    @property
    def vertex_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def neighbors(self, v: int) -> VertexSet:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> List[int]:
        return [popcount(row) for row in self.adj]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def edges(self) -> List[Tuple[int, int]]:
        """Edges (u, v) with u < v in ascending order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def is_clique(self, mask: VertexSet) -> bool:
        for v in iter_bits(mask):
            if (mask & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    def is_independent(self, mask: VertexSet) -> bool:
        return all(not (self.adj[v] & mask) for v in iter_bits(mask))

    def is_complete(self) -> bool:
        return self.is_clique(self.vertex_mask)

    def is_connected(self) -> bool:
        return self.n <= 1 or self.component_of(0) == self.vertex_mask

    def is_forest(self) -> bool:
        return self.edge_count == self.n - len(self.components())

    def component_of(self, v: int, within: VertexSet = -1) -> VertexSet:
        """Vertex set of the component containing v, restricted to ``within``."""
        within &= self.vertex_mask
        seen = 1 << v
        frontier = seen
        while frontier:
            reach = 0
            for u in iter_bits(frontier):
                reach |= self.adj[u]
            frontier = reach & within & ~seen
            seen |= frontier
        return seen

    def components(self) -> List[VertexSet]:
        """
        Partition the vertices into connected components.

        Returns:
            Component vertex sets ordered by their smallest member
        """
        result = []
        remaining = self.vertex_mask
        while remaining:
            comp = self.component_of(lowest(remaining))
            result.append(comp)
            remaining &= ~comp
        return result

    # ------------------------------------------------------------------
    # Operations returning new graphs
    # ------------------------------------------------------------------

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def disjoint_union(self, other: "Graph") -> "Graph":
        """Disjoint union; the vertices of ``other`` are shifted by ``self.n``."""
        shift = self.n
        return Graph(self.n + other.n, self.adj + tuple(row << shift for row in other.adj))

    def induced(self, keep: VertexSet) -> Tuple["Graph", IndexMap]:
        """
        Induced subgraph on ``keep``, reindexed densely in ascending vertex order.

        Args:
            keep: Vertex set to keep

        Returns:
            Tuple of (subgraph, index map) where index_map[new] = old
        """
        kept = tuple(iter_bits(keep & self.vertex_mask))
        position = {old: new for new, old in enumerate(kept)}
        rows = []
        for old in kept:
            row = 0
            for u in iter_bits(self.adj[old] & keep):
                row |= 1 << position[u]
            rows.append(row)
        return Graph(len(kept), tuple(rows)), kept

    def delete_vertices(self, vertices: VertexSet) -> Tuple["Graph", IndexMap]:
        """
        Delete a vertex set.

        Args:
            vertices: Vertices to delete

        Returns:
            Tuple of (G minus vertices, index map) where index_map[new] = old
        """
        return self.induced(self.vertex_mask & ~vertices)

    def line_graph(self) -> "Graph":
        """Line graph; vertex i stands for the i-th edge of ``edges()``."""
        edges = self.edges()
        incident = [0] * self.n
        for i, (u, v) in enumerate(edges):
            incident[u] |= 1 << i
            incident[v] |= 1 << i
        rows = tuple(
            (incident[u] | incident[v]) & ~(1 << i) for i, (u, v) in enumerate(edges)
        )
        return Graph(len(edges), rows)

    def with_vertex(self, neighbors: VertexSet) -> "Graph":
        """Add a vertex n adjacent to ``neighbors``."""
        neighbors &= self.vertex_mask
        new_bit = 1 << self.n
        rows = tuple(row | new_bit if neighbors >> v & 1 else row for v, row in enumerate(self.adj))
        return Graph(self.n + 1, rows + (neighbors,))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Relabel vertex v as perm[v]."""
        rows = [0] * self.n
        for u, v in self.edges():
            rows[perm[u]] |= 1 << perm[v]
            rows[perm[v]] |= 1 << perm[u]
        return Graph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"
