"""
Induced-subgraph embeddings by backtracking over bit rows.

An embedding maps pattern vertex i to host vertex ``embedding[i]`` and preserves
edges and non-edges. Pattern vertices are placed in a connectivity-first order
(each next vertex has as many already-placed neighbours as possible), so the
candidate set of every step is cut down by adjacency rows of the images placed so
far. Host candidates are tried in ascending order, which makes the first embedding
found deterministic.
"""
import logging
from typing import Iterator, List, Optional, Sequence, Tuple

from core.bits import iter_bits, popcount
from core.errors import ContractError
from core.graph import Graph

logger = logging.getLogger(__name__)

Embedding = Tuple[int, ...]


def search_order(pattern: Graph, first: Optional[int] = None) -> List[int]:
    """
    Order in which pattern vertices are placed.

    Args:
        pattern: Pattern graph
        first: Vertex to place first; defaults to a maximum-degree vertex

    Returns:
        Permutation of the pattern vertices
    """
    if pattern.n == 0:
        return []
    degrees = pattern.degrees()
    if first is None:
        first = max(range(pattern.n), key=lambda v: (degrees[v], -v))
    order = [first]
    placed = 1 << first
    while len(order) < pattern.n:
        best = max(
            (v for v in range(pattern.n) if not placed >> v & 1),
            key=lambda v: (popcount(pattern.adj[v] & placed), degrees[v], -v),
        )
        order.append(best)
        placed |= 1 << best
    return order


class _EmbeddingSearch:
    """Backtracking state for one (host, pattern, order) triple."""

    def __init__(self, host: Graph, pattern: Graph, order: Sequence[int]) -> None:
        self.host = host
        self.pattern = pattern
        self.order = list(order)
        host_degrees = host.degrees()
        # degree_ok[p]: host vertices with at least the degree of pattern vertex p
        self.degree_ok = []
        for p in range(pattern.n):
            need = pattern.degree(p)
            self.degree_ok.append(
                sum(1 << v for v in range(host.n) if host_degrees[v] >= need)
            )
        # links[i]: (step j < i, adjacent?) for the pattern vertices placed before step i
        self.links: List[List[Tuple[int, bool]]] = []
        for i, p in enumerate(self.order):
            self.links.append([(j, pattern.has_edge(p, self.order[j])) for j in range(i)])

    def run(self, fixed: Optional[Tuple[int, int]] = None) -> Iterator[Embedding]:
        """
        Yield every embedding.

        Args:
            fixed: Optional (step, host vertex) forced at that step
        """
        if self.pattern.n > self.host.n:
            return
        images = [0] * self.pattern.n
        yield from self._extend(0, 0, images, fixed)

    def _extend(
        self, step: int, used: int, images: List[int], fixed: Optional[Tuple[int, int]]
    ) -> Iterator[Embedding]:
        if step == len(self.order):
            mapping = [0] * self.pattern.n
            for i, p in enumerate(self.order):
                mapping[p] = images[i]
            yield tuple(mapping)
            return

        p = self.order[step]
        candidates = self.degree_ok[p] & ~used & self.host.vertex_mask
        for j, adjacent in self.links[step]:
            row = self.host.adj[images[j]]
            candidates &= row if adjacent else ~row
            if not candidates:
                return
        if fixed is not None and fixed[0] == step:
            candidates &= 1 << fixed[1]

        for v in iter_bits(candidates):
            images[step] = v
            yield from self._extend(step + 1, used | 1 << v, images, fixed)


def iter_induced_embeddings(
    host: Graph, pattern: Graph, anchor: Optional[int] = None
) -> Iterator[Embedding]:
    """
    Enumerate induced embeddings of ``pattern`` into ``host``.

    Args:
        host: Host graph
        pattern: Pattern graph
        anchor: If given, only embeddings whose image contains this host vertex

    Returns:
        Iterator over embeddings as tuples indexed by pattern vertex
    """
    if anchor is None:
        yield from _EmbeddingSearch(host, pattern, search_order(pattern)).run()
        return
    # The anchor is the image of exactly one pattern vertex; try each in turn
    for p in range(pattern.n):
        search = _EmbeddingSearch(host, pattern, search_order(pattern, first=p))
        yield from search.run(fixed=(0, anchor))


def find_induced_embedding(host: Graph, pattern: Graph) -> Optional[Embedding]:
    """
    Find an induced embedding.

    Args:
        host: Host graph
        pattern: Pattern graph

    Returns:
        The first embedding in search order, or None if the pattern is not an
        induced subgraph of the host
    """
    return next(iter_induced_embeddings(host, pattern), None)


def is_induced_subgraph(pattern: Graph, host: Graph) -> bool:
    """pattern is an induced subgraph of host."""
    return find_induced_embedding(host, pattern) is not None


def find_forbidden(graph: Graph, patterns: Sequence[Graph]) -> Optional[Tuple[int, Embedding]]:
    """
    Find the first pattern that embeds.

    Returns:
        (pattern index, embedding) or None when the graph is free of all patterns
    """
    for index, pattern in enumerate(patterns):
        embedding = find_induced_embedding(graph, pattern)
        if embedding is not None:
            logger.debug("pattern %d embeds at %s", index, embedding)
            return index, embedding
    return None


def is_free(graph: Graph, patterns: Sequence[Graph]) -> bool:
    """True when no pattern is an induced subgraph of ``graph``."""
    return find_forbidden(graph, patterns) is None


def find_induced_cycle(graph: Graph, k: int) -> Optional[List[int]]:
    """
    Find an induced cycle of length k.

    Args:
        graph: Host graph
        k: Cycle length, at least 3

    Returns:
        The cycle's vertices in cycle order, or None
    """
    if k < 3:
        raise ContractError(f"cycle length must be at least 3, got {k}")
    embedding = find_induced_embedding(graph, Graph.cycle(k))
    return list(embedding) if embedding is not None else None


def find_induced_path(graph: Graph, k: int) -> Optional[List[int]]:
    """
    Find an induced path on k vertices.

    Args:
        graph: Host graph
        k: Number of path vertices, at least 1

    Returns:
        The path's vertices in path order, or None
    """
    if k < 1:
        raise ContractError(f"path length must be at least 1, got {k}")
    embedding = find_induced_embedding(graph, Graph.path(k))
    return list(embedding) if embedding is not None else None
