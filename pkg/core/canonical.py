"""
Canonical forms for small graphs.

The form is the lexicographically smallest adjacency code over all vertex orders
that list the vertices by their refined color. Colors come from iterated degree
refinement, which depends only on the isomorphism class, so the set of admissible
orders is itself label-invariant. The search only branches among the candidates
that minimize the next code word and skips candidates that are twins of one
already tried.
"""
from typing import List, Optional, Sequence

from core.bits import iter_bits
from core.config import ToolkitConfig
from core.errors import GraphSizeError
from core.graph import Graph

CanonicalForm = bytes


def refine_colors(graph: Graph) -> List[int]:
    """
    Iterated degree refinement.

    Args:
        graph: Graph to color

    Returns:
        Color index per vertex; equal-colored vertices of isomorphic graphs
        correspond under every isomorphism
    """
    colors = graph.degrees()
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in iter_bits(graph.adj[v]))))
            for v in range(graph.n)
        ]
        ranking = {sig: rank for rank, sig in enumerate(sorted(set(signatures)))}
        refined = [ranking[sig] for sig in signatures]
        if len(ranking) == len(set(colors)):
            return refined
        colors = refined


def _are_twins(graph: Graph, u: int, w: int) -> bool:
    # Swapping two twins is an automorphism, so only one of them needs exploring
    return graph.adj[u] & ~(1 << w) == graph.adj[w] & ~(1 << u)


class _CanonicalSearch:
    """Depth-first search for the smallest admissible adjacency code."""

    def __init__(self, graph: Graph) -> None:
        self.graph = graph
        self.colors = refine_colors(graph)
        self.best: Optional[List[int]] = None

    def run(self) -> List[int]:
        self._extend([], [], 0)
        assert self.best is not None
        return self.best

    def _row(self, v: int, order: Sequence[int]) -> int:
        n = self.graph.n
        row = 0
        for position, u in enumerate(order):
            if self.graph.adj[v] >> u & 1:
                row |= 1 << (n - 1 - position)
        return row

    def _extend(self, order: List[int], code: List[int], placed: int) -> None:
        graph = self.graph
        depth = len(order)
        if depth == graph.n:
            if self.best is None or code < self.best:
                self.best = list(code)
            return

        remaining = [v for v in range(graph.n) if not placed >> v & 1]
        next_color = min(self.colors[v] for v in remaining)
        rows = {v: self._row(v, order) for v in remaining if self.colors[v] == next_color}
        low = min(rows.values())
        if self.best is not None and code + [low] > self.best[: depth + 1]:
            return

        tried: List[int] = []
        for v in sorted(rows):
            if rows[v] != low or any(_are_twins(graph, t, v) for t in tried):
                continue
            tried.append(v)
            order.append(v)
            code.append(low)
            self._extend(order, code, placed | 1 << v)
            order.pop()
            code.pop()


def canonical_form(graph: Graph) -> CanonicalForm:
    """
    Compute the canonical form of a small graph.

    Args:
        graph: Graph with at most ``limits.canonical_max_n`` vertices

    Returns:
        Byte string equal for two graphs exactly when they are isomorphic

    Raises:
        GraphSizeError: If the graph is too large
    """
    bound = ToolkitConfig.get().limits.canonical_max_n
    if graph.n > bound:
        raise GraphSizeError("canonical_form", bound, graph.n)
    if graph.n == 0:
        return bytes([0])
    code = _CanonicalSearch(graph).run()
    return bytes([graph.n]) + b"".join(row.to_bytes(2, "big") for row in code)


def component_form(graph: Graph) -> CanonicalForm:
    """
    Canonical key built from the sorted canonical forms of the components.

    Each component must respect the canonical size bound; the graph as a whole
    may be larger, which is what forest enumeration needs.
    """
    forms = sorted(canonical_form(graph.induced(comp)[0]) for comp in graph.components())
    return b"".join(forms) if forms else bytes([0])


def are_isomorphic(first: Graph, second: Graph) -> bool:
    if first.n != second.n or first.edge_count != second.edge_count:
        return False
    if sorted(first.degrees()) != sorted(second.degrees()):
        return False
    return canonical_form(first) == canonical_form(second)
