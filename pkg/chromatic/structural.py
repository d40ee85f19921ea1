"""
Structural solvers for the {claw, P5}-free, {claw, hammer}-free and {P5, C4}-free
graphs.

Every solver works per connected component and reduces each component to chordal
coloring, matching-based coloring of O3-free graphs, or the deletion-set search.
"""
import logging
from typing import Callable, List, NamedTuple, Sequence, Tuple

from chromatic.chordal import color_chordal, is_chordal
from chromatic.coloring import ChromaticResult, Coloring, check_proper, lift
from chromatic.deletion_set import solve_with_deletion_set
from chromatic.matching import color_O3_free, find_independent_triple
from core.bits import VertexSet, iter_bits, mask_of, popcount, to_list
from core.errors import ContractError, InternalInvariantError
from core.graph import Graph
from embedding.families import pattern
from embedding.induced import (
    find_forbidden,
    find_induced_cycle,
    iter_induced_embeddings,
)

logger = logging.getLogger(__name__)

CLAW_P5 = ("K1,3", "P5")
CLAW_HAMMER = ("K1,3", "hammer")
P5_C4 = ("P5", "C4")


def require_free(graph: Graph, specs: Sequence[str], solver: str) -> None:
    """Raise ContractError naming the first forbidden subgraph found in ``graph``."""
    found = find_forbidden(graph, [pattern(spec) for spec in specs])
    if found is not None:
        index, embedding = found
        raise ContractError(
            f"{solver}: graph contains an induced {specs[index]}", list(embedding)
        )


def solve_per_component(
    graph: Graph, solve_component: Callable[[Graph], Coloring]
) -> ChromaticResult:
    """Color each component separately; colors are shared across components."""
    colors = [0] * graph.n
    for component in graph.components():
        sub, index_map = graph.induced(component)
        lift(solve_component(sub), index_map, colors)
    coloring = check_proper(graph, Coloring.from_assignment(colors))
    return coloring.k, coloring


# ----------------------------------------------------------------------
# Pendant peeling
# ----------------------------------------------------------------------

class PeelTrace(NamedTuple):
    """Result of peeling with the data needed to extend a coloring back."""
    graph: Graph
    index_map: Tuple[int, ...]
    removed: Tuple[int, ...]


def _peel(graph: Graph) -> PeelTrace:
    alive = graph.vertex_mask
    removed = []
    while popcount(alive) >= 3:
        pendant = next((v for v in iter_bits(alive) if popcount(graph.adj[v] & alive) == 1), None)
        if pendant is None:
            break
        removed.append(pendant)
        alive &= ~(1 << pendant)
    peeled, index_map = graph.induced(alive)
    return PeelTrace(peeled, index_map, tuple(removed))


def peel_pendants(graph: Graph) -> Tuple[Graph, int]:
    """
    Remove pendant vertices while at least three vertices remain.

    Deleting a pendant vertex from a connected graph with at least three
    vertices keeps it connected and does not change its chromatic number.

    Args:
        graph: Connected graph

    Returns:
        Tuple of (peeled graph, number of removed vertices)
    """
    trace = _peel(graph)
    return trace.graph, len(trace.removed)


def _extend_over_pendants(graph: Graph, trace: PeelTrace, coloring: Coloring) -> Coloring:
    colors = [-1] * graph.n
    lift(coloring, trace.index_map, colors)
    for v in reversed(trace.removed):
        neighbor_colors = {colors[u] for u in iter_bits(graph.adj[v]) if colors[u] != -1}
        colors[v] = next(c for c in range(len(neighbor_colors) + 1) if c not in neighbor_colors)
    return Coloring.from_assignment(colors)


# ----------------------------------------------------------------------
# {claw, P5}-free
# ----------------------------------------------------------------------

def _claw_p5_component(graph: Graph) -> Coloring:
    if is_chordal(graph)[0]:
        return color_chordal(graph)
    if find_independent_triple(graph) is None:
        return color_O3_free(graph)

    # A P5-free non-chordal graph has an induced C4 or C5; C4 is preferred because
    # with it the remainder is always O3-free. A connected claw-free P5-free graph
    # with such a cycle is itself O3-free, so the test above normally returns first
    cycle = find_induced_cycle(graph, 4) or find_induced_cycle(graph, 5)
    if cycle is None:
        raise InternalInvariantError("non-chordal P5-free component without an induced C4 or C5")
    deleted = mask_of(cycle)
    remainder, _ = graph.delete_vertices(deleted)
    triple = find_independent_triple(remainder)
    if triple is not None:
        raise InternalInvariantError(f"removing the induced cycle {cycle} left an independent triple")
    logger.debug("claw/P5 component of %d vertices: deleting cycle %s", graph.n, cycle)
    _, coloring = solve_with_deletion_set(graph, deleted, 3, color_O3_free)
    return coloring


def solve_claw_P5_free(graph: Graph) -> ChromaticResult:
    """
    Chromatic number of a {K1,3, P5}-free graph.

    Args:
        graph: {K1,3, P5}-free graph

    Returns:
        Tuple of (chromatic number, optimal coloring)

    Raises:
        ContractError: If the graph contains an induced K1,3 or P5
    """
    require_free(graph, CLAW_P5, "solve_claw_P5_free")
    return solve_per_component(graph, _claw_p5_component)


# ----------------------------------------------------------------------
# {claw, hammer}-free
# ----------------------------------------------------------------------

def _is_simple_cycle(graph: Graph) -> bool:
    return graph.n >= 3 and all(d == 2 for d in graph.degrees()) and graph.is_connected()


def _color_cycle(graph: Graph) -> Coloring:
    colors = [-1] * graph.n
    v, previous = 0, -1
    for step in range(graph.n):
        colors[v] = step % 2
        following = next(u for u in iter_bits(graph.adj[v]) if u != previous)
        previous, v = v, following
    if graph.n % 2:
        colors[previous] = 2
    return Coloring.from_assignment(colors)


def _claw_hammer_component(graph: Graph) -> Coloring:
    if graph.n <= 2:
        return color_chordal(graph)
    if _is_simple_cycle(graph):
        return _color_cycle(graph)

    trace = _peel(graph)
    if trace.removed:
        inner = _claw_hammer_component(trace.graph)
        return _extend_over_pendants(graph, trace, inner)

    c6 = find_induced_cycle(graph, 6)
    if c6 is not None:
        logger.debug("claw/hammer component of %d vertices: deleting C6 %s", graph.n, c6)
        _, coloring = solve_with_deletion_set(graph, mask_of(c6), 4, color_chordal)
        return coloring

    if find_forbidden(graph, [pattern("P5")]) is None:
        return _claw_p5_component(graph)

    # Any induced P5 whose removal leaves an O3-free graph will do
    for path in iter_induced_embeddings(graph, pattern("P5")):
        deleted = mask_of(path)
        remainder, _ = graph.delete_vertices(deleted)
        if find_independent_triple(remainder) is None:
            logger.debug("claw/hammer component of %d vertices: deleting P5 %s", graph.n, path)
            _, coloring = solve_with_deletion_set(graph, deleted, 3, color_O3_free)
            return coloring
    raise InternalInvariantError("no induced P5 leaves an O3-free remainder")


def solve_claw_hammer_free(graph: Graph) -> ChromaticResult:
    """
    Chromatic number of a {K1,3, hammer}-free graph.

    Per component: simple cycles by parity, then pendant peeling, then deletion
    of an induced C6 (the rest is a union of at most three cliques), then the
    {K1,3, P5}-free solver, then deletion of an induced P5.

    Args:
        graph: {K1,3, hammer}-free graph

    Returns:
        Tuple of (chromatic number, optimal coloring)

    Raises:
        ContractError: If the graph contains an induced K1,3 or hammer
        InternalInvariantError: If no induced P5 leaves an O3-free remainder
    """
    require_free(graph, CLAW_HAMMER, "solve_claw_hammer_free")
    return solve_per_component(graph, _claw_hammer_component)


# ----------------------------------------------------------------------
# {P5, C4}-free
# ----------------------------------------------------------------------

class C5Decomposition(NamedTuple):
    """Split of a {P5, C4}-free graph around an induced C5."""
    v1: VertexSet
    v2: VertexSet
    g1: VertexSet
    g2: VertexSet

    def graphs(self, graph: Graph) -> Tuple[Graph, Graph]:
        return graph.induced(self.g1)[0], graph.induced(self.g2)[0]


def decompose_C5(graph: Graph, cycle: VertexSet, verify: bool = True) -> C5Decomposition:
    """
    Decompose a connected {P5, C4}-free graph around an induced C5.

    V1 holds the vertices adjacent to the whole cycle, V2 those with exactly three
    neighbours on it. G2 is induced by V1, V2 and the cycle and is O3-free; G1 is
    induced by the remaining vertices. V1 is a clique that separates G1 from the
    rest of G2.

    Args:
        graph: Connected {P5, C4}-free graph
        cycle: Vertex set of an induced C5
        verify: Check the preconditions

    Returns:
        C5Decomposition with the vertex sets of V1, V2, G1 and G2

    Raises:
        ContractError: If a precondition fails (with a witness)
    """
    if verify:
        if not graph.is_connected():
            raise ContractError("decompose_C5: graph is not connected")
        require_free(graph, P5_C4, "decompose_C5")
        cycle_graph, _ = graph.induced(cycle)
        if popcount(cycle) != 5 or cycle_graph.degrees() != [2] * 5 or not cycle_graph.is_connected():
            raise ContractError("decompose_C5: vertex set does not induce C5", to_list(cycle))

    v1 = v2 = 0
    for v in iter_bits(graph.vertex_mask & ~cycle):
        on_cycle = popcount(graph.adj[v] & cycle)
        if on_cycle == 5:
            v1 |= 1 << v
        elif on_cycle == 3:
            v2 |= 1 << v
    g2 = v1 | v2 | cycle
    g1 = graph.vertex_mask & ~g2

    if verify:
        triple = find_independent_triple(graph.induced(g2)[0])
        if triple is not None:
            index_map = to_list(g2)
            raise ContractError("decompose_C5: G2 is not O3-free", [index_map[t] for t in triple])
    return C5Decomposition(v1, v2, g1, g2)


def _match_clique_colors(
    target: Sequence[int], source: Sequence[int], clique: Sequence[int], k: int
) -> List[int]:
    """
    Permutation of the k colors that sends source colors on the clique to target colors.
    """
    permutation = [-1] * k
    for v in clique:
        permutation[source[v]] = target[v]
    free_targets = iter(c for c in range(k) if c not in set(permutation))
    return [c if c != -1 else next(free_targets) for c in permutation]


def _p5_c4_component(graph: Graph) -> Coloring:
    if is_chordal(graph)[0]:
        return color_chordal(graph)

    cycle = find_induced_cycle(graph, 5)
    if cycle is None:
        raise InternalInvariantError("non-chordal {P5, C4}-free component without an induced C5")
    parts = decompose_C5(graph, mask_of(cycle), verify=False)
    g2_graph = graph.induced(parts.g2)[0]
    g2_coloring = color_O3_free(g2_graph)
    if g2_coloring.k < popcount(parts.v1) + 3:
        raise InternalInvariantError(
            f"chi(G2) = {g2_coloring.k} is below |V1| + 3 = {popcount(parts.v1) + 3}"
        )

    colors = [-1] * graph.n
    g2_map = to_list(parts.g2)
    lift(g2_coloring, g2_map, colors)
    if not parts.g1:
        return Coloring.from_assignment(colors)

    # V1 is a clique cutset: color G1 + V1 on its own and align the colors on V1
    side = parts.g1 | parts.v1
    side_graph, side_map = graph.induced(side)
    _, side_coloring = solve_per_component(side_graph, _p5_c4_component)
    k = max(side_coloring.k, g2_coloring.k)
    side_colors = [-1] * graph.n
    lift(side_coloring, side_map, side_colors)
    clique = to_list(parts.v1)
    permutation = _match_clique_colors(colors, side_colors, clique, k)
    for v in side_map:
        colors[v] = permutation[side_colors[v]]
    logger.debug("C5 split: |G1 + V1| = %d, |G2| = %d, k = %d", len(side_map), len(g2_map), k)
    return Coloring.from_assignment(colors)


def solve_P5_C4_free(graph: Graph) -> ChromaticResult:
    """
    Chromatic number of a {P5, C4}-free graph.

    Args:
        graph: {P5, C4}-free graph

    Returns:
        Tuple of (chromatic number, optimal coloring)

    Raises:
        ContractError: If the graph contains an induced P5 or C4
    """
    require_free(graph, P5_C4, "solve_P5_C4_free")
    return solve_per_component(graph, _p5_c4_component)
