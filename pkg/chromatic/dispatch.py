"""
Solver selection.
"""
import logging
from typing import Callable, Dict, Tuple

from chromatic.chordal import color_chordal, is_chordal
from chromatic.coloring import ChromaticResult, Coloring
from chromatic.exact import chromatic_exact
from chromatic.matching import color_O3_free, is_o3_free
from chromatic.structural import (
    CLAW_HAMMER,
    CLAW_P5,
    P5_C4,
    solve_claw_hammer_free,
    solve_claw_P5_free,
    solve_P5_C4_free,
)
from core.config import ToolkitConfig
from core.errors import UnsupportedInstanceError
from core.graph import Graph
from embedding.families import pattern
from embedding.induced import is_free

logger = logging.getLogger(__name__)

METHOD_AUTO = "auto"
METHOD_BRUTE = "brute"
METHOD_CHORDAL = "chordal"
METHOD_O3 = "o3"
METHOD_CLAW_P5 = "clawp5"
METHOD_CLAW_HAMMER = "clawhammer"
METHOD_P5_C4 = "p5c4"


def _result(coloring: Coloring) -> ChromaticResult:
    return coloring.k, coloring


SOLVERS: Dict[str, Callable[[Graph], ChromaticResult]] = {
    METHOD_BRUTE: chromatic_exact,
    METHOD_CHORDAL: lambda graph: _result(color_chordal(graph)),
    METHOD_O3: lambda graph: _result(color_O3_free(graph)),
    METHOD_CLAW_P5: solve_claw_P5_free,
    METHOD_CLAW_HAMMER: solve_claw_hammer_free,
    METHOD_P5_C4: solve_P5_C4_free,
}

METHODS = (METHOD_AUTO,) + tuple(SOLVERS)


def _free_of(graph: Graph, specs: Tuple[str, ...]) -> bool:
    return is_free(graph, [pattern(spec) for spec in specs])


def select_method(graph: Graph) -> str:
    """
    Pick the first solver whose class contains the graph.

    Raises:
        UnsupportedInstanceError: If no solver applies and the graph is too
            large for the exact search
    """
    exact_bound = ToolkitConfig.get().limits.exact_max_n
    chordal = is_chordal(graph)[0]
    if graph.n <= exact_bound and _free_of(graph, ("P4",)):
        return METHOD_CHORDAL if chordal else METHOD_BRUTE
    if chordal:
        return METHOD_CHORDAL
    if is_o3_free(graph):
        return METHOD_O3
    if _free_of(graph, CLAW_P5):
        return METHOD_CLAW_P5
    if _free_of(graph, CLAW_HAMMER):
        return METHOD_CLAW_HAMMER
    if _free_of(graph, P5_C4):
        return METHOD_P5_C4
    if graph.n <= exact_bound:
        return METHOD_BRUTE
    raise UnsupportedInstanceError(
        f"no solver applies to this {graph.n}-vertex graph and it exceeds the exact bound {exact_bound}"
    )


def solve(graph: Graph, method: str = METHOD_AUTO) -> Tuple[int, Coloring, str]:
    """
    Run a solver by name.

    Args:
        graph: Graph to color
        method: One of METHODS; "auto" selects with ``select_method``

    Returns:
        Tuple of (chromatic number, optimal coloring, method that ran)
    """
    if method == METHOD_AUTO:
        method = select_method(graph)
    if method not in SOLVERS:
        raise ValueError(f"unknown method {method!r}")
    logger.info("coloring a %d-vertex graph with method %s", graph.n, method)
    chi, coloring = SOLVERS[method](graph)
    return chi, coloring, method


def chromatic_auto(graph: Graph) -> Tuple[int, Coloring, str]:
    """
    Chromatic number with the first applicable solver.

    Order: small P4-free graphs (chordal or exact), chordal, O3-free,
    {K1,3, P5}-free, {K1,3, hammer}-free, {P5, C4}-free, exact search.

    Args:
        graph: Any graph

    Returns:
        Tuple of (chromatic number, optimal coloring, method tag)

    Raises:
        UnsupportedInstanceError: If no solver applies
    """
    return solve(graph, METHOD_AUTO)
