"""
Parametric graph families used by the complexity rules.

Each "for some p" family is reduced to a finite test: K1,p for p >= 5 embeds iff
K1,5 does, C_p for p >= 3 embeds iff the graph has a cycle, C_p for p >= 4 embeds
iff the graph is not chordal, and the remaining families are searched up to n.
"""
from enum import Enum
from functools import lru_cache

from chromatic.chordal import is_chordal
from core.bits import popcount
from core.canonical import are_isomorphic
from core.graph import Graph
from core.named import named
from embedding.induced import find_induced_cycle, is_induced_subgraph

# The three spanning subgraphs of 2K2 up to isomorphism
SPAN_2K2_MEMBERS = ("2*K2", "K2+2*K1", "O4")
CYCLE_PLUS_K1_MEMBERS = ("C3+K1", "C4+K1")
PATH_P164_LENGTH = 164


class FamilyId(Enum):
    """Families a graph may contain as an induced subgraph."""
    CYCLE_GE3 = "cycle_ge3"
    CYCLE_GE4 = "cycle_ge4"
    CYCLE_GE5 = "cycle_ge5"
    STAR_K1P_GE5 = "star_k1p_ge5"
    SPAN_2K2 = "span_2k2"
    CYCLE_PLUS_K1 = "cycle_plus_k1"
    CO_CYCLE_GE6 = "co_cycle_ge6"
    PATH_P164 = "path_p164"


class SubFamilyId(Enum):
    """Families a graph may fit inside."""
    SUB_pK2 = "sub_pk2"
    SUB_P5_PLUS_pK1 = "sub_p5_plus_pk1"
    SUB_COMPLETE = "sub_complete"
    FOREST_LE6_NOT_K15 = "forest_le6_not_k15"


@lru_cache(maxsize=None)
def pattern(spec: str) -> Graph:
    """Named graph, parsed once."""
    return named(spec)


def family_contains(graph: Graph, family: FamilyId) -> bool:
    """
    Test whether a graph contains an induced member of a family.

    Args:
        graph: Graph to test
        family: Family identifier

    Returns:
        True if some member of the family is an induced subgraph
    """
    if family is FamilyId.CYCLE_GE3:
        return not graph.is_forest()
    if family is FamilyId.CYCLE_GE4:
        chordal, _ = is_chordal(graph)
        return not chordal
    if family is FamilyId.CYCLE_GE5:
        return any(find_induced_cycle(graph, p) is not None for p in range(5, graph.n + 1))
    if family is FamilyId.STAR_K1P_GE5:
        return is_induced_subgraph(pattern("K1,5"), graph)
    if family is FamilyId.SPAN_2K2:
        return any(is_induced_subgraph(pattern(spec), graph) for spec in SPAN_2K2_MEMBERS)
    if family is FamilyId.CYCLE_PLUS_K1:
        return any(is_induced_subgraph(pattern(spec), graph) for spec in CYCLE_PLUS_K1_MEMBERS)
    if family is FamilyId.CO_CYCLE_GE6:
        return any(
            is_induced_subgraph(pattern(f"co(C{q})"), graph) for q in range(6, graph.n + 1)
        )
    if family is FamilyId.PATH_P164:
        if graph.n < PATH_P164_LENGTH:
            return False
        return is_induced_subgraph(Graph.path(PATH_P164_LENGTH), graph)
    raise ValueError(f"unknown family {family}")


def fits_in_family(graph: Graph, family: SubFamilyId) -> bool:
    """
    Test whether a graph fits inside a family.

    Args:
        graph: Graph to test
        family: Sub-family identifier

    Returns:
        True if the graph belongs to (an induced subgraph of a member of) the family
    """
    if family is SubFamilyId.SUB_pK2:
        return all(popcount(comp) <= 2 for comp in graph.components())
    if family is SubFamilyId.SUB_P5_PLUS_pK1:
        host = pattern("P5").disjoint_union(Graph.empty(graph.n))
        return is_induced_subgraph(graph, host)
    if family is SubFamilyId.SUB_COMPLETE:
        return graph.is_complete()
    if family is SubFamilyId.FOREST_LE6_NOT_K15:
        return graph.is_forest() and graph.n <= 6 and not are_isomorphic(graph, pattern("K1,5"))
    raise ValueError(f"unknown family {family}")
