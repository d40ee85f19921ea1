"""
Rule predicates of the pair classifier.

Every predicate reads ``(a, b)`` with a in the role of the first forbidden graph.
The rule book tries both orders, so "or vice versa" needs no extra code.
"""
from typing import Callable, Dict

from atlas.classes import limit_class_obstruction
from core.graph import Graph
from embedding.families import FamilyId, SubFamilyId, family_contains, fits_in_family, pattern
from embedding.induced import is_induced_subgraph

PairPredicate = Callable[[Graph, Graph], bool]
SinglePredicate = Callable[[Graph], bool]


def contains(graph: Graph, spec: str) -> bool:
    """``spec`` is an induced subgraph of graph."""
    return is_induced_subgraph(pattern(spec), graph)


def inside(graph: Graph, spec: str) -> bool:
    """graph is an induced subgraph of ``spec``."""
    return is_induced_subgraph(graph, pattern(spec))


def _in_pk2_or_p5_pk1(graph: Graph) -> bool:
    return fits_in_family(graph, SubFamilyId.SUB_pK2) or fits_in_family(
        graph, SubFamilyId.SUB_P5_PLUS_pK1
    )


def _has_cycle(graph: Graph) -> bool:
    return family_contains(graph, FamilyId.CYCLE_GE3)


def _has_span_2k2(graph: Graph) -> bool:
    return family_contains(graph, FamilyId.SPAN_2K2)


def _monogenic_easy(graph: Graph) -> bool:
    return inside(graph, "P4") or inside(graph, "P3+K1")


PAIR_PREDICATES: Dict[str, PairPredicate] = {
    # NP-complete
    "N1": lambda a, b: _has_cycle(a) and _has_cycle(b),
    "N2": lambda a, b: contains(a, "K1,3") and contains(b, "K1,3"),
    "N3": lambda a, b: contains(a, "K1,3") and (contains(b, "K4") or contains(b, "K4-e")),
    "N4": lambda a, b: contains(a, "K1,3") and family_contains(b, FamilyId.CYCLE_GE4),
    "N5": lambda a, b: _has_span_2k2(a) and _has_span_2k2(b),
    "N6": lambda a, b: contains(a, "C3") and family_contains(b, FamilyId.STAR_K1P_GE5),
    "N7": lambda a, b: contains(a, "C3") and family_contains(b, FamilyId.PATH_P164),
    "N8": lambda a, b: family_contains(a, FamilyId.CYCLE_GE5) and _has_span_2k2(b),
    "N9": lambda a, b: (
        family_contains(a, FamilyId.CYCLE_PLUS_K1) or family_contains(a, FamilyId.CO_CYCLE_GE6)
    )
    and _has_span_2k2(b),
    "N10": lambda a, b: limit_class_obstruction([a, b]) is not None,
    "N11": lambda a, b: contains(a, "K1,4") and contains(b, "bull"),
    # Polynomial
    "P1": lambda a, b: _monogenic_easy(a) and _monogenic_easy(b),
    "P2": lambda a, b: inside(a, "K1,3") and inside(b, "C3+K1"),
    "P3": lambda a, b: inside(a, "paw") and fits_in_family(b, SubFamilyId.FOREST_LE6_NOT_K15),
    "P4": lambda a, b: inside(a, "paw") and _in_pk2_or_p5_pk1(b),
    "P5": lambda a, b: fits_in_family(a, SubFamilyId.SUB_COMPLETE) and _in_pk2_or_p5_pk1(b),
    "P6": lambda a, b: inside(a, "gem") and (inside(b, "P4+K1") or inside(b, "P5")),
    "P7": lambda a, b: inside(a, "co(P5)") and (inside(b, "P4+K1") or inside(b, "2*K2")),
    "P8": lambda a, b: inside(a, "P4"),
    "P9": lambda a, b: inside(a, "P5") and inside(b, "gem"),
    "P10": lambda a, b: inside(a, "P5") and inside(b, "C4"),
    "P11": lambda a, b: inside(a, "P5") and inside(b, "K1,3"),
    "P12": lambda a, b: inside(a, "K1,4") and inside(b, "paw"),
    "P13": lambda a, b: inside(a, "fork") and inside(b, "paw"),
    "P14": lambda a, b: inside(a, "K1,3") and inside(b, "hammer"),
}

SINGLE_PREDICATES: Dict[str, SinglePredicate] = {
    "M1": _monogenic_easy,
    "M2": lambda graph: not _monogenic_easy(graph),
}


def _limit_class_witness(a: Graph, b: Graph) -> str:
    avoided = limit_class_obstruction([a, b])
    return f"neither graph is in {avoided.value}" if avoided is not None else ""


# Rules whose condition is symmetric in (a, b) describe their own witness
# instead of naming which graph played which role
SYMMETRIC_WITNESSES: Dict[str, Callable[[Graph, Graph], str]] = {
    "N10": _limit_class_witness,
}
