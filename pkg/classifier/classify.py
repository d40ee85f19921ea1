"""
Complexity verdicts for coloring graphs with one or two forbidden induced subgraphs.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from atlas.enumeration import enumerate_connected
from classifier.predicates import PAIR_PREDICATES, SINGLE_PREDICATES, SYMMETRIC_WITNESSES
from classifier.rules import Rule, RuleBook, RuleKind
from core.canonical import CanonicalForm
from core.catalog import GraphCatalog
from core.config import ToolkitConfig
from core.errors import (
    ConsistencyError,
    ContractError,
    GraphSizeError,
    InternalInvariantError,
)
from core.graph import Graph

logger = logging.getLogger(__name__)


class Status(Enum):
    NP_COMPLETE = "NP_COMPLETE"
    POLYNOMIAL = "POLYNOMIAL"
    OPEN = "OPEN"


@dataclass(frozen=True)
class Verdict:
    """
    Complexity status of coloring in Free({H1, H2}) or Free(H).

    ``rule`` is None exactly when the status is OPEN. ``witness`` says which
    graph played the first role of the rule, or which limit class both graphs
    avoid.
    """
    status: Status
    rule: Optional[str] = None
    citation: Optional[str] = None
    witness: Optional[str] = None


OPEN_VERDICT = Verdict(Status.OPEN)

_STATUS_OF_KIND = {RuleKind.NPC: Status.NP_COMPLETE, RuleKind.POLY: Status.POLYNOMIAL}


def _fire(rule: Rule, h1: Graph, h2: Graph) -> Optional[str]:
    """Evaluate a pair rule in both orders; returns the witness text if it fires."""
    predicate = PAIR_PREDICATES[rule.rule_id]
    if predicate(h1, h2):
        describe = SYMMETRIC_WITNESSES.get(rule.rule_id)
        return describe(h1, h2) if describe is not None else "G1=H1, G2=H2"
    if predicate(h2, h1):
        return "G1=H2, G2=H1"
    return None


def _first_firing(kind: RuleKind, h1: Graph, h2: Graph) -> Optional[Verdict]:
    for rule in RuleBook.pair_rules(kind):
        witness = _fire(rule, h1, h2)
        if witness is not None:
            return Verdict(_STATUS_OF_KIND[kind], rule.rule_id, rule.citation, witness)
    return None


def classify_pair(h1: Graph, h2: Graph) -> Verdict:
    """
    Classify coloring in Free({H1, H2}).

    NP-completeness rules are tried before polynomial ones, each list in rule
    order. Both lists are always evaluated so contradictory rules are caught.

    Args:
        h1: First forbidden graph
        h2: Second forbidden graph

    Returns:
        Verdict citing the first rule that fires, or OPEN

    Raises:
        ContractError: If a graph has no vertices
        GraphSizeError: If a limit-class lookup is needed for a graph above the bound
        ConsistencyError: If an NP-completeness rule and a polynomial rule both fire
    """
    if h1.n == 0 or h2.n == 0:
        raise ContractError("forbidden graphs must have at least one vertex")

    npc = _first_firing(RuleKind.NPC, h1, h2)
    poly = _first_firing(RuleKind.POLY, h1, h2)
    if npc is not None and poly is not None:
        raise ConsistencyError(str(npc.rule), str(poly.rule))
    verdict = npc or poly or OPEN_VERDICT
    logger.debug("pair %r / %r: %s %s", h1, h2, verdict.status.value, verdict.rule)
    return verdict


def classify_single(graph: Graph) -> Verdict:
    """
    Classify coloring in Free(H) by the monogenic dichotomy.

    Args:
        graph: Forbidden graph

    Returns:
        POLYNOMIAL (M1) if H is an induced subgraph of P4 or P3+K1, else
        NP_COMPLETE (M2)
    """
    if graph.n == 0:
        raise ContractError("forbidden graph must have at least one vertex")
    for rule in RuleBook.monogenic_rules():
        if SINGLE_PREDICATES[rule.rule_id](graph):
            return Verdict(_STATUS_OF_KIND[rule.kind], rule.rule_id, rule.citation)
    raise InternalInvariantError("no monogenic rule fired")


def display_name(graph: Graph) -> str:
    """Catalog or family name, else the edge list written inline."""
    name = GraphCatalog.name_of(graph)
    if name is not None:
        return name
    edges = " ".join(f"{u}-{v}" for u, v in graph.edges())
    return f"G{graph.n}[{edges}]"


@dataclass(frozen=True)
class AtlasRow:
    """One unordered pair of the atlas."""
    first: CanonicalForm
    second: CanonicalForm
    first_name: str
    second_name: str
    verdict: Verdict


@dataclass
class AtlasTable:
    """Every pair of connected graphs up to a vertex count, classified."""
    max_n: int
    graph_count: int
    rows: List[AtlasRow] = field(default_factory=list)

    def summary(self) -> Dict[str, int]:
        counts = {status: 0 for status in Status}
        for row in self.rows:
            counts[row.verdict.status] += 1
        return {
            "pairs": len(self.rows),
            "npc": counts[Status.NP_COMPLETE],
            "poly": counts[Status.POLYNOMIAL],
            "open": counts[Status.OPEN],
        }

    def open_pairs(self) -> List[Tuple[str, str]]:
        return [
            (row.first_name, row.second_name)
            for row in self.rows
            if row.verdict.status is Status.OPEN
        ]


def atlas_table(max_n: int) -> AtlasTable:
    """
    Classify every unordered pair (with repetition) of connected graphs.

    Args:
        max_n: Largest vertex count; up to ``limits.atlas_published_max_n`` is the
            range with a published classification, larger values up to the
            enumeration bound are allowed with a warning

    Returns:
        AtlasTable with rows in enumeration order

    Raises:
        GraphSizeError: If max_n exceeds the enumeration bound
    """
    limits = ToolkitConfig.get().limits
    if max_n > limits.enumeration_max_n:
        raise GraphSizeError("atlas_table", limits.enumeration_max_n, max_n)
    published_bound = limits.atlas_published_max_n
    if max_n > published_bound:
        logger.warning(
            "atlas for max_n=%d goes beyond %d vertices; no published result covers it",
            max_n,
            published_bound,
        )

    graphs = enumerate_connected(max_n).items()
    names = [display_name(graph) for _, graph in graphs]
    table = AtlasTable(max_n=max_n, graph_count=len(graphs))
    for i, (first_form, first) in enumerate(graphs):
        for j in range(i, len(graphs)):
            second_form, second = graphs[j]
            verdict = classify_pair(first, second)
            table.rows.append(AtlasRow(first_form, second_form, names[i], names[j], verdict))

    logger.info("atlas for max_n=%d: %s", max_n, table.summary())
    return table
