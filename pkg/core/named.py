"""
Named-graph expressions.

Grammar (whitespace is ignored)::

    expr   := term ('+' term)*
    term   := INT '*' factor | factor
    factor := 'co' '(' expr ')' | '(' expr ')' | atom
    atom   := 'K' INT ',' INT | 'K' INT '-e' | ('P' | 'C' | 'K' | 'O') INT | NAME

``+`` is disjoint union, ``k*G`` is k disjoint copies and ``co(...)`` the complement.
NAME is looked up in the graph catalog (paw, fork, gem, hammer, bull, butterfly, ...).
"""
import re
from typing import Callable, Dict, Optional

from core.catalog import GraphCatalog
from core.errors import GraphConstructionError, GraphSpecError
from core.graph import Graph

_BIPARTITE = re.compile(r"K(\d+),(\d+)")
_MINUS_EDGE = re.compile(r"K(\d+)-e")
_FAMILY = re.compile(r"([PCKO])(\d+)")
_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_INT = re.compile(r"\d+")


def complete_bipartite(p: int, q: int) -> Graph:
    """K_{p,q}; the p-side comes first, so K1,q has its center at vertex 0."""
    return Graph.from_edge_list(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def complete_minus_edge(n: int) -> Graph:
    """K_n with the edge (0, 1) removed."""
    if n < 2:
        raise GraphConstructionError(f"K{n}-e needs at least 2 vertices")
    graph = Graph.complete(n)
    rows = list(graph.adj)
    rows[0] &= ~0b10
    rows[1] &= ~0b01
    return Graph(n, tuple(rows))


_FAMILIES: Dict[str, Callable[[int], Graph]] = {
    "P": Graph.path,
    "C": Graph.cycle,
    "K": Graph.complete,
    "O": Graph.empty,
}


class _Parser:
    """Recursive-descent parser over a single expression string."""

    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def parse(self) -> Graph:
        self._skip()
        if self.pos == len(self.text):
            raise GraphSpecError("empty graph expression", 0)
        graph = self._expr()
        self._skip()
        if self.pos != len(self.text):
            raise GraphSpecError(f"unexpected {self.text[self.pos]!r}", self.pos)
        return graph

    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expect(self, char: str) -> None:
        if self._peek() != char:
            found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
            raise GraphSpecError(f"expected {char!r}, found {found}", self.pos)
        self.pos += 1

    def _match(self, pattern: "re.Pattern[str]") -> Optional["re.Match[str]"]:
        self._skip()
        match = pattern.match(self.text, self.pos)
        if match:
            self.pos = match.end()
        return match

    def _expr(self) -> Graph:
        graph = self._term()
        while self._peek() == "+":
            self.pos += 1
            graph = graph.disjoint_union(self._term())
        return graph

    def _term(self) -> Graph:
        start = self.pos
        count = self._match(_INT)
        if count is None:
            return self._factor()
        copies = int(count.group())
        if copies < 1:
            raise GraphSpecError("repetition count must be at least 1", start)
        self._expect("*")
        unit = self._factor()
        graph = unit
        for _ in range(copies - 1):
            graph = graph.disjoint_union(unit)
        return graph

    def _factor(self) -> Graph:
        self._skip()
        if self.text.startswith("co", self.pos):
            after = self.pos + 2
            while after < len(self.text) and self.text[after].isspace():
                after += 1
            if after < len(self.text) and self.text[after] == "(":
                self.pos = after + 1
                inner = self._expr()
                self._expect(")")
                return inner.complement()
        if self._peek() == "(":
            self.pos += 1
            inner = self._expr()
            self._expect(")")
            return inner
        return self._atom()

    def _atom(self) -> Graph:
        start = self.pos
        try:
            match = self._match(_BIPARTITE)
            if match:
                return complete_bipartite(int(match.group(1)), int(match.group(2)))
            match = self._match(_MINUS_EDGE)
            if match:
                return complete_minus_edge(int(match.group(1)))
            match = self._match(_FAMILY)
            if match:
                return _FAMILIES[match.group(1)](int(match.group(2)))
        except GraphConstructionError as e:
            raise GraphSpecError(str(e), start) from e

        match = self._match(_NAME)
        if match is None:
            found = repr(self.text[start]) if start < len(self.text) else "end of input"
            raise GraphSpecError(f"expected a graph, found {found}", start)
        graph = GraphCatalog.get(match.group())
        if graph is None:
            raise GraphSpecError(f"unknown graph name {match.group()!r}", start)
        return graph


def named(spec: str) -> Graph:
    """
    Build a graph from a named-graph expression.

    Args:
        spec: Expression such as ``"K1,3"``, ``"P5+2*K1"`` or ``"co(C6)"``

    Returns:
        The described graph, 0-indexed

    Raises:
        GraphSpecError: On a malformed expression or an unknown name
    """
    return _Parser(spec).parse()
