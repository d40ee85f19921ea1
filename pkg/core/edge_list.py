"""
Edge-list text format.

    # optional comment lines
    n m
    u v        (m lines, 0-based vertex indices)

Several graphs may follow each other in one text; blank lines are ignored.
"""
from typing import Iterable, Iterator, List, Tuple

from core.errors import GraphConstructionError, GraphSpecError
from core.graph import Graph


def _content_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield number, stripped.split()


def _read_ints(number: int, fields: List[str], what: str) -> Tuple[int, int]:
    if len(fields) != 2:
        raise GraphSpecError(f"line {number}: expected two integers for {what}, got {len(fields)} fields")
    try:
        first, second = int(fields[0]), int(fields[1])
    except ValueError:
        raise GraphSpecError(f"line {number}: {what} must be decimal integers") from None
    if first < 0 or second < 0:
        raise GraphSpecError(f"line {number}: {what} must be non-negative")
    return first, second


def parse_edge_lists(text: str) -> List[Graph]:
    """
    Parse every graph in an edge-list text.

    Args:
        text: Edge-list text holding zero or more graphs

    Returns:
        Graphs in file order

    Raises:
        GraphSpecError: On a malformed header, a short edge section or a bad index
    """
    graphs = []
    lines = _content_lines(text)
    for number, fields in lines:
        n, m = _read_ints(number, fields, "the header 'n m'")
        edges = []
        for _ in range(m):
            try:
                edge_number, edge_fields = next(lines)
            except StopIteration:
                raise GraphSpecError(
                    f"line {number}: header announces {m} edges, found {len(edges)}"
                ) from None
            edges.append((edge_number, _read_ints(edge_number, edge_fields, "an edge 'u v'")))
        try:
            graphs.append(Graph.from_edge_list(n, [edge for _, edge in edges]))
        except GraphConstructionError as e:
            bad = next((num for num, edge in edges if edge == e.pair), number)
            raise GraphSpecError(f"line {bad}: {e}") from e
    return graphs


def parse_edge_list(text: str) -> Graph:
    """Parse a text holding exactly one graph."""
    graphs = parse_edge_lists(text)
    if len(graphs) != 1:
        raise GraphSpecError(f"expected one graph, found {len(graphs)}")
    return graphs[0]


def format_edge_list(graph: Graph, comments: Iterable[str] = ()) -> str:
    """
    Render a graph in the edge-list format.

    Args:
        graph: Graph to write
        comments: Lines emitted as ``# ...`` before the header

    Returns:
        Text ending in a newline
    """
    lines = [f"# {comment}" for comment in comments]
    edges = graph.edges()
    lines.append(f"{graph.n} {len(edges)}")
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"
