"""
Catalog of named graphs loaded from config/named_graphs.json.
"""
import json
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from core.config import CONFIG_DIR
from core.graph import Graph

CATALOG_FILE = CONFIG_DIR / "named_graphs.json"


@dataclass
class CatalogEntry:
    """One named graph as written in the catalog file."""
    name: str
    description: str
    n: Optional[int] = None
    edges: Optional[List[Tuple[int, int]]] = None
    expression: Optional[str] = None


class GraphCatalog:
    """Registry of the named graphs the expression grammar can refer to."""

    _entries: Dict[str, CatalogEntry] = {}
    _graphs: Dict[str, Graph] = {}
    _initialized: bool = False

    @classmethod
    def initialize(cls) -> None:
        """Load the catalog entries. Edge lists in the file are 1-indexed."""
        if cls._initialized:
            return

        with open(CATALOG_FILE, "r") as f:
            catalog_data = json.load(f)

        for name, data in catalog_data.items():
            edges = data.get("edges")
            cls._entries[name] = CatalogEntry(
                name=name,
                description=data.get("description", ""),
                n=data.get("n"),
                edges=[(u, v) for u, v in edges] if edges is not None else None,
                expression=data.get("expression"),
            )

        cls._initialized = True

    @classmethod
    def get(cls, name: str) -> Optional[Graph]:
        """
        Get a named graph.

        Args:
            name: Catalog name, e.g. ``"bull"``

        Returns:
            The 0-indexed graph if the name is known, None otherwise
        """
        if not cls._initialized:
            cls.initialize()

        if name in cls._graphs:
            return cls._graphs[name]
        entry = cls._entries.get(name)
        if entry is None:
            return None

        if entry.expression is not None:
            from core.named import named

            graph = named(entry.expression)
        else:
            assert entry.n is not None and entry.edges is not None
            graph = Graph.from_edge_list(entry.n, [(u - 1, v - 1) for u, v in entry.edges])
        cls._graphs[name] = graph
        return graph

    @classmethod
    def get_entry(cls, name: str) -> Optional[CatalogEntry]:
        """The catalog entry for ``name`` as written in the file, or None."""
        if not cls._initialized:
            cls.initialize()
        return cls._entries.get(name)

    @classmethod
    def names(cls) -> List[str]:
        """Catalog names in file order."""
        if not cls._initialized:
            cls.initialize()
        return list(cls._entries)

    @classmethod
    def name_of(cls, graph: Graph) -> Optional[str]:
        """
        Find a display name for a small graph.

        Catalog names win; otherwise paths, cycles, complete graphs, stars and
        edgeless graphs get their family name.

        Args:
            graph: Graph with at most 10 vertices

        Returns:
            A name that parses back to an isomorphic graph, or None
        """
        from core.canonical import canonical_form
        from core.named import complete_bipartite

        form = canonical_form(graph)
        for name in cls.names():
            candidate = cls.get(name)
            if candidate is not None and candidate.n == graph.n and canonical_form(candidate) == form:
                return name

        n = graph.n
        families: List[Tuple[str, Graph]] = [(f"K{n}", Graph.complete(n)), (f"P{n}", Graph.path(n))]
        if n >= 3:
            families.append((f"C{n}", Graph.cycle(n)))
        if n >= 2:
            families.append((f"K1,{n - 1}", complete_bipartite(1, n - 1)))
        families.append((f"O{n}", Graph.empty(n)))
        for name, candidate in families:
            if canonical_form(candidate) == form:
                return name
        return None

    @classmethod
    def reset(cls) -> None:
        """Forget loaded entries; the next lookup reloads the file."""
        cls._entries = {}
        cls._graphs = {}
        cls._initialized = False
