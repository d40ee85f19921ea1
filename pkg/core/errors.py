"""
Error types shared by every toolkit module.
"""
from typing import Optional, Sequence, Tuple


class ToolkitError(Exception):
    """Base class for all toolkit errors."""


class GraphConstructionError(ToolkitError):
    """Raised when an edge list does not describe a simple graph."""

    def __init__(self, message: str, pair: Optional[Tuple[int, int]] = None) -> None:
        super().__init__(message)
        self.pair = pair


class GraphSpecError(ToolkitError):
    """Raised when a named-graph expression or edge-list text cannot be parsed."""

    def __init__(self, message: str, position: Optional[int] = None) -> None:
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class GraphSizeError(ToolkitError):
    """Raised when an input exceeds a configured size bound."""

    def __init__(self, what: str, bound: int, actual: int) -> None:
        super().__init__(f"{what}: size {actual} exceeds the bound {bound}")
        self.bound = bound
        self.actual = actual


class ContractError(ToolkitError):
    """Raised when an operation's precondition does not hold for its input."""

    def __init__(self, message: str, witness: Optional[Sequence[int]] = None) -> None:
        if witness is not None:
            message = f"{message}; witness vertices {list(witness)}"
        super().__init__(message)
        self.witness: Optional[Tuple[int, ...]] = (
            tuple(witness) if witness is not None else None
        )


class InternalInvariantError(ToolkitError):
    """Raised when a structural fact the solvers rely on fails at runtime."""


class ConsistencyError(ToolkitError):
    """Raised when an NP-completeness rule and a polynomial rule fire on one pair."""

    def __init__(self, npc_rule: str, poly_rule: str) -> None:
        super().__init__(
            f"rules {npc_rule} (NP-complete) and {poly_rule} (polynomial) both fire"
        )
        self.npc_rule = npc_rule
        self.poly_rule = poly_rule


class UnsupportedInstanceError(ToolkitError):
    """Raised when no solver applies to a graph."""
