"""
JSON output models of the command-line front-end.
"""
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel


class ChromaticOutput(BaseModel):
    chi: int
    coloring: List[int]
    method: str


class CheckFreeOutput(BaseModel):
    free: bool
    pattern: Optional[int] = None
    witness: Optional[List[int]] = None


class VerdictOutput(BaseModel):
    status: str
    rule: Optional[str] = None
    citation: Optional[str] = None
    witness: Optional[str] = None


class AtlasRowOutput(BaseModel):
    first: str
    second: str
    first_form: str
    second_form: str
    status: str
    rule: Optional[str] = None


class AtlasSummaryOutput(BaseModel):
    pairs: int
    npc: int
    poly: int
    open: int


class AtlasOutput(BaseModel):
    max_n: int
    graphs: int
    summary: AtlasSummaryOutput
    rows: List[AtlasRowOutput]


class ImplantSiteOutput(BaseModel):
    x: int
    a: List[int]
    b: List[int]


class ImplantOutput(BaseModel):
    n: int
    edges: List[Tuple[int, int]]
    trace: List[ImplantSiteOutput]


class RecognizeOutput(BaseModel):
    """Class memberships; None where the graph is too large to look up."""
    n: int
    classes: Dict[str, Optional[bool]]
    chordal: bool
    o3_free: bool
    claw_p5_free: bool
    claw_hammer_free: bool
    p5_c4_free: bool
    o3_deletion_distance: Optional[int] = None
