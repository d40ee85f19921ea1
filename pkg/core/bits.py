"""
Bit-row helpers. Vertex sets are plain ints: bit v set means vertex v is in the set.
"""
from typing import Iterable, Iterator, List

VertexSet = int


def popcount(mask: int) -> int:
    """Number of set bits."""
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    """Index of the lowest set bit; mask must be nonzero."""
    return (mask & -mask).bit_length() - 1


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit indices in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_list(mask: int) -> List[int]:
    return list(iter_bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask
