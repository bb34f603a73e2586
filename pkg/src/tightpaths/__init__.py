"""Tight paths, zigzags and stacks in convex geometric hypergraphs."""

from .core import (
    CyclicGround,
    DomainError,
    Edge,
    Hypergraph,
    StuckEndError,
    UnsupportedPatternError,
    arc_length,
    complete,
    link,
    segment,
    shadow,
)
from .patterns import BlockColoring, PathWitness, find_pattern, is_good_path, is_zigzag_sequence

__all__ = [
    "BlockColoring",
    "CyclicGround",
    "DomainError",
    "Edge",
    "Hypergraph",
    "PathWitness",
    "StuckEndError",
    "UnsupportedPatternError",
    "arc_length",
    "complete",
    "find_pattern",
    "is_good_path",
    "is_zigzag_sequence",
    "link",
    "segment",
    "shadow",
]
