"""Cyclic ground sets and basic hypergraph algebra.

Vertices are the integers ``0..n-1`` read clockwise around a circle. Only
the cyclic order matters, so no planar coordinates are ever stored. Edges
are sorted tuples; any ordering of an edge lives in a separate sequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

import numpy as np

Edge = tuple[int, ...]


class DomainError(ValueError):
    """Invalid input for an otherwise supported operation."""


class UnsupportedPatternError(ValueError):
    """Pattern, mode or parity combination that is not defined."""


class StuckEndError(DomainError):
    """An end with an empty extension set was asked to extend."""


@dataclass(frozen=True)
class CyclicGround:
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"ground needs n >= 1, got {self.n}")

    def check(self, *vertices: int) -> None:
        for v in vertices:
            if not (0 <= v < self.n):
                raise DomainError(f"vertex {v} not in 0..{self.n - 1}")

    def successor(self, v: int) -> int:
        return (v + 1) % self.n

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.n))


def make_edge(vertices: Iterable[int]) -> Edge:
    e = tuple(sorted(vertices))
    if len(set(e)) != len(e):
        raise DomainError(f"edge has repeated vertices: {e}")
    return e


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph on a cyclic ground set.

    ``geometric`` says whether the cyclic order is meaningful (a cgh) or
    ignored (an abstract r-graph). The hypergraph is identified with its
    edge set, so ``len(H)`` is the edge count.
    """

    ground: CyclicGround
    r: int
    edges: frozenset[Edge] = field(default_factory=frozenset)
    geometric: bool = True

    def __post_init__(self) -> None:
        if self.r < 1:
            raise DomainError(f"uniformity must be positive, got {self.r}")
        for e in self.edges:
            if len(e) != self.r or len(set(e)) != self.r:
                raise DomainError(f"edge {e} is not an {self.r}-set")
            if list(e) != sorted(e):
                raise DomainError(f"edge {e} is not stored ascending")
            self.ground.check(*e)

    @classmethod
    def build(cls, n: int, r: int, edges: Iterable[Iterable[int]] = (), geometric: bool = True) -> "Hypergraph":
        return cls(CyclicGround(n), r, frozenset(make_edge(e) for e in edges), geometric)

    @property
    def n(self) -> int:
        return self.ground.n

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, edge: Iterable[int]) -> bool:
        return tuple(sorted(edge)) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def with_edges(self, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        return Hypergraph(self.ground, self.r, frozenset(make_edge(e) for e in edges), self.geometric)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighborhood(self, v: int) -> set[int]:
        self.ground.check(v)
        return {u for e in self.edges if v in e for u in e if u != v}


def complete(n: int, r: int, geometric: bool = True) -> Hypergraph:
    return Hypergraph(CyclicGround(n), r, frozenset(combinations(range(n), r)), geometric)


def segment(ground: CyclicGround, u: int, v: int) -> tuple[int, ...]:
    """Clockwise walk from ``u`` to ``v``, both endpoints included."""
    ground.check(u, v)
    length = (v - u) % ground.n + 1
    return tuple((u + i) % ground.n for i in range(length))


def arc_length(ground: CyclicGround, u: int, v: int) -> int:
    """Number of sides on the shorter arc between ``u`` and ``v``."""
    ground.check(u, v)
    d = (v - u) % ground.n
    return min(d, ground.n - d)


def shadow(H: Hypergraph) -> Hypergraph:
    if H.r < 2:
        raise DomainError("shadow needs r >= 2")
    sets = {e[:i] + e[i + 1:] for e in H.edges for i in range(H.r)}
    return Hypergraph(H.ground, H.r - 1, frozenset(sets), H.geometric)


def link(H: Hypergraph, v: int) -> Hypergraph:
    H.ground.check(v)
    if H.r < 2:
        raise DomainError("link needs r >= 2")
    sets = {tuple(u for u in e if u != v) for e in H.edges if v in e}
    return Hypergraph(H.ground, H.r - 1, frozenset(sets), H.geometric)


def is_cyclically_ordered(values: list[int]) -> bool:
    """True if ``values`` (distinct) read clockwise, up to rotation.

    Equivalently the list, seen as a cycle, has at most one descent.
    """
    m = len(values)
    if m <= 2:
        return True
    descents = 0
    for i in range(m):
        if values[i] > values[(i + 1) % m]:
            descents += 1
            if descents > 1:
                return False
    return True


def random_hypergraph(n: int, r: int, p: float, rng: np.random.Generator, geometric: bool = True) -> Hypergraph:
    """Keep each r-subset of ``0..n-1`` independently with probability ``p``."""
    candidates = list(combinations(range(n), r))
    keep = rng.random(len(candidates)) < p
    return Hypergraph(CyclicGround(n), r, frozenset(e for e, k in zip(candidates, keep) if k), geometric)


def random_hypergraph_m(n: int, r: int, m: int, rng: np.random.Generator, geometric: bool = True) -> Hypergraph:
    """Uniformly random hypergraph with exactly ``m`` edges."""
    candidates = list(combinations(range(n), r))
    if m > len(candidates):
        raise DomainError(f"only {len(candidates)} possible edges, asked for {m}")
    picks = rng.choice(len(candidates), size=m, replace=False)
    return Hypergraph(CyclicGround(n), r, frozenset(candidates[i] for i in picks), geometric)
