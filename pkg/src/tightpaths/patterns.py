"""Zigzag, stack, tight-path and good-path recognition and search.

Every pattern here is a vertex sequence ``v_0 .. v_{L-1}`` together with a
set of windows ``v_w .. v_{w+r-1}`` that must be edges of the host:

* tight path with k edges: L = k + r - 1, windows at 0..k-1;
* zigzag: same windows, plus the cyclic-order predicate;
* stack with k edges: L = k r, windows at 0, r, .., (k-1) r, plus the
  cyclic-order predicate on the whole sequence.

A single depth-first engine places sequence positions one at a time,
drawing candidates from a down-set index of the host and pruning with the
order predicate restricted to the positions placed so far. The restriction
is sound because the positions of any subset of indices, read in class
order, form a subsequence of the full class-order list, and a subsequence
of a cyclically ordered list is cyclically ordered.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .core import (
    CyclicGround,
    DomainError,
    Edge,
    Hypergraph,
    UnsupportedPatternError,
    is_cyclically_ordered,
)

KINDS = ("tight_path", "zigzag", "stack", "good_path")
SEARCH_KINDS = ("tight_path", "zigzag", "stack")


@dataclass(frozen=True)
class PathWitness:
    kind: str
    sequence: tuple[int, ...]
    k: int
    edges: tuple[Edge, ...]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "k": self.k,
            "sequence": list(self.sequence),
            "edges": [list(e) for e in self.edges],
        }


@dataclass(frozen=True)
class BlockColoring:
    """Assignment of every ground vertex to one of ``s`` blocks."""

    s: int
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.s < 1:
            raise DomainError("a coloring needs at least one block")
        for v, c in enumerate(self.assignment):
            if not (0 <= c < self.s):
                raise DomainError(f"vertex {v} has block {c} outside 0..{self.s - 1}")

    def block(self, v: int) -> int:
        if not (0 <= v < len(self.assignment)):
            raise DomainError(f"vertex {v} has no block")
        return self.assignment[v]

    def members(self, i: int) -> list[int]:
        """Vertices of block ``i`` in their induced cyclic order."""
        return [v for v, c in enumerate(self.assignment) if c == i]

    @classmethod
    def constant(cls, n: int, s: int = 1) -> "BlockColoring":
        return cls(s, (0,) * n)


def block_of_index(j: int, s: int) -> int:
    """Block that position ``j`` of a good path must lie in."""
    return (j // 2) % s


def window_edges(sequence: Sequence[int], starts: Iterable[int], r: int) -> tuple[Edge, ...]:
    return tuple(tuple(sorted(sequence[w:w + r])) for w in starts)


# -- order predicates --------------------------------------------------------

def class_order(sequence: Sequence[Optional[int]], r: int) -> list[int]:
    """Concatenate residue classes: even classes ascending, odd descending.

    Unplaced positions (``None``) are skipped.
    """
    out = []
    L = len(sequence)
    for j in range(r):
        idx = range(j, L, r) if j % 2 == 0 else reversed(range(j, L, r))
        out.extend(sequence[i] for i in idx if sequence[i] is not None)
    return out


def _zigzag_ok(sequence: Sequence[Optional[int]], r: int) -> bool:
    return is_cyclically_ordered(class_order(sequence, r))


def _good_ok(sequence: Sequence[Optional[int]], r: int, coloring: BlockColoring) -> bool:
    s = r // 2
    L = len(sequence)
    for j, v in enumerate(sequence):
        if v is not None and coloring.block(v) != block_of_index(j, s):
            return False
    for i in range(s):
        lo, hi = 2 * i, 2 * i + 1
        order = [sequence[t] for t in range(lo, L, r) if sequence[t] is not None]
        order += [sequence[t] for t in reversed(range(hi, L, r)) if sequence[t] is not None]
        if not is_cyclically_ordered(order):
            return False
    return True


def _check_sequence(ground: CyclicGround, sequence: Sequence[int], r: int) -> None:
    if r < 2 or r % 2:
        raise UnsupportedPatternError(f"zigzag orders are only defined for even r >= 2, got r={r}")
    ground.check(*sequence)
    if len(set(sequence)) != len(sequence):
        raise DomainError(f"sequence repeats a vertex: {tuple(sequence)}")


def is_zigzag_sequence(ground: CyclicGround, sequence: Sequence[int], r: int) -> bool:
    """Decide whether the residue classes mod r sit in consecutive arcs.

    Class j (indices congruent to j mod r) must occupy its own arc, in
    increasing index order clockwise when j is even and decreasing when j is
    odd, with the arcs of classes 0, 1, .., r-1 following each other
    clockwise. This holds iff the list (class 0 ascending)(class 1
    descending)... is a rotation of the clockwise order of its vertices.
    """
    _check_sequence(ground, sequence, r)
    if len(sequence) < r:
        raise DomainError(f"a zigzag sequence needs at least r={r} vertices")
    return _zigzag_ok(sequence, r)


def is_good_path(ground: CyclicGround, sequence: Sequence[int], coloring: BlockColoring, r: int) -> bool:
    """Order test for good paths of a random block coloring.

    Position j belongs to block ``(j // 2) mod s``; inside block i the
    positions congruent to 2i mod r appear ascending and those congruent to
    2i+1 descending, in the block's induced cyclic order.
    """
    _check_sequence(ground, sequence, r)
    if coloring.s != r // 2:
        raise DomainError(f"good paths for r={r} need s={r // 2} blocks, coloring has {coloring.s}")
    for v in sequence:
        coloring.block(v)
    return _good_ok(sequence, r, coloring)


# -- host index --------------------------------------------------------------

class EdgeIndex:
    """Down-set index of a mutable edge family.

    For every proper subset S of an edge (as a sorted tuple) keeps a counter
    of the vertices v such that S + {v} lies inside some edge. Candidates for
    the next sequence position come straight from these counters.
    """

    def __init__(self, r: int, edges: Iterable[Edge] = ()):
        self.r = r
        self.edges: set[Edge] = set()
        self._next: dict[tuple[int, ...], Counter] = defaultdict(Counter)
        for e in edges:
            self.add(e)

    def add(self, e: Edge) -> None:
        if e in self.edges:
            return
        self.edges.add(e)
        for size in range(self.r):
            for sub in combinations(e, size):
                nxt = self._next[sub]
                for v in e:
                    if v not in sub:
                        nxt[v] += 1

    def remove(self, e: Edge) -> None:
        self.edges.remove(e)
        for size in range(self.r):
            for sub in combinations(e, size):
                nxt = self._next[sub]
                for v in e:
                    if v not in sub:
                        nxt[v] -= 1
                        if not nxt[v]:
                            del nxt[v]

    def candidates(self, sub: tuple[int, ...]) -> Iterable[int]:
        nxt = self._next.get(sub)
        return nxt.keys() if nxt else ()

    def __contains__(self, e: Edge) -> bool:
        return e in self.edges

    def __len__(self) -> int:
        return len(self.edges)


# -- search engine -----------------------------------------------------------

OrderCheck = Callable[[Sequence[Optional[int]]], bool]


class _Layout:
    def __init__(self, length: int, starts: Sequence[int], r: int, order_ok: Optional[OrderCheck]):
        self.length = length
        self.starts = tuple(starts)
        self.r = r
        self.order_ok = order_ok
        self.windows_at: list[list[int]] = [[] for _ in range(length)]
        for w in self.starts:
            for p in range(w, w + r):
                self.windows_at[p].append(w)


def _layout(kind: str, k: int, r: int, coloring: Optional[BlockColoring] = None) -> _Layout:
    if kind == "tight_path":
        return _Layout(k + r - 1, range(k), r, None)
    if kind == "zigzag":
        return _Layout(k + r - 1, range(k), r, lambda seq: _zigzag_ok(seq, r))
    if kind == "stack":
        return _Layout(k * r, range(0, k * r, r), r, lambda seq: _zigzag_ok(seq, r))
    if kind == "good_path":
        assert coloring is not None
        return _Layout(k + r - 1, range(k), r, lambda seq: _good_ok(seq, r, coloring))
    raise UnsupportedPatternError(f"unknown pattern kind {kind!r}")


def _run(index: EdgeIndex, layout: _Layout, order: Sequence[int], seq: list, used: set,
         pos: int, found: Callable[[list], bool]) -> bool:
    """Fill ``order[pos:]``; return True as soon as ``found`` asks to stop."""
    if pos == len(order):
        return found(seq)
    p = order[pos]
    r = layout.r
    cands = None
    for w in layout.windows_at[p]:
        sub = tuple(sorted(seq[q] for q in range(w, w + r) if seq[q] is not None))
        c = index.candidates(sub)
        cands = set(c) if cands is None else cands.intersection(c)
        if not cands:
            return False
    order_ok = layout.order_ok
    for v in sorted(cands):
        if v in used:
            continue
        seq[p] = v
        if order_ok is None or order_ok(seq):
            used.add(v)
            stop = _run(index, layout, order, seq, used, pos + 1, found)
            used.discard(v)
            if stop:
                seq[p] = None
                return True
        seq[p] = None
    return False


def iter_sequences(index: EdgeIndex, kind: str, k: int, coloring: Optional[BlockColoring] = None) -> Iterator[tuple[int, ...]]:
    """Every sequence realising the pattern, in lexicographic order."""
    layout = _layout(kind, k, index.r, coloring)
    results: list[tuple[int, ...]] = []

    def collect(seq: list) -> bool:
        results.append(tuple(seq))
        return False

    _run(index, layout, range(layout.length), [None] * layout.length, set(), 0, collect)
    return iter(results)


def _first_sequence(index: EdgeIndex, kind: str, k: int) -> Optional[tuple[int, ...]]:
    layout = _layout(kind, k, index.r)
    hit: list[tuple[int, ...]] = []

    def stop(seq: list) -> bool:
        hit.append(tuple(seq))
        return True

    _run(index, layout, range(layout.length), [None] * layout.length, set(), 0, stop)
    return hit[0] if hit else None


def sequence_through(index: EdgeIndex, kind: str, k: int, edge: Edge) -> Optional[tuple[int, ...]]:
    """A pattern sequence that uses ``edge`` as one of its windows, if any.

    Used after adding ``edge`` to a pattern-free family: any new copy of the
    pattern must contain it.
    """
    layout = _layout(kind, k, index.r)
    r = index.r
    L = layout.length
    hit: list[tuple[int, ...]] = []

    def stop(seq: list) -> bool:
        hit.append(tuple(seq))
        return True

    for w in layout.starts:
        if kind == "stack":
            # fill whole blocks so each window builds up from its start
            before = [p for b in range(w - r, -1, -r) for p in range(b, b + r)]
        else:
            before = list(range(w - 1, -1, -1))
        rest = list(range(w + r, L)) + before
        for perm in permutations(edge):
            seq: list = [None] * L
            seq[w:w + r] = perm
            if layout.order_ok is not None and not layout.order_ok(seq):
                continue
            if _run(index, layout, rest, seq, set(perm), 0, stop):
                return hit[0]
    return None


def _check_kind(H: Hypergraph, kind: str, k: int) -> None:
    if kind not in SEARCH_KINDS:
        raise UnsupportedPatternError(f"cannot search for pattern kind {kind!r}")
    if k < 1:
        raise DomainError(f"pattern length must be positive, got k={k}")
    if kind in ("zigzag", "stack"):
        if not H.geometric:
            raise UnsupportedPatternError(f"{kind} needs a geometric (cgh) host")
        if H.r % 2 or H.r < 2:
            raise UnsupportedPatternError(f"{kind} is only defined for even r, got r={H.r}")


def witness_from_sequence(kind: str, k: int, r: int, sequence: Sequence[int]) -> PathWitness:
    starts = range(0, k * r, r) if kind == "stack" else range(k)
    return PathWitness(kind, tuple(sequence), k, window_edges(sequence, starts, r))


def find_pattern(H: Hypergraph, kind: str, k: int) -> Optional[PathWitness]:
    """First copy of the pattern with exactly ``k`` edges, or None.

    Sequences are tried in lexicographic order, so the answer is
    deterministic.
    """
    _check_kind(H, kind, k)
    seq = _first_sequence(EdgeIndex(H.r, H.edges), kind, k)
    if seq is None:
        return None
    return witness_from_sequence(kind, k, H.r, seq)
