"""Exact extremal numbers by branch and bound with isomorph rejection.

Candidate edges are ranked in lexicographic order of their sorted vertex
tuples. The search walks an add/skip tree over that order, adding first.
A node is cut when

* even adding every remaining edge cannot beat the best family so far;
* the edge just added completes the forbidden pattern (only copies through
  that edge need checking);
* the family built so far is not the lexicographically least member of its
  orbit under the symmetry group.

The last cut is exact: if a family is orbit-least, so is its restriction to
the first d candidate edges, for every d. Each orbit therefore keeps its
least member alive along the whole branch that builds it.

A family is stored as an integer bitmask in which rank 0 is the most
significant bit, so "lexicographically least sorted rank list" is the same
as "numerically largest mask" among families of equal size.
"""

from __future__ import annotations

import multiprocessing as mp
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Optional

import numpy as np

from .core import DomainError, Hypergraph, CyclicGround, UnsupportedPatternError
from .patterns import SEARCH_KINDS, EdgeIndex, PathWitness, find_pattern, sequence_through

GROUPS = ("cyclic", "dihedral", "symmetric")
SYMMETRIC_MAX_N = 8


def group_elements(n: int, kind: str) -> list[tuple[int, ...]]:
    """Vertex permutations of the group, identity first."""
    if kind == "cyclic":
        return [tuple((v + t) % n for v in range(n)) for t in range(n)]
    if kind == "dihedral":
        rot = [tuple((v + t) % n for v in range(n)) for t in range(n)]
        ref = [tuple((t - v) % n for v in range(n)) for t in range(n)]
        return rot + ref
    if kind == "symmetric":
        if n > SYMMETRIC_MAX_N:
            raise DomainError(f"symmetric group on {n} points is too large (limit {SYMMETRIC_MAX_N})")
        return list(permutations(range(n)))
    raise DomainError(f"unknown symmetry group {kind!r}")


def _check_group(H_geometric: bool, group: str) -> None:
    if group not in GROUPS:
        raise DomainError(f"unknown symmetry group {group!r}")
    if group == "symmetric" and H_geometric:
        raise DomainError("the symmetric group does not preserve the cyclic order of a cgh")


def canonical_form(H: Hypergraph, group: str) -> Hypergraph:
    """Least relabeling of H (sorted edge list, compared lexicographically)."""
    _check_group(H.geometric, group)
    best = None
    for g in group_elements(H.n, group):
        image = sorted(tuple(sorted(g[v] for v in e)) for e in H.edges)
        if best is None or image < best:
            best = image
    return Hypergraph(H.ground, H.r, frozenset(best or ()), H.geometric)


def default_group(pattern: str, geometric: bool, n: int) -> str:
    # zigzags and stacks are chiral, so a reflection may not preserve freeness
    if pattern in ("zigzag", "stack"):
        return "cyclic"
    if not geometric and n <= SYMMETRIC_MAX_N:
        return "symmetric"
    return "dihedral"


@dataclass
class SearchResult:
    value: int
    witness: Hypergraph
    certificate: str
    nodes_explored: int
    wall_time: float
    n: int = 0
    r: int = 0
    k: int = 0
    pattern: str = ""
    group: str = ""
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "n": self.n, "r": self.r, "k": self.k, "pattern": self.pattern,
            "geometric": self.witness.geometric, "group": self.group,
            "value": self.value, "certificate": self.certificate,
            "nodes_explored": self.nodes_explored, "wall_time": self.wall_time,
            "witness": [list(e) for e in self.witness.sorted_edges()],
            "note": self.note,
        }


class _BudgetExceeded(Exception):
    pass


class _Searcher:
    def __init__(self, n: int, r: int, k: int, pattern: str, group: str, check_every: int,
                 budget: Optional[int], shared_best=None):
        self.n, self.r, self.k, self.pattern = n, r, k, pattern
        self.cands = list(combinations(range(n), r))
        E = self.E = len(self.cands)
        rank = {e: i for i, e in enumerate(self.cands)}
        perms = group_elements(n, group)[1:]
        # masks past 62 bits overflow int64; fall back to Python ints
        dtype = np.int64 if E <= 62 else object
        self.weights = np.array([[1 << (E - 1 - rank[tuple(sorted(g[v] for v in e))]) for e in self.cands]
                                 for g in perms], dtype=dtype).reshape(len(perms), E)
        self.images = np.zeros(len(perms), dtype=dtype)
        self.check_every = max(1, check_every)
        self.budget = budget
        self.shared_best = shared_best
        self.index = EdgeIndex(r)
        self.mask = 0
        self.size = 0
        self.nodes = 0
        self.best = -1
        self.best_mask = 0

    def bit(self, i: int) -> int:
        return 1 << (self.E - 1 - i)

    def canonical(self) -> bool:
        return not len(self.images) or int(self.images.max()) <= self.mask

    def add(self, i: int) -> None:
        self.index.add(self.cands[i])
        self.mask |= self.bit(i)
        self.size += 1
        if len(self.images):
            self.images += self.weights[:, i]

    def remove(self, i: int) -> None:
        self.index.remove(self.cands[i])
        self.mask &= ~self.bit(i)
        self.size -= 1
        if len(self.images):
            self.images -= self.weights[:, i]

    def creates_pattern(self, i: int) -> bool:
        return sequence_through(self.index, self.pattern, self.k, self.cands[i]) is not None

    def _cut(self, depth: int) -> bool:
        potential = self.size + self.E - depth
        if potential <= self.best:
            return True
        if self.shared_best is not None and potential < self.shared_best.value:
            return True
        return False

    def _record(self) -> None:
        if self.size > self.best:
            self.best = self.size
            self.best_mask = self.mask
            if self.shared_best is not None:
                with self.shared_best.get_lock():
                    if self.size > self.shared_best.value:
                        self.shared_best.value = self.size

    def dfs(self, depth: int) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise _BudgetExceeded
        if depth == self.E:
            self._record()
            return
        if self._cut(depth):
            return
        self.add(depth)
        if not self.creates_pattern(depth) and (self.size % self.check_every or self.canonical()):
            self.dfs(depth + 1)
        self.remove(depth)
        if self._cut(depth + 1):
            # the skip branch holds one fewer candidate
            return
        self.dfs(depth + 1)

    def replay(self, decisions: Iterable[bool]) -> int:
        """Apply a prefix of add/skip decisions; returns the depth reached."""
        depth = 0
        for take in decisions:
            if take:
                self.add(depth)
            depth += 1
        return depth

    def frontier(self, split: int) -> list[tuple[bool, ...]]:
        """Decision prefixes of length ``split`` that survive pattern and
        orbit cuts, in DFS order."""
        out: list[tuple[bool, ...]] = []

        def walk(depth: int, path: tuple[bool, ...]) -> None:
            if depth == min(split, self.E):
                out.append(path)
                return
            self.add(depth)
            if not self.creates_pattern(depth) and self.canonical():
                walk(depth + 1, path + (True,))
            self.remove(depth)
            walk(depth + 1, path + (False,))

        walk(0, ())
        return out

    def witness(self) -> list[tuple[int, ...]]:
        return [e for i, e in enumerate(self.cands) if self.best_mask & self.bit(i)]


def _validate(n: int, r: int, k: int, pattern: str, geometric: bool) -> None:
    if pattern not in SEARCH_KINDS:
        raise UnsupportedPatternError(f"cannot search for pattern {pattern!r}")
    if n < 1 or r < 2 or k < 1:
        raise DomainError(f"need n >= 1, r >= 2, k >= 1 (got n={n}, r={r}, k={k})")
    if pattern in ("zigzag", "stack"):
        if not geometric:
            raise UnsupportedPatternError(f"{pattern} needs geometric=True")
        if r % 2:
            raise UnsupportedPatternError(f"{pattern} is only defined for even r, got r={r}")


_shared = None


def _init_worker(shared) -> None:
    global _shared
    _shared = shared


def _run_subtree(args) -> tuple[int, list, int, bool]:
    n, r, k, pattern, group, check_every, budget, prefix = args
    s = _Searcher(n, r, k, pattern, group, check_every, budget, _shared)
    depth = s.replay(prefix)
    complete_run = True
    try:
        s.dfs(depth)
    except _BudgetExceeded:
        complete_run = False
    return s.best, s.witness(), s.nodes, complete_run


def exact_extremal(n: int, r: int, k: int, pattern: str = "tight_path", geometric: bool = False,
                   budget: Optional[int] = None, group: Optional[str] = None,
                   check_every: Optional[int] = None, threads: int = 1) -> SearchResult:
    """Maximum number of edges in a pattern-free family on n vertices.

    ``budget`` caps the number of search nodes; when it runs out the result
    carries ``certificate="bounded"`` and its value is only a lower bound.
    With ``threads > 1`` the tree is split near the root and subtrees run in
    worker processes sharing the best value found.
    """
    _validate(n, r, k, pattern, geometric)
    group = group or default_group(pattern, geometric, n)
    _check_group(geometric, group)
    if check_every is None:
        check_every = 1 if group == "symmetric" else 3
    start = time.perf_counter()
    note = ""
    if pattern == "zigzag" and r >= 4:
        note = "new data: no exact zigzag values for r >= 4 are known to check against"

    if threads <= 1:
        s = _Searcher(n, r, k, pattern, group, check_every, budget)
        certificate = "exhaustive"
        try:
            s.dfs(0)
        except _BudgetExceeded:
            certificate = "bounded"
        best, edges, nodes = max(s.best, 0), s.witness(), s.nodes
    else:
        probe = _Searcher(n, r, k, pattern, group, check_every, None)
        split = 1
        while split < probe.E and len(probe.frontier(split)) < 4 * threads:
            split += 1
        prefixes = probe.frontier(split)
        per = None if budget is None else max(1, budget // max(1, len(prefixes)))
        shared = mp.Value("i", -1)
        jobs = [(n, r, k, pattern, group, check_every, per, p) for p in prefixes]
        with ProcessPoolExecutor(threads, initializer=_init_worker, initargs=(shared,)) as pool:
            results = list(pool.map(_run_subtree, jobs))
        best, edges = 0, []
        for value, wit, _, _ in results:
            # earliest subtree wins ties, matching the serial DFS order
            if value > best:
                best, edges = value, wit
        nodes = sum(x[2] for x in results)
        certificate = "exhaustive" if all(x[3] for x in results) else "bounded"

    witness = Hypergraph(CyclicGround(n), r, frozenset(edges), geometric)
    return SearchResult(best, witness, certificate, nodes, time.perf_counter() - start,
                        n, r, k, pattern, group, note)


def naive_extremal(n: int, r: int, k: int, pattern: str, geometric: bool) -> int:
    """Brute force over every family of r-sets. Tiny n only."""
    cands = list(combinations(range(n), r))
    best = 0
    for bits in range(1 << len(cands)):
        size = bin(bits).count("1")
        if size <= best:
            continue
        H = Hypergraph.build(n, r, [e for i, e in enumerate(cands) if bits >> i & 1], geometric)
        if find_pattern(H, pattern, k) is None:
            best = size
    return best


@dataclass
class FamilyCertificate:
    free: bool
    edge_count: int
    witness: Optional[PathWitness] = None

    def to_dict(self) -> dict:
        out = {"free": self.free, "edge_count": self.edge_count}
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        return out


def verify_family(H: Hypergraph, pattern: str, k: int) -> FamilyCertificate:
    w = find_pattern(H, pattern, k)
    return FamilyCertificate(w is None, len(H), w)
