"""End-extension counting for zigzags and good paths.

An *end* of a path ``v_0 .. v_{k+r-2}`` with k edges is its last edge in
path order, ``(v_{k-1}, .., v_{k+r-2})``. Its extension interval runs from
``v_{k-1}`` to ``v_k`` clockwise when k is odd and from ``v_{k+r-2}`` to
``v_{k-1}`` when k is even; the extension set X holds the vertices of that
interval that complete ``v_k .. v_{k+r-2}`` to an edge. S_k is the set of
all ends of k-paths, T_k the ends whose X is empty.

In good-path mode every interval is read inside one color block, in the
cyclic order the block inherits from the ground set.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import factorial, sqrt
from typing import Optional

import numpy as np

from .core import (
    DomainError,
    Hypergraph,
    StuckEndError,
    UnsupportedPatternError,
    segment,
    shadow,
)
from .patterns import BlockColoring, EdgeIndex, block_of_index, iter_sequences

MODES = ("zigzag", "good_path")


@dataclass(frozen=True)
class End:
    tuple: tuple[int, ...]
    k: int
    mode: str = "zigzag"
    coloring: Optional[BlockColoring] = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.k < 1:
            raise DomainError(f"end needs k >= 1, got {self.k}")
        if len(set(self.tuple)) != len(self.tuple):
            raise DomainError(f"end tuple repeats a vertex: {self.tuple}")
        if self.mode not in MODES:
            raise UnsupportedPatternError(f"unknown end mode {self.mode!r}")
        if self.mode == "good_path":
            if self.coloring is None:
                raise UnsupportedPatternError("good_path ends need a coloring")
            first = self.tuple[0]
            if self.coloring.block(first) != block_of_index(self.k - 1, self.coloring.s):
                raise DomainError(f"v_(k-1)={first} is not in block {block_of_index(self.k - 1, self.coloring.s)}")


def _check_mode(H: Hypergraph, mode: str, coloring: Optional[BlockColoring]) -> None:
    if mode not in MODES:
        raise UnsupportedPatternError(f"unknown mode {mode!r}")
    if H.r < 2 or H.r % 2:
        raise UnsupportedPatternError(f"end counting needs even r, got r={H.r}")
    if mode == "zigzag" and not H.geometric:
        raise UnsupportedPatternError("zigzag mode needs a geometric host")
    if mode == "good_path":
        if coloring is None:
            raise UnsupportedPatternError("good_path mode needs a coloring")
        if coloring.s != H.r // 2:
            raise DomainError(f"coloring has {coloring.s} blocks, r={H.r} needs {H.r // 2}")
        if len(coloring.assignment) != H.n:
            raise DomainError("coloring does not cover the ground set")


def interval(H: Hypergraph, end: End) -> list[int]:
    v = end.tuple
    k = end.k
    if len(v) != H.r:
        raise DomainError(f"end has {len(v)} vertices, expected r={H.r}")
    H.ground.check(*v)
    first, last = (v[0], v[1]) if k % 2 else (v[-1], v[0])
    arc = list(segment(H.ground, first, last))
    if end.mode == "good_path":
        i = block_of_index(k - 1, end.coloring.s)
        arc = [u for u in arc if end.coloring.block(u) == i]
    return arc


def interval_and_X(H: Hypergraph, end: End) -> tuple[list[int], set[int]]:
    """Extension interval I and extension set X of ``end``.

    The end's own vertices are left out of X; otherwise v_(k-1) would always
    complete the edge and no end could ever be stuck.
    """
    _check_mode(H, end.mode, end.coloring)
    arc = interval(H, end)
    tail = end.tuple[1:]
    own = set(end.tuple)
    X = {u for u in arc if u not in own and tuple(sorted(tail + (u,))) in H.edges}
    return arc, X


def extend_f(H: Hypergraph, end: End) -> End:
    """Extend by the X-vertex nearest to v_(k-1) along the interval."""
    arc, X = interval_and_X(H, end)
    if not X:
        raise StuckEndError(f"end {end.tuple} has an empty extension set")
    # v_(k-1) starts the interval for odd k and closes it for even k
    walk = arc if end.k % 2 else reversed(arc)
    new = next(u for u in walk if u in X)
    return End(end.tuple[1:] + (new,), end.k + 1, end.mode, end.coloring)


def project_g(end: End) -> tuple[int, ...]:
    return end.tuple[1:]


def good_subgraph(H: Hypergraph, coloring: BlockColoring) -> Hypergraph:
    """Edges meeting every block in exactly two vertices."""
    s = coloring.s
    keep = []
    for e in H.edges:
        counts = [0] * s
        for v in e:
            counts[coloring.block(v)] += 1
        if all(c == 2 for c in counts):
            keep.append(e)
    return H.with_edges(keep)


def block_shadow(G: Hypergraph, coloring: BlockColoring, i: int) -> set[tuple[int, ...]]:
    """Shadow sets of G meeting block i exactly once."""
    return {f for f in shadow(G).edges if sum(1 for v in f if coloring.block(v) == i) == 1}


def _host(H: Hypergraph, mode: str, coloring: Optional[BlockColoring]) -> Hypergraph:
    return good_subgraph(H, coloring) if mode == "good_path" else H


def enumerate_paths(H: Hypergraph, k: int, mode: str = "zigzag",
                    coloring: Optional[BlockColoring] = None) -> list[tuple[int, ...]]:
    """All vertex sequences of k-zigzags (or good k-paths) in H."""
    _check_mode(H, mode, coloring)
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    host = _host(H, mode, coloring)
    return list(iter_sequences(EdgeIndex(H.r, host.edges), mode, k, coloring))


def enumerate_ends(H: Hypergraph, k: int, mode: str = "zigzag",
                   coloring: Optional[BlockColoring] = None) -> tuple[frozenset[End], frozenset[End]]:
    """(S_k, T_k): ends of all k-paths, and the stuck ones among them."""
    r = H.r
    S = {End(seq[k - 1:k + r - 1], k, mode, coloring) for seq in enumerate_paths(H, k, mode, coloring)}
    T = {e for e in S if not interval_and_X(H, e)[1]}
    return frozenset(S), frozenset(T)


@dataclass
class CountingRow:
    k: int
    S: int
    T: int
    S_next: int
    S_minus_T: int
    lower_bound: int
    T_bound: int
    extension_ok: bool
    stuck_ok: bool
    lower_ok: bool


@dataclass
class CountingReport:
    mode: str
    edges: int
    shadow: int
    rows: list[CountingRow]

    @property
    def violations(self) -> int:
        return sum((not row.extension_ok) + (not row.stuck_ok) + (not row.lower_ok) for row in self.rows)

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> dict:
        return {"mode": self.mode, "edges": self.edges, "shadow": self.shadow,
                "violations": self.violations, "rows": [asdict(row) for row in self.rows]}


def verify_counting(H: Hypergraph, k_max: int, mode: str = "zigzag",
                    coloring: Optional[BlockColoring] = None) -> CountingReport:
    """Check the three end-counting inequalities for k = 1..k_max.

    Zigzag mode, with D = |shadow(H)|:
        |S_(k+1)| >= |S_k - T_k|,  |T_k| <= (r-1) D,
        |S_k| >= r|H| - (r-1)(k-1) D.
    Good-path mode, with G the two-per-block subgraph, s = r/2 and
    D_i = |shadow sets of G meeting block i once|:
        |S_(k+1)| >= |S_k - T_k|,  |T_k| <= 2^(s-1) D_h(k-1),
        |S_k| >= 2^s |G| - 2^(s-1) sum_{i<k-1} D_h(i).
    """
    _check_mode(H, mode, coloring)
    r = H.r
    if mode == "zigzag":
        D = len(shadow(H)) if H.edges else 0
        size = len(H)
    else:
        s = coloring.s
        G = good_subgraph(H, coloring)
        size = len(G)
        Di = [len(block_shadow(G, coloring, i)) if G.edges else 0 for i in range(s)]
        D = sum(Di)
    counts = {}
    for k in range(1, k_max + 2):
        counts[k] = enumerate_ends(H, k, mode, coloring)
    rows = []
    for k in range(1, k_max + 1):
        S, T = counts[k]
        S_next = len(counts[k + 1][0])
        if mode == "zigzag":
            lower = r * size - (r - 1) * (k - 1) * D
            t_bound = (r - 1) * D
        else:
            lower = 2 ** s * size - 2 ** (s - 1) * sum(Di[block_of_index(i, s)] for i in range(k - 1))
            t_bound = 2 ** (s - 1) * Di[block_of_index(k - 1, s)]
        rows.append(CountingRow(
            k=k, S=len(S), T=len(T), S_next=S_next, S_minus_T=len(S - T),
            lower_bound=lower, T_bound=t_bound,
            extension_ok=S_next >= len(S - T),
            stuck_ok=len(T) <= t_bound,
            lower_ok=len(S) >= lower,
        ))
    return CountingReport(mode, size, D, rows)


# -- random block colorings --------------------------------------------------

@dataclass
class ExperimentReport:
    seed: int
    trials: int
    r: int
    edges: int
    shadow: int
    mean_G: float
    target_G: Fraction
    stderr: float
    mean_shadow_i: list[float]
    bound_shadow: Fraction
    stderr_shadow_i: list[float]

    def to_dict(self) -> dict:
        return {
            "seed": self.seed, "trials": self.trials, "r": self.r,
            "edges": self.edges, "shadow": self.shadow,
            "mean_G": self.mean_G, "target_G": float(self.target_G), "target_G_exact": str(self.target_G),
            "stderr": self.stderr,
            "mean_shadow_i": self.mean_shadow_i,
            "bound_shadow": float(self.bound_shadow), "bound_shadow_exact": str(self.bound_shadow),
            "stderr_shadow_i": self.stderr_shadow_i,
        }


def retention_target(r: int) -> Fraction:
    """Probability that a uniform s-coloring splits an r-set two per block."""
    s = r // 2
    return Fraction(factorial(r), 2 ** s * s ** r)


def shadow_target(r: int) -> Fraction:
    s = r // 2
    return Fraction(factorial(r - 1), 2 ** (s - 1) * s ** (r - 1))


def draw_colorings(n: int, s: int, seed: int, trials: int) -> np.ndarray:
    """One independent stream per trial, so any subset of trials can be
    regenerated (or run elsewhere) without drawing the others."""
    streams = np.random.SeedSequence(seed).spawn(trials)
    out = np.empty((trials, n), dtype=np.int8)
    for t, ss in enumerate(streams):
        out[t] = np.random.Generator(np.random.PCG64(ss)).integers(0, s, size=n)
    return out


def partition_counts(H: Hypergraph, colors: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per-trial |G| and |shadow_i G| for a stack of colorings.

    Returns arrays of shape (trials,) and (trials, s).
    """
    r = H.r
    s = r // 2
    trials = colors.shape[0]
    if not H.edges:
        return np.zeros(trials, dtype=np.int64), np.zeros((trials, s), dtype=np.int64)
    edges = np.array(H.sorted_edges(), dtype=np.int64)
    shadows = sorted(shadow(H).edges)
    where = {f: d for d, f in enumerate(shadows)}
    parent = np.zeros((len(shadows), len(edges)), dtype=np.int32)
    for j, e in enumerate(map(tuple, edges.tolist())):
        for x in range(r):
            parent[where[e[:x] + e[x + 1:]], j] = 1
    shadow_arr = np.array(shadows, dtype=np.int64).reshape(len(shadows), r - 1)

    edge_colors = colors[:, edges]
    in_G = np.ones((trials, len(edges)), dtype=bool)
    for i in range(s):
        in_G &= (edge_colors == i).sum(axis=2) == 2
    in_dG = (in_G.astype(np.int32) @ parent.T) > 0
    shadow_colors = colors[:, shadow_arr]
    per_block = np.empty((trials, s), dtype=np.int64)
    for i in range(s):
        once = (shadow_colors == i).sum(axis=2) == 1
        per_block[:, i] = (in_dG & once).sum(axis=1)
    return in_G.sum(axis=1), per_block


def _stderr(x: np.ndarray) -> float:
    if len(x) < 2:
        return 0.0
    return float(np.std(x, ddof=1) / sqrt(len(x)))


def random_partition_experiment(H: Hypergraph, seed: int, trials: int) -> ExperimentReport:
    """Monte Carlo estimate of E|G| and E|shadow_i G| under uniform s-colorings."""
    if trials < 1:
        raise DomainError(f"trials must be positive, got {trials}")
    r = H.r
    if r < 2 or r % 2:
        raise UnsupportedPatternError(f"random partitions need even r, got r={r}")
    s = r // 2
    D = len(shadow(H)) if H.edges else 0
    colors = draw_colorings(H.n, s, seed, trials)
    sizes, per_block = partition_counts(H, colors)
    return ExperimentReport(
        seed=seed, trials=trials, r=r, edges=len(H), shadow=D,
        mean_G=float(sizes.mean()),
        target_G=retention_target(r) * len(H),
        stderr=_stderr(sizes),
        mean_shadow_i=[float(per_block[:, i].mean()) for i in range(s)],
        bound_shadow=shadow_target(r) * D,
        stderr_shadow_i=[_stderr(per_block[:, i]) for i in range(s)],
    )
