"""Explicit pattern-free families."""

from __future__ import annotations

from itertools import combinations
from math import comb

from .core import CyclicGround, DomainError, Hypergraph, UnsupportedPatternError, arc_length


def _even_r(r: int) -> None:
    if r < 2 or r % 2:
        raise UnsupportedPatternError(f"construction needs even r >= 2, got r={r}")


def stack_free(n: int, r: int, k: int) -> Hypergraph:
    """Dense cgh on 0..n-1 with no k-stack (for k >= 2).

    With each edge written v_0 < .. < v_{r-1}, the family is the union of

    * edges through vertex 0;
    * for 1 <= j <= k-2, edges avoiding 0 with some cyclically consecutive
      pair (v_h, v_{h+1}), h = 0..r-1 and v_r read as v_0, at arc length j;
    * edges avoiding 0 with some inner pair (v_{2h-1}, v_{2h}),
      1 <= h < r/2, at arc length k-1 or k.

    For k = 1 only the edges through 0 are kept.
    """
    _even_r(r)
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    if n < r:
        raise DomainError(f"need n >= r, got n={n}, r={r}")
    g = CyclicGround(n)
    edges = []
    for e in combinations(range(n), r):
        if e[0] == 0:
            edges.append(e)
            continue
        if k == 1:
            continue
        gaps = {arc_length(g, e[h], e[(h + 1) % r]) for h in range(r)}
        if any(1 <= j <= k - 2 for j in gaps):
            edges.append(e)
            continue
        if any(arc_length(g, e[2 * h - 1], e[2 * h]) in (k - 1, k) for h in range(1, r // 2)):
            edges.append(e)
    return Hypergraph(g, r, frozenset(edges), True)


def short_side(n: int, r: int, k: int) -> Hypergraph:
    """All r-sets having two vertices within arc length k-1 (odd k >= 3)."""
    _even_r(r)
    if k < 3 or k % 2 == 0:
        raise DomainError(f"short_side needs odd k >= 3, got k={k}")
    if n < r:
        raise DomainError(f"need n >= r, got n={n}, r={r}")
    g = CyclicGround(n)
    edges = [e for e in combinations(range(n), r)
             if any(arc_length(g, u, v) <= k - 1 for u, v in combinations(e, 2))]
    return Hypergraph(g, r, frozenset(edges), True)


def clique_union(n: int, k: int) -> Hypergraph:
    """Disjoint cliques of order k on consecutive arcs; a smaller last clique
    takes the remainder when k does not divide n."""
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    edges = []
    for start in range(0, n, k):
        block = range(start, min(start + k, n))
        edges.extend(combinations(block, 2))
    return Hypergraph(CyclicGround(n), 2, frozenset(edges), True)


def transversal_parts(n: int, r: int, k: int) -> list[Hypergraph]:
    """The pieces G_0..G_{s-1} of the block construction, s = r/2.

    Blocks B_i are consecutive id ranges of size n/s; A_i is the first
    a = (k-1)/r vertices of B_i. G_i takes one vertex from A_i, one from
    B_i - A_i and two from every other B_j - A_j.
    """
    _even_r(r)
    s = r // 2
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    if n % s:
        raise DomainError(f"n={n} is not a multiple of s={s}")
    if (k - 1) % r:
        raise DomainError(f"r={r} does not divide k-1={k - 1}")
    size = n // s
    a = (k - 1) // r
    if a >= size:
        raise DomainError(f"a=(k-1)/r={a} must be smaller than the block size {size}")
    blocks = [list(range(i * size, (i + 1) * size)) for i in range(s)]
    heads = [b[:a] for b in blocks]
    tails = [b[a:] for b in blocks]
    g = CyclicGround(n)
    parts = []
    for i in range(s):
        chunks = [[(x,) for x in heads[i]], [(y,) for y in tails[i]]]
        chunks += [list(combinations(tails[j], 2)) for j in range(s) if j != i]
        edges = [()]
        for chunk in chunks:
            edges = [e + c for e in edges for c in chunk]
        parts.append(Hypergraph(g, r, frozenset(tuple(sorted(e)) for e in edges), False))
    return parts


def transversal_blocks(n: int, r: int, k: int) -> Hypergraph:
    """Union of :func:`transversal_parts`; has no tight k-path."""
    parts = transversal_parts(n, r, k)
    edges = frozenset().union(*(p.edges for p in parts))
    return Hypergraph(CyclicGround(n), r, edges, False)


def transversal_count(n: int, r: int, k: int) -> int:
    s = r // 2
    size = n // s
    a = (k - 1) // r
    return s * a * (size - a) * comb(size - a, 2) ** (s - 1)


def lift_plus(H: Hypergraph, m: int) -> Hypergraph:
    """Cone every edge over each of m fresh vertices n..n+m-1."""
    if m < 1:
        raise DomainError(f"m must be positive, got {m}")
    n = H.n
    edges = frozenset(e + (x,) for x in range(n, n + m) for e in H.edges)
    return Hypergraph(CyclicGround(n + m), H.r + 1, edges, False)


def phi(ell: int, r: int) -> int:
    """Most fresh vertices a tight ell-path of the lift can use."""
    if ell < 1 or r < 2:
        raise DomainError(f"phi needs ell >= 1 and r >= 2, got ell={ell}, r={r}")
    return -(-(ell + r) // (r + 1))


def lifted_length(k: int, r: int) -> int:
    """Path length ell with ell + 1 - phi(ell) = k."""
    return k + (k - 1) // r + 1
